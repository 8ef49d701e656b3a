"""Horadam and generalized Fibonacci sequences.

A Horadam sequence is defined by H(0) = a, H(1) = b and
H(n+2) = r*H(n+1) + s*H(n).  The unit-seeded slice h(n) with a = 0, b = 1
is the generalized Fibonacci sequence; it is the one with a Binet closed
form and a fast-doubling evaluator.  Indices extend below zero through the
backward recurrence H(n) = (H(n+2) - r*H(n+1)) / s, which requires s != 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import DomainError
from .exact import QuadElem, RationalLike, as_fraction


@dataclass(frozen=True)
class RecurrenceParams:
    """Defining data (a, b, r, s) of a Horadam sequence."""

    a: Fraction
    b: Fraction
    r: Fraction
    s: Fraction

    def __post_init__(self) -> None:
        for name in ("a", "b", "r", "s"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    @property
    def discriminant(self) -> Fraction:
        return self.r * self.r + 4 * self.s


class SeqValue(NamedTuple):
    index: int
    value: Fraction


def horadam_eval(params: RecurrenceParams, n: int) -> Fraction:
    """H(n) by iterating the recurrence, backward for n < 0."""
    if n >= 0:
        lo, hi = params.a, params.b
        for _ in range(n):
            lo, hi = hi, params.r * hi + params.s * lo
        return lo
    if params.s == 0:
        raise DomainError("backward extension requires s != 0")
    hi, lo = params.b, params.a
    for _ in range(-n):
        hi, lo = lo, (hi - params.r * lo) / params.s
    return lo


def horadam_range(params: RecurrenceParams, lo: int, hi: int) -> list[SeqValue]:
    """H(n) for every n in [lo, hi], evaluated in one pass per direction."""
    if lo > hi:
        raise ValueError(f"empty index range [{lo}, {hi}]")
    if lo < 0 and params.s == 0:
        raise DomainError("backward extension requires s != 0")
    values: dict[int, Fraction] = {}
    if hi >= 0:
        prev, cur = params.a, params.b
        for n in range(0, hi + 1):
            if n >= lo:
                values[n] = prev
            prev, cur = cur, params.r * cur + params.s * prev
    if lo < 0:
        above, cur = params.b, params.a
        for n in range(-1, lo - 1, -1):
            above, cur = cur, (above - params.r * cur) / params.s
            if n <= hi:
                values[n] = cur
    return [SeqValue(n, values[n]) for n in range(lo, hi + 1)]


def gen_fib(r: RationalLike, s: RationalLike, n: int) -> Fraction:
    """h(n), the unit-seeded sequence; h(-1) = 1/s."""
    return horadam_eval(RecurrenceParams(Fraction(0), Fraction(1), as_fraction(r), as_fraction(s)), n)


def roots(r: RationalLike, s: RationalLike) -> tuple[QuadElem, QuadElem]:
    """The roots (alpha, beta) of x^2 - r*x - s = 0, exactly in Q(sqrt(D)).

    alpha = (r + sqrt(D))/2 and beta = (r - sqrt(D))/2 with D = r^2 + 4s,
    so alpha + beta = r and alpha*beta = -s.  Requires D > 0.
    """
    r = as_fraction(r)
    s = as_fraction(s)
    disc = r * r + 4 * s
    if disc <= 0:
        raise DomainError(f"discriminant r^2 + 4s = {disc} must be positive")
    half = Fraction(1, 2)
    alpha = QuadElem(r * half, half, disc)
    beta = QuadElem(r * half, -half, disc)
    return alpha, beta


def binet_eval(r: RationalLike, s: RationalLike, n: int) -> Fraction:
    """h(n) through the closed form (alpha^n - beta^n) / (alpha - beta).

    Evaluated exactly in Q(sqrt(D)); the quotient is always rational.
    Negative n requires s != 0 since it inverts the roots.
    """
    r = as_fraction(r)
    s = as_fraction(s)
    if n < 0 and s == 0:
        raise DomainError("negative index requires s != 0")
    alpha, beta = roots(r, s)
    value = (alpha ** n - beta ** n) / (alpha - beta)
    return value.to_fraction()


def linear_approx_check(r: RationalLike, s: RationalLike, n: int) -> bool:
    """Whether alpha^n = alpha*h(n) + s*h(n-1) and the beta twin hold exactly."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    r = as_fraction(r)
    s = as_fraction(s)
    alpha, beta = roots(r, s)
    h_prev, h_n = fast_gen_fib(r, s, n - 1)
    return (alpha ** n == alpha * h_n + s * h_prev
            and beta ** n == beta * h_n + s * h_prev)


def fast_gen_fib(r: RationalLike, s: RationalLike, n: int) -> tuple[Fraction, Fraction]:
    """(h(n), h(n+1)) in O(log n) ring operations by index doubling.

    Descends the bits of n, mapping (h(k), h(k+1)) to the pair at 2k or
    2k+1 via h(2k) = h(k)*(2*h(k+1) - r*h(k)) and
    h(2k+1) = h(k+1)^2 + s*h(k)^2.
    """
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    r = as_fraction(r)
    s = as_fraction(s)
    a, b = Fraction(0), Fraction(1)
    for bit in bin(n)[2:] if n else "":
        c = a * (2 * b - r * a)
        d = b * b + s * a * a
        if bit == "1":
            a, b = d, r * d + s * c
        else:
            a, b = c, d
    return a, b
