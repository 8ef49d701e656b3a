"""Derivation of 3x3 matrices with prescribed spectrum {alpha, beta, 0}.

The construction fixes the eigenvector templates x = (alpha, beta, -1) and
y = (beta, alpha, -1) for the two nonzero eigenvalues and lets the kernel
eigenvector z = t * signs vary over sign patterns.  Solving the nine linear
eigen-equations row by row over Q(sqrt(D)) produces a matrix A with rational
entries; the rank-one projector E = P * diag(0, 0, 1) * P^(-1) onto the
kernel direction then gives the closed form

    A^n = h(n) * A + s * h(n-1) * (I - E)

so powers of A are read off the sequence h without any matrix products.

Three sign patterns are special: each has a known rational formula for A
with a scalar prefactor, and a companion formula expressing A^n entrywise
in a window of five consecutive h values.  They are exposed here as
``variants`` 1..3, and their instantiations at the classic parameter pairs
(Fibonacci, Pell, Jacobsthal) are shipped with the tabulated matrices they
are usually quoted as, for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateEigenbasisError,
    DomainError,
    PatternNotSupportedError,
)
from .exact import QuadElem, RationalLike, as_fraction
from .matrices import Matrix
from .sequences import fast_gen_fib, gen_fib, roots


@dataclass(frozen=True)
class KernelPattern:
    """Sign triple (each +1 or -1) directing the kernel eigenvector."""

    signs: tuple[int, int, int]

    def __post_init__(self) -> None:
        if len(self.signs) != 3 or any(v not in (1, -1) for v in self.signs):
            raise ValueError(f"signs must be three values in {{+1, -1}}, got {self.signs}")

    @classmethod
    def from_string(cls, text: str) -> KernelPattern:
        """Parse a pattern like "+-+"."""
        mapping = {"+": 1, "-": -1}
        if len(text) != 3 or any(ch not in mapping for ch in text):
            raise ValueError(f"pattern must be three characters from +-, got {text!r}")
        return cls(tuple(mapping[ch] for ch in text))

    def __str__(self) -> str:
        return "".join("+" if v > 0 else "-" for v in self.signs)


#: The sign patterns with known closed-form presets, keyed by variant number.
VARIANT_PATTERNS: dict[int, KernelPattern] = {
    1: KernelPattern.from_string("+-+"),
    2: KernelPattern.from_string("++-"),
    3: KernelPattern.from_string("-++"),
}

_PATTERN_VARIANTS = {pattern: k for k, pattern in VARIANT_PATTERNS.items()}


@dataclass(frozen=True)
class DerivedSystem:
    """Output of :func:`derive`: the matrix, its kernel projector, and the
    eigenvector matrix P (columns x, y, z) over Q(sqrt(D))."""

    matrix: Matrix
    projector: Matrix
    eigenvectors: Matrix
    r: Fraction
    s: Fraction
    pattern: KernelPattern
    validity: str

    @property
    def discriminant(self) -> Fraction:
        return self.r * self.r + 4 * self.s


def _check_variant_domain(r: Fraction, pattern: KernelPattern) -> str:
    variant = _PATTERN_VARIANTS.get(pattern)
    if variant in (1, 3):
        if r == 0:
            raise DomainError(f"pattern {pattern} requires r != 0")
        return "r != 0"
    if variant == 2:
        if r == 0 or r == 2:
            raise DomainError(f"pattern {pattern} requires r not in {{0, 2}}")
        return "r not in {0, 2}"
    return "det(P) != 0 for the supplied pattern"


def derive(
    r: RationalLike,
    s: RationalLike,
    pattern: KernelPattern,
    t: RationalLike = 1,
) -> DerivedSystem:
    """Solve for the 3x3 matrix with eigenpairs (alpha, x), (beta, y), (0, z).

    Each row of A satisfies three linear equations (one per eigenpair);
    they are solved exactly over Q(sqrt(D)) and the result is asserted to
    be rational.  The kernel scale t has no effect on A or E (z enters only
    through its direction); it is accepted so that independence can be
    demonstrated.
    """
    r = as_fraction(r)
    s = as_fraction(s)
    t = as_fraction(t)
    if t == 0:
        raise DomainError("kernel scale t must be nonzero")
    validity = _check_variant_domain(r, pattern)
    alpha, beta = roots(r, s)
    disc = alpha.disc
    minus_one = QuadElem.from_rational(-1, disc)
    x = (alpha, beta, minus_one)
    y = (beta, alpha, minus_one)
    z = tuple(QuadElem.from_rational(t * sign, disc) for sign in pattern.signs)

    p = Matrix([[x[i], y[i], z[i]] for i in range(3)])
    if p.det() == 0:
        raise DegenerateEigenbasisError(
            f"eigenvectors are linearly dependent for r={r}, s={s}, pattern {pattern}"
        )

    # Row i of A solves M * row^T = (alpha*x_i, beta*y_i, 0) with M = P^T.
    system_inv = p.transpose().inverse()
    zero = QuadElem.zero(disc)
    a_rows = []
    for i in range(3):
        rhs = Matrix.column([alpha * x[i], beta * y[i], zero])
        solution = system_inv * rhs
        a_rows.append([solution[j, 0] for j in range(3)])
    a_quad = Matrix(a_rows)
    if not a_quad.is_rational():
        raise PatternNotSupportedError(
            f"pattern {pattern} does not produce a rational matrix at r={r}, s={s}"
        )

    diag_001 = Matrix([
        [zero, zero, zero],
        [zero, zero, zero],
        [zero, zero, QuadElem.one(disc)],
    ])
    e_quad = p * diag_001 * p.inverse()
    if not e_quad.is_rational():
        raise PatternNotSupportedError(
            f"pattern {pattern} does not produce a rational projector at r={r}, s={s}"
        )

    a = Matrix(a_quad.to_fraction_rows())
    e = Matrix(e_quad.to_fraction_rows())

    # The solved rows must reproduce the eigen-equations exactly.
    for value, vec in ((alpha, x), (beta, y), (zero, z)):
        column = Matrix.column(vec)
        assert a * column == value * column

    return DerivedSystem(
        matrix=a,
        projector=e,
        eigenvectors=p,
        r=r,
        s=s,
        pattern=pattern,
        validity=validity,
    )


def closed_power(system: DerivedSystem, n: int) -> Matrix:
    """A^n evaluated as h(n)*A + s*h(n-1)*(I - E), no matrix products."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    h_prev, h_n = fast_gen_fib(system.r, system.s, n - 1)
    identity = Matrix.identity(3)
    return h_n * system.matrix + (system.s * h_prev) * (identity - system.projector)


def preset_matrix(variant: int, r: RationalLike, s: RationalLike) -> Matrix:
    """The known rational matrix for one of the three special patterns."""
    r = as_fraction(r)
    s = as_fraction(s)
    _check_variant_domain(r, VARIANT_PATTERNS[_require_variant(variant)])
    if variant == 1:
        scale = 1 / r
        rows = [
            [r * (r - 1) + s, s - r, -r * r],
            [-s, -s, Fraction(0)],
            [1 - r, Fraction(1), r],
        ]
    elif variant == 2:
        scale = 1 / (r - 2)
        rows = [
            [r * (r - 1) + s, r + s, r * r + 2 * s],
            [-s, -s, -2 * s],
            [1 - r, Fraction(-1), -r],
        ]
    else:
        scale = 1 / r
        rows = [
            [r * (r + 1) + s, r + s, r * r],
            [-s, -s, Fraction(0)],
            [-(r + 1), Fraction(-1), -r],
        ]
    return scale * Matrix(rows)


def power_form(variant: int, r: RationalLike, s: RationalLike, n: int) -> Matrix:
    """A^n for a special pattern, assembled entrywise from h(n-2)..h(n+2).

    Requires s != 0 since n = 1 reaches back to h(-1) = 1/s.
    """
    variant = _require_variant(variant)
    r = as_fraction(r)
    s = as_fraction(s)
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if s == 0:
        raise DomainError("the entrywise power form requires s != 0")
    _check_variant_domain(r, VARIANT_PATTERNS[variant])
    h_nm2, h_nm1, h_n, h_np1, h_np2 = _window(r, s, n)
    if variant == 1:
        scale = 1 / r
        rows = [
            [h_np2 - h_np1, -(h_np1 - s * h_n), -r * h_np1],
            [-s * (h_n - h_nm1), s * (h_nm1 - s * h_nm2), r * s * h_nm1],
            [-(h_np1 - h_n), h_n - s * h_nm1, r * h_n],
        ]
    elif variant == 2:
        scale = 1 / (r - 2)
        rows = [
            [h_np2 - h_np1, h_np1 + s * h_n, h_np2 + s * h_n],
            [-s * (h_n - h_nm1), -s * (h_nm1 + s * h_nm2), -s * (h_n + s * h_nm2)],
            [-(h_np1 - h_n), -(h_n + s * h_nm1), -(h_np1 + s * h_nm1)],
        ]
    else:
        scale = 1 / r
        rows = [
            [h_np2 + h_np1, h_np1 + s * h_n, r * h_np1],
            [-s * (h_n + h_nm1), -s * (h_nm1 + s * h_nm2), -r * s * h_nm1],
            [-(h_np1 + h_n), -(h_n + s * h_nm1), -r * h_n],
        ]
    return scale * Matrix(rows)


def _require_variant(variant: int) -> int:
    if variant not in VARIANT_PATTERNS:
        raise ValueError(f"variant must be one of {sorted(VARIANT_PATTERNS)}, got {variant}")
    return variant


def _window(r: Fraction, s: Fraction, n: int) -> tuple[Fraction, ...]:
    """(h(n-2), ..., h(n+2)); backward values via h(k) = (h(k+2) - r*h(k+1))/s."""
    if n >= 2:
        lo, hi = fast_gen_fib(r, s, n - 2)
        window = [lo, hi]
        for _ in range(3):
            lo, hi = hi, r * hi + s * lo
            window.append(hi)
        return tuple(window)
    return tuple(gen_fib(r, s, k) for k in range(n - 2, n + 3))


@dataclass(frozen=True)
class ClassicSystem:
    """A named instantiation of the variant-1 construction together with
    the matrix form it is usually tabulated as."""

    name: str
    system: DerivedSystem
    reference: Matrix


_CLASSIC_PARAMS: tuple[tuple[str, int, int], ...] = (
    ("fibonacci", 1, 1),
    ("pell", 2, 1),
    ("jacobsthal", 1, 2),
)

_REFERENCE_MATRICES: dict[str, Matrix] = {
    "fibonacci": Matrix([[1, 0, -1], [-1, -1, 0], [0, 1, 1]]),
    "pell": Fraction(1, 2) * Matrix([[3, -1, -4], [-1, -1, 0], [0, 1, 2]]),
    "jacobsthal": Matrix([[2, 1, -1], [-2, -2, 0], [0, 1, 1]]),
}


def classic_systems() -> list[ClassicSystem]:
    """The Fibonacci, Pell and Jacobsthal instantiations of variant 1.

    Each system is produced by :func:`derive`; the attached reference is
    the commonly tabulated matrix.  The Pell reference is known to differ
    from the derivation in one entry, so callers comparing the two should
    treat the derivation as authoritative and report, not fail.
    """
    pattern = VARIANT_PATTERNS[1]
    return [
        ClassicSystem(name, derive(r, s, pattern), _REFERENCE_MATRICES[name])
        for name, r, s in _CLASSIC_PARAMS
    ]


def classic_for(r: Fraction, s: Fraction, pattern: KernelPattern) -> ClassicSystem | None:
    """The classic entry matching (r, s, pattern), if any."""
    if pattern != VARIANT_PATTERNS[1]:
        return None
    for name, cr, cs in _CLASSIC_PARAMS:
        if r == cr and s == cs:
            return ClassicSystem(name, derive(r, s, pattern), _REFERENCE_MATRICES[name])
    return None


def reference_power(name: str, n: int) -> Matrix:
    """The tabulated entrywise form of the n-th power for a classic system.

    These are quoted in terms of the named sequence itself (F, P or J)
    rather than the generic five-term window, so they give an independent
    cross-check of the variant-1 power form.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if name == "fibonacci":
        f = {k: gen_fib(1, 1, k) for k in range(n - 3, n + 2)}
        return Matrix([
            [f[n], -f[n - 1], -f[n + 1]],
            [-f[n - 2], f[n - 3], f[n - 1]],
            [-f[n - 1], f[n - 2], f[n]],
        ])
    if name == "pell":
        p = {k: gen_fib(2, 1, k) for k in range(n - 2, n + 3)}
        return Fraction(1, 2) * Matrix([
            [p[n + 2] - p[n + 1], -(p[n + 1] - p[n]), -2 * p[n + 1]],
            [-(p[n] - p[n - 1]), p[n - 1] - p[n - 2], 2 * p[n - 1]],
            [-(p[n + 1] - p[n]), p[n] - p[n - 1], p[n]],
        ])
    if name == "jacobsthal":
        j = {k: gen_fib(1, 2, k) for k in range(n - 2, n + 2)}
        return Matrix([
            [2 * j[n], -(j[n + 1] - 2 * j[n]), -j[n + 1]],
            [-4 * j[n - 2], 2 * (j[n - 1] - 2 * j[n - 2]), 2 * j[n - 1]],
            [-2 * j[n - 1], j[n] - 2 * j[n - 1], j[n]],
        ])
    raise ValueError(f"unknown classic system {name!r}")
