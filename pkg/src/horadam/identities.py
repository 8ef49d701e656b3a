"""Batch verification of the sequence and matrix identities.

Every check evaluates both sides of an identity exactly over a range of
indices and reports the first mismatch, if any.  ``run_suite`` sweeps all
checks over a parameter grid; checks whose hypotheses a parameter pair
violates are recorded as skipped, and comparisons against tabulated
reference matrices that are known to disagree with the derivation are
recorded as discrepancies rather than failures.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .derivation import (
    VARIANT_PATTERNS,
    classic_systems,
    closed_power,
    derive,
    power_form,
    preset_matrix,
    reference_power,
)
from .errors import DomainError
from .exact import RationalLike, as_fraction
from .matrices import (
    Matrix,
    companion,
    companion_decomposition_check,
    companion_power_form,
)
from .sequences import (
    RecurrenceParams,
    binet_eval,
    gen_fib,
    linear_approx_check,
)

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
DISCREPANCY = "discrepancy"


@dataclass(frozen=True)
class FirstFailure:
    index: int
    lhs: str
    rhs: str

    def to_dict(self) -> dict:
        return {"index": self.index, "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    r: Fraction
    s: Fraction
    lo: int
    hi: int
    status: str
    first_failure: FirstFailure | None = None
    note: str | None = None

    def to_dict(self) -> dict:
        record = {
            "identity": self.identity,
            "params": {"r": str(self.r), "s": str(self.s)},
            "range": [self.lo, self.hi],
            "status": self.status,
        }
        if self.first_failure is not None:
            record["first_failure"] = self.first_failure.to_dict()
        if self.note is not None:
            record["note"] = self.note
        return record


def _report(identity, r, s, lo, hi, failure=None, note=None) -> IdentityReport:
    status = FAIL if failure is not None else PASS
    return IdentityReport(identity, r, s, lo, hi, status, failure, note)


def _matrix_text(m: Matrix) -> str:
    return "[" + "; ".join(" ".join(str(e) for e in row) for row in m.rows) + "]"


def matrix_mismatches(left: Matrix, right: Matrix) -> list[tuple[int, int, str, str]]:
    """(row, col, left, right) for every entry where the matrices differ."""
    if left.shape != right.shape:
        raise ValueError(f"shape mismatch: {left.shape} vs {right.shape}")
    return [
        (i, j, str(left[i, j]), str(right[i, j]))
        for i in range(left.nrows)
        for j in range(left.ncols)
        if left[i, j] != right[i, j]
    ]


def check_cassini(r: RationalLike, s: RationalLike, n_max: int) -> IdentityReport:
    """h(n)^2 - h(n-1)*h(n+1) = (-s)^(n-1) for n in [1, n_max]."""
    r = as_fraction(r)
    s = as_fraction(s)
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    h_prev, h_n, h_next = Fraction(0), Fraction(1), r
    sign_power = Fraction(1)  # (-s)^(n-1)
    for n in range(1, n_max + 1):
        lhs = h_n * h_n - h_prev * h_next
        if lhs != sign_power:
            failure = FirstFailure(n, str(lhs), str(sign_power))
            return _report("cassini", r, s, 1, n_max, failure)
        sign_power = sign_power * (-s)
        h_prev, h_n, h_next = h_n, h_next, r * h_next + s * h_n
    return _report("cassini", r, s, 1, n_max)


def check_cubic(r: RationalLike, s: RationalLike, n_max: int) -> IdentityReport:
    """h(n)^3 + h(n-1)^2*h(n+2) + h(n+1)^2*h(n-2)
    = h(n)*(h(n-2)*h(n+2) + 2*h(n-1)*h(n+1)) for n in [2, n_max]."""
    r = as_fraction(r)
    s = as_fraction(s)
    if n_max < 2:
        raise DomainError(f"n_max must be >= 2, got {n_max}")
    window = [gen_fib(r, s, k) for k in range(5)]  # h(n-2)..h(n+2) at n = 2
    for n in range(2, n_max + 1):
        h_nm2, h_nm1, h_n, h_np1, h_np2 = window
        lhs = h_n ** 3 + h_nm1 ** 2 * h_np2 + h_np1 ** 2 * h_nm2
        rhs = h_n * (h_nm2 * h_np2 + 2 * h_nm1 * h_np1)
        if lhs != rhs:
            failure = FirstFailure(n, str(lhs), str(rhs))
            return _report("cubic", r, s, 2, n_max, failure)
        window = window[1:] + [r * window[4] + s * window[3]]
    return _report("cubic", r, s, 2, n_max)


def check_power_form(variant: int, r: RationalLike, s: RationalLike, n_max: int) -> IdentityReport:
    """mat_pow(preset A, n) equals the entrywise power form, n in [1, n_max]."""
    r = as_fraction(r)
    s = as_fraction(s)
    name = f"power_form_{variant}"
    base = preset_matrix(variant, r, s)
    power = base
    for n in range(1, n_max + 1):
        assembled = power_form(variant, r, s, n)
        if power != assembled:
            failure = FirstFailure(n, _matrix_text(power), _matrix_text(assembled))
            return _report(name, r, s, 1, n_max, failure)
        power = power * base
    return _report(name, r, s, 1, n_max)


def check_power_det_zero(variant: int, r: RationalLike, s: RationalLike, n_max: int) -> IdentityReport:
    """det(A^n) = 0 for the preset matrices, n in [1, n_max]."""
    r = as_fraction(r)
    s = as_fraction(s)
    name = f"power_det_zero_{variant}"
    base = preset_matrix(variant, r, s)
    power = base
    for n in range(1, n_max + 1):
        d = power.det()
        if d != 0:
            failure = FirstFailure(n, str(d), "0")
            return _report(name, r, s, 1, n_max, failure)
        power = power * base
    return _report(name, r, s, 1, n_max)


def check_closed_power(variant: int, r: RationalLike, s: RationalLike, n_max: int) -> IdentityReport:
    """closed_power (projector route) equals mat_pow for the derived system."""
    r = as_fraction(r)
    s = as_fraction(s)
    name = f"closed_power_{variant}"
    system = derive(r, s, VARIANT_PATTERNS[variant])
    power = system.matrix
    for n in range(1, n_max + 1):
        closed = closed_power(system, n)
        if power != closed:
            failure = FirstFailure(n, _matrix_text(power), _matrix_text(closed))
            return _report(name, r, s, 1, n_max, failure)
        power = power * system.matrix
    return _report(name, r, s, 1, n_max)


def check_projector_algebra(variant: int, r: RationalLike, s: RationalLike) -> IdentityReport:
    """E^2 = E, A*E = E*A = 0, det A = 0, trace A = r, A^3 = r*A^2 + s*A."""
    r = as_fraction(r)
    s = as_fraction(s)
    name = f"projector_algebra_{variant}"
    system = derive(r, s, VARIANT_PATTERNS[variant])
    a, e = system.matrix, system.projector
    zero = Matrix.identity(3) - Matrix.identity(3)
    facts = [
        (1, e * e, e),
        (1, a * e, zero),
        (1, e * a, zero),
        (1, Matrix([[a.det()]]), Matrix([[0]])),
        (1, Matrix([[a.trace()]]), Matrix([[r]])),
        (3, a * a * a, r * (a * a) + s * a),
    ]
    for index, lhs, rhs in facts:
        if lhs != rhs:
            failure = FirstFailure(index, _matrix_text(lhs), _matrix_text(rhs))
            return _report(name, r, s, 1, 3, failure)
    return _report(name, r, s, 1, 3)


def check_companion_power(r: RationalLike, s: RationalLike, n_max: int) -> IdentityReport:
    """Q^n matches [[h(n+1), s*h(n)], [h(n), s*h(n-1)]] and det(Q^n) = (-s)^n."""
    r = as_fraction(r)
    s = as_fraction(s)
    q = companion(r, s)
    power = q
    sign_power = -s  # (-s)^n
    for n in range(1, n_max + 1):
        assembled = companion_power_form(r, s, n)
        if power != assembled:
            failure = FirstFailure(n, _matrix_text(power), _matrix_text(assembled))
            return _report("companion_power", r, s, 1, n_max, failure)
        d = assembled.det()
        if d != sign_power:
            failure = FirstFailure(n, str(d), str(sign_power))
            return _report("companion_power", r, s, 1, n_max, failure)
        power = power * q
        sign_power = sign_power * (-s)
    return _report("companion_power", r, s, 1, n_max)


def check_companion_decomposition(r: RationalLike, s: RationalLike, n_max: int) -> IdentityReport:
    """Q^n = h(n)*Q + s*h(n-1)*I for n in [1, n_max]."""
    r = as_fraction(r)
    s = as_fraction(s)
    for n in range(1, n_max + 1):
        if not companion_decomposition_check(r, s, n):
            failure = FirstFailure(n, "Q^n", "h(n)*Q + s*h(n-1)*I")
            return _report("companion_decomposition", r, s, 1, n_max, failure)
    return _report("companion_decomposition", r, s, 1, n_max)


def check_binet(r: RationalLike, s: RationalLike, n_max: int, n_min: int = -10) -> IdentityReport:
    """binet_eval = gen_fib for n in [n_min, n_max]."""
    r = as_fraction(r)
    s = as_fraction(s)
    if s == 0:
        n_min = max(n_min, 0)
    for n in range(n_min, n_max + 1):
        lhs = binet_eval(r, s, n)
        rhs = gen_fib(r, s, n)
        if lhs != rhs:
            failure = FirstFailure(n, str(lhs), str(rhs))
            return _report("binet_recurrence", r, s, n_min, n_max, failure)
    return _report("binet_recurrence", r, s, n_min, n_max)


def check_linear_approximation(r: RationalLike, s: RationalLike, n_max: int) -> IdentityReport:
    """alpha^n = alpha*h(n) + s*h(n-1) and the beta twin, n in [1, n_max]."""
    r = as_fraction(r)
    s = as_fraction(s)
    for n in range(1, n_max + 1):
        if not linear_approx_check(r, s, n):
            failure = FirstFailure(n, "alpha^n, beta^n", "alpha*h(n)+s*h(n-1), beta*h(n)+s*h(n-1)")
            return _report("linear_approximation", r, s, 1, n_max, failure)
    return _report("linear_approximation", r, s, 1, n_max)


def check_reference_matrix(name: str) -> IdentityReport:
    """Derived classic matrix vs its tabulated reference form.

    A mismatch is a discrepancy in the reference table, not a failure:
    the derivation is checked independently through its eigen-equations.
    """
    entry = next(c for c in classic_systems() if c.name == name)
    mismatches = matrix_mismatches(entry.system.matrix, entry.reference)
    r, s = entry.system.r, entry.system.s
    if not mismatches:
        return IdentityReport(f"reference_matrix_{name}", r, s, 1, 1, PASS)
    note = "derived vs reference: " + "; ".join(
        f"entry ({i},{j}) derived {lhs} reference {rhs}" for i, j, lhs, rhs in mismatches
    )
    return IdentityReport(f"reference_matrix_{name}", r, s, 1, 1, DISCREPANCY, None, note)


def check_reference_power(name: str, n_max: int) -> IdentityReport:
    """Powers of the derived classic matrix vs the tabulated power form."""
    entry = next(c for c in classic_systems() if c.name == name)
    r, s = entry.system.r, entry.system.s
    power = entry.system.matrix
    mismatch_note = None
    for n in range(1, n_max + 1):
        tabulated = reference_power(name, n)
        mismatches = matrix_mismatches(power, tabulated)
        if mismatches and mismatch_note is None:
            i, j, lhs, rhs = mismatches[0]
            mismatch_note = (
                f"first difference at n={n}, entry ({i},{j}): "
                f"derived {lhs} vs reference {rhs}"
            )
        power = power * entry.system.matrix
    if mismatch_note is None:
        return IdentityReport(f"reference_power_{name}", r, s, 1, n_max, PASS)
    return IdentityReport(
        f"reference_power_{name}", r, s, 1, n_max, DISCREPANCY, None, mismatch_note
    )


_GRID_SEED = 411
_NAMED_GRID: tuple[tuple[int, int], ...] = ((1, 1), (2, 1), (1, 2), (6, -1))


def default_grid() -> list[RecurrenceParams]:
    """The four named sequences plus two seeded random integer pairs.

    The random pairs are drawn with a fixed seed (so the suite is
    reproducible) and constrained to D > 0, s != 0 and r outside {0, 2}
    so that every check applies.
    """
    grid = [RecurrenceParams(0, 1, r, s) for r, s in _NAMED_GRID]
    rng = random.Random(_GRID_SEED)
    while len(grid) < 6:
        r = rng.randint(-9, 9)
        s = rng.randint(-9, 9)
        if r in (0, 2) or s == 0 or r * r + 4 * s <= 0:
            continue
        candidate = RecurrenceParams(0, 1, r, s)
        if candidate not in grid:
            grid.append(candidate)
    return grid


def run_suite(grid: list[RecurrenceParams], n_max: int) -> list[IdentityReport]:
    """Run every check over the grid; deterministic ordering.

    Parameter pairs that violate a check's hypotheses yield skipped
    entries.  The classic reference comparisons are appended once for any
    nonempty grid.  An empty grid produces an empty report.
    """
    if not grid:
        return []
    reports: list[IdentityReport] = []

    def attempt(identity, fn, r, s, lo, hi):
        try:
            reports.append(fn())
        except DomainError as exc:
            reports.append(
                IdentityReport(identity, r, s, lo, hi, SKIPPED, None, str(exc))
            )

    for params in grid:
        r, s = params.r, params.s
        attempt("cassini", lambda: check_cassini(r, s, n_max), r, s, 1, n_max)
        attempt("cubic", lambda: check_cubic(r, s, max(n_max, 2)), r, s, 2, n_max)
        attempt("companion_power", lambda: check_companion_power(r, s, n_max), r, s, 1, n_max)
        attempt(
            "companion_decomposition",
            lambda: check_companion_decomposition(r, s, n_max),
            r, s, 1, n_max,
        )
        attempt("binet_recurrence", lambda: check_binet(r, s, n_max), r, s, -10, n_max)
        attempt(
            "linear_approximation",
            lambda: check_linear_approximation(r, s, n_max),
            r, s, 1, n_max,
        )
        for variant in sorted(VARIANT_PATTERNS):
            attempt(
                f"power_form_{variant}",
                lambda v=variant: check_power_form(v, r, s, n_max),
                r, s, 1, n_max,
            )
            attempt(
                f"power_det_zero_{variant}",
                lambda v=variant: check_power_det_zero(v, r, s, n_max),
                r, s, 1, n_max,
            )
            attempt(
                f"closed_power_{variant}",
                lambda v=variant: check_closed_power(v, r, s, n_max),
                r, s, 1, n_max,
            )
            attempt(
                f"projector_algebra_{variant}",
                lambda v=variant: check_projector_algebra(v, r, s),
                r, s, 1, 3,
            )

    for name in ("fibonacci", "jacobsthal", "pell"):
        reports.append(check_reference_matrix(name))
        reports.append(check_reference_power(name, n_max))

    reports.sort(key=lambda rep: (rep.identity, rep.r, rep.s))
    return reports
