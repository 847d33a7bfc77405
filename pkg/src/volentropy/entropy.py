"""Volume entropy of the minimal symmetric presentations.

The growth rate of the rank-n presentations is the unique root above 1 of
the degree-n polynomial from `q_polynomial`; the volume entropy is its
natural logarithm.  This module certifies that root by bisection with exact
rational sign evaluations, cross-checks it against four independent
computational routes through the matrix reductions, and packages the result.

For n = 2 (torus and Klein bottle) the entropy is exactly 0 and no matrices
are built.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .core import IntPolynomial, poly_eval
from .markov import PresentationSpec, build_markov_from_blocks
from .reductions import compacted_matrix, super_compacted_matrix
from .rome import RomeSpec, q_polynomial, rome_char_poly
from .spectral import char_poly_exact, power_iteration

__all__ = [
    "EntropyReport",
    "EntropyTableRow",
    "lambda_n",
    "lambda_n_bracket",
    "bounds_check",
    "volume_entropy",
    "entropy_table",
]

_MAX_BISECT = 200

# The five independent routes to the growth rate, in report order.
ROUTE_NAMES = (
    "markov-power",
    "compacted-power",
    "supercompacted-power",
    "rome-root",
    "charpoly-root",
)


# =====================================================================
# Certified root of the closed-form polynomial
# =====================================================================

def _bisect_root(p: IntPolynomial, lo: Fraction, hi: Fraction, tol: float) -> tuple[Fraction, Fraction]:
    """Shrink [lo, hi] around the sign change of p with exact arithmetic.

    Requires p(lo) < 0 < p(hi); returns the final bracket (width <= tol
    unless the iteration cap bites first, which at 200 halvings it cannot
    for any representable tolerance).
    """
    flo = poly_eval(p, lo)
    fhi = poly_eval(p, hi)
    if not (flo < 0 < fhi):
        raise ValueError(
            f"bisection needs a sign change: p({lo}) = {flo}, p({hi}) = {fhi}"
        )
    for _ in range(_MAX_BISECT):
        if hi - lo <= tol:
            break
        mid = (lo + hi) / 2
        fmid = poly_eval(p, mid)
        if fmid == 0:
            # Exact hit: collapse the bracket to the root.
            return mid, mid
        if fmid < 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def lambda_n_bracket(n: int, tol: float = 1e-12) -> tuple[Fraction, Fraction]:
    """Exact rational bracket around the growth rate of rank n.

    The closed-form polynomial is negative at 1 and positive at 2n-1, and has
    exactly one root above 1; both endpoint signs are certified in rational
    arithmetic, as is every bisection step.
    """
    if n < 3:
        raise ValueError(
            f"rank must be >= 3 for a growth rate above 1, got {n}"
            " (rank 2 has entropy 0; see volume_entropy)"
        )
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    return _bisect_root(q_polynomial(n), Fraction(1), Fraction(2 * n - 1), tol)


def lambda_n(n: int, tol: float = 1e-12) -> float:
    """Growth rate of the rank-n presentations, certified to within tol."""
    lo, hi = lambda_n_bracket(n, tol)
    return float((lo + hi) / 2)


def bounds_check(n: int) -> bool:
    """Certify 2n-1 - (2n-1)^-(n-2) < growth rate < 2n-1 by exact signs.

    Evaluates the closed-form polynomial at both bounds in rational
    arithmetic: strictly negative at the lower bound, strictly positive at
    2n-1.  The lower bound needs n >= 4.
    """
    if n < 4:
        raise ValueError(f"the lower bound requires n >= 4, got {n}")
    p = q_polynomial(n)
    b = 2 * n - 1
    lower = Fraction(b) - Fraction(1, b ** (n - 2))
    return poly_eval(p, lower) < 0 < poly_eval(p, Fraction(b))


# =====================================================================
# The consensus report
# =====================================================================

@dataclass(frozen=True, slots=True)
class EntropyReport:
    """Growth rate and volume entropy of one presentation, with receipts.

    routes     -- per-route growth-rate estimates (empty for rank 2)
    agreement  -- max pairwise discrepancy among the routes
    consistent -- all routes converged and agree within the combined tolerance
    bounds_hold-- every applicable exact bound certification passed
    lambda_    -- consensus growth rate (the certified bisection root)
    entropy    -- log(lambda_), natural log
    """

    n: int
    orientable: bool
    lambda_: float
    entropy: float
    routes: dict[str, float] = field(default_factory=dict)
    agreement: float = 0.0
    consistent: bool = True
    bounds_hold: bool = True


def volume_entropy(spec: PresentationSpec, tol: float = 1e-10) -> EntropyReport:
    """Volume entropy of the presentation, cross-checked five ways.

    Routes: power iteration on the full transition matrix, on the compacted
    matrix and on the supercompacted matrix; bisection on the characteristic
    polynomial of the supercompacted matrix obtained through a rome; and
    bisection on the same polynomial computed by exact elimination.  The
    consensus value is the certified rome-route root.  Routes disagreeing
    beyond the combined tolerance set consistent=False; they are never
    averaged.
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    n = spec.n
    if n == 2:
        return EntropyReport(n=n, orientable=spec.orientable, lambda_=1.0, entropy=0.0)

    routes: dict[str, float] = {}
    all_converged = True

    markov = build_markov_from_blocks(spec)
    compacted = compacted_matrix(n)
    supercompacted = super_compacted_matrix(n)
    for name, matrix in (
        ("markov-power", markov),
        ("compacted-power", compacted),
        ("supercompacted-power", supercompacted),
    ):
        est = power_iteration(matrix, tol=tol)
        routes[name] = est.value
        all_converged = all_converged and est.converged

    rome_poly = rome_char_poly(supercompacted, RomeSpec((n - 1, n)))
    exact_poly = char_poly_exact(supercompacted)
    root_tol = min(tol, 1e-12)
    rome_lo, rome_hi = _bisect_root(
        rome_poly, Fraction(1), Fraction(2 * n - 1), root_tol
    )
    routes["rome-root"] = float((rome_lo + rome_hi) / 2)
    exact_lo, exact_hi = _bisect_root(
        exact_poly, Fraction(1), Fraction(2 * n - 1), root_tol
    )
    routes["charpoly-root"] = float((exact_lo + exact_hi) / 2)

    values = list(routes.values())
    agreement = max(abs(a - b) for a in values for b in values)
    # Power iteration and bisection are each good to ~tol; give the spread
    # three orders of headroom before declaring the routes inconsistent.
    consistent = all_converged and agreement <= max(1000 * tol, 1e-12)

    if n >= 4:
        bounds_hold = bounds_check(n)
    else:
        p = q_polynomial(n)
        bounds_hold = poly_eval(p, Fraction(1)) < 0 < poly_eval(p, Fraction(2 * n - 1))

    lam = routes["rome-root"]
    return EntropyReport(
        n=n,
        orientable=spec.orientable,
        lambda_=lam,
        entropy=math.log(lam),
        routes=routes,
        agreement=agreement,
        consistent=consistent,
        bounds_hold=bounds_hold,
    )


# =====================================================================
# Entropy tables
# =====================================================================

@dataclass(frozen=True, slots=True)
class EntropyTableRow:
    """One rank's worth of growth data.

    lower_bound is None at n = 3, where the closed-form lower bound does not
    apply; gap = log(2n-1) - entropy measures how close the entropy sits to
    its theoretical ceiling.
    """

    n: int
    lambda_: float
    entropy: float
    lower_bound: float | None
    upper_bound: float
    gap: float


def entropy_table(n_min: int, n_max: int) -> list[EntropyTableRow]:
    """Growth rates and entropies for ranks n_min..n_max inclusive."""
    if n_min < 3:
        raise ValueError(f"table starts at rank 3, got {n_min}")
    if n_min > n_max:
        raise ValueError(f"empty range: n_min={n_min} > n_max={n_max}")
    rows = []
    for n in range(n_min, n_max + 1):
        lam = lambda_n(n)
        ub = float(2 * n - 1)
        lb = float(2 * n - 1 - Fraction(1, (2 * n - 1) ** (n - 2))) if n >= 4 else None
        rows.append(
            EntropyTableRow(
                n=n,
                lambda_=lam,
                entropy=math.log(lam),
                lower_bound=lb,
                upper_bound=ub,
                gap=math.log(ub) - math.log(lam),
            )
        )
    return rows
