"""Boundary curves and region predicates in the (alpha, beta) parameter square.

Omega is the open triangle alpha > 0, beta > 1/2, alpha + beta < 1 where
the maximum measure product is unresolved.  For each j >= 0 the j-th
blocking pair beats the star pair once beta reaches the curve

    e_j(alpha) = 1 - (a^j (1-a) / (1 + a^j (1-a)))^(1/(j+1)),

so the candidate region Delta is the part of Omega lying strictly below
every e_j.  Membership is decided finitely: curves are checked one by one
and the tail j > J is certified through the lower bound
e_j >= 1 - (a^j (1-a))^(1/(j+1)), which increases to 1 - alpha and
therefore eventually clears any beta with alpha + beta < 1.

The integer-side analogues C1 and C2 (exact rational evaluations) and the
strengthened region Delta' defined by (2-a) b < 1 together with
(1-a) log(1/(1-b)) < (1-b) log(1/a) live here too, as do the window
product bounds used to compare size products against the star product
over ranges of first-family sizes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CertificationError,
    NotFoundError,
    UndecidableAtTolerance,
)
from .exactarith import DEFAULT_TOL, binom, gen_binom

DEFAULT_J_CAP = 64
DEFAULT_I_MAX = 1000


@dataclass(frozen=True)
class RegionPoint:
    """A parameter pair (alpha, beta) in the open unit square."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (0 < self.alpha < 1 and 0 < self.beta < 1):
            raise ValueError(f"point ({self.alpha}, {self.beta}) outside (0,1)^2")

    @property
    def alpha_bar(self) -> float:
        return 1.0 - self.alpha

    @property
    def beta_bar(self) -> float:
        return 1.0 - self.beta


def in_omega(alpha: float, beta: float) -> bool:
    """The open triangle where the maximum is unresolved."""
    return alpha > 0 and beta > 0.5 and alpha + beta < 1


def in_omega_prime(n: int, k: int, l: int) -> bool:
    """Integer analogue: k > 0, l > n/2, k + l < n."""
    return k > 0 and 2 * l > n and k + l < n


def _log_one_minus_e(alpha: float, j: int) -> float:
    """log(1 - e_j(alpha)), computed in the log domain to survive large j."""
    inner = alpha**j * (1.0 - alpha)
    return (j * math.log(alpha) + math.log1p(-alpha) - math.log1p(inner)) / (j + 1)


def e_j(alpha: float, j: int) -> float:
    """Threshold curve: the j-th blocking pair wins exactly when beta >= e_j."""
    if not 0 < alpha < 1:
        raise ValueError(f"need 0 < alpha < 1, got {alpha}")
    if j < 0:
        raise ValueError(f"need j >= 0, got {j}")
    return 1.0 - math.exp(_log_one_minus_e(alpha, j))


def _e_tail_floor(alpha: float, j: int) -> float:
    """Lower bound 1 - (a^j (1-a))^(1/(j+1)) <= e_j, increasing to 1 - alpha."""
    return 1.0 - math.exp((j * math.log(alpha) + math.log1p(-alpha)) / (j + 1))


def boundary_condition(
    alpha: float, beta: float, j: int, *, tol: float = DEFAULT_TOL
) -> bool:
    """Strict inequality (1 + (1-a) a^j)(1 - (1-b)^(j+1)) < 1.

    Equivalent to the j-th blocking measure product lying below alpha*beta,
    and to beta < e_j(alpha).  Points within tol of the boundary count as
    failing, matching the strict reading.
    """
    if not (0 < alpha < 1 and 0 < beta < 1):
        raise ValueError(f"point ({alpha}, {beta}) outside (0,1)^2")
    if j < 0:
        raise ValueError(f"need j >= 0, got {j}")
    product = (1.0 + (1.0 - alpha) * alpha**j) * (1.0 - (1.0 - beta) ** (j + 1))
    return product < 1.0 - tol


def delta_report(
    alpha: float,
    beta: float,
    *,
    j_cap: int = DEFAULT_J_CAP,
    tol: float = DEFAULT_TOL,
) -> dict:
    """Detailed membership certificate for the region below every e_j.

    Every curve up to j_cap is checked explicitly; the infinite tail is
    then certified at the first uncovered index through the increasing
    lower bound on e_j, or the call aborts if even that bound cannot
    clear beta there.
    """
    report = {
        "alpha": alpha,
        "beta": beta,
        "in_omega": in_omega(alpha, beta),
        "holds": False,
        "checked_j": 0,
        "tail_certified_at": None,
        "min_margin": None,
        "violating_j": None,
    }
    if not report["in_omega"]:
        return report
    min_margin = math.inf
    for j in range(j_cap + 1):
        margin = e_j(alpha, j) - beta
        if margin <= -tol:
            report.update(checked_j=j + 1, violating_j=j, min_margin=margin)
            return report
        min_margin = min(min_margin, margin)
    tail = j_cap + 1
    if _e_tail_floor(alpha, tail) < beta + tol:
        raise CertificationError(
            f"tail not certified for ({alpha}, {beta}) at j = {tail}; raise j_cap"
        )
    report.update(
        checked_j=j_cap + 1, tail_certified_at=tail, min_margin=min_margin
    )
    if min_margin <= tol:
        raise UndecidableAtTolerance(
            f"({alpha}, {beta}) is within {tol} of the boundary "
            f"(minimum margin {min_margin})"
        )
    report["holds"] = True
    return report


def in_delta(
    alpha: float,
    beta: float,
    *,
    j_cap: int = DEFAULT_J_CAP,
    tol: float = DEFAULT_TOL,
) -> bool:
    """Strict membership below every curve e_j (finitely certified)."""
    return delta_report(alpha, beta, j_cap=j_cap, tol=tol)["holds"]


def delta_boundary(
    alpha: float, *, j_cap: int = DEFAULT_J_CAP
) -> float:
    """Certified value of min over all j >= 0 of e_j(alpha)."""
    if not 0 < alpha < 0.5:
        raise ValueError(f"need 0 < alpha < 1/2, got {alpha}")
    best = math.inf
    for j in range(j_cap + 1):
        best = min(best, e_j(alpha, j))
        if _e_tail_floor(alpha, j) >= best:
            return best
    raise CertificationError(
        f"minimum over e_j not certified for alpha={alpha} within j <= {j_cap}"
    )


def condition_c1(n: int, k: int, l: int) -> bool:
    """Exact rational test (1 + (n-k)/(n-1)) (l-1)/(n-1) < 1."""
    value = (1 + Fraction(n - k, n - 1)) * Fraction(l - 1, n - 1)
    return value < 1


def condition_c2(n: int, k: int, l: int) -> bool:
    """Exact rational test (n-k) H[n-l, n-2] - (n-l) H[k, n-2] < 0."""
    first = sum(Fraction(1, i) for i in range(n - l, n - 1))
    second = sum(Fraction(1, i) for i in range(k, n - 1))
    return (n - k) * first - (n - l) * second < 0


def in_delta_prime(alpha: float, beta: float) -> bool:
    """Strengthened region: (2-a) b < 1 and (1-a) log(1/(1-b)) < (1-b) log(1/a)."""
    if not in_omega(alpha, beta):
        return False
    if (2.0 - alpha) * beta >= 1.0:
        return False
    return (1.0 - alpha) * math.log(1.0 / (1.0 - beta)) < (1.0 - beta) * math.log(
        1.0 / alpha
    )


def delta_prime_boundary(alpha: float, *, tol: float = DEFAULT_TOL) -> float:
    """Upper beta limit of the strengthened region at this alpha.

    The logarithmic condition is strictly increasing in beta, so its root
    is found by bisection and then capped by the linear condition.
    """
    if not 0 < alpha < 1:
        raise ValueError(f"need 0 < alpha < 1, got {alpha}")

    def gap(b: float) -> float:
        return (1.0 - alpha) * math.log(1.0 / (1.0 - b)) - (1.0 - b) * math.log(
            1.0 / alpha
        )

    lo, hi = tol, 1.0 - tol
    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = (lo + hi) / 2.0
        if gap(mid) < 0:
            lo = mid
        else:
            hi = mid
    return min((lo + hi) / 2.0, 1.0 / (2.0 - alpha))


def cusp_constants() -> tuple[float, float]:
    """The cusp of the lower envelope of the e_j curves.

    e_0 and e_1 cross at alpha = 1 - 1/sqrt(2), where both equal
    2 - sqrt(2); below every curve, beta can never exceed that value.
    """
    alpha = 1.0 - 1.0 / math.sqrt(2.0)
    return alpha, 2.0 * alpha


def e_crossing(i: int, *, tol: float = 1e-13) -> tuple[float, float]:
    """Solve e_{i-2}(alpha) = e_{i-3}(alpha) for alpha in (0, 1/2).

    Returns (alpha, common curve value).  Defined for i >= 4; consecutive
    curves with those indices are both decreasing, which makes the
    crossing the right place to check the deep-window conditions.
    """
    if i < 4:
        raise ValueError(f"need i >= 4, got {i}")

    def gap(a: float) -> float:
        return e_j(a, i - 2) - e_j(a, i - 3)

    steps = 2048
    lo_edge, hi_edge = 1e-6, 0.5 - 1e-9
    prev_a, prev_g = lo_edge, gap(lo_edge)
    for step in range(1, steps + 1):
        a = lo_edge + (hi_edge - lo_edge) * step / steps
        g = gap(a)
        if prev_g == 0.0:
            return prev_a, e_j(prev_a, i - 2)
        if (prev_g < 0) != (g < 0):
            lo, hi = prev_a, a
            glo = prev_g
            for _ in range(200):
                if hi - lo <= tol:
                    break
                mid = (lo + hi) / 2.0
                gm = gap(mid)
                if (glo < 0) == (gm < 0):
                    lo, glo = mid, gm
                else:
                    hi = mid
            alpha = (lo + hi) / 2.0
            return alpha, e_j(alpha, i - 2)
        prev_a, prev_g = a, g
    raise NotFoundError(f"no crossing of e_{i - 2} and e_{i - 3} in (0, 1/2)")


def i0(alpha: float, i_max: int = DEFAULT_I_MAX) -> int:
    """Smallest index from which the single-prefix window stays controlled.

    Returns the least i >= 2 such that

        (1 + a^(i-2) (1-a)) log(1/(1 - e_{i-2}(a))) < log(1/a)

    holds for every i' with i <= i' <= i_max.  The left side tends to
    log(1/a) from below as i grows, so a finite scan settles it.
    """
    if not 0 < alpha < 0.5:
        raise ValueError(f"need 0 < alpha < 1/2, got {alpha}")
    log_inv_alpha = math.log(1.0 / alpha)
    last_fail = None
    for i in range(2, i_max + 1):
        j = i - 2
        lhs = -(1.0 + alpha**j * (1.0 - alpha)) * _log_one_minus_e(alpha, j)
        if lhs >= log_inv_alpha:
            last_fail = i
    if last_fail == i_max:
        raise NotFoundError(
            f"window condition still failing at i_max = {i_max} for alpha={alpha}"
        )
    return 2 if last_fail is None else last_fail + 1


# ---------------------------------------------------------------------------
# Window product bounds
# ---------------------------------------------------------------------------

_KIND_PREFIX_TERMS = {"C": 1, "A": 2, "B": 3}


@dataclass(frozen=True)
class ProductBound:
    """Product polynomial (X + C(x, p)) (Y - C(x, q)) over a size window.

    X sums the first 1 ("C"), 2 ("A"), or 3 ("B") cascade digits of the
    first family's size, with the window index i placing the second digit
    at C(n-i, n-k-1); Y is the matching upper bound for the second family.
    x parameterizes sizes within the window, running from one below the
    x-term's level up to n - i - epsilon.
    """

    kind: str
    n: int
    k: int
    l: int
    i: int
    epsilon: int = 0

    def __post_init__(self):
        if self.kind not in _KIND_PREFIX_TERMS:
            raise ValueError(f"kind must be one of A, B, C; got {self.kind!r}")
        if self.i < 2:
            raise ValueError(f"need i >= 2, got {self.i}")
        if self.kind == "C" and self.epsilon != 0:
            raise ValueError("kind C has no epsilon offset")
        if self.kind == "B" and self.epsilon < 1:
            raise ValueError("kind B needs epsilon >= 1")
        if self.epsilon < 0:
            raise ValueError(f"need epsilon >= 0, got {self.epsilon}")

    @property
    def x_level_first(self) -> int:
        return self.n - self.k - _KIND_PREFIX_TERMS[self.kind]

    @property
    def x_level_second(self) -> int:
        return self.l - _KIND_PREFIX_TERMS[self.kind]

    @property
    def X(self) -> int:
        n, k, i = self.n, self.k, self.i
        total = binom(n - 1, n - k)
        if self.kind in ("A", "B"):
            total += binom(n - i, n - k - 1)
        if self.kind == "B":
            total += binom(n - i - 1, n - k - 2)
        return total

    @property
    def Y(self) -> int:
        n, l, i = self.n, self.l, self.i
        total = binom(n - 1, l - 1)
        if self.kind in ("A", "B"):
            total -= binom(n - i, l - 1)
        if self.kind == "B":
            total -= binom(n - i - 1, l - 2)
        return total

    @property
    def x_range(self) -> tuple[float, float]:
        return (
            float(self.x_level_first - 1),
            float(self.n - self.i - self.epsilon),
        )

    def at(self, x: float) -> float:
        """Evaluate the product; integral x is computed exactly first."""
        lo, hi = self.x_range
        if not lo - 1e-9 <= x <= hi + 1e-9:
            raise ValueError(f"x = {x} outside window [{lo}, {hi}]")
        if float(x).is_integer():
            xi = int(x)
            first = self.X + binom(xi, self.x_level_first)
            second = self.Y - binom(xi, self.x_level_second)
            try:
                return float(first * second)
            except OverflowError:
                pass
        return (self.X + gen_binom(x, self.x_level_first)) * (
            self.Y - gen_binom(x, self.x_level_second)
        )


def product_bound_condition(
    alpha: float,
    beta: float,
    i: int,
    epsilon: int | None,
    kind: str,
) -> bool:
    """Asymptotic sufficient condition for the window bound to stay below its cap.

    One logarithmic inequality per kind; when it holds, the window product
    never exceeds max(XY, value at the right endpoint) for large n.
    """
    if kind not in _KIND_PREFIX_TERMS:
        raise ValueError(f"kind must be one of A, B, C; got {kind!r}")
    if i < 2:
        raise ValueError(f"need i >= 2, got {i}")
    if not (0 < alpha < 1 and 0 < beta < 1):
        raise ValueError(f"point ({alpha}, {beta}) outside (0,1)^2")
    ab = 1.0 - alpha
    bb = 1.0 - beta
    la = math.log(1.0 / alpha)
    lb = math.log(1.0 / bb)
    if kind == "C":
        return (1.0 / bb ** (i - 1)) * lb < (1.0 / (alpha ** (i - 2) * ab)) * la
    if epsilon is None:
        raise ValueError(f"kind {kind} needs an epsilon offset")
    e = epsilon
    if kind == "A":
        lhs = (1.0 - bb ** (i - 1)) / (beta * bb ** (i - 2 + e)) * lb
        rhs = (1.0 + alpha ** (i - 2) * ab) / (alpha ** (i - 3 + e) * ab**2) * la
        return lhs <= rhs
    lhs = (1.0 - bb ** (i - 1) - beta * bb ** (i - 1)) / (
        beta**2 * bb ** (i - 3 + e)
    ) * lb
    rhs = (
        (1.0 + ab * alpha ** (i - 2) + ab**2 * alpha ** (i - 2))
        / (ab**3 * alpha ** (i - 4 + e))
        * la
    )
    return lhs <= rhs


def tail_bound(t: int, alpha: float, beta: float) -> bool:
    """Coarse cut for deep windows: (1 + (1-a) + ... + (1-a)^t) b^(t-1) < 1."""
    if t < 4:
        raise ValueError(f"need t >= 4, got {t}")
    gamma = sum((1.0 - alpha) ** p for p in range(t + 1))
    return gamma * beta ** (t - 1) < 1.0


# ---------------------------------------------------------------------------
# Sampling and figure data
# ---------------------------------------------------------------------------


def delta_sample(
    count: int = 50,
    *,
    j_cap: int = DEFAULT_J_CAP,
    alpha_lo: float = 0.05,
    alpha_hi: float = 0.45,
) -> list[tuple[float, float]]:
    """Deterministic sample of points strictly inside the candidate region."""
    points: list[tuple[float, float]] = []
    slots = max(count // 2, 1)
    for idx in range(slots):
        alpha = alpha_lo + (alpha_hi - alpha_lo) * idx / max(slots - 1, 1)
        hi = min(delta_boundary(alpha, j_cap=j_cap), 1.0 - alpha)
        lo = 0.5
        if hi - lo < 0.004:
            continue
        for frac in (0.3, 0.7):
            beta = lo + (hi - lo) * frac
            if in_delta(alpha, beta, j_cap=j_cap):
                points.append((alpha, beta))
            if len(points) == count:
                return points
    return points


def curve_samples(
    which: str,
    grid: int,
    *,
    alpha_range: tuple[float, float] = (0.01, 0.49),
    j_list: tuple[int, ...] = (0, 1, 2, 3, 4, 5),
    j_cap: int = DEFAULT_J_CAP,
) -> tuple[list[str], list[tuple]]:
    """Tabulate figure data; returns (header, rows) with a stable row order.

    which: "ej" for the labelled threshold curves, "delta" for the
    certified lower envelope, "delta-prime" for the strengthened boundary.
    """
    if grid < 2:
        raise ValueError(f"need at least 2 grid points, got {grid}")
    lo, hi = alpha_range
    if not 0 < lo < hi < 1:
        raise ValueError(f"bad alpha range ({lo}, {hi})")
    alphas = [lo + (hi - lo) * idx / (grid - 1) for idx in range(grid)]
    if which == "ej":
        rows = [
            (alpha, e_j(alpha, j), f"e{j}") for j in j_list for alpha in alphas
        ]
        return ["alpha", "value", "label"], rows
    if which == "delta":
        return ["alpha", "value"], [
            (alpha, delta_boundary(alpha, j_cap=j_cap)) for alpha in alphas
        ]
    if which == "delta-prime":
        return ["alpha", "value"], [
            (alpha, delta_prime_boundary(alpha)) for alpha in alphas
        ]
    raise ValueError(f"unknown curve table {which!r}")
