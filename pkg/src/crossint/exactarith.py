"""Exact and real-argument binomial arithmetic.

Integer quantities (family sizes, shadow sizes, maximum products) live in
Python's arbitrary-precision ints and exact rationals in
``fractions.Fraction``; nothing on that side ever rounds.  The real-valued
side of the calculus uses doubles with a documented comparison tolerance
of ``DEFAULT_TOL``.

The real-argument binomial C(x, t) extends the integer one by the falling
factorial x(x-1)...(x-t+1)/t!, with C(x, 0) = 1 and C(x, t) = 0 for x < t.
For fixed t >= 1 it is continuous and strictly increasing on x >= t, which
makes the inverse problem "find x with C(x, r) = m" solvable by bisection.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import BracketingError

#: Comparison tolerance for all floating-point region predicates.
DEFAULT_TOL = 1e-12

#: Iteration cap for the bisection solver.
BISECT_MAX_ITER = 200


def binom(n: int, k: int) -> int:
    """C(n, k) as an exact integer; 0 whenever k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"negative upper index: {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def gen_binom(x: float, t: int) -> float:
    """Real-argument binomial x(x-1)...(x-t+1)/t! for x >= t.

    By convention the value is 1 for t = 0 and exactly 0 for x < t.
    """
    if t < 0:
        raise ValueError(f"negative lower index: {t}")
    if t == 0:
        return 1.0
    if x < t:
        return 0.0
    if float(x).is_integer():
        # exact path; keeps integer evaluations free of product round-off
        try:
            return float(math.comb(int(x), t))
        except OverflowError:
            return math.inf
    return _falling(x, t)


def _falling(x: float, t: int) -> float:
    # Interleave multiplication and division so intermediates stay near the
    # result's magnitude; a plain numerator product overflows much earlier.
    out = 1.0
    for i in range(t):
        out *= (x - i) / (i + 1)
    return out


def solve_binom_x(
    m: float,
    r: int,
    lo: float,
    hi: float,
    *,
    tol: float = DEFAULT_TOL,
    max_iter: int = BISECT_MAX_ITER,
) -> float:
    """Solve C(x, r) = m for x in [lo, hi] by bisection.

    Requires gen_binom(lo, r) <= m <= gen_binom(hi, r).  The solver works
    on the continuous falling-factorial form, which is strictly increasing
    for x > r - 1 and agrees with gen_binom wherever m >= 1, so the root
    is unique.
    """
    if r < 1:
        raise ValueError(f"lower index must be >= 1: {r}")
    if not (gen_binom(lo, r) <= m <= gen_binom(hi, r)):
        raise BracketingError(
            f"no root of C(x, {r}) = {m} bracketed by [{lo}, {hi}]"
        )
    a = max(lo, r - 1.0)
    b = hi
    for _ in range(max_iter):
        if b - a <= tol:
            break
        mid = (a + b) / 2.0
        if _falling(mid, r) < m:
            a = mid
        else:
            b = mid
    return (a + b) / 2.0


def binom_ratio(n: int, k: int, s: int, t: int) -> Fraction:
    """Exact ratio C(n-s, n-k-t) / C(n, k).

    With k close to alpha*n the ratio tends to alpha^(s-t) * (1-alpha)^t
    as n grows, which is how finite size counts connect to the biased
    measures of the perturbed families.
    """
    denom = binom(n, k)
    if denom == 0:
        raise ValueError(f"C({n}, {k}) is zero; ratio undefined")
    return Fraction(binom(n - s, n - k - t), denom)
