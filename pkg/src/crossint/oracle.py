"""Exact maximum-product oracles for cross-intersecting families.

Two independent methods back every reported value.

Uniform side.  The cascade sweep maximizes m * (C(n,l) - minimum l-shadow
of m (n-k)-sets) over all m: the shadow of the complements of the first
family is forbidden to the second family, which makes the expression an
upper bound for every cross-intersecting pair, and complementing a colex
segment attains it, so the sweep maximum is exactly M(n,k,l).  The
enumeration oracle instead walks every subset of the k-layer and pairs it
with the largest compatible second family; exponential, but free of any
shadow reasoning, which is what makes the agreement check meaningful.

Measure side.  The search space shrinks losslessly to up-closed
(monotone) families: up-closing the first family preserves
cross-intersection and never lowers a biased measure, and the best second
family is then determined pointwise, because a set B is compatible with
an up-closed family exactly when the complement of B is not a member.
The objective collapses to mu_alpha(A) * (1 - mu_{1-beta}(A)), maximized
by depth-first extension over subset masks in descending numeric order
(supersets are decided before subsets) with an exact integer
branch-and-bound cut.  Arithmetic is integer throughout: measures are
carried as numerators over the fixed denominators q^n and s^n.

k + l > n makes every pair of a k-set and an l-set intersect, so both
oracles short-circuit to C(n,k) * C(n,l) there.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

import numpy as np

from .cascade import _advance, _digits, kk_cross_bound
from .errors import CapacityError
from .exactarith import binom
from .families import (
    UniformFamily,
    colex_masks,
    colex_segment,
    complement_family,
    elements_of,
    shadow,
)
from .regions import in_omega_prime

DEFAULT_SWEEP_BUDGET = 10**8
ENUMERATION_CAP = 24
MEASURE_CAP = 6
WITNESS_CAP = 64


@dataclass
class OracleResult:
    """A certified maximum with the configurations that achieve it."""

    value: Union[int, Fraction]
    witnesses: Any
    method: str
    params: dict
    elapsed_ms: float = 0.0

    def to_dict(self) -> dict:
        out = dict(self.params)
        out["value"] = str(self.value)
        out["witnesses"] = self.witnesses
        out["method"] = self.method
        out["elapsed_ms"] = self.elapsed_ms
        return out


def _check_uniform_params(n: int, k: int, l: int) -> None:
    if not (1 <= k <= n - 1 and 1 <= l <= n - 1):
        raise ValueError(f"need 1 <= k, l <= n-1, got n={n}, k={k}, l={l}")


def _sweep_chunk(args: tuple[int, int, int, int, int]) -> tuple[int, list[int]]:
    """Max of m * kk_cross_bound over m in [m_lo, m_hi), with all argmax m."""
    n, k, l, m_lo, m_hi = args
    u, v = n - k, l
    layer = binom(n, l)
    digits = _digits(m_lo, u)
    best, wits = -1, []
    for m in range(m_lo, m_hi):
        if v == u:
            bound = layer - m
        else:
            drop = u - v
            bound = layer - sum(binom(a, lev - drop) for a, lev in digits)
        val = m * bound
        if val > best:
            best, wits = val, [m]
        elif val == best:
            wits.append(m)
        _advance(digits)
    return best, wits


def max_product_cascade(
    n: int,
    k: int,
    l: int,
    *,
    sweep_budget: int = DEFAULT_SWEEP_BUDGET,
    workers: int = 1,
    timing: bool = False,
) -> OracleResult:
    """M(n, k, l) by sweeping every first-family size against the shadow bound."""
    _check_uniform_params(n, k, l)
    t0 = time.perf_counter()
    params = {"n": n, "k": k, "l": l}
    if k + l > n:
        value = binom(n, k) * binom(n, l)
        result = OracleResult(
            value,
            [{"a_size": binom(n, k), "b_size": binom(n, l)}],
            "cascade",
            params,
        )
    else:
        total = binom(n, k)
        if total > sweep_budget:
            raise CapacityError(
                f"sweep over {total} sizes exceeds budget {sweep_budget}"
            )
        chunks = _partition(1, total + 1, workers)
        if len(chunks) == 1:
            parts = [_sweep_chunk((n, k, l, *chunks[0]))]
        else:
            with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
                parts = list(
                    pool.map(_sweep_chunk, [(n, k, l, lo, hi) for lo, hi in chunks])
                )
        best = max(p[0] for p in parts)
        wits = sorted(m for p in parts if p[0] == best for m in p[1])
        result = OracleResult(
            best,
            [
                {"a_size": m, "b_size": kk_cross_bound(n, k, l, m)}
                for m in wits
            ],
            "cascade",
            params,
        )
    if timing:
        result.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return result


def _partition(lo: int, hi: int, workers: int) -> list[tuple[int, int]]:
    count = hi - lo
    workers = max(1, min(workers, count))
    if workers == 1 or count < 4096:
        return [(lo, hi)]
    step = count // workers
    cuts = [lo + step * i for i in range(workers)] + [hi]
    return [(cuts[i], cuts[i + 1]) for i in range(workers)]


def achieving_pair(n: int, k: int, l: int, m: int) -> tuple[UniformFamily, UniformFamily]:
    """The colex construction attaining kk_cross_bound for first-family size m."""
    bound = kk_cross_bound(n, k, l, m)
    segment = colex_segment(m, n - k, n)
    fam_a = complement_family(segment)
    forbidden = set(shadow(segment, l).members) if l < n - k else set(segment.members)
    fam_b = UniformFamily(
        n, l, tuple(b for b in colex_masks(n, l) if b not in forbidden)
    )
    assert len(fam_b) == bound
    return fam_a, fam_b


def max_product_enumeration(
    n: int,
    k: int,
    l: int,
    *,
    canonical_witnesses: bool = False,
    timing: bool = False,
) -> OracleResult:
    """M(n, k, l) by exhausting all 2^C(n,k) first families.

    For each subset of the k-layer, the best second family is every l-set
    meeting all chosen members.  Witness structure is summarized (count,
    sizes, whether only stars attain the maximum); canonical
    representatives under relabeling are materialized on request.
    """
    _check_uniform_params(n, k, l)
    t0 = time.perf_counter()
    params = {"n": n, "k": k, "l": l}
    if k + l > n:
        result = OracleResult(
            binom(n, k) * binom(n, l),
            {"optimal_count": 1, "optimal_sizes": [binom(n, k)], "all_stars": False},
            "enumeration",
            params,
        )
        if timing:
            result.elapsed_ms = (time.perf_counter() - t0) * 1000.0
        return result
    nk = binom(n, k)
    if nk > ENUMERATION_CAP:
        raise CapacityError(f"C({n},{k}) = {nk} exceeds enumeration cap {ENUMERATION_CAP}")
    ksets = list(colex_masks(n, k))
    size = 1 << nk
    cnt = np.zeros(size, dtype=np.int32)
    for bset in colex_masks(n, l):
        meets = 0
        for idx, kset in enumerate(ksets):
            if kset & bset:
                meets |= 1 << idx
        cnt[meets] += 1
    # superset-sum: g[S] = number of l-sets meeting every k-set indexed by S
    g = cnt
    for idx in range(nk):
        half = 1 << idx
        view = g.reshape(-1, 2, half)
        view[:, 0, :] += view[:, 1, :]
    popcnt = np.zeros(1, dtype=np.int32)
    for _ in range(nk):
        popcnt = np.concatenate([popcnt, popcnt + 1])
    values = popcnt.astype(np.int64) * g.astype(np.int64)
    best = int(values.max())
    argmax = np.nonzero(values == best)[0]
    sizes = sorted({int(popcnt[i]) for i in argmax})
    star_masks = set()
    for e in range(1, n + 1):
        bit = 1 << (e - 1)
        star_masks.add(
            sum(1 << idx for idx, kset in enumerate(ksets) if kset & bit)
        )
    arg_set = {int(s) for s in argmax}
    witnesses: dict[str, Any] = {
        "optimal_count": len(argmax),
        "optimal_sizes": sizes,
        "all_stars": arg_set <= star_masks,
    }
    if canonical_witnesses:
        witnesses["canonical_families"] = _canonical_families(n, ksets, arg_set)
    result = OracleResult(best, witnesses, "enumeration", params)
    if timing:
        result.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return result


def _canonical_families(
    n: int, ksets: list[int], selections: set[int], cap: int = 1000
) -> list[list[tuple[int, ...]]]:
    """Deduplicate optimal families under relabeling of the ground set."""
    import itertools

    if len(selections) > cap:
        raise CapacityError(
            f"{len(selections)} optimal families exceed canonicalization cap {cap}"
        )
    perms = list(itertools.permutations(range(n)))

    def apply(perm: tuple[int, ...], mask: int) -> int:
        out = 0
        for src in range(n):
            if mask >> src & 1:
                out |= 1 << perm[src]
        return out

    seen = set()
    reps = []
    for sel in sorted(selections):
        members = tuple(
            sorted(ksets[idx] for idx in range(len(ksets)) if sel >> idx & 1)
        )
        canon = min(
            tuple(sorted(apply(p, m) for m in members)) for p in perms
        )
        if canon not in seen:
            seen.add(canon)
            reps.append([elements_of(m) for m in canon])
    return reps


def uniqueness_check(
    n: int,
    k: int,
    l: int,
    *,
    enumerate_if_feasible: bool = True,
    sweep_budget: int = DEFAULT_SWEEP_BUDGET,
) -> dict:
    """Is the star size the only maximizer, and is the star structure forced?

    Size uniqueness comes from the cascade sweep.  Structure is forced by
    the shadow equality condition when k + l < n: any optimal pair then
    has first-family complements achieving the minimum shadow at binomial
    size, which only a full layer does.  When the full enumeration is
    feasible, every optimal family is additionally checked directly.
    """
    sweep = max_product_cascade(n, k, l, sweep_budget=sweep_budget)
    report: dict[str, Any] = {"n": n, "k": k, "l": l, "value": str(sweep.value)}
    if k + l > n:
        report.update(
            maximizing_sizes=[binom(n, k)],
            unique_size=True,
            star_forced=False,
            note="full layers are optimal; stars are not",
        )
        return report
    sizes = [w["a_size"] for w in sweep.witnesses]
    star_size = binom(n - 1, k - 1)
    unique = sizes == [star_size]
    report.update(
        maximizing_sizes=sizes,
        star_size=star_size,
        unique_size=unique,
        star_forced=unique and k + l < n,
    )
    if enumerate_if_feasible and binom(n, k) <= ENUMERATION_CAP:
        enum = max_product_enumeration(n, k, l)
        report["enumeration"] = {
            "value": str(enum.value),
            "agrees": enum.value == sweep.value,
            "all_stars": enum.witnesses["all_stars"],
            "optimal_count": enum.witnesses["optimal_count"],
        }
    return report


# ---------------------------------------------------------------------------
# Measure oracle over monotone families
# ---------------------------------------------------------------------------


def measure_oracle(
    n: int,
    alpha: Fraction,
    beta: Fraction,
    *,
    witness_cap: int = WITNESS_CAP,
    timing: bool = False,
) -> OracleResult:
    """Exact maximum of mu_alpha(A) * mu_beta(B) over cross-intersecting pairs.

    Searches up-closed first families only (lossless; see module notes) by
    depth-first extension over subset masks in descending order, keeping
    exact integer numerators.  Witnesses are reported as the antichains of
    minimal members of each optimal pair.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    if not (0 < alpha < 1 and 0 < beta < 1):
        raise ValueError("biases must lie strictly between 0 and 1")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > MEASURE_CAP:
        raise CapacityError(
            f"monotone-family search is capped at n = {MEASURE_CAP}, got {n}"
        )
    t0 = time.perf_counter()
    p, q = alpha.numerator, alpha.denominator
    r, s = beta.numerator, beta.denominator
    size = 1 << n
    weight_a = [0] * size
    weight_b = [0] * size  # numerators of mu_{1-beta}
    for mask in range(size):
        c = mask.bit_count()
        weight_a[mask] = p**c * (q - p) ** (n - c)
        weight_b[mask] = (s - r) ** c * r ** (n - c)
    total_b = s**n
    masks = list(range(size - 1, -1, -1))
    suffix_a = [0] * (size + 1)
    for idx in range(size - 1, -1, -1):
        suffix_a[idx] = suffix_a[idx + 1] + weight_a[masks[idx]]
    # the stars achieve alpha * beta, which seeds the branch-and-bound cut
    best = p * q ** (n - 1) * r * s ** (n - 1)
    winners: list[int] = []
    truncated = False
    included = bytearray(size)

    def search(idx: int, num_a: int, num_b: int) -> None:
        nonlocal best, winners, truncated
        if idx == size:
            value = num_a * (total_b - num_b)
            if value > best:
                best = value
                winners = [_family_bits(included)]
                truncated = False
            elif value == best:
                if len(winners) < witness_cap:
                    winners.append(_family_bits(included))
                else:
                    truncated = True
            return
        if (num_a + suffix_a[idx]) * (total_b - num_b) < best:
            return
        mask = masks[idx]
        can_include = True
        for e in range(n):
            bit = 1 << e
            if not mask & bit and not included[mask | bit]:
                can_include = False
                break
        if can_include:
            included[mask] = 1
            search(idx + 1, num_a + weight_a[mask], num_b + weight_b[mask])
            included[mask] = 0
        search(idx + 1, num_a, num_b)

    search(0, 0, 0)
    value = Fraction(best, q**n * total_b)
    witnesses = {
        "optimal_count": len(winners) if not truncated else f">{witness_cap}",
        "pairs": [_witness_pair(bits, n) for bits in winners],
    }
    result = OracleResult(
        value, witnesses, "enumeration", {"n": n, "alpha": str(alpha), "beta": str(beta)}
    )
    if timing:
        result.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return result


def _family_bits(included: bytearray) -> int:
    bits = 0
    for mask, flag in enumerate(included):
        if flag:
            bits |= 1 << mask
    return bits


def _minimal_members(bits: int, n: int) -> list[tuple[int, ...]]:
    members = [mask for mask in range(1 << n) if bits >> mask & 1]
    member_set = set(members)
    minimal = []
    for mask in members:
        rest = mask
        is_min = True
        while rest:
            bit = rest & -rest
            if mask ^ bit in member_set:
                is_min = False
                break
            rest ^= bit
        if is_min:
            minimal.append(mask)
    return [elements_of(m) for m in sorted(minimal)]


def _witness_pair(bits: int, n: int) -> dict:
    """Antichains generating an optimal up-closed pair."""
    full = (1 << n) - 1
    b_bits = 0
    for mask in range(1 << n):
        if not bits >> (full ^ mask) & 1:
            b_bits |= 1 << mask
    return {
        "a_min": _minimal_members(bits, n),
        "b_min": _minimal_members(b_bits, n),
    }


# ---------------------------------------------------------------------------
# Conjecture scanning
# ---------------------------------------------------------------------------


def conjecture_scan(
    n: int,
    k: int,
    l: int,
    j_max: int = 64,
    *,
    sweep_budget: int = DEFAULT_SWEEP_BUDGET,
) -> dict:
    """Evidence report: blocking-pair hypothesis vs. the oracle's verdict.

    The hypothesis asks that every j-indexed blocking pair have a size
    product strictly below the star product.  Past j = max(k, n-l) - 1
    both perturbation terms vanish and the pair IS the star pair, so the
    scan certifies that tail as degenerate rather than checking it.
    Output labels the instance as evidence only; nothing here resolves
    the general question.
    """
    if not in_omega_prime(n, k, l):
        raise ValueError(f"(k, l) = ({k}, {l}) is not in the integer region for n={n}")
    star_product = binom(n - 1, k - 1) * binom(n - 1, l - 1)
    degenerate_from = max(k, n - l)
    checked = []
    first_violation = None
    for j in range(0, min(j_max, degenerate_from - 1) + 1):
        size_a = binom(n - 1, k - 1) + binom(n - j - 2, k - j - 1)
        size_b = binom(n - 1, l - 1) - binom(n - j - 2, l - 1)
        holds = size_a * size_b < star_product
        checked.append({"j": j, "product": str(size_a * size_b), "holds": holds})
        if not holds and first_violation is None:
            first_violation = j
    hypothesis = {
        "holds": first_violation is None,
        "first_violation": first_violation,
        "checked_up_to": min(j_max, degenerate_from - 1),
        "degenerate_from": degenerate_from,
        "tail_certified": j_max >= degenerate_from - 1,
        "per_j": checked,
    }
    report: dict[str, Any] = {
        "n": n,
        "k": k,
        "l": l,
        "star_product": str(star_product),
        "hypothesis": hypothesis,
    }
    try:
        unique = uniqueness_check(n, k, l, sweep_budget=sweep_budget)
    except CapacityError:
        report["oracle"] = None
        report["label"] = "out-of-reach"
        return report
    conclusion = (
        int(unique["value"]) == star_product and unique["unique_size"]
        and unique.get("star_forced", False)
    )
    if "enumeration" in unique:
        conclusion = conclusion or (
            int(unique["value"]) == star_product
            and unique["enumeration"]["all_stars"]
        )
    report["oracle"] = unique
    report["conclusion_holds"] = conclusion
    if hypothesis["holds"]:
        report["label"] = "confirming" if conclusion else "refuting"
    else:
        report["label"] = "vacuous"
        report["necessity_consistent"] = not conclusion
    return report
