"""Explicit set families on [n]: constructors, measures, serialization.

Subsets of [n] = {1, ..., n} are bitmasks (element e is bit e-1), one
machine word per set; ground sets larger than 64 are rejected since all
desk-scale work fits well below that.

Besides stars, the module builds the two j-indexed blocking pairs: the
first family is a star plus every set meeting a (j+2)-prefix in exactly
the prefix minus the star's center, the second is the star minus every
set meeting the prefix in the center alone.  The pairs are
cross-intersecting, and whenever their size (or measure) product reaches
the star product the star pair cannot be the unique optimum; the whole
boundary-region calculus is about when that happens.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .errors import CapacityError, NonBinomialSizeError
from .exactarith import binom

MAX_GROUND_SET = 64


def _check_ground(n: int) -> None:
    if not 1 <= n <= MAX_GROUND_SET:
        raise ValueError(f"ground set size must be in [1, {MAX_GROUND_SET}], got {n}")


def mask_of(elements: Iterable[int], n: int) -> int:
    mask = 0
    for e in elements:
        if not 1 <= e <= n:
            raise ValueError(f"element {e} outside [1, {n}]")
        mask |= 1 << (e - 1)
    return mask


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


@dataclass(frozen=True)
class UniformFamily:
    """A family of k-subsets of [n], members stored as bitmasks."""

    n: int
    k: int
    members: tuple[int, ...]

    def __post_init__(self):
        _check_ground(self.n)
        if not 0 <= self.k <= self.n:
            raise ValueError(f"uniform size must be in [0, {self.n}], got {self.k}")
        full = (1 << self.n) - 1
        seen = set()
        for m in self.members:
            if m & ~full:
                raise ValueError("member outside the ground set")
            if m.bit_count() != self.k:
                raise ValueError("member of wrong size in uniform family")
            if m in seen:
                raise ValueError("duplicate member")
            seen.add(m)

    def __len__(self) -> int:
        return len(self.members)

    def sets(self) -> list[tuple[int, ...]]:
        return [elements_of(m) for m in self.members]


@dataclass(frozen=True)
class GeneralFamily:
    """A family of arbitrary subsets of [n], members stored as bitmasks."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        _check_ground(self.n)
        full = (1 << self.n) - 1
        if len(set(self.members)) != len(self.members):
            raise ValueError("duplicate member")
        for m in self.members:
            if m & ~full:
                raise ValueError("member outside the ground set")

    def __len__(self) -> int:
        return len(self.members)

    def sets(self) -> list[tuple[int, ...]]:
        return [elements_of(m) for m in self.members]


AnyFamily = Union[UniformFamily, GeneralFamily]


def colex_masks(n: int, u: int) -> Iterator[int]:
    """All u-subsets of [n] as bitmasks in colexicographic order."""
    if u == 0:
        yield 0
        return
    for b in range(u, n + 1):
        bit = 1 << (b - 1)
        for rest in colex_masks(b - 1, u - 1):
            yield rest | bit


def colex_segment(m: int, u: int, n: int) -> UniformFamily:
    """The first m u-subsets of [n] in colex order (the shadow minimizer)."""
    _check_ground(n)
    if not 0 <= u <= n:
        raise ValueError(f"need 0 <= u <= n, got u={u}")
    if m > binom(n, u):
        raise CapacityError(f"requested {m} sets but C({n},{u}) = {binom(n, u)}")
    out = []
    for mask in colex_masks(n, u):
        if len(out) == m:
            break
        out.append(mask)
    return UniformFamily(n, u, tuple(out))


def full_layer(n: int, u: int) -> UniformFamily:
    return colex_segment(binom(n, u), u, n)


def shadow(fam: UniformFamily, v: int) -> UniformFamily:
    """All v-sets contained in some member; v = k returns the family itself."""
    if not 0 < v <= fam.k:
        raise ValueError(f"need 0 < v <= k, got v={v}, k={fam.k}")
    cur = set(fam.members)
    for _ in range(fam.k - v):
        nxt = set()
        for mask in cur:
            rest = mask
            while rest:
                bit = rest & -rest
                nxt.add(mask ^ bit)
                rest ^= bit
        cur = nxt
    return UniformFamily(fam.n, v, tuple(sorted(cur)))


def complement_family(fam: UniformFamily) -> UniformFamily:
    """Member-wise complement within [n]; involutive."""
    full = (1 << fam.n) - 1
    return UniformFamily(fam.n, fam.n - fam.k, tuple(full ^ m for m in fam.members))


def is_shadow_tight(fam: UniformFamily, v: int) -> bool:
    """Whether |shadow| meets the binomial floor C(a, v) for |F| = C(a, k).

    By Katona's equality condition (0 < v < k) this holds exactly when the
    family is a full k-layer on some a-element subset of the ground set.
    """
    size = len(fam.members)
    u = fam.k
    a = u
    while binom(a, u) < size:
        a += 1
    if binom(a, u) != size or size == 0:
        raise NonBinomialSizeError(f"|F| = {size} is not C(a, {u}) for any a")
    return len(shadow(fam, v)) == binom(a, v)


def star_uniform(n: int, k: int, center: int) -> UniformFamily:
    """All k-subsets of [n] containing the center element."""
    _check_ground(n)
    if not 1 <= center <= n:
        raise ValueError(f"center {center} outside [1, {n}]")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}")
    bit = 1 << (center - 1)
    others = [e for e in range(1, n + 1) if e != center]
    members = [
        mask_of(combo, n) | bit for combo in itertools.combinations(others, k - 1)
    ]
    return UniformFamily(n, k, tuple(members))


def _prefix_block(n: int, j: int) -> tuple[int, int]:
    """Masks of [j+2] and of [j+2] \\ {1}."""
    prefix = (1 << (j + 2)) - 1
    return prefix, prefix & ~1


def a_family_uniform(n: int, k: int, j: int) -> UniformFamily:
    """Star at 1 plus all k-sets meeting [j+2] in exactly [j+2] \\ {1}."""
    if j < 0 or j + 2 > n:
        raise ValueError(f"need 0 <= j <= n-2, got j={j}, n={n}")
    if k < j + 1:
        raise ValueError(f"need k >= j+1, got k={k}, j={j}")
    prefix, block = _prefix_block(n, j)
    star = star_uniform(n, k, 1)
    extra = [
        block | mask_of(combo, n)
        for combo in itertools.combinations(range(j + 3, n + 1), k - j - 1)
    ]
    return UniformFamily(n, k, star.members + tuple(extra))


def b_family_uniform(n: int, l: int, j: int) -> UniformFamily:
    """Star at 1 minus all l-sets meeting [j+2] in {1} alone."""
    if j < 0 or j + 2 > n:
        raise ValueError(f"need 0 <= j <= n-2, got j={j}, n={n}")
    prefix, _ = _prefix_block(n, j)
    members = [m for m in star_uniform(n, l, 1).members if m & prefix != 1]
    return UniformFamily(n, l, tuple(members))


def a_family_measure(n: int, j: int) -> GeneralFamily:
    """Non-uniform version of a_family_uniform, over all of 2^[n]."""
    if j < 0 or j + 2 > n:
        raise ValueError(f"need 0 <= j <= n-2, got j={j}, n={n}")
    prefix, block = _prefix_block(n, j)
    members = [
        s for s in range(1 << n) if (s & 1) or (s & prefix) == block
    ]
    return GeneralFamily(n, tuple(members))


def b_family_measure(n: int, j: int) -> GeneralFamily:
    """Non-uniform version of b_family_uniform, over all of 2^[n]."""
    if j < 0 or j + 2 > n:
        raise ValueError(f"need 0 <= j <= n-2, got j={j}, n={n}")
    prefix, _ = _prefix_block(n, j)
    members = [s for s in range(1 << n) if (s & 1) and (s & prefix) != 1]
    return GeneralFamily(n, tuple(members))


def is_cross_intersecting(fam_a: AnyFamily, fam_b: AnyFamily) -> bool:
    """True iff every member of the first family meets every member of the second."""
    if fam_a.n != fam_b.n:
        raise ValueError("families live on different ground sets")
    for a in fam_a.members:
        for b in fam_b.members:
            if not a & b:
                return False
    return True


def measure(fam: AnyFamily, p: Fraction) -> Fraction:
    """Biased measure: sum over members of p^|F| (1-p)^(n-|F|), exact."""
    p = Fraction(p)
    if not 0 < p < 1:
        raise ValueError(f"bias must satisfy 0 < p < 1, got {p}")
    q = 1 - p
    counts = Counter(m.bit_count() for m in fam.members)
    return sum(
        (c * p**size * q ** (fam.n - size) for size, c in counts.items()),
        start=Fraction(0),
    )


def measure_aj(alpha: float, j: int) -> float:
    """Closed-form measure of the j-th blocking first family: a + (1-a) a^(j+1)."""
    if j < 0:
        raise ValueError(f"need j >= 0, got {j}")
    return alpha + (1 - alpha) * alpha ** (j + 1)


def measure_bj(beta: float, j: int) -> float:
    """Closed-form measure of the j-th blocking second family: b - b (1-b)^(j+1)."""
    if j < 0:
        raise ValueError(f"need j >= 0, got {j}")
    return beta - beta * (1 - beta) ** (j + 1)


def measure_aj_exact(p: Fraction, j: int) -> Fraction:
    p = Fraction(p)
    return p + (1 - p) * p ** (j + 1)


def measure_bj_exact(p: Fraction, j: int) -> Fraction:
    p = Fraction(p)
    return p - p * (1 - p) ** (j + 1)


def lift(fam: GeneralFamily) -> GeneralFamily:
    """Embed into [n+1] by doubling each member with and without n+1.

    Preserves every biased measure exactly, which is why the measure
    maximum is monotone nondecreasing in the ground set size.
    """
    bit = 1 << fam.n
    members = []
    for m in fam.members:
        members.append(m)
        members.append(m | bit)
    return GeneralFamily(fam.n + 1, tuple(members))


def to_text(fam: UniformFamily) -> str:
    """Line format: header "n k", then one sorted subset per line."""
    lines = [f"{fam.n} {fam.k}"]
    for m in fam.members:
        lines.append(" ".join(str(e) for e in elements_of(m)))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> UniformFamily:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty family file")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad header {lines[0]!r}; expected 'n k'")
    n, k = int(header[0]), int(header[1])
    members = []
    for ln in lines[1:]:
        members.append(mask_of((int(tok) for tok in ln.split()), n))
    return UniformFamily(n, k, tuple(members))
