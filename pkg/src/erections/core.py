"""Set families, simple matroids given by their copoints, and the flat lattice."""
from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

from ._bits import MAX_N, elements, format_set, full_mask, lex_key, popcount, to_mask
from .errors import EnumerationCapExceeded, InvalidCopoints, NotSimple, RankOutOfRange

BASES_CAP = 10**7

Permutation = tuple[int, ...]


class SetFamily:
    """Duplicate-free, insertion-ordered collection of element-set masks.

    Equality is set equality; iteration order is the construction order.
    """

    __slots__ = ("_masks", "_set")

    def __init__(self, masks: Iterable[int] = ()):
        self._masks = tuple(dict.fromkeys(masks))
        self._set = frozenset(self._masks)

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]]) -> SetFamily:
        return cls(to_mask(s) for s in sets)

    def __iter__(self) -> Iterator[int]:
        return iter(self._masks)

    def __len__(self) -> int:
        return len(self._masks)

    def __contains__(self, mask: object) -> bool:
        return mask in self._set

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SetFamily):
            return self._set == other._set
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._set)

    def __repr__(self) -> str:
        body = ", ".join("{" + format_set(m) + "}" for m in self.canonical())
        return f"SetFamily([{body}])"

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def canonical(self) -> SetFamily:
        return SetFamily(sorted(self._masks, key=lex_key))

    def union(self, other: Iterable[int]) -> SetFamily:
        return SetFamily(itertools.chain(self._masks, other))

    def without(self, other: Iterable[int]) -> SetFamily:
        drop = set(other)
        return SetFamily(m for m in self._masks if m not in drop)

    def is_antichain(self) -> bool:
        return find_containment(self._masks) is None


def find_containment(masks: Sequence[int]) -> tuple[int, int] | None:
    """Return some pair (A, B) with A a proper subset of B, or None."""
    ordered = sorted(masks, key=popcount)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            if a != b and a & ~b == 0:
                return a, b
    return None


@dataclass(frozen=True)
class Check:
    """Outcome of a validity check: ``ok`` plus the first violated condition."""

    ok: bool
    reason: str = ""
    witness: tuple = ()
    warnings: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "ok"
        return f"{self.reason}: {self.witness}" if self.witness else self.reason


@dataclass(frozen=True, eq=False)
class Matroid:
    """A simple matroid on {1..n}, stored as its flats stratified by rank.

    ``flats_by_rank[i]`` holds the rank-i flats in canonical order; the last
    entry is ``{S_n}``. Instances are immutable.
    """

    n: int
    flats_by_rank: tuple[SetFamily, ...]
    _rank_of: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self,
            "_rank_of",
            {f: i for i, fam in enumerate(self.flats_by_rank) for f in fam},
        )

    @property
    def rank(self) -> int:
        return len(self.flats_by_rank) - 1

    @property
    def ground(self) -> int:
        return full_mask(self.n)

    @property
    def copoints(self) -> SetFamily:
        return self.flats_by_rank[self.rank - 1]

    @property
    def colines(self) -> SetFamily:
        if self.rank < 2:
            raise RankOutOfRange("a rank-1 matroid has no colines")
        return self.flats_by_rank[self.rank - 2]

    @property
    def flats(self) -> Iterator[int]:
        for fam in self.flats_by_rank:
            yield from fam

    def flat_rank(self, flat: int) -> int:
        return self._rank_of[flat]

    def is_flat(self, mask: int) -> bool:
        return mask in self._rank_of

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and self.flats_by_rank == other.flats_by_rank

    def __hash__(self) -> int:
        return hash((self.n, self.flats_by_rank))

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, rank={self.rank}, whitney={whitney(self)})"


def _make(n: int, levels: Iterable[Iterable[int]]) -> Matroid:
    return Matroid(n, tuple(SetFamily(sorted(lv, key=lex_key)) for lv in levels))


def seed_matroid(n: int) -> Matroid:
    """Rank-1 configuration with copoint family {∅}; the start of iterated erection.

    For n > 1 this is not simple, so it is only reachable through this constructor.
    """
    return _make(n, [[0], [full_mask(n)]])


def validate_copoint_family(n: int, copoints: Iterable[int]) -> Check:
    """Check the hyperplane axioms plus simplicity for a copoint family on {1..n}."""
    if not 1 <= n <= MAX_N:
        return Check(False, "ground set size out of range", (n,))
    raw = list(copoints)
    fam = list(dict.fromkeys(raw))
    ground = full_mask(n)
    if not fam:
        return Check(False, "empty family")
    notes = ()
    if len(fam) != len(raw):
        notes = (f"{len(raw) - len(fam)} duplicate copoint(s) ignored",)
    for h in fam:
        if h & ~ground:
            return Check(False, "element out of range", (format_set(h),))
        if h == ground:
            return Check(False, "ground set listed as a copoint")
    pair = find_containment(fam)
    if pair is not None:
        return Check(False, "not an antichain", tuple(map(format_set, pair)))

    # (H1 ∩ H2) ∪ {e} lies in some member for every e  <=>  the members
    # containing H1 ∩ H2 cover the ground set.
    cover: dict[int, int] = {}
    for i, h1 in enumerate(fam):
        for h2 in fam[i + 1 :]:
            meet = h1 & h2
            if meet not in cover:
                acc = 0
                for h3 in fam:
                    if meet & ~h3 == 0:
                        acc |= h3
                cover[meet] = acc
            missing = ground & ~cover[meet]
            if missing:
                e = elements(missing)[0]
                return Check(
                    False,
                    "exchange axiom fails",
                    (format_set(h1), format_set(h2), e),
                )

    bottom = ground
    for h in fam:
        bottom &= h
    if bottom:
        return Check(False, "not simple: loop", tuple(elements(bottom)))
    for e in range(1, n + 1):
        bit = 1 << (e - 1)
        cl = ground
        for h in fam:
            if h & bit:
                cl &= h
        if cl != bit:
            others = [x for x in elements(cl) if x != e]
            if len(others) == n - 1 and not any(h & bit for h in fam):
                return Check(False, "not simple: element in no copoint", (e,))
            return Check(False, "not simple: parallel elements", (e, others[0]))
    return Check(True, warnings=notes)


def build_from_copoints(n: int, copoints: Iterable[int], validate: bool = True) -> Matroid:
    """Derive the full flat lattice from a copoint family.

    Lower flats come from repeated pairwise intersection: in a geometric lattice
    the rank-(i-1) flats are exactly the maximal pairwise intersections of
    distinct rank-i flats.
    """
    fam = list(dict.fromkeys(copoints))
    if validate:
        check = validate_copoint_family(n, fam)
        if not check:
            exc = NotSimple if check.reason.startswith("not simple") else InvalidCopoints
            raise exc(check.describe())
    levels = [fam]
    cur = fam
    while len(cur) > 1:
        meets = {a & b for a, b in itertools.combinations(cur, 2)}
        cur = [x for x in meets if not any(x != y and x & ~y == 0 for y in meets)]
        levels.append(cur)
    if cur != [0]:
        raise NotSimple(f"closure of the empty set is {{{format_set(cur[0])}}}")
    levels.reverse()
    levels.append([full_mask(n)])
    return _make(n, levels)


def closure(m: Matroid, a: int) -> int:
    out = m.ground
    for h in m.copoints:
        if a & ~h == 0:
            out &= h
    return out


def rank_of_set(m: Matroid, a: int) -> int:
    return m.flat_rank(closure(m, a))


def is_k_closed(m: Matroid, a: int, k: int) -> bool:
    if not 0 <= k <= m.rank:
        raise RankOutOfRange(f"k={k} outside 0..{m.rank}")
    if k == 0:
        return closure(m, 0) & ~a == 0
    members = elements(a)
    # closure is monotone, so the largest admissible subsets dominate the rest
    j = min(k, len(members))
    for sub in itertools.combinations(members, j):
        if closure(m, to_mask(sub)) & ~a:
            return False
    return True


def truncation(m: Matroid, k: int) -> Matroid:
    if not 1 <= k <= m.rank - 1:
        raise RankOutOfRange(f"truncation level {k} outside 1..{m.rank - 1}")
    return Matroid(m.n, m.flats_by_rank[: k + 1] + (SetFamily([m.ground]),))


def whitney(m: Matroid) -> tuple[int, ...]:
    return tuple(len(f) for f in m.flats_by_rank)


def bases(m: Matroid, cap: int = BASES_CAP) -> SetFamily:
    total = math.comb(m.n, m.rank)
    if total > cap:
        raise EnumerationCapExceeded(f"C({m.n},{m.rank}) = {total} exceeds cap {cap}")
    cops = m.copoints.masks
    found = []
    for combo in itertools.combinations(range(1, m.n + 1), m.rank):
        b = to_mask(combo)
        if not any(b & ~h == 0 for h in cops):
            found.append(b)
    return SetFamily(found)


def verify_erection_copoints(m: Matroid, family: Iterable[int], cap: int = BASES_CAP) -> Check:
    """Crapo's characterisation of the copoints of an erection of ``m``."""
    fam = list(family)
    for h in fam:
        if rank_of_set(m, h) != m.rank:
            return Check(False, "(i) does not span", (format_set(h),))
    for h in fam:
        if not is_k_closed(m, h, m.rank - 1):
            return Check(False, f"(ii) not {m.rank - 1}-closed", (format_set(h),))
    for b in bases(m, cap):
        holders = [h for h in fam if b & ~h == 0]
        if len(holders) != 1:
            return Check(
                False,
                "(iii) basis not in exactly one member",
                (format_set(b), len(holders)),
            )
    return Check(True)


def check_permutation(perm: Sequence[int], n: int) -> Permutation:
    perm = tuple(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {perm}")
    return perm


def inverse_permutation(perm: Sequence[int]) -> Permutation:
    inv = [0] * len(perm)
    for i, v in enumerate(perm, start=1):
        inv[v - 1] = i
    return tuple(inv)


def relabel(mask: int, perm: Sequence[int]) -> int:
    out = 0
    for e in elements(mask):
        out |= 1 << (perm[e - 1] - 1)
    return out


def apply_permutation(m: Matroid, perm: Sequence[int]) -> Matroid:
    """M(π): every element e becomes π(e) = ``perm[e-1]``."""
    perm = check_permutation(perm, m.n)
    return _make(m.n, ([relabel(f, perm) for f in fam] for fam in m.flats_by_rank))
