"""Erections of simple matroids: Expand, Refine, the free erection and its
pairwise-union variant, erections from a clutter, and random generation."""
from __future__ import annotations

import itertools
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._bits import format_set, from_int64, full_mask, to_int64
from .core import (
    Matroid,
    SetFamily,
    build_from_copoints,
    find_containment,
    seed_matroid,
)
from .errors import InvalidClutter, RankOutOfRange


@dataclass(frozen=True)
class ErectionResult:
    base: Matroid
    erected: Matroid
    trivial: bool
    new_copoints: SetFamily

    @property
    def count(self) -> int:
        """W at rank(base) of the erected matroid (1 for the trivial erection)."""
        return len(self.new_copoints)


def expand(family: Iterable[int], n: int) -> SetFamily:
    ground = full_mask(n)
    out = []
    for a in family:
        rest = ground & ~a
        while rest:
            low = rest & -rest
            out.append(a | low)
            rest ^= low
    return SetFamily(out)


def in_strict_filter(family: Iterable[int], a: int) -> bool:
    """True iff ``a`` strictly contains at least one member of ``family``."""
    return any(h != a and h & ~a == 0 for h in family)


def refine(family: Iterable[int], guard: Iterable[int]) -> SetFamily:
    """Merge members whose intersection lies in no guard set, to a fixed point.

    The fixed point does not depend on merge order, so the input order only
    affects the iteration order of the returned family.
    """
    fam = list(SetFamily(family))
    if not fam:
        return SetFamily()
    merged = _kernels.refine(to_int64(fam), to_int64(guard))
    return SetFamily(from_int64(merged)).canonical()


def _result(base: Matroid, new: SetFamily) -> ErectionResult:
    ground = base.ground
    if new == SetFamily([ground]):
        return ErectionResult(base, base, True, new)
    # re-derive the lower flats rather than copying them, so callers can check
    # the truncation round trip independently
    erected = build_from_copoints(base.n, new, validate=False)
    return ErectionResult(base, erected, False, new)


def free_erection(m: Matroid) -> ErectionResult:
    cops = m.copoints
    return _result(m, refine(expand(cops, m.n), cops))


def pair_family(copoints: Iterable[int], colines: Iterable[int]) -> SetFamily:
    """Unions of two distinct copoints that contain a common coline."""
    cops = list(copoints)
    out = []
    for y in colines:
        above = [x for x in cops if y & ~x == 0 and x != y]
        out.extend(a | b for a, b in itertools.combinations(above, 2))
    return SetFamily(out)


def free_erection_via_pair(m: Matroid) -> ErectionResult:
    if m.rank < 2:
        raise RankOutOfRange("the pair construction needs rank >= 2")
    cops = m.copoints
    return _result(m, refine(pair_family(cops, m.colines), cops))


def erect_with(m: Matroid, clutter: Iterable[int]) -> ErectionResult:
    """The erection Refine(Expand(copoints) ∪ clutter, copoints)."""
    extra = list(SetFamily(clutter))
    pair = find_containment(extra)
    if pair is not None:
        raise InvalidClutter(
            "not an antichain: {%s} < {%s}" % tuple(map(format_set, pair))
        )
    cops = m.copoints
    for a in extra:
        if a & ~m.ground:
            raise InvalidClutter(f"{{{format_set(a)}}} leaves the ground set")
        if not in_strict_filter(cops, a):
            raise InvalidClutter(f"{{{format_set(a)}}} strictly contains no copoint")
    return _result(m, refine(expand(cops, m.n).union(extra), cops))


def random_clutter(m: Matroid, rng: np.random.Generator, intensity: float) -> SetFamily:
    """Random antichain of strict-filter members; {S_n} at intensity 1, empty at 0."""
    if not 0.0 <= intensity <= 1.0:
        raise ValueError(f"intensity {intensity} outside [0, 1]")
    if intensity == 0.0:
        return SetFamily()
    if intensity == 1.0:
        return SetFamily([m.ground])
    cops = m.copoints.masks
    k = int(rng.geometric(1.0 - intensity)) - 1
    picks = []
    for _ in range(k):
        h = cops[int(rng.integers(len(cops)))]
        outside = [b for b in range(m.n) if not (h >> b) & 1]
        chosen = [b for b in outside if rng.random() < intensity]
        if not chosen:
            chosen = [outside[int(rng.integers(len(outside)))]]
        picks.append(h | sum(1 << b for b in chosen))
    picks = list(dict.fromkeys(picks))
    minimal = [a for a in picks if not any(b != a and b & ~a == 0 for b in picks)]
    return SetFamily(minimal)


def random_erection(m: Matroid, seed: int, intensity: float) -> ErectionResult:
    rng = np.random.default_rng(seed)
    return erect_with(m, random_clutter(m, rng, intensity))


def random_matroid(n: int, seed: int, intensity: float) -> Matroid:
    """Iterate random erections from the rank-1 seed until one is trivial.

    The first step is always the free erection (the singletons), which keeps
    the result simple; later steps preserve the rank-1 flats.
    """
    if not 1 <= n <= 64:
        raise ValueError(f"n={n} outside 1..64")
    m = free_erection(seed_matroid(n)).erected
    seeds = np.random.SeedSequence(seed)
    while True:
        (child,) = seeds.spawn(1)
        step = erect_with(m, random_clutter(m, np.random.default_rng(child), intensity))
        if step.trivial:
            return m
        m = step.erected
