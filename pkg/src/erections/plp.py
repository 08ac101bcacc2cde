"""Rank-3 matroids as bipartite point/line incidence graphs."""
from __future__ import annotations

import itertools
import math
from collections.abc import Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from ._bits import elements, format_set, from_int64, lex_key, popcount, to_int64
from .core import Check, Matroid, SetFamily
from .errors import PropertyBetaRequired, RankMismatch, SubsetCapExceeded

BETA_CAP = 30


@dataclass(frozen=True)
class BipartiteIncidence:
    """V1 = ``points`` (a mask over 1..n), V2 = ``lines``; edges are containment."""

    n: int
    points: int
    lines: SetFamily

    @property
    def n_points(self) -> int:
        return popcount(self.points)

    @property
    def n_lines(self) -> int:
        return len(self.lines)

    def pre(self, lines: Iterable[int]) -> int:
        out = 0
        for ln in lines:
            out |= ln
        return out

    def degree(self, point: int) -> int:
        bit = 1 << (point - 1)
        return sum(1 for ln in self.lines if ln & bit)


def graph_from_rank3(m: Matroid) -> BipartiteIncidence:
    if m.rank != 3:
        raise RankMismatch(f"expected rank 3, got {m.rank}")
    return BipartiteIncidence(m.n, m.ground, m.copoints.canonical())


def graph_from_lines(n: int, lines: Iterable[int]) -> BipartiteIncidence:
    return BipartiteIncidence(n, (1 << n) - 1, SetFamily(lines).canonical())


def restrict(g: BipartiteIncidence, lines: Iterable[int]) -> BipartiteIncidence:
    """Subgraph induced by the given lines and the points on them."""
    chosen = SetFamily(lines)
    missing = [ln for ln in chosen if ln not in g.lines]
    if missing:
        raise ValueError(f"not a line of the graph: {{{format_set(missing[0])}}}")
    return BipartiteIncidence(g.n, g.pre(chosen), chosen.canonical())


def has_property_beta(g: BipartiteIncidence) -> Check:
    if not g.points or not len(g.lines):
        return Check(False, "empty side", ("V1" if not g.points else "V2",))
    pts = elements(g.points)
    bad = []
    for a, b in itertools.combinations(pts, 2):
        pair = (1 << (a - 1)) | (1 << (b - 1))
        if sum(1 for ln in g.lines if pair & ~ln == 0) != 1:
            bad.append((a, b))
    if bad:
        return Check(False, "point pair without a unique common line", tuple(bad))
    for p in pts:
        if g.degree(p) < 2:
            return Check(False, "minimum degree below 2", (f"point {p}",))
    for ln in g.lines:
        if popcount(ln) < 2:
            return Check(False, "minimum degree below 2", (f"line {format_set(ln)}",))
    return Check(True)


def _is_linear(lines: list[int]) -> bool:
    return all(popcount(a & b) <= 1 for a, b in itertools.combinations(lines, 2))


def _exact_covers(p: int, candidates: list[int]) -> list[tuple[int, ...]]:
    """Line subsets covering every pair of points of ``p`` exactly once."""
    pts = elements(p)
    pairs = [(1 << (a - 1)) | (1 << (b - 1)) for a, b in itertools.combinations(pts, 2)]
    out = []

    def search(covered: frozenset, chosen: tuple[int, ...]):
        todo = next((q for q in pairs if q not in covered), None)
        if todo is None:
            out.append(chosen)
            return
        for ln in candidates:
            if todo & ~ln or ln in chosen:
                continue
            new = [q for q in pairs if q & ~ln == 0]
            if any(q in covered for q in new):
                continue
            search(covered | frozenset(new), chosen + (ln,))

    search(frozenset(), ())
    return out


def _beta_generic(g: BipartiteIncidence) -> list[SetFamily]:
    lines = [ln for ln in g.lines if popcount(ln) >= 2]
    everything = SetFamily(g.lines)
    found = []
    for r in range(3, g.n_points + 1):
        for combo in itertools.combinations(elements(g.points), r):
            p = sum(1 << (e - 1) for e in combo)
            cands = [ln for ln in lines if ln & ~p == 0]
            for cover in _exact_covers(p, cands):
                fam = SetFamily(cover)
                if fam == everything:
                    continue
                sub = BipartiteIncidence(g.n, p, fam)
                if all(sub.degree(e) >= 2 for e in combo):
                    found.append(fam.canonical())
    return found


def beta_subsets(
    g: BipartiteIncidence, cap: int = BETA_CAP, workers: int = 1
) -> list[SetFamily]:
    """Every proper line subset A whose induced restriction has property β.

    Enumeration runs over point sets P = pre(A). When no two lines share two
    points the line set of P is forced, which is the numeric fast path.
    """
    if g.n_points > cap:
        raise SubsetCapExceeded(f"{g.n_points} points exceed the cap {cap}")
    lines = [ln for ln in g.lines if popcount(ln) >= 2]
    if not _is_linear(lines):
        return sorted(_beta_generic(g), key=lambda f: [lex_key(x) for x in f])
    all_lines = len(g.lines) if len(lines) == len(g.lines) else -1
    arr = to_int64(lines)
    pairs = np.array([math.comb(popcount(ln), 2) for ln in lines], dtype=np.int64)

    pts = elements(g.points)
    split = min(len(pts), max(0, (4 * workers - 1).bit_length())) if workers > 1 else 0
    high = pts[len(pts) - split :] if split else []
    free = g.points & ~sum(1 << (e - 1) for e in high)
    tasks = []
    for bits in itertools.product((0, 1), repeat=len(high)):
        base = sum(1 << (e - 1) for e, b in zip(high, bits) if b)
        tasks.append((to_int64([base])[0], to_int64([free])[0]))

    def run(task):
        return _kernels.beta_linear(arr, pairs, task[0], task[1], all_lines)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(run, tasks))
    else:
        chunks = [run(t) for t in tasks]
    point_sets = sorted((p for c in chunks for p in from_int64(c)), key=lex_key)
    return [SetFamily(ln for ln in lines if ln & ~p == 0).canonical() for p in point_sets]


def beta_count(g: BipartiteIncidence, cap: int = BETA_CAP, workers: int = 1) -> int:
    return len(beta_subsets(g, cap, workers))


@dataclass(frozen=True)
class PLPReport:
    beta: int
    n: int
    m: int
    bound: Fraction
    holds: bool

    def format(self) -> str:
        return (
            f"beta={self.beta} n={self.n} m={self.m} "
            f"bound={self.bound} holds={str(self.holds).lower()}"
        )


def plp_bound_check(g: BipartiteIncidence, cap: int = BETA_CAP, workers: int = 1) -> PLPReport:
    """β(G) <= 2 m^2 (n-2) / (3 n (n-1)), compared exactly."""
    check = has_property_beta(g)
    if not check:
        raise PropertyBetaRequired(check.describe())
    n, m = g.n_points, g.n_lines
    beta = beta_count(g, cap, workers)
    bound = Fraction(2 * m * m * (n - 2), 3 * n * (n - 1))
    return PLPReport(beta, n, m, bound, beta <= bound)


def export_dot(g: BipartiteIncidence) -> str:
    """Deterministic DOT text: points as circles, lines as boxes."""
    def line_id(ln: int) -> str:
        return "L_" + "_".join(map(str, elements(ln)))

    lines = sorted(g.lines, key=lex_key)
    out = ["graph incidence {", "  rankdir=LR;", "  subgraph points {", "    rank=same;"]
    out += [f'    p{p} [shape=circle, label="{p}"];' for p in elements(g.points)]
    out += ["  }", "  subgraph lines {", "    rank=same;"]
    out += [f'    {line_id(ln)} [shape=box, label="{format_set(ln)}"];' for ln in lines]
    out.append("  }")
    for ln in lines:
        out += [f"  p{p} -- {line_id(ln)};" for p in elements(ln)]
    out.append("}")
    return "\n".join(out) + "\n"
