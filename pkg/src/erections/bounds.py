"""Log-concavity checks on Whitney numbers and the copoint-count upper bound
for the free erection, minimised over relabelings of the ground set."""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from ._bits import elements, format_set, lex_key
from .core import Matroid, Permutation, apply_permutation, whitney
from .erection import free_erection
from .errors import ExactCapExceeded, NoColineContained, RankOutOfRange

EXACT_CAP = 10

VARIANTS = ("i", "ii", "iii")


@dataclass(frozen=True)
class ConcavityReport:
    variant: str
    per_k: tuple[tuple[int, int, Fraction, bool], ...]
    all_hold: bool


def _coefficient(variant: str, k: int, n: int) -> Fraction:
    if variant == "i":
        return Fraction(1)
    if variant == "ii":
        return Fraction(k + 1, k)
    if variant == "iii":
        return Fraction((k + 1) * (n - k + 1), k * (n - k))
    raise ValueError(f"unknown variant {variant!r}")


def check_log_concavity(m: Matroid, variant: str = "i") -> ConcavityReport:
    """Compare W_k^2 against coefficient * W_{k-1} * W_{k+1} for 0 < k < rank.

    Rank <= 2 is outside the conjecture and yields an empty, vacuously true report.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    w = whitney(m)
    rows = []
    if m.rank > 2:
        for k in range(1, m.rank):
            lhs = w[k] ** 2
            rhs = _coefficient(variant, k, m.n) * w[k - 1] * w[k + 1]
            rows.append((k, lhs, rhs, lhs >= rhs))
    return ConcavityReport(variant, tuple(rows), all(r[3] for r in rows))


@dataclass(frozen=True)
class FreeLCCheck:
    holds: bool
    copoints: int
    colines: int
    free_copoints: int


def check_free_lc(m: Matroid) -> FreeLCCheck:
    """W_{r-1}(M)^2 >= W_{r-2}(M) * W_r(Free(M))."""
    if m.rank < 2:
        raise RankOutOfRange("needs rank >= 2")
    w = whitney(m)
    free = free_erection(m).count
    cop, col = w[m.rank - 1], w[m.rank - 2]
    return FreeLCCheck(cop * cop >= col * free, cop, col, free)


def min_coline(m: Matroid, x: int) -> int:
    """Lexicographically smallest coline contained in ``x``."""
    inside = [c for c in m.colines if c & ~x == 0]
    if not inside:
        raise NoColineContained(f"no coline inside {{{format_set(x)}}}")
    return min(inside, key=lex_key)


def a_counts(m: Matroid) -> dict[int, int]:
    counts = dict.fromkeys(m.colines, 0)
    for x in m.copoints:
        counts[min_coline(m, x)] += 1
    return counts


def bound_sum(m: Matroid) -> int:
    return sum(math.comb(a, 2) for a in a_counts(m).values())


@dataclass(frozen=True)
class BoundReport:
    value: int
    witness: Permutation
    mode: str
    counts: dict[int, int]
    free_copoints: int

    def format(self) -> str:
        lines = [
            f"value={self.value} mode={self.mode} "
            f"witness={' '.join(map(str, self.witness))} "
            f"free_copoints={self.free_copoints}"
        ]
        for coline in sorted(self.counts, key=lex_key):
            lines.append(f"a[{' '.join(map(str, elements(coline)))}]={self.counts[coline]}")
        return "\n".join(lines)


class _Incidence:
    """Coline element lists and copoint -> contained-coline lists in CSR form."""

    def __init__(self, m: Matroid):
        if m.rank < 2:
            raise RankOutOfRange("colines need rank >= 2")
        self.n = m.n
        cols = list(m.colines)
        col_ptr, col_elems = [0], []
        for c in cols:
            col_elems.extend(e - 1 for e in elements(c))
            col_ptr.append(len(col_elems))
        cop_ptr, cop_cols = [0], []
        for x in m.copoints:
            inside = [i for i, c in enumerate(cols) if c & ~x == 0]
            if not inside:
                raise NoColineContained(f"no coline inside {{{format_set(x)}}}")
            cop_cols.extend(inside)
            cop_ptr.append(len(cop_cols))
        self.args = tuple(
            np.array(a, dtype=np.int64) for a in (col_ptr, col_elems, cop_ptr, cop_cols)
        )

    def value(self, perm) -> int:
        labels = np.asarray(perm, dtype=np.int64) - 1
        return int(_kernels.perm_bound(labels, *self.args))

    def scan(self, first: int) -> tuple[int, Permutation]:
        best, labels = _kernels.exact_scan(first, self.n, *self.args)
        return int(best), tuple(int(v) + 1 for v in labels)


def _exact(inc: _Incidence, workers: int) -> tuple[int, Permutation]:
    firsts = range(inc.n)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(inc.scan, firsts))
    else:
        blocks = [inc.scan(f) for f in firsts]
    # blocks are in lexicographic order of the first image, each internally lex-first
    return min(blocks, key=lambda vw: (vw[0], vw[1]))


def _heuristic(inc: _Incidence, budget: int, seed: int) -> tuple[int, Permutation]:
    rng = np.random.default_rng(seed)
    n = inc.n
    best: tuple[int, Permutation] | None = None
    for _ in range(max(1, budget)):
        perm = [int(v) + 1 for v in rng.permutation(n)]
        val = inc.value(perm)
        improved = True
        while improved:
            improved = False
            for i in range(n - 1):
                for j in range(i + 1, n):
                    perm[i], perm[j] = perm[j], perm[i]
                    cand = inc.value(perm)
                    if cand < val:
                        val = cand
                        improved = True
                    else:
                        perm[i], perm[j] = perm[j], perm[i]
        cand = (val, tuple(perm))
        if best is None or cand < best:
            best = cand
    return best


def minimize_bound(
    m: Matroid,
    mode: str = "exact",
    budget: int = 100,
    *,
    workers: int = 1,
    seed: int = 0,
    exact_cap: int = EXACT_CAP,
) -> BoundReport:
    """Minimise the pair-count bound over all relabelings (exact) or by
    random-restart swap descent (heuristic)."""
    inc = _Incidence(m)
    if mode == "exact":
        if m.n > exact_cap:
            raise ExactCapExceeded(f"n={m.n} exceeds exact cap {exact_cap}")
        value, witness = _exact(inc, workers)
    elif mode == "heuristic":
        value, witness = _heuristic(inc, budget, seed)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    counts = a_counts(apply_permutation(m, witness))
    return BoundReport(value, witness, mode, counts, free_erection(m).count)
