"""Reference implementations without numba: plain Python for sequential loops,
chunked numpy for the permutation and subset scans."""
import itertools

import numpy as np

name = "numpy"

_CHUNK = 1 << 15


def refine(family, guard):
    guard = [int(c) for c in guard]
    stack = [int(x) for x in family]
    res: list[int] = []
    while stack:
        x = stack.pop()
        absorbed = False
        for i, y in enumerate(res):
            if x == y:
                absorbed = True
                break
            z = x & y
            if not any(z & ~c == 0 for c in guard):
                res[i] = res[-1]
                res.pop()
                stack.append(x | y)
                absorbed = True
                break
        if not absorbed:
            res.append(x)
    return np.array(res, dtype=np.int64)


def _lex_less(a, b):
    with np.errstate(over="ignore"):
        x = a ^ b
        d = x & -x
        hi = ~(d | (d - 1))
    return np.where((a & d) != 0, (b & hi) != 0, (a & hi) == 0)


def _bounds(labels, coline_ptr, coline_elems, cop_ptr, cop_cols):
    """Bound sums for a (P, n) block of labelings."""
    rows = labels.shape[0]
    ncol = len(coline_ptr) - 1
    rel = np.zeros((rows, ncol), dtype=np.int64)
    for c in range(ncol):
        for e in coline_elems[coline_ptr[c] : coline_ptr[c + 1]]:
            rel[:, c] |= np.left_shift(np.int64(1), labels[:, e])
    counts = np.zeros((rows, ncol), dtype=np.int64)
    ar = np.arange(rows)
    for h in range(len(cop_ptr) - 1):
        cols = cop_cols[cop_ptr[h] : cop_ptr[h + 1]]
        best = np.full(rows, cols[0], dtype=np.int64)
        best_rel = rel[:, cols[0]].copy()
        for c in cols[1:]:
            less = _lex_less(rel[:, c], best_rel)
            best = np.where(less, c, best)
            best_rel = np.where(less, rel[:, c], best_rel)
        counts[ar, best] += 1
    return (counts * (counts - 1) // 2).sum(axis=1)


def perm_bound(labels, coline_ptr, coline_elems, cop_ptr, cop_cols):
    labels = np.asarray(labels, dtype=np.int64)[None, :]
    return int(_bounds(labels, coline_ptr, coline_elems, cop_ptr, cop_cols)[0])


def exact_scan(first, n, coline_ptr, coline_elems, cop_ptr, cop_cols):
    rest = [v for v in range(n) if v != first]
    perms = itertools.permutations(rest)
    best = -1
    witness = None
    while True:
        block = list(itertools.islice(perms, _CHUNK))
        if not block:
            break
        labels = np.empty((len(block), n), dtype=np.int64)
        labels[:, 0] = first
        labels[:, 1:] = np.array(block, dtype=np.int64).reshape(len(block), n - 1)
        vals = _bounds(labels, coline_ptr, coline_elems, cop_ptr, cop_cols)
        i = int(np.argmin(vals))
        if best < 0 or vals[i] < best:
            best = int(vals[i])
            witness = labels[i].copy()
    return best, witness


def beta_linear(lines, line_pairs, base, free, all_lines):
    lines = np.asarray(lines, dtype=np.int64)
    positions = [b for b in range(64) if (int(free) >> b) & 1]
    total = 1 << len(positions)
    found = []
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        p = np.full(idx.shape, base, dtype=np.int64)
        for j, b in enumerate(positions):
            p |= ((idx >> j) & 1) << np.int64(b)
        npts = np.bitwise_count(p.view(np.uint64)).astype(np.int64)
        inside = (lines[None, :] & ~p[:, None]) == 0
        na = inside.sum(axis=1)
        pairs = inside @ np.asarray(line_pairs, dtype=np.int64)
        once = np.zeros_like(p)
        twice = np.zeros_like(p)
        for i, ln in enumerate(lines):
            hit = np.where(inside[:, i], ln, np.int64(0))
            twice |= once & hit
            once |= hit
        ok = (
            (npts >= 3)
            & (na > 0)
            & (na != all_lines)
            & (twice == p)
            & (pairs == npts * (npts - 1) // 2)
        )
        found.append(p[ok])
    return np.concatenate(found) if found else np.empty(0, dtype=np.int64)
