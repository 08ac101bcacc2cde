"""numba implementations of the hot loops. Masks are int64, element e-1 in bit e-1."""
import numpy as np
from numba import njit

name = "numba"


@njit(cache=True, nogil=True)
def _covered(z, guard):
    for c in guard:
        if z & ~c == 0:
            return True
    return False


@njit(cache=True, nogil=True)
def refine(family, guard):
    m = family.shape[0]
    stack = family.copy()
    sp = m
    res = np.empty(m, np.int64)
    k = 0
    while sp > 0:
        sp -= 1
        x = stack[sp]
        absorbed = False
        for i in range(k):
            y = res[i]
            if x == y:
                absorbed = True
                break
            if not _covered(x & y, guard):
                res[i] = res[k - 1]
                k -= 1
                stack[sp] = x | y
                sp += 1
                absorbed = True
                break
        if not absorbed:
            res[k] = x
            k += 1
    return res[:k].copy()


@njit(inline="always")
def _lex_less(a, b):
    # ascending-sequence order, a proper prefix sorts first
    x = a ^ b
    d = x & -x
    hi = ~(d | (d - 1))
    if a & d:
        return (b & hi) != 0
    return (a & hi) == 0


@njit(cache=True, nogil=True)
def _bound(labels, coline_ptr, coline_elems, cop_ptr, cop_cols, rel, counts):
    ncol = coline_ptr.shape[0] - 1
    one = np.int64(1)
    for c in range(ncol):
        r = np.int64(0)
        for j in range(coline_ptr[c], coline_ptr[c + 1]):
            r |= one << labels[coline_elems[j]]
        rel[c] = r
        counts[c] = 0
    for h in range(cop_ptr.shape[0] - 1):
        best = cop_cols[cop_ptr[h]]
        for j in range(cop_ptr[h] + 1, cop_ptr[h + 1]):
            c = cop_cols[j]
            if _lex_less(rel[c], rel[best]):
                best = c
        counts[best] += 1
    total = 0
    for c in range(ncol):
        total += counts[c] * (counts[c] - 1) // 2
    return total


@njit(cache=True, nogil=True)
def perm_bound(labels, coline_ptr, coline_elems, cop_ptr, cop_cols):
    ncol = coline_ptr.shape[0] - 1
    rel = np.empty(ncol, np.int64)
    counts = np.empty(ncol, np.int64)
    return _bound(labels, coline_ptr, coline_elems, cop_ptr, cop_cols, rel, counts)


@njit(cache=True, nogil=True)
def exact_scan(first, n, coline_ptr, coline_elems, cop_ptr, cop_cols):
    """Scan every labeling with labels[0] == first in lexicographic order."""
    ncol = coline_ptr.shape[0] - 1
    rel = np.empty(ncol, np.int64)
    counts = np.empty(ncol, np.int64)
    p = np.empty(n, np.int64)
    p[0] = first
    k = 1
    for v in range(n):
        if v != first:
            p[k] = v
            k += 1
    best = np.int64(-1)
    witness = p.copy()
    while True:
        val = _bound(p, coline_ptr, coline_elems, cop_ptr, cop_cols, rel, counts)
        if best < 0 or val < best:
            best = val
            witness[:] = p
        i = n - 2
        while i >= 1 and p[i] >= p[i + 1]:
            i -= 1
        if i < 1:
            break
        j = n - 1
        while p[j] <= p[i]:
            j -= 1
        p[i], p[j] = p[j], p[i]
        lo = i + 1
        hi = n - 1
        while lo < hi:
            p[lo], p[hi] = p[hi], p[lo]
            lo += 1
            hi -= 1
    return best, witness


@njit(inline="always")
def _popcount(x):
    c = 0
    while x != 0:
        x &= x - 1
        c += 1
    return c


@njit(cache=True, nogil=True)
def beta_linear(lines, line_pairs, base, free, all_lines):
    """Point sets P = base | sub (sub ⊆ free) whose contained lines form a β-graph.

    Valid for linear incidence structures only (two lines share at most one
    point), where the line set of P is forced. ``all_lines`` is the size of V2
    when every line is eligible, else -1; it rules out A = V2.
    """
    out = np.empty(64, np.int64)
    k = 0
    sub = free
    while True:
        p = base | sub
        npts = _popcount(p)
        if npts >= 3:
            na = 0
            pairs = 0
            once = np.int64(0)
            twice = np.int64(0)
            for i in range(lines.shape[0]):
                ln = lines[i]
                if ln & ~p == 0:
                    na += 1
                    pairs += line_pairs[i]
                    twice |= once & ln
                    once |= ln
            if na > 0 and na != all_lines and twice == p and pairs == npts * (npts - 1) // 2:
                if k == out.shape[0]:
                    grown = np.empty(2 * k, np.int64)
                    grown[:k] = out
                    out = grown
                out[k] = p
                k += 1
        if sub == 0:
            break
        sub = (sub - 1) & free
    return out[:k].copy()
