"""The worked examples: copoint lists on S_8 / S_9 in compact digit notation."""
from __future__ import annotations

from itertools import combinations

from ._bits import to_mask
from .core import Matroid, SetFamily, build_from_copoints

M1_COPOINTS = (
    "123 124 1256 127 128 134 1357 136 138 1458 146 147 167 168 178 "
    "234 235 2367 238 245 246 247 248 257 258 268 278 345 346 3478 356 358 "
    "368 456 457 467 468 567 568 578 678"
).split()

M2_COPOINTS = [s for s in M1_COPOINTS if s not in ("246", "248", "268", "468")] + ["2468"]

# lists "16" twice; the duplicate is dropped
M4_COPOINTS = "12 13 14 15 16 16 17 18 2345678".split()

M5_COPOINTS = (
    "123 14 15 16 17 18 24 258 26 27 34 35 368 37 45 46 478 56 57 67"
).split()

M6_COPOINTS = (
    "123 14 156 17 18 19 24 25 26 279 28 34 35 36 37 38 39 45 46 47 48 49 "
    "57 58 59 678 69 89"
).split()

FREE_M2 = (
    "123567 1234 1238 1278 124568 1247 134578 1346 1368 1467 1678 2345 "
    "234678 2358 2457 2578 3456 3568 4567 5678"
).split()

FREE_M5 = (
    "1234 123568 1237 145 146 1478 157 167 24578 246 267 345 34678 357 456 567"
).split()


def digits(tokens) -> SetFamily:
    return SetFamily(to_mask(int(c) for c in t) for t in tokens)


def boolean_truncation(n: int, size: int) -> SetFamily:
    """All ``size``-subsets of S_n: the copoints of the rank-(size+1) truncated
    Boolean algebra."""
    return SetFamily(to_mask(c) for c in combinations(range(1, n + 1), size))


def m1() -> Matroid:
    return build_from_copoints(8, digits(M1_COPOINTS))


def m2() -> Matroid:
    return build_from_copoints(8, digits(M2_COPOINTS))


def m3() -> Matroid:
    return build_from_copoints(8, boolean_truncation(8, 3))


def m4() -> Matroid:
    return build_from_copoints(8, digits(M4_COPOINTS))


def m5() -> Matroid:
    return build_from_copoints(8, digits(M5_COPOINTS))


def m6() -> Matroid:
    return build_from_copoints(9, digits(M6_COPOINTS))


NAMED = {"M1": m1, "M2": m2, "M3": m3, "M4": m4, "M5": m5, "M6": m6}
