"""Bitmask encoding of subsets of the ground set {1, ..., n}, n <= 64.

Element ``e`` is stored in bit ``e - 1``. Python ints are used on the API side;
the numeric kernels take the same masks as ``np.int64`` (bit 63 is the sign bit,
which only matters for conversion).
"""
from __future__ import annotations

from collections.abc import Iterable

import numpy as np

MAX_N = 64

_U64 = (1 << 64) - 1


def to_mask(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << (e - 1)
    return mask


def elements(mask: int) -> list[int]:
    """Members of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def lex_key(mask: int) -> tuple[int, ...]:
    # tuple comparison gives the "shorter prefix wins" order
    return tuple(elements(mask))


def format_set(mask: int) -> str:
    if not mask:
        return "{}"
    return " ".join(map(str, elements(mask)))


def compact(mask: int) -> str:
    """Compact digit-string form (only meaningful for n <= 9)."""
    return "".join(map(str, elements(mask)))


def to_int64(masks: Iterable[int]) -> np.ndarray:
    vals = [m - (1 << 64) if m >= 1 << 63 else m for m in masks]
    return np.array(vals, dtype=np.int64)


def from_int64(values: Iterable[int]) -> list[int]:
    return [int(v) & _U64 for v in values]
