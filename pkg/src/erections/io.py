"""Plain-text formats for matroids (copoint lists), set lists and incidence graphs.

Matroid files::

    n 8
    rank 3          # optional, cross-checked
    123             # compact digits, only when n <= 9
    1 4             # or whitespace/comma separated integers

``{}`` denotes the empty set.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from ._bits import format_set, lex_key, to_mask
from .core import Matroid, SetFamily
from .errors import CompactTokenWithLargeN, ElementOutOfRange, ParseError

_SEP = re.compile(r"[\s,]+")


@dataclass
class Parsed:
    n: int
    sets: SetFamily
    rank: int | None = None
    header: str = "n"
    warnings: list[str] = field(default_factory=list)


def parse_set(token: str, n: int, line: int | None = None) -> int:
    token = token.strip()
    if token in ("{}", "-"):
        return 0
    if not re.fullmatch(r"[\d\s,]+", token):
        raise ParseError(f"unexpected characters in {token!r}", line)
    parts = [p for p in _SEP.split(token) if p]
    if len(parts) == 1 and len(parts[0]) > 1 and not re.search(r"[\s,]", token):
        if n > 9:
            raise CompactTokenWithLargeN(
                f"digit string {token!r} is ambiguous for n={n}; separate elements", line
            )
        parts = list(parts[0])
    elems = [int(p) for p in parts]
    for e in elems:
        if not 1 <= e <= n:
            raise ElementOutOfRange(f"element {e} outside 1..{n}", line)
    if len(set(elems)) != len(elems):
        raise ParseError(f"repeated element in {token!r}", line)
    return to_mask(elems)


def _content(text: str):
    for num, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            yield num, stripped


def _collect(lines, n: int) -> tuple[SetFamily, list[str]]:
    masks, warnings = {}, []
    for num, body in lines:
        mask = parse_set(body, n, num)
        if mask in masks:
            warnings.append(f"line {num}: duplicate set {{{format_set(mask)}}} ignored")
            continue
        masks[mask] = None
    return SetFamily(masks), warnings


def parse_sets(text: str, n: int) -> tuple[SetFamily, list[str]]:
    """One set per non-empty line; duplicates are dropped with a warning."""
    return _collect(_content(text), n)


def _parse_headed(text: str, header: str) -> Parsed:
    lines = list(_content(text))
    if not lines:
        raise ParseError("empty input")
    num, first = lines[0]
    words = first.split()
    if len(words) != 2 or words[0] != header or not words[1].isdigit():
        raise ParseError(f"expected '{header} <int>' first", num)
    n = int(words[1])
    if not 1 <= n <= 64:
        raise ParseError(f"n={n} outside 1..64", num)
    rank = None
    rest = lines[1:]
    if rest and rest[0][1].split()[0] == "rank":
        rnum, rline = rest[0]
        words = rline.split()
        if len(words) != 2 or not words[1].isdigit():
            raise ParseError("expected 'rank <int>'", rnum)
        rank = int(words[1])
        rest = rest[1:]
    sets, warnings = _collect(rest, n)
    return Parsed(n, sets, rank, header, warnings)


def parse_matroid_file(text: str) -> Parsed:
    return _parse_headed(text, "n")


def parse_graph_file(text: str) -> Parsed:
    """``points <n>`` followed by one line per matroid line (its point indices)."""
    return _parse_headed(text, "points")


def parse_any(text: str) -> Parsed:
    for _, body in _content(text):
        return _parse_headed(text, "points" if body.split()[0] == "points" else "n")
    raise ParseError("empty input")


def format_family(sets) -> str:
    return "".join(format_set(s) + "\n" for s in sorted(sets, key=lex_key))


def format_matroid(m: Matroid) -> str:
    return f"n {m.n}\nrank {m.rank}\n" + format_family(m.copoints)
