"""Embedded reference data.

Each fixture keeps the original labels and notation so a transcription
fix stays a one-line diff.  A leading ``*`` marks a boundary facet that
belongs to the next ball's base (printed in bold in the source tables).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bbc import BBCSequence, validate_bbc
from .cubical import CubicalComplex
from .face_encoding import SignVector
from .simplicial import SimplicialComplex


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str  # bbc_sequence | cubical_facets | simplicial_facets
    payload: str
    index_base: int
    description: str


# Pentagon sequence, complement vectors over 1-based labels.  The listed
# boundary of T5 repeats 11001; the fifth edge {4,5} is 11100.
PENTAGON_SEQUENCE = """\
T3 | 000               | *001 *100 010
T4 | 0010 1000         | *0011 *1001 *1100 0110
T5 | 00110 10010 11000 | 00111 10011 11001 11001 01110
"""

# Facet patterns of the neighborly cubical 3-sphere on 64 vertices by type;
# each +- expands to both signs.
PENTAGON_SPHERE_PATTERNS = """\
3 | 0 0 0 ± - -
2 | 0 0 ± 0 + -
2 | 0 ± 0 0 - -
2 | ± 0 0 0 + -
1 | 0 0 ± ± 0 +
1 | ± 0 0 ± 0 +
1 | ± ± 0 0 0 +
1 | 0 ± ± 0 0 -
0 | 0 0 ± ± ± 0
0 | ± 0 0 ± ± 0
0 | ± ± 0 0 ± 0
0 | ± ± ± 0 0 0
0 | 0 ± ± ± 0 0
"""

# Neighborly sequence whose last boundary is the Altshuler sphere; 0-based
# vertex labels, A_i is the cone with apex i-1.
ALTSHULER_SEQUENCE = """\
A5  | 01234
    | *0123 *0124 0134 0234 *1234
A6  | 01235 01245 12345
    | *0123 0124 *0135 *0145 0235 0245 *1234 *1345 *2345
A7  | 01236 01356 01456 12346 13456 23456
    | *0123 *0126 *0135 *0145 0146 *0236 *0356 *0456 *1234 1246 *1345 *2345 2356 2456
A8  | 01237 01267 01357 01457 02367 03567 04567 12347 13457 23457
    | *0123 *0126 *0135 *0145 0147 *0167 *0236 *0356 *0456 *0467 1234 1247 1267 *1345 *2345
    | *2357 *2367 2457 *3567 *4567
A9  | 01238 01268 01358 01458 01678 02368 03568 04568 04678 13458 23458 23578 23678 35678 45678
    | *0123 *0126 *0135 *0145 *0148 *0167 0178 *0236 *0356 *0456 *0467 0478 1238 1268 *1345
    | *1348 1678 *2345 *2348 *2357 *2367 *2458 *2578 *2678 *3567 *4567 4578
A10 | 01239 01269 01359 01459 01489 01679 02369 03569 04569 04679 13459 13489 23459 23489
    | 23579 23679 24589 25789 26789 35679 45679
    | 0123 0126 0135 0145 0148 0167 0179 0189 0236 0356 0456 0467 0479 0489 1239 1269 1345
    | 1348 1389 1679 2345 2348 2357 2367 2389 2458 2578 2678 2689 3567 4567 4579 4589 5789 6789
"""


FIXTURES: dict[str, Fixture] = {
    "pentagon": Fixture(
        "pentagon", "bbc_sequence", PENTAGON_SEQUENCE, 1,
        "pulling triangulations of the triangle, square and pentagon (complement vectors)",
    ),
    "pentagon-sphere": Fixture(
        "pentagon-sphere", "cubical_facets", PENTAGON_SPHERE_PATTERNS, 1,
        "facet patterns of the neighborly cubical 3-sphere on 2^6 vertices",
    ),
    "altshuler": Fixture(
        "altshuler", "bbc_sequence", ALTSHULER_SEQUENCE, 0,
        "neighborly sequence of 4-balls ending in the non-polytopal Altshuler 3-sphere",
    ),
}


def _complement_mask(word: str) -> int:
    return sum(1 << i for i, c in enumerate(word) if c == "0")


def _vertex_mask(word: str) -> int:
    return sum(1 << int(c) for c in word)


def _parse_rows(payload: str) -> list[tuple[str, list[str]]]:
    rows = []
    for line in payload.splitlines():
        if not line.strip():
            continue
        label, _, body = line.partition("|")
        rows.append((label.strip(), body.split()))
    return rows


@dataclass(frozen=True)
class TableRow:
    """One ball of a sequence table together with its listed boundary."""

    ball: SimplicialComplex
    listed_boundary: tuple[int, ...]  # masks, duplicates preserved
    marked: frozenset[int]  # boundary facets flagged as the next base


def pentagon_rows() -> list[TableRow]:
    rows = []
    for line in PENTAGON_SEQUENCE.splitlines():
        _, facets, boundary = (part.split() for part in line.split("|"))
        n = len(facets[0])
        words = [w.lstrip("*") for w in boundary]
        rows.append(
            TableRow(
                SimplicialComplex(n, frozenset(_complement_mask(w) for w in facets)),
                tuple(_complement_mask(w) for w in words),
                frozenset(_complement_mask(w.lstrip("*")) for w in boundary if w.startswith("*")),
            )
        )
    return rows


def altshuler_rows() -> list[TableRow]:
    grouped: list[tuple[str, list[list[str]]]] = []
    for label, words in _parse_rows(ALTSHULER_SEQUENCE):
        if label:
            grouped.append((label, [words]))
        else:
            grouped[-1][1].append(words)
    rows = []
    for label, lines in grouped:
        i = int(label[1:])
        # first line(s) with 5-vertex words are facets, the rest boundary
        facets = [w for line in lines for w in line if len(w.lstrip("*")) == 5]
        boundary = [w for line in lines for w in line if len(w.lstrip("*")) == 4]
        ball = SimplicialComplex(i, frozenset(_vertex_mask(w) for w in facets))
        apex = 1 << (i - 1)
        if any(not f & apex for f in ball.facets):
            raise AssertionError(f"{label}: a facet misses the apex {i - 1}")
        rows.append(
            TableRow(
                ball,
                tuple(_vertex_mask(w.lstrip("*")) for w in boundary),
                frozenset(_vertex_mask(w[1:]) for w in boundary if w.startswith("*")),
            )
        )
    return rows


@lru_cache(maxsize=None)
def pentagon_sequence() -> BBCSequence:
    return validate_bbc([r.ball for r in pentagon_rows()], 3, 6)


@lru_cache(maxsize=None)
def altshuler_sequence() -> BBCSequence:
    return validate_bbc([r.ball for r in altshuler_rows()], 5, 11)


def expand_pattern(pattern: str) -> list[SignVector]:
    """All sign vectors matching a pattern over ``0``, ``+``, ``-`` and ``±``."""
    tokens = pattern.split() if " " in pattern.strip() else list(pattern.strip())
    out = [""]
    for tok in tokens:
        choices = {"0": "0", "+": "+", "-": "-", "±": "+-"}.get(tok)
        if choices is None:
            raise ValueError(f"bad pattern token {tok!r}")
        out = [prefix + c for prefix in out for c in choices]
    return [SignVector.parse(s) for s in out]


def pentagon_sphere_patterns() -> list[tuple[int, str]]:
    return [(int(label), " ".join(cols)) for label, cols in _parse_rows(PENTAGON_SPHERE_PATTERNS)]


def pentagon_sphere() -> CubicalComplex:
    facets = [f for _, p in pentagon_sphere_patterns() for f in expand_pattern(p)]
    if len(facets) != len(set(facets)):
        raise AssertionError("overlapping facet patterns")
    return CubicalComplex(6, frozenset(facets))
