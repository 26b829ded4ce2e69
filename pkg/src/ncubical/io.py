"""Text formats for facet lists and BBC sequences.

Simplicial facets are written one per line, either as complement vectors
(``00110``: zeros mark the members) or as vertex lists (``1 2 5``).  A line
of only 0/1 characters is read as a complement vector; a line with
separators is a vertex list; a bare digit string such as ``01234`` is
ambiguous and needs an explicit encoding.  Cubical facets are sign vectors
over ``+``, ``-`` and ``0``.  Lines starting with ``#`` are comments.

A sequence file lists one ball per block, blocks separated by blank lines.
"""

from __future__ import annotations

import json
import re
from typing import Iterable

from .cubical import CubicalComplex, f_vector_cubical
from .face_encoding import SignVector, bits
from .simplicial import SimplicialComplex

ENCODINGS = ("auto", "vertices", "complement", "sign")

_SEPARATED = re.compile(r"[\s,]")


class ParseError(ValueError):
    def __init__(self, lineno: int, reason: str) -> None:
        self.lineno = lineno
        self.reason = reason
        super().__init__(f"line {lineno}: {reason}")


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def _line_encoding(lineno: int, line: str, encoding: str) -> str:
    if encoding in ("vertices", "complement"):
        return encoding
    if encoding != "auto":
        raise ParseError(lineno, f"encoding {encoding!r} does not describe simplicial faces")
    if _SEPARATED.search(line):
        return "vertices"
    if set(line) <= {"0", "1"}:
        return "complement"
    if line.isdigit():
        raise ParseError(lineno, f"{line!r} is ambiguous; pass an explicit encoding (vertices or complement)")
    raise ParseError(lineno, f"cannot read {line!r} as a simplicial face")


def _vertex_tokens(lineno: int, line: str) -> list[int]:
    tokens = [t for t in _SEPARATED.split(line) if t]
    if len(tokens) == 1 and len(tokens[0]) > 1:
        # compact form as in "0123": one digit per vertex
        tokens = list(tokens[0])
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"non-integer vertex in {line!r}") from None


def parse_simplicial(
    text: str,
    encoding: str = "auto",
    index_base: int = 0,
    n_vertices: int | None = None,
) -> SimplicialComplex:
    lines = _content_lines(text)
    if not lines:
        raise ParseError(0, "no facets")
    masks = []
    length = None
    top = -1
    for lineno, line in lines:
        enc = _line_encoding(lineno, line, encoding)
        if enc == "complement":
            if set(line) - {"0", "1"}:
                raise ParseError(lineno, f"not a 0/1 vector: {line!r}")
            if length is not None and len(line) != length:
                raise ParseError(lineno, f"vector length {len(line)} differs from {length}")
            length = len(line)
            masks.append(sum(1 << i for i, c in enumerate(line) if c == "0"))
        else:
            vs = [v - index_base for v in _vertex_tokens(lineno, line)]
            if any(v < 0 for v in vs):
                raise ParseError(lineno, f"vertex below index base {index_base}")
            if len(set(vs)) != len(vs):
                raise ParseError(lineno, "repeated vertex")
            m = 0
            for v in vs:
                m |= 1 << v
            top = max(top, max(vs, default=-1))
            masks.append(m)
    n = n_vertices if n_vertices is not None else max(length or 0, top + 1)
    if top >= n:
        raise ParseError(lines[-1][0], f"vertex {top} outside 0..{n - 1}")
    return SimplicialComplex(n, frozenset(masks))


def serialize_simplicial(c: SimplicialComplex, encoding: str = "complement", index_base: int = 0) -> str:
    if encoding == "complement":
        rows = c.complements()
    elif encoding == "vertices":
        rows = [" ".join(str(v + index_base) for v in bits(f)) for f in c.sorted_facets()]
    else:
        raise ValueError(f"unknown encoding {encoding!r}")
    return "\n".join(rows) + "\n"


def parse_cubical(text: str) -> CubicalComplex:
    facets = []
    n = None
    for lineno, line in _content_lines(text):
        try:
            f = SignVector.parse(line)
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
        if n is not None and f.n != n:
            raise ParseError(lineno, f"length {f.n} differs from {n}")
        n = f.n
        facets.append(f)
    if n is None:
        raise ParseError(0, "no facets")
    return CubicalComplex(n, frozenset(facets))


def serialize_cubical(c: CubicalComplex) -> str:
    return "".join(f"{f}\n" for f in c.sorted_facets())


def cubical_to_json(c: CubicalComplex) -> dict:
    return {
        "ambient_dim": c.ambient_dim,
        "facets": [str(f) for f in c.sorted_facets()],
        "f_vector": list(f_vector_cubical(c)),
    }


def cubical_from_json(doc: dict | str) -> CubicalComplex:
    if isinstance(doc, str):
        doc = json.loads(doc)
    facets = frozenset(SignVector.parse(s) for s in doc["facets"])
    return CubicalComplex(int(doc["ambient_dim"]), facets)


def looks_cubical(text: str) -> bool:
    return any(("+" in line or "-" in line) for _, line in _content_lines(text))


def parse_complex(text: str, encoding: str = "auto", index_base: int = 0):
    """Read a facet list as cubical (sign vectors) or simplicial."""
    if encoding == "sign" or (encoding == "auto" and looks_cubical(text)):
        return parse_cubical(text)
    return parse_simplicial(text, encoding, index_base)


def serialize(c, encoding: str = "complement", index_base: int = 0) -> str:
    if isinstance(c, CubicalComplex):
        return serialize_cubical(c)
    return serialize_simplicial(c, encoding, index_base)


def parse_sequence(text: str, encoding: str = "auto", index_base: int = 0) -> list[SimplicialComplex]:
    """Balls of a sequence file; ball k lives on ``d + k`` vertices."""
    blocks: list[list[str]] = [[]]
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            if blocks[-1]:
                blocks.append([])
            continue
        blocks[-1].append(line)
    if not blocks[-1]:
        blocks.pop()
    if not blocks:
        raise ParseError(0, "no balls in sequence")
    balls = [parse_simplicial("\n".join(block), encoding, index_base) for block in blocks]
    d = balls[0].n_vertices
    for k, b in enumerate(balls):
        # vertex lists infer the size from the largest label; widen to d + k
        if b.n_vertices < d + k:
            balls[k] = SimplicialComplex(d + k, b.facets)
    return balls


def serialize_sequence(balls: Iterable[SimplicialComplex], encoding: str = "complement", index_base: int = 0) -> str:
    return "\n".join(serialize_simplicial(b, encoding, index_base) for b in balls)
