"""Equivelar quadrangulated surfaces as mirror complexes of polygons."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Sequence

from .bbc import bbc_from_cyclic, build_direct
from .cubical import CubicalComplex, f_vector_cubical, mirror_complex
from .face_encoding import SignVector, bits
from .simplicial import SimplicialComplex
from .verify import euler_characteristic, vertex_link


def polygon_boundary(q: int) -> SimplicialComplex:
    return SimplicialComplex(q, frozenset((1 << i) | (1 << ((i + 1) % q)) for i in range(q)))


@dataclass(frozen=True)
class QuadSurface:
    underlying: CubicalComplex
    q: int

    @property
    def quads(self) -> list[SignVector]:
        return self.underlying.sorted_facets()

    def f_vector(self) -> tuple[int, int, int]:
        return tuple(f_vector_cubical(self.underlying))

    def euler(self) -> int:
        return euler_characteristic(self.f_vector())

    def genus(self) -> int:
        """Genus from the Euler characteristic (orientable surfaces only)."""
        chi = self.euler()
        if chi % 2:
            raise ValueError(f"odd Euler characteristic {chi}")
        return (2 - chi) // 2

    def cyclic_quads(self) -> list[tuple[int, int, int, int]]:
        return [quad_cycle(f) for f in self.quads]


def equivelar_m4q(q: int) -> QuadSurface:
    """Mirror complex of the q-gon: all sign vectors with two cyclically
    adjacent zeros."""
    if q < 3:
        raise ValueError(f"q must be at least 3, got {q}")
    return QuadSurface(mirror_complex(polygon_boundary(q)), q)


def genus_closed_form(q: int) -> int:
    if q < 3:
        raise ValueError(f"q must be at least 3, got {q}")
    return 1 + (q - 4) * 2 ** (q - 3)


def checked_genus(q: int) -> int:
    """Genus of M_{4,q} computed both ways; they must agree."""
    s = equivelar_m4q(q)
    g = s.genus()
    if g != genus_closed_form(q):
        raise AssertionError(f"genus mismatch for q={q}: {g} from Euler, {genus_closed_form(q)} closed form")
    return g


def quad_cycle(f: SignVector) -> tuple[int, int, int, int]:
    """The four vertices of a square face, as sign masks, in cyclic order."""
    if f.dim != 2:
        raise ValueError(f"{f} is not a square")
    i, j = bits(f.zeros)
    bi, bj = 1 << i, 1 << j
    base = f.sign
    return (base | bi | bj, base | bj, base, base | bi)


def is_orientable(faces: Sequence[Sequence[Hashable]]) -> bool:
    """Consistent orientation test for a closed polygonal surface.

    ``faces`` list each polygon's vertices in cyclic order.  Raises
    ``ValueError`` if some edge does not lie in exactly two faces.
    """
    edges: dict[frozenset, list[tuple[int, bool]]] = {}
    for idx, face in enumerate(faces):
        k = len(face)
        for p in range(k):
            a, b = face[p], face[(p + 1) % k]
            # record whether the face walks the edge in the canonical direction
            forward = repr(a) < repr(b)
            edges.setdefault(frozenset((a, b)), []).append((idx, forward))
    for e, uses in edges.items():
        if len(uses) != 2:
            raise ValueError(f"edge {sorted(e, key=repr)} lies in {len(uses)} faces")

    neighbours: list[list[tuple[int, bool]]] = [[] for _ in faces]
    for (f1, d1), (f2, d2) in edges.values():
        # same walking direction means the two faces need opposite flips
        neighbours[f1].append((f2, d1 == d2))
        neighbours[f2].append((f1, d1 == d2))

    flip: list[bool | None] = [None] * len(faces)
    for start in range(len(faces)):
        if flip[start] is not None:
            continue
        flip[start] = False
        queue = deque([start])
        while queue:
            f = queue.popleft()
            for g, must_differ in neighbours[f]:
                want = flip[f] ^ must_differ
                if flip[g] is None:
                    flip[g] = want
                    queue.append(g)
                elif flip[g] != want:
                    return False
    return True


def orientability(s: QuadSurface) -> bool:
    return is_orientable(s.cyclic_quads())


def vertex_links_are_cycles(s: QuadSurface) -> bool:
    """Every vertex link is one cycle through all ``q`` coordinate labels."""
    n = s.underlying.ambient_dim
    for key in s.underlying.faces_by_dim()[0]:
        link = vertex_link(s.underlying, SignVector(n, *key))
        adj: dict[int, list[int]] = {}
        for e in link.facets:
            a, b = bits(e)
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        if len(adj) != s.q or any(len(v) != 2 for v in adj.values()):
            return False
        start = next(iter(adj))
        prev, cur, steps = None, start, 0
        while True:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            prev, cur = cur, nxt
            steps += 1
            if cur == start:
                break
        if steps != s.q:
            return False
    return True


def sphere_s3(q: int) -> CubicalComplex:
    """Neighborly cubical 3-sphere from pulling triangulations of 3..q-1-gons."""
    return build_direct(bbc_from_cyclic(3, q))


def embeds_in_sphere(s: QuadSurface | CubicalComplex, q: int, sphere: CubicalComplex | None = None) -> bool:
    """True iff every square of the surface is a face of the 3-sphere S_3(q)."""
    c = s.underlying if isinstance(s, QuadSurface) else s
    if sphere is None:
        sphere = sphere_s3(q)
    if c.ambient_dim != sphere.ambient_dim:
        return False
    squares = sphere.faces_by_dim()[2]
    return all(f.key in squares for f in c.facets)


# -- export ---------------------------------------------------------------------


def to_off(s: QuadSurface) -> str:
    """OFF text: one line of +-1 coordinates per cube vertex, one line per quad."""
    n = s.underlying.ambient_dim
    cycles = s.cyclic_quads()
    used = sorted({v for c in cycles for v in c})
    index = {v: i for i, v in enumerate(used)}
    lines = ["OFF", f"{len(used)} {len(cycles)} 0"]
    for v in used:
        lines.append(" ".join("-1" if (v >> i) & 1 else "1" for i in range(n)))
    for c in cycles:
        lines.append("4 " + " ".join(str(index[v]) for v in c))
    return "\n".join(lines) + "\n"


def to_json(s: QuadSurface) -> str:
    fv = s.f_vector()
    doc = {
        "q": s.q,
        "ambient_dim": s.underlying.ambient_dim,
        "f_vector": list(fv),
        "euler": s.euler(),
        "genus": s.genus(),
        "facets": [str(f) for f in s.quads],
    }
    return json.dumps(doc, indent=2)


__all__ = [
    "QuadSurface",
    "checked_genus",
    "embeds_in_sphere",
    "equivelar_m4q",
    "genus_closed_form",
    "is_orientable",
    "orientability",
    "polygon_boundary",
    "quad_cycle",
    "sphere_s3",
    "to_json",
    "to_off",
    "vertex_links_are_cycles",
]
