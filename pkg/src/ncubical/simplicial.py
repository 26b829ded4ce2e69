"""Simplicial complexes given by their maximal faces.

Vertices are ``0..n_vertices-1`` and faces are bit masks over them.  The
cyclic-polytope routines work on complement encodings (zeros mark the
vertices of a face), which is the form every downstream construction
consumes.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from .face_encoding import bits, full_mask, popcount


@dataclass(frozen=True)
class FVector:
    """Face counts ``(f_0, f_1, ..., f_d)``; the empty face is not counted."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if any(c < 0 for c in self.counts):
            raise ValueError("face counts must be non-negative")

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FVector):
            return self.counts == other.counts
        if isinstance(other, (tuple, list)):
            return self.counts == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.counts)

    @property
    def euler(self) -> int:
        return sum((-1) ** i * c for i, c in enumerate(self.counts))

    def __repr__(self) -> str:
        return f"FVector{self.counts}"


def _maximal(faces: Iterable[int]) -> tuple[frozenset[int], int]:
    """Drop faces contained in other faces; returns the survivors and the drop count."""
    uniq = sorted(set(faces), key=lambda m: -popcount(m))
    kept: list[int] = []
    dropped = 0
    for f in uniq:
        if any(f & g == f for g in kept):
            dropped += 1
        else:
            kept.append(f)
    return frozenset(kept), dropped


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on ``n_vertices`` labeled vertices.

    ``facets`` holds the inclusion-maximal faces as vertex masks.  Non-maximal
    input faces are dropped with a warning.
    """

    n_vertices: int
    facets: frozenset[int]
    _closure: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if self.n_vertices < 0:
            raise ValueError("n_vertices must be non-negative")
        facets = frozenset(self.facets)
        if any(f & ~full_mask(self.n_vertices) for f in facets):
            raise ValueError(f"facet uses a vertex outside 0..{self.n_vertices - 1}")
        kept, dropped = _maximal(facets)
        if dropped:
            warnings.warn(f"dropped {dropped} non-maximal face(s)", stacklevel=3)
        object.__setattr__(self, "facets", kept)

    @classmethod
    def from_vertex_lists(cls, n_vertices: int, faces: Iterable[Iterable[int]]) -> SimplicialComplex:
        masks = []
        for face in faces:
            m = 0
            for v in face:
                m |= 1 << v
            masks.append(m)
        return cls(n_vertices, frozenset(masks))

    @classmethod
    def from_complements(cls, vectors: Iterable[str]) -> SimplicialComplex:
        vectors = [v.strip() for v in vectors]
        lengths = {len(v) for v in vectors}
        if len(lengths) != 1:
            raise ValueError("complement vectors must share one length")
        (n,) = lengths
        masks = []
        for v in vectors:
            if set(v) - {"0", "1"}:
                raise ValueError(f"not a 0/1 vector: {v!r}")
            masks.append(sum(1 << i for i, c in enumerate(v) if c == "0"))
        return cls(n, frozenset(masks))

    @classmethod
    def simplex(cls, n_vertices: int) -> SimplicialComplex:
        return cls(n_vertices, frozenset({full_mask(n_vertices)}))

    # -- accessors ------------------------------------------------------

    def sorted_facets(self) -> list[int]:
        return sorted(self.facets)

    def vertex_lists(self) -> list[tuple[int, ...]]:
        return [tuple(bits(f)) for f in self.sorted_facets()]

    def complements(self) -> list[str]:
        n = self.n_vertices
        return ["".join("0" if (f >> i) & 1 else "1" for i in range(n)) for f in self.sorted_facets()]

    @property
    def pure_dim(self) -> int | None:
        sizes = {popcount(f) for f in self.facets}
        if len(sizes) != 1:
            return None
        return sizes.pop() - 1

    @property
    def dim(self) -> int:
        return max((popcount(f) for f in self.facets), default=0) - 1

    def faces(self) -> frozenset[int]:
        """All faces including the empty one (cached)."""
        if self._closure is None:
            out: set[int] = set()
            for f in self.facets:
                _subsets_into(f, out)
            object.__setattr__(self, "_closure", {"faces": frozenset(out)})
        return self._closure["faces"]

    def __contains__(self, face: int) -> bool:
        return face in self.faces()

    def __len__(self) -> int:
        return len(self.facets)

    def relabel(self, perm: dict[int, int] | list[int], n_vertices: int | None = None) -> SimplicialComplex:
        out = []
        for f in self.facets:
            m = 0
            for v in bits(f):
                m |= 1 << perm[v]
            out.append(m)
        return SimplicialComplex(self.n_vertices if n_vertices is None else n_vertices, frozenset(out))


def _subsets_into(mask: int, out: set[int]) -> None:
    sub = mask
    while True:
        out.add(sub)
        if sub == 0:
            break
        sub = (sub - 1) & mask


def f_vector_simplicial(delta: SimplicialComplex) -> FVector:
    counts = [0] * (delta.dim + 1)
    for face in delta.faces():
        if face:
            counts[popcount(face) - 1] += 1
    return FVector(tuple(counts))


def ridges_of(facet: int) -> list[int]:
    return [facet & ~(1 << v) for v in bits(facet)]


def boundary_complex(delta: SimplicialComplex) -> SimplicialComplex:
    """Complex generated by the ridges lying in exactly one facet."""
    if delta.pure_dim is None:
        raise ValueError("boundary requires a pure complex")
    seen: dict[int, int] = {}
    for f in delta.facets:
        for r in ridges_of(f):
            seen[r] = seen.get(r, 0) + 1
    return SimplicialComplex(delta.n_vertices, frozenset(r for r, c in seen.items() if c == 1))


def cone(delta: SimplicialComplex, v: int | None = None) -> SimplicialComplex:
    """Join with a new apex vertex ``v`` (default: the next free label)."""
    if v is None:
        v = delta.n_vertices
    if v < delta.n_vertices and any((f >> v) & 1 for f in delta.facets):
        raise ValueError(f"vertex {v} is already a vertex of the complex")
    n = max(delta.n_vertices, v + 1)
    facets = delta.facets or frozenset({0})
    return SimplicialComplex(n, frozenset(f | (1 << v) for f in facets))


def is_simplicially_k_neighborly(delta: SimplicialComplex, k: int) -> bool:
    """True iff every k-subset of the vertex labels is a face."""
    if k < 1:
        raise ValueError("k must be at least 1")
    faces = delta.faces()
    for combo in combinations(range(delta.n_vertices), k):
        m = 0
        for v in combo:
            m |= 1 << v
        if m not in faces:
            return False
    return True


def neighborliness(delta: SimplicialComplex) -> int:
    """Largest k for which the complex is simplicially k-neighborly (0 if none)."""
    k = 0
    while k < delta.n_vertices and is_simplicially_k_neighborly(delta, k + 1):
        k += 1
    return k


# -- cyclic polytopes --------------------------------------------------------


def gale_even(members: int, length: int) -> bool:
    """Evenness test on a complement encoding: between any two non-members
    lies an even number of members."""
    last_gap = None
    run = 0
    for i in range(length):
        if (members >> i) & 1:
            run += 1
        else:
            if last_gap is not None and run % 2:
                return False
            last_gap = i
            run = 0
    return True


def _subsets_of_size(length: int, size: int) -> Iterator[int]:
    for combo in combinations(range(length), size):
        m = 0
        for v in combo:
            m |= 1 << v
        yield m


def gale_facets_cyclic(d: int, n: int) -> SimplicialComplex:
    """Boundary complex of the cyclic d-polytope with n vertices."""
    if d < 1 or n < d + 1:
        raise ValueError(f"need n >= d+1 >= 2, got d={d}, n={n}")
    return SimplicialComplex(n, frozenset(m for m in _subsets_of_size(n, d) if gale_even(m, n)))


def trailing_members(members: int, length: int) -> int:
    count = 0
    for i in range(length - 1, -1, -1):
        if not (members >> i) & 1:
            break
        count += 1
    return count


def pulling_triangulation_cyclic(d_poly: int, i: int) -> SimplicialComplex:
    """Pulling triangulation of the cyclic ``d_poly``-polytope on ``i`` vertices
    with respect to its last vertex.

    Facets have ``d_poly + 1`` vertices, contain the last vertex, restrict to
    an evenness-satisfying set on the first ``i - 1`` vertices, and end with
    an odd run of members.  For ``i == d_poly + 1`` the polytope is a simplex
    and the triangulation is the simplex itself.
    """
    if d_poly < 1 or i < d_poly + 1:
        raise ValueError(f"need i >= d_poly+1 >= 2, got d_poly={d_poly}, i={i}")
    if i == d_poly + 1:
        return SimplicialComplex.simplex(i)
    apex = 1 << (i - 1)
    facets = []
    for prefix in _subsets_of_size(i - 1, d_poly):
        if not gale_even(prefix, i - 1):
            continue
        phi = prefix | apex
        if trailing_members(phi, i) % 2 == 1:
            facets.append(phi)
    return SimplicialComplex(i, frozenset(facets))


def neighborly_sphere_facet_count_binomial(i: int, d: int) -> int:
    """Facet count of a neighborly (d-2)-sphere on i vertices, d odd, as the
    sum of two binomials (used as a cross-check of the closed form)."""
    return comb(i - (d - 1) // 2, i + 1 - d) + comb(i - (d + 1) // 2, i + 1 - d)
