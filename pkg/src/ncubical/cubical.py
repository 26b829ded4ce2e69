"""Cubical complexes as facet sets of sign vectors inside an n-cube."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from math import comb
from typing import Iterable

from .face_encoding import (
    SignVector,
    all_subface_keys,
    bits,
    full_mask,
    is_subface,
    popcount,
)
from .simplicial import FVector, SimplicialComplex

Key = tuple[int, int]

_ORDER = str.maketrans("0+-", "012")


def _key_dim(n: int, key: Key) -> int:
    return n - popcount(key[0])


def cube_ridges(n: int, key: Key) -> list[Key]:
    """The 2*dim codimension-one faces of a cube face."""
    support, sign = key
    out = []
    for i in bits(full_mask(n) & ~support):
        b = 1 << i
        out.append((support | b, sign))
        out.append((support | b, sign | b))
    return out


@dataclass(frozen=True)
class CubicalComplex:
    """Subcomplex of the ``ambient_dim``-cube generated by ``facets``."""

    ambient_dim: int
    facets: frozenset[SignVector]
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        facets = frozenset(self.facets)
        for f in facets:
            if f.n != self.ambient_dim:
                raise ValueError(f"facet {f} does not live in the {self.ambient_dim}-cube")
        object.__setattr__(self, "facets", facets)
        if self.pure_dim is None and len(facets) > 1:
            by_dim = sorted(facets, key=lambda f: -f.dim)
            kept: list[SignVector] = []
            for f in by_dim:
                if any(is_subface(f, g) for g in kept):
                    raise ValueError(f"facet {f} is a face of another facet")
                kept.append(f)

    @classmethod
    def from_keys(cls, n: int, keys: Iterable[Key]) -> CubicalComplex:
        return cls(n, frozenset(SignVector(n, s, g) for s, g in keys))

    @classmethod
    def from_strings(cls, lines: Iterable[str]) -> CubicalComplex:
        facets = [SignVector.parse(s) for s in lines]
        if not facets:
            raise ValueError("no facets given")
        return cls(facets[0].n, frozenset(facets))

    @classmethod
    def cube_boundary(cls, n: int) -> CubicalComplex:
        return cls.from_keys(n, ((1 << i, s << i) for i in range(n) for s in (0, 1)))

    @classmethod
    def cube(cls, n: int) -> CubicalComplex:
        return cls(n, frozenset({SignVector(n, 0, 0)}))

    # -- accessors ------------------------------------------------------

    def keys(self) -> frozenset[Key]:
        if "keys" not in self._cache:
            self._cache["keys"] = frozenset(f.key for f in self.facets)
        return self._cache["keys"]

    def sorted_facets(self) -> list[SignVector]:
        # lexicographic with 0 < + < - keeps output stable and readable
        return sorted(self.facets, key=lambda f: str(f).translate(_ORDER))

    @property
    def pure_dim(self) -> int | None:
        dims = {f.dim for f in self.facets}
        return dims.pop() if len(dims) == 1 else None

    @property
    def dim(self) -> int:
        return max((f.dim for f in self.facets), default=-1)

    def faces_by_dim(self) -> list[frozenset[Key]]:
        """Every non-empty face of the complex, bucketed by dimension."""
        if "faces" not in self._cache:
            n = self.ambient_dim
            buckets: list[set[Key]] = [set() for _ in range(self.dim + 1)]
            for f in self.facets:
                zeros = bits(f.zeros)
                for key in all_subface_keys(f.support, f.sign, zeros):
                    buckets[_key_dim(n, key)].add(key)
            self._cache["faces"] = [frozenset(b) for b in buckets]
        return self._cache["faces"]

    def has_face(self, face: SignVector) -> bool:
        if face.dim > self.dim:
            return False
        return face.key in self.faces_by_dim()[face.dim]

    def __contains__(self, face: SignVector) -> bool:
        return face in self.facets

    def __len__(self) -> int:
        return len(self.facets)


def mirror_keys(delta: SimplicialComplex) -> list[Key]:
    n = delta.n_vertices
    out = []
    for phi in delta.facets:
        support = full_mask(n) & ~phi
        sub = support
        while True:
            out.append((support, sub))
            if sub == 0:
                break
            sub = (sub - 1) & support
    return out


def mirror_complex(delta: SimplicialComplex) -> CubicalComplex:
    """All sign vectors whose absolute value is a complement-encoded facet."""
    if delta.n_vertices > 64:
        raise ValueError("mirror complex needs at most 64 vertices")
    if delta.n_vertices < 1 or not delta.facets:
        raise ValueError("mirror complex of an empty complex")
    return CubicalComplex.from_keys(delta.n_vertices, mirror_keys(delta))


def f_vector_cubical(c: CubicalComplex) -> FVector:
    return FVector(tuple(len(b) for b in c.faces_by_dim()))


def ridge_incidence(c: CubicalComplex) -> dict[Key, list[Key]]:
    """Map from each codimension-one face of a facet to the facets containing it."""
    inc: dict[Key, list[Key]] = {}
    n = c.ambient_dim
    for key in c.keys():
        for r in cube_ridges(n, key):
            inc.setdefault(r, []).append(key)
    return inc


def boundary_cubical(c: CubicalComplex) -> CubicalComplex:
    if c.pure_dim is None and c.facets:
        raise ValueError("boundary requires a pure complex")
    inc = ridge_incidence(c)
    return CubicalComplex.from_keys(c.ambient_dim, (r for r, fs in inc.items() if len(fs) == 1))


def skeleton_size(n: int, k: int) -> int:
    """Number of k-faces of the n-cube."""
    return comb(n, k) * 2 ** (n - k)


def is_cubically_k_neighborly(c: CubicalComplex, k: int) -> bool:
    """True iff the complex contains the whole (k-1)-skeleton of its cube."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if k - 1 > c.dim:
        return False
    return len(c.faces_by_dim()[k - 1]) == skeleton_size(c.ambient_dim, k - 1)


def cubical_neighborliness(c: CubicalComplex) -> int:
    k = 0
    while k <= c.dim and is_cubically_k_neighborly(c, k + 1):
        k += 1
    return k


def fissure(
    c: CubicalComplex,
    c1: CubicalComplex,
    c2: CubicalComplex | None = None,
    *,
    strict: bool = True,
) -> CubicalComplex:
    """Lift ``c1`` to +1, drop ``c2`` to -1 in a new last coordinate, and fill
    the gap with a prism over their shared ridges.

    ``c2`` defaults to the complement of ``c1`` in ``c``.  With ``strict`` the
    parts must be facet-disjoint, cover ``c`` and lie inside it.
    """
    d = c.pure_dim
    if d is None:
        raise ValueError("fissure requires a pure complex")
    n = c.ambient_dim
    all_keys = c.keys()
    k1 = c1.keys()
    k2 = (all_keys - k1) if c2 is None else c2.keys()
    if c1.ambient_dim != n or (c2 is not None and c2.ambient_dim != n):
        raise ValueError("parts must share the ambient cube of the complex")
    if strict:
        if k1 & k2:
            raise ValueError("parts are not facet-disjoint")
        if not (k1 <= all_keys and k2 <= all_keys):
            raise ValueError("parts are not sub-collections of the complex's facets")
        if (k1 | k2) != all_keys:
            raise ValueError("parts do not cover the complex")
    if not k1 or not k2:
        warnings.warn("degenerate fissure: one side is empty", stacklevel=2)

    r1 = {r for key in k1 for r in cube_ridges(n, key)}
    common = {r for key in k2 for r in cube_ridges(n, key) if r in r1}
    if not common and k1 and k2:
        warnings.warn("degenerate fissure: parts share no ridge", stacklevel=2)
    top = 1 << n
    out = [(s | top, g) for s, g in k1]
    out += [(s | top, g | top) for s, g in k2]
    out += list(common)
    return CubicalComplex.from_keys(n + 1, out)
