"""Cubical spheres from BBC sequences of simplicial balls.

A sequence ``T_d, ..., T_{n-1}`` of simplicial (d-1)-balls is indexed so that
``T_i`` lives on the vertices ``0..i-1`` and every facet of ``T_i`` contains
the apex ``i-1``.  Removing the apex gives ``B_{i-1}``, which must consist of
facets of the boundary of ``T_{i-1}``.  The first ball is the full simplex.

Two independent routes produce the cubical d-sphere on ``2^n`` vertices:
repeated fissuring of the boundary of the (d+1)-cube, and a direct
enumeration of three facet families classified by trailing nonzeros.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .cubical import CubicalComplex, Key, fissure, mirror_complex
from .face_encoding import SignVector, bits, full_mask, popcount
from .simplicial import SimplicialComplex, boundary_complex, pulling_triangulation_cyclic


class BBCError(ValueError):
    """A violated sequence condition, tagged with a code and ball index."""

    def __init__(self, code: str, index: int, detail: str = "") -> None:
        self.code = code
        self.index = index
        msg = f"{code}({index})"
        super().__init__(f"{msg}: {detail}" if detail else msg)


@dataclass(frozen=True)
class BBCSequence:
    d: int
    n: int
    balls: tuple[SimplicialComplex, ...]

    def ball(self, i: int) -> SimplicialComplex:
        """The ball on ``i`` vertices, ``d <= i <= n-1``."""
        return self.balls[i - self.d]

    @cached_property
    def boundaries(self) -> tuple[SimplicialComplex, ...]:
        return tuple(boundary_complex(t) for t in self.balls)

    def boundary(self, i: int) -> SimplicialComplex:
        return self.boundaries[i - self.d]

    def link_ball(self, i: int) -> SimplicialComplex:
        """``B_{i-1}``: facets of ``T_i`` with the apex removed, on ``i-1`` vertices."""
        apex = 1 << (i - 1)
        return SimplicialComplex(i - 1, frozenset(f & ~apex for f in self.ball(i).facets))


def validate_bbc(balls: Sequence[SimplicialComplex], d: int | None = None, n: int | None = None) -> BBCSequence:
    """Check the sequence conditions and return the validated sequence.

    Raises :class:`BBCError` naming the first violated condition.
    """
    if not balls:
        raise ValueError("empty sequence")
    if d is None:
        d = balls[0].n_vertices
    if n is None:
        n = d + len(balls)
    if len(balls) != n - d:
        raise ValueError(f"expected {n - d} balls for d={d}, n={n}, got {len(balls)}")
    if d < 2:
        raise ValueError("d must be at least 2")

    for offset, t in enumerate(balls):
        i = d + offset
        if t.n_vertices != i or (t.facets and max(t.facets).bit_length() > i):
            raise BBCError("WRONG_VERTEX_RANGE", i, f"ball has {t.n_vertices} vertices, expected {i}")
        if not t.facets or any(popcount(f) != d for f in t.facets):
            raise BBCError("NOT_PURE", i, f"every facet must have {d} vertices")
        apex = 1 << (i - 1)
        missing = [f for f in t.facets if not f & apex]
        if missing:
            raise BBCError("APEX_MISSING", i, f"facet {bits(missing[0])} lacks vertex {i - 1}")
        if offset == 0:
            if t.facets != {full_mask(d)}:
                raise BBCError("NOT_PURE", i, "the first ball must be the full simplex")
            continue
        prev_boundary = boundary_complex(balls[offset - 1]).facets
        for f in t.facets:
            if f & ~apex not in prev_boundary:
                raise BBCError("B_NOT_IN_BOUNDARY", i, f"{bits(f & ~apex)} is not a boundary facet of the previous ball")
    return BBCSequence(d, n, tuple(balls))


def bbc_from_cyclic(d: int, n: int) -> BBCSequence:
    """Pulling triangulations of the cyclic (d-1)-polytopes on d..n-1 vertices."""
    if not n > d >= 3:
        raise ValueError(f"need n > d >= 3, got d={d}, n={n}")
    balls = [pulling_triangulation_cyclic(d - 1, i) for i in range(d, n)]
    try:
        return validate_bbc(balls, d, n)
    except BBCError as exc:  # pragma: no cover - would be a bug in the generator
        raise RuntimeError(f"cyclic pulling sequence failed validation: {exc}") from exc


def _check_dims(seq: BBCSequence) -> None:
    if not seq.n > seq.d > 2:
        raise ValueError(f"construction needs n > d > 2, got d={seq.d}, n={seq.n}")


def build_inductive(seq: BBCSequence) -> CubicalComplex:
    """Start from the boundary of the (d+1)-cube and fissure along each mirrored ball."""
    _check_dims(seq)
    s = CubicalComplex.cube_boundary(seq.d + 1)
    for k in range(seq.d + 2, seq.n + 1):
        m = mirror_complex(seq.ball(k - 1))
        if not m.keys() <= s.keys():
            raise AssertionError(f"mirror of ball {k - 1} is not a subcomplex of S_{k - 1}")
        s = fissure(s, m)
    return s


def _sign_assignments(support: int):
    sub = support
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & support


def direct_keys_by_type(seq: BBCSequence) -> dict[int, list[Key]]:
    """Facets of the sphere grouped by type (number of trailing nonzeros)."""
    _check_dims(seq)
    d, n = seq.d, seq.n
    out: dict[int, list[Key]] = {}

    # type 0: last entry zero, prefix mirrors a boundary facet of T_{n-1}
    fam = []
    for r in seq.boundary(n - 1).facets:
        support = full_mask(n - 1) & ~r
        fam.extend((support, g) for g in _sign_assignments(support))
    out[0] = fam

    for t in range(1, n - d):
        m = n - t - 1
        tail = full_mask(n) & ~full_mask(m + 1)  # positions m+1 .. n-1
        neg_tail = tail & ~(1 << (m + 1))  # positions after sigma are -1
        ball = seq.ball(m + 1).facets
        fam = []
        for r in seq.boundary(m).facets:
            prefix = full_mask(m) & ~r
            sigma_neg = 0 if (r | (1 << m)) in ball else 1 << (m + 1)
            for g in _sign_assignments(prefix):
                fam.append((prefix | tail, g | neg_tail | sigma_neg))
        out[t] = fam

    t = n - d
    tail = full_mask(n) & ~full_mask(d)
    neg_tail = tail & ~(1 << d)
    out[t] = [(tail, neg_tail), (tail, neg_tail | (1 << d))]
    return out


def build_direct(seq: BBCSequence) -> CubicalComplex:
    """Enumerate the facets directly, without any fissuring."""
    keys = [k for fam in direct_keys_by_type(seq).values() for k in fam]
    if len(keys) != len(set(keys)):
        raise AssertionError("facet families overlap")
    return CubicalComplex.from_keys(seq.n, keys)


def facet_type(alpha: SignVector, d: int) -> int:
    """Number of trailing nonzero entries of a facet with ``d`` zeros."""
    if alpha.dim != d:
        raise ValueError(f"{alpha} has {alpha.dim} zeros, expected {d}")
    t = 0
    for i in range(alpha.n - 1, -1, -1):
        if not (alpha.support >> i) & 1:
            break
        t += 1
    return t


def type_counts(c: CubicalComplex, d: int) -> dict[int, int]:
    return dict(sorted(Counter(facet_type(f, d) for f in c.facets).items(), reverse=True))
