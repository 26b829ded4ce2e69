"""Topological and combinatorial checks on simplicial and cubical complexes."""

from __future__ import annotations

from collections import deque
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Iterable, Sequence, Union

from .cubical import (
    CubicalComplex,
    cube_ridges,
    cubical_neighborliness,
    f_vector_cubical,
)
from .face_encoding import SignVector, bits, full_mask, popcount
from .simplicial import (
    FVector,
    SimplicialComplex,
    f_vector_simplicial,
    neighborliness,
    ridges_of,
)

Complex = Union[SimplicialComplex, CubicalComplex]

DEFAULT_HOMOLOGY_CAP = 1 << 20


class BudgetExceeded(RuntimeError):
    """The isomorphism search ran out of nodes before reaching a verdict."""


@dataclass
class VerificationReport:
    euler: int
    is_pure: bool
    is_closed_pseudomanifold: bool
    is_strongly_connected: bool
    f_vector: tuple[int, ...]
    neighborliness: int
    betti_z2: tuple[int, ...] | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def euler_characteristic(fv: FVector | Sequence[int]) -> int:
    return sum((-1) ** i * c for i, c in enumerate(fv))


def f_vector(c: Complex) -> FVector:
    if isinstance(c, CubicalComplex):
        return f_vector_cubical(c)
    return f_vector_simplicial(c)


def _facet_ridges(c: Complex) -> Iterable[tuple[object, list]]:
    if isinstance(c, CubicalComplex):
        n = c.ambient_dim
        return ((key, cube_ridges(n, key)) for key in c.keys())
    return ((f, ridges_of(f)) for f in c.facets)


def closed_pseudomanifold_check(c: Complex) -> tuple[bool, bool]:
    """(every ridge lies in exactly two facets, facet-ridge graph is connected)."""
    if c.pure_dim is None and len(c.facets) > 0:
        raise ValueError("pseudomanifold check requires a pure complex")
    incidence: dict[object, list] = {}
    facets = []
    for f, ridges in _facet_ridges(c):
        facets.append(f)
        for r in ridges:
            incidence.setdefault(r, []).append(f)
    closed = bool(facets) and all(len(fs) == 2 for fs in incidence.values())

    if not facets:
        return closed, False
    adj: dict[object, list] = {f: [] for f in facets}
    for fs in incidence.values():
        for a, b in combinations(fs, 2):
            adj[a].append(b)
            adj[b].append(a)
    seen = {facets[0]}
    queue = deque([facets[0]])
    while queue:
        f = queue.popleft()
        for g in adj[f]:
            if g not in seen:
                seen.add(g)
                queue.append(g)
    return closed, len(seen) == len(facets)


def vertex_link(c: CubicalComplex, v: SignVector) -> SimplicialComplex:
    """Simplicial complex on coordinate labels spanned by the zero sets of the
    facets through vertex ``v``."""
    if v.n != c.ambient_dim or v.support != full_mask(v.n):
        raise ValueError(f"{v} is not a vertex of the {c.ambient_dim}-cube")
    facets = [f.zeros for f in c.facets if (v.sign & f.support) == f.sign]
    if not facets:
        raise ValueError(f"{v} is not a vertex of the complex")
    return SimplicialComplex(c.ambient_dim, frozenset(facets))


def edge_figure(c: CubicalComplex, e: SignVector) -> SimplicialComplex:
    """Simplicial complex of the facets through edge ``e``.

    Labels are the coordinates other than the free coordinate of ``e``,
    renumbered consecutively.
    """
    if e.n != c.ambient_dim or e.dim != 1:
        raise ValueError(f"{e} is not an edge of the {c.ambient_dim}-cube")
    free = e.zeros
    (j,) = bits(free)
    low = full_mask(j)
    facets = []
    for f in c.facets:
        if (f.support & e.support) == f.support and (e.sign & f.support) == f.sign:
            rest = f.zeros & ~free
            facets.append((rest & low) | ((rest >> (j + 1)) << j))
    if not facets:
        raise ValueError(f"{e} is not an edge of the complex")
    return SimplicialComplex(c.ambient_dim - 1, frozenset(facets))


# -- Z/2 homology -------------------------------------------------------------


def gf2_rank(rows: list[int]) -> int:
    """Rank over the two-element field of rows given as int bitsets."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            low = row.bit_length() - 1
            p = pivots.get(low)
            if p is None:
                pivots[low] = row
                rank += 1
                break
            row ^= p
    return rank


def _faces_by_dim(c: Complex) -> list[list]:
    if isinstance(c, CubicalComplex):
        return [sorted(b) for b in c.faces_by_dim()]
    out: list[list[int]] = [[] for _ in range(c.dim + 1)]
    for f in c.faces():
        if f:
            out[popcount(f) - 1].append(f)
    return [sorted(b) for b in out]


def _face_boundary(c: Complex, face) -> list:
    if isinstance(c, CubicalComplex):
        return cube_ridges(c.ambient_dim, face)
    return ridges_of(face)


def z2_betti(c: Complex, cap: int = DEFAULT_HOMOLOGY_CAP) -> tuple[int, ...]:
    """Betti numbers over Z/2 from the ranks of the boundary matrices."""
    fv = f_vector(c)
    if sum(fv) > cap:
        raise ValueError(f"complex has {sum(fv)} faces, above the homology cap {cap}")
    levels = _faces_by_dim(c)
    index = [{f: i for i, f in enumerate(level)} for level in levels]
    ranks = [0] * (len(levels) + 1)
    for k in range(1, len(levels)):
        rows = []
        for face in levels[k]:
            row = 0
            for r in _face_boundary(c, face):
                row |= 1 << index[k - 1][r]
            rows.append(row)
        ranks[k] = gf2_rank(rows)
    return tuple(len(levels[k]) - ranks[k] - ranks[k + 1] for k in range(len(levels)))


# -- isomorphism --------------------------------------------------------------


def _vertex_profile(c: SimplicialComplex) -> tuple[dict[int, tuple], dict[tuple[int, int], int]]:
    deg: dict[int, list[int]] = {v: [] for v in range(c.n_vertices)}
    pair: dict[tuple[int, int], int] = {}
    for f in c.facets:
        vs = bits(f)
        for v in vs:
            deg[v].append(len(vs))
        for a, b in combinations(vs, 2):
            pair[(a, b)] = pair.get((a, b), 0) + 1
    pair_deg: dict[int, list[int]] = {v: [] for v in range(c.n_vertices)}
    for (a, b), k in pair.items():
        pair_deg[a].append(k)
        pair_deg[b].append(k)
    prof = {v: (tuple(sorted(deg[v])), tuple(sorted(pair_deg[v]))) for v in range(c.n_vertices)}
    return prof, pair


def complexes_isomorphic(
    a: SimplicialComplex,
    b: SimplicialComplex,
    *,
    max_vertices: int = 16,
    budget: int = 1_000_000,
) -> bool:
    """Decide whether some vertex bijection maps the facets of ``a`` onto those of ``b``.

    Vertices are refined by their facet-size and co-occurrence profiles, then
    matched by backtracking.  Raises :class:`BudgetExceeded` rather than
    guessing when the search is cut off.
    """
    if max(a.n_vertices, b.n_vertices) > max_vertices:
        raise ValueError(f"isomorphism test is limited to {max_vertices} vertices")
    if a.n_vertices != b.n_vertices or len(a.facets) != len(b.facets):
        return False
    if sorted(map(popcount, a.facets)) != sorted(map(popcount, b.facets)):
        return False
    pa, pair_a = _vertex_profile(a)
    pb, pair_b = _vertex_profile(b)
    if sorted(pa.values()) != sorted(pb.values()):
        return False

    order = sorted(range(a.n_vertices), key=lambda v: (-len(pa[v][0]), pa[v]))
    candidates = {v: [w for w in range(b.n_vertices) if pb[w] == pa[v]] for v in order}
    facets_b = b.facets
    # facets of a that become fully mapped once vertex order[i] is assigned
    pos = {v: i for i, v in enumerate(order)}
    closing: list[list[int]] = [[] for _ in order]
    for f in a.facets:
        closing[max(pos[v] for v in bits(f))].append(f)

    mapping: dict[int, int] = {}
    used: set[int] = set()
    nodes = 0

    def image(f: int) -> int:
        m = 0
        for v in bits(f):
            m |= 1 << mapping[v]
        return m

    def extend(i: int) -> bool:
        nonlocal nodes
        if i == len(order):
            return True
        v = order[i]
        for w in candidates[v]:
            if w in used:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"isomorphism search exceeded {budget} nodes")
            ok = True
            for u, x in mapping.items():
                ka = pair_a.get((min(u, v), max(u, v)), 0)
                kb = pair_b.get((min(x, w), max(x, w)), 0)
                if ka != kb:
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if all(image(f) in facets_b for f in closing[i]) and extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return extend(0)


# -- reports ------------------------------------------------------------------


def verify_complex(
    c: Complex,
    *,
    homology: bool = False,
    links: bool = False,
    homology_cap: int = DEFAULT_HOMOLOGY_CAP,
) -> VerificationReport:
    fv = f_vector(c)
    pure = c.pure_dim is not None
    closed, connected = closed_pseudomanifold_check(c) if pure else (False, False)
    if isinstance(c, CubicalComplex):
        nb = cubical_neighborliness(c)
    else:
        nb = neighborliness(c)
    report = VerificationReport(
        euler=euler_characteristic(fv),
        is_pure=pure,
        is_closed_pseudomanifold=closed,
        is_strongly_connected=connected,
        f_vector=tuple(fv),
        neighborliness=nb,
    )
    if homology:
        try:
            report.betti_z2 = z2_betti(c, homology_cap)
        except ValueError as exc:
            report.notes.append(f"homology skipped: {exc}")
        else:
            if euler_characteristic(report.betti_z2) != report.euler:
                report.notes.append("betti numbers disagree with the Euler characteristic")
    if links and isinstance(c, CubicalComplex) and pure:
        bad = 0
        d = c.pure_dim
        sphere_euler = 1 + (-1) ** (d - 1)
        for key in c.faces_by_dim()[0]:
            link = vertex_link(c, SignVector(c.ambient_dim, *key))
            lc, ls = closed_pseudomanifold_check(link)
            if not (lc and ls and f_vector_simplicial(link).euler == sphere_euler):
                bad += 1
        report.notes.append(f"vertex links failing the sphere checks: {bad}")
    return report


def is_sphere_like(report: VerificationReport, d: int) -> bool:
    """Euler characteristic, closedness and connectivity of a d-sphere."""
    return (
        report.euler == 1 + (-1) ** d
        and report.is_closed_pseudomanifold
        and report.is_strongly_connected
    )


__all__ = [
    "BudgetExceeded",
    "VerificationReport",
    "closed_pseudomanifold_check",
    "complexes_isomorphic",
    "edge_figure",
    "euler_characteristic",
    "gf2_rank",
    "is_sphere_like",
    "verify_complex",
    "vertex_link",
    "z2_betti",
]
