"""Neighborly cubical polytope boundaries and their facet counts.

All arithmetic is exact: binomials are integers and the closed forms are
evaluated with :class:`fractions.Fraction`, asserting integrality.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

from .cubical import CubicalComplex, Key
from .face_encoding import SignVector, full_mask
from .simplicial import gale_even


def _check(n: int, d: int) -> None:
    if not n > d >= 3:
        raise ValueError(f"need n > d >= 3, got n={n}, d={d}")


def _alternating_prefix(t: int) -> int:
    """Sign mask of the prefix -1, +1, -1, ... on positions 0..t-2."""
    return sum(1 << p for p in range(0, t - 1, 2))


def _sign_assignments(support: int):
    sub = support
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & support


def _leading_members(members: int, length: int) -> int:
    count = 0
    while count < length and (members >> count) & 1:
        count += 1
    return count


def cge_keys_by_type(n: int, d: int) -> dict[int, list[Key]]:
    """Facets with ``d`` zeros grouped by the number of leading nonzeros."""
    _check(n, d)
    full = full_mask(n)
    out: dict[int, list[Key]] = {}

    fam = []
    for combo in combinations(range(1, n), d - 1):
        zeros = 1 | sum(1 << i for i in combo)
        if gale_even(zeros, n):
            support = full & ~zeros
            fam.extend((support, g) for g in _sign_assignments(support))
    out[0] = fam

    for t in range(1, n - d):
        prefix_support = full_mask(t)
        prefix_sign = _alternating_prefix(t)
        sigma_bit = 1 << (t - 1)
        shift = t + 1
        length = n - t - 1
        # sigma = (-1)^(t+1) goes with an even run of leading zeros
        sigma_even_neg = (t + 1) % 2 == 1
        fam = []
        for combo in combinations(range(length), d - 1):
            zeros = sum(1 << i for i in combo)
            if not gale_even(zeros, length):
                continue
            lead_even = _leading_members(zeros, length) % 2 == 0
            neg_sigma = sigma_even_neg if lead_even else not sigma_even_neg
            suffix = (full_mask(length) & ~zeros) << shift
            base_sign = prefix_sign | (sigma_bit if neg_sigma else 0)
            for g in _sign_assignments(suffix):
                fam.append((prefix_support | suffix, base_sign | g))
        out[t] = fam

    t = n - d
    prefix_sign = _alternating_prefix(t)
    out[t] = [(full_mask(t), prefix_sign), (full_mask(t), prefix_sign | (1 << (t - 1)))]
    return out


def cge_facets(n: int, d: int) -> CubicalComplex:
    """Boundary of the neighborly cubical (d+1)-polytope with 2^n vertices."""
    keys = [k for fam in cge_keys_by_type(n, d).values() for k in fam]
    if len(keys) != len(set(keys)):
        raise AssertionError("facet families overlap")
    return CubicalComplex.from_keys(n, keys)


def leading_type(alpha: SignVector) -> int:
    t = 0
    while t < alpha.n and (alpha.support >> t) & 1:
        t += 1
    return t


def phi_map(alpha: SignVector) -> SignVector:
    """Reverse the coordinates, then negate every second one.

    With 1-based indices the j-th entry of the image is
    ``(-1)^(j+1) * alpha[n+1-j]``.
    """
    n = alpha.n
    support = sign = 0
    for j in range(n):
        src = n - 1 - j
        if not (alpha.support >> src) & 1:
            continue
        support |= 1 << j
        neg = (alpha.sign >> src) & 1
        if j % 2 == 1:
            neg ^= 1
        if neg:
            sign |= 1 << j
    return SignVector(n, support, sign)


def s_neighborly_sphere_facets(i: int, m: int) -> int:
    """Facets of a neighborly simplicial m-sphere on ``i`` vertices, m odd.

    Evaluated as ``2i / (2i - d + 1) * C(i - (d-1)/2, i + 1 - d)`` with
    ``d = m + 2``.
    """
    if m < 1 or m % 2 == 0:
        raise ValueError(f"sphere dimension must be odd and positive, got {m}")
    d = m + 2
    if i < d:
        raise ValueError(f"a neighborly {m}-sphere needs at least {d} vertices, got {i}")
    value = Fraction(2 * i, 2 * i - d + 1) * comb(i - (d - 1) // 2, i + 1 - d)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral facet count {value}")
    return int(value)


def ncp_facet_count(n: int, d: int) -> int:
    """Facets of a neighborly cubical d-sphere on 2^n vertices, d odd."""
    if d % 2 == 0:
        raise ValueError("closed form holds for odd d only; enumerate instead")
    if not n > d > 2:
        raise ValueError(f"need n > d > 2, got n={n}, d={d}")
    total = Fraction(2 * (d + 1))
    for k in range(d + 2, n + 1):
        total += Fraction(2 * k - 2, 2 * k - 1 - d) * comb(k - (d + 1) // 2, k - d) * 2 ** (k - d)
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral facet count {total}")
    return int(total)


def ncp_facet_count_by_spheres(n: int, d: int) -> int:
    """Same count, summed from the boundary sphere sizes of the sequence."""
    if d % 2 == 0:
        raise ValueError("closed form holds for odd d only")
    return 2 * (d + 1) + sum(
        s_neighborly_sphere_facets(n - t - 1, d - 2) * 2 ** (n - t - d) for t in range(n - d - 1)
    )
