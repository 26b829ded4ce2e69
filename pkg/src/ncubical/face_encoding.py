"""Bit-packed encodings for cube faces and simplicial faces.

A non-empty face of the n-cube is a sign vector in {-1, 0, +1}^n.  It is
stored as two n-bit masks: ``support`` (bit i set iff entry i is nonzero)
and ``sign`` (bit i set iff entry i is -1).  Sign bits outside the support
are always cleared, so two faces are equal iff their mask pairs are equal.

Text form uses ``+``, ``-`` and ``0`` with coordinate 1 leftmost, i.e. the
character at string index i describes bit i.

Simplicial faces are vertex masks.  The complement encoding of a face is
the 0/1 vector of the vertices *not* in it, so zeros mark members.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

MAX_DIM = 64

_CHARS = {"+": 1, "-": -1, "0": 0}


def full_mask(n: int) -> int:
    return (1 << n) - 1


def bits(mask: int) -> list[int]:
    """Positions of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _check_dim(n: int) -> None:
    if not 1 <= n <= MAX_DIM:
        raise ValueError(f"ambient dimension must be in 1..{MAX_DIM}, got {n}")


@dataclass(frozen=True, slots=True)
class SignVector:
    """A face of the ``n``-cube; dimension is the number of zero entries."""

    n: int
    support: int
    sign: int = 0

    def __post_init__(self) -> None:
        _check_dim(self.n)
        full = full_mask(self.n)
        if self.support & ~full:
            raise ValueError("support mask has bits beyond the ambient dimension")
        object.__setattr__(self, "sign", self.sign & self.support)

    @classmethod
    def from_entries(cls, entries: Sequence[int]) -> SignVector:
        support = sign = 0
        for i, e in enumerate(entries):
            if e == 0:
                continue
            if e not in (1, -1):
                raise ValueError(f"sign vector entries must be -1, 0 or +1, got {e!r}")
            support |= 1 << i
            if e < 0:
                sign |= 1 << i
        return cls(len(entries), support, sign)

    @classmethod
    def parse(cls, text: str) -> SignVector:
        text = text.strip()
        try:
            return cls.from_entries([_CHARS[c] for c in text])
        except KeyError as exc:
            raise ValueError(f"invalid character {exc.args[0]!r} in sign vector {text!r}") from None

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(self[i] for i in range(self.n))

    def __getitem__(self, i: int) -> int:
        if not (self.support >> i) & 1:
            return 0
        return -1 if (self.sign >> i) & 1 else 1

    def __str__(self) -> str:
        return "".join("0+-"[e] for e in self.entries)

    def __repr__(self) -> str:
        return f"SignVector('{self}')"

    @property
    def zeros(self) -> int:
        """Mask of the zero entries (the free coordinates)."""
        return full_mask(self.n) & ~self.support

    @property
    def dim(self) -> int:
        return self.n - popcount(self.support)

    @property
    def key(self) -> tuple[int, int]:
        return (self.support, self.sign)

    def absolute(self) -> int:
        """|v| as a 0/1 vector, i.e. the support mask."""
        return self.support


def dim_of(f: SignVector) -> int:
    return f.dim


def is_subface(g: SignVector, f: SignVector) -> bool:
    """True iff ``g`` is a face of ``f``: g agrees with f wherever f is nonzero."""
    if g.n != f.n:
        raise ValueError(f"ambient dimension mismatch: {g.n} != {f.n}")
    return (g.support & f.support) == f.support and (g.sign & f.support) == f.sign


def subface_keys(support: int, sign: int, zeros: Sequence[int], k: int) -> Iterator[tuple[int, int]]:
    """Mask pairs of the k-faces of the face (support, sign) with free coordinates ``zeros``."""
    for fixed in combinations(zeros, len(zeros) - k):
        add = 0
        for i in fixed:
            add |= 1 << i
        for signs in range(1 << len(fixed)):
            neg = 0
            for j, i in enumerate(fixed):
                if (signs >> j) & 1:
                    neg |= 1 << i
            yield support | add, sign | neg


def all_subface_keys(support: int, sign: int, zeros: Sequence[int]) -> Iterator[tuple[int, int]]:
    """Every non-empty face of a cube face, as mask pairs (3^dim of them)."""
    for choice in product((0, 1, 2), repeat=len(zeros)):
        s, g = support, sign
        for i, c in zip(zeros, choice):
            if c:
                s |= 1 << i
                if c == 2:
                    g |= 1 << i
        yield s, g


def subfaces(f: SignVector, k: int) -> set[SignVector]:
    """All k-dimensional faces of ``f``."""
    if not 0 <= k <= f.dim:
        raise ValueError(f"k must be in 0..{f.dim}, got {k}")
    return {SignVector(f.n, s, g) for s, g in subface_keys(f.support, f.sign, bits(f.zeros), k)}


def sign_flip(f: SignVector, eps: Sequence[int] | SignVector) -> SignVector:
    """Entry-wise product with a +-1 vector (a reflection of the cube)."""
    if isinstance(eps, SignVector):
        if eps.n != f.n or eps.support != full_mask(f.n):
            raise ValueError("flip vector must be a vertex of the same cube")
        neg = eps.sign
    else:
        if len(eps) != f.n:
            raise ValueError(f"length mismatch: {len(eps)} != {f.n}")
        neg = 0
        for i, e in enumerate(eps):
            if e not in (1, -1):
                raise ValueError("flip vector entries must be +-1")
            if e < 0:
                neg |= 1 << i
    return SignVector(f.n, f.support, f.sign ^ (neg & f.support))


# -- simplicial faces -------------------------------------------------------


@dataclass(frozen=True, slots=True)
class VertexSet:
    """A subset of {0, ..., n-1} stored as a bit mask."""

    n: int
    members: int

    def __post_init__(self) -> None:
        _check_dim(self.n)
        if self.members & ~full_mask(self.n):
            raise ValueError("vertex set has members outside 0..n-1")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> VertexSet:
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} outside 0..{n - 1}")
            mask |= 1 << v
        return cls(n, mask)

    def __iter__(self) -> Iterator[int]:
        return iter(bits(self.members))

    def __len__(self) -> int:
        return popcount(self.members)


def complement_encode(s: VertexSet) -> str:
    """0/1 string whose i-th character is 1 iff vertex i is *not* in ``s``."""
    return "".join("0" if (s.members >> i) & 1 else "1" for i in range(s.n))


def complement_decode(text: str) -> VertexSet:
    text = text.strip()
    if not text or set(text) - {"0", "1"}:
        raise ValueError(f"not a 0/1 vector: {text!r}")
    return VertexSet(len(text), sum(1 << i for i, c in enumerate(text) if c == "0"))
