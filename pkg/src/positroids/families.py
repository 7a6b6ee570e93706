"""
Subsets of ``[m]`` as integer bit masks, and families of them.

Element ``x`` is bit ``x - 1``. Public functions take either a mask or any
iterable of positive integers.

>>> elements(mask({1, 4, 6}))
(1, 4, 6)
>>> prec_sort({1, 4}, PrecOrder(2))
[4, 1]
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DomainError

__all__ = [
    "mask", "as_mask", "elements", "size", "complement", "full",
    "SetFamily", "family", "PrecOrder", "prec_order", "prec_sort",
    "direct_sum", "z_segment", "diamond_leq", "diamond_leq_lexmin",
    "shift_set", "shift_family", "relabel",
]


def mask(xs: Iterable[int]) -> int:
    m = 0
    for x in xs:
        if x < 1:
            raise ValueError(f"subset elements must be positive, got {x}")
        m |= 1 << (x - 1)
    return m


def as_mask(I) -> int:
    if isinstance(I, int):
        if I < 0:
            raise ValueError("negative mask")
        return I
    return mask(I)


def elements(m: int) -> tuple[int, ...]:
    out = []
    x = 1
    while m:
        if m & 1:
            out.append(x)
        m >>= 1
        x += 1
    return tuple(out)


def size(m: int) -> int:
    return bin(m).count("1")


def full(m: int) -> int:
    """Mask of the whole ground set ``[m]``."""
    return (1 << m) - 1


def complement(I, ground: int) -> int:
    return full(ground) & ~as_mask(I)


def relabel(I, images: dict[int, int] | tuple[int, ...]) -> int:
    """Image of a subset under ``x -> images[x]`` (a tuple is read one-indexed)."""
    if isinstance(images, tuple):
        return mask(images[x - 1] for x in elements(as_mask(I)))
    return mask(images[x] for x in elements(as_mask(I)))


@dataclass(frozen=True)
class SetFamily:
    """A set of subsets of the ground set ``[ground]``."""

    ground: int
    members: frozenset[int]

    def __post_init__(self):
        limit = 1 << self.ground
        for m in self.members:
            if m >= limit:
                raise ValueError(f"{elements(m)} is not inside [1, {self.ground}]")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted_masks())

    def __contains__(self, I) -> bool:
        return as_mask(I) in self.members

    def __or__(self, other: "SetFamily") -> "SetFamily":
        return SetFamily(max(self.ground, other.ground), self.members | other.members)

    def __and__(self, other: "SetFamily") -> "SetFamily":
        return SetFamily(max(self.ground, other.ground), self.members & other.members)

    def __le__(self, other: "SetFamily") -> bool:
        return self.members <= other.members

    def __lt__(self, other: "SetFamily") -> bool:
        return self.members < other.members

    def sorted_masks(self) -> list[int]:
        return sorted(self.members, key=lambda m: elements(m))

    def sets(self) -> list[tuple[int, ...]]:
        """Members as sorted tuples, in canonical (lexicographic) order."""
        return sorted(elements(m) for m in self.members)

    def rank(self) -> int:
        sizes = {size(m) for m in self.members}
        if len(sizes) > 1:
            raise ValueError("members have different sizes")
        return sizes.pop() if sizes else 0

    def map(self, f) -> "SetFamily":
        return SetFamily(self.ground, frozenset(f(m) for m in self.members))

    def to_json(self) -> str:
        return json.dumps([list(s) for s in self.sets()])

    @classmethod
    def from_json(cls, text: str, ground: int) -> "SetFamily":
        return family(json.loads(text), ground)

    def satisfies_basis_exchange(self) -> bool:
        """For all bases ``B1, B2`` and ``x`` in ``B1 - B2`` some ``y`` in ``B2 - B1`` exchanges."""
        ms = self.members
        for b1 in ms:
            for b2 in ms:
                diff = b1 & ~b2
                while diff:
                    xbit = diff & -diff
                    diff ^= xbit
                    rest = b1 ^ xbit
                    cand = b2 & ~b1
                    ok = False
                    while cand:
                        ybit = cand & -cand
                        cand ^= ybit
                        if rest | ybit in ms:
                            ok = True
                            break
                    if not ok:
                        return False
        return True


def family(sets: Iterable, ground: int) -> SetFamily:
    return SetFamily(ground, frozenset(as_mask(s) for s in sets))


@dataclass(frozen=True)
class PrecOrder:
    """
    The total order ``n+1 < n < n+2 < n-1 < ... < 2n < 1`` on ``[2n]``.

    ``rank[x]`` is the one-based position of ``x``.
    """

    n: int

    @property
    def sequence(self) -> tuple[int, ...]:
        return _prec_sequence(self.n)

    @property
    def rank(self) -> dict[int, int]:
        return _prec_rank(self.n)

    def key(self, x: int) -> int:
        return self.rank[x]


@lru_cache(maxsize=None)
def _prec_sequence(n: int) -> tuple[int, ...]:
    seq: list[int] = []
    for t in range(1, n + 1):
        seq += [n + t, n - t + 1]
    return tuple(seq)


@lru_cache(maxsize=None)
def _prec_rank(n: int) -> dict[int, int]:
    return {x: i for i, x in enumerate(_prec_sequence(n), 1)}


def prec_order(n: int) -> PrecOrder:
    return PrecOrder(n)


def prec_sort(I, order: PrecOrder) -> list[int]:
    return sorted(elements(as_mask(I)), key=order.key)


def direct_sum(F: SetFamily, G: SetFamily) -> SetFamily:
    """All unions ``I | J``; every pair must be disjoint."""
    out = set()
    for a in F.members:
        for b in G.members:
            if a & b:
                raise DomainError(
                    f"direct sum of overlapping sets {elements(a)} and {elements(b)}"
                )
            out.add(a | b)
    return SetFamily(max(F.ground, G.ground), frozenset(out))


def z_segment(X, j: int, n: int) -> int:
    """``{n-x_j+1, ..., n-x_1+1, n+x_1, ..., n+x_j}`` for the ``j`` smallest ``x_i`` in ``X``."""
    xs = elements(as_mask(X))
    if not 1 <= j <= len(xs):
        raise ValueError(f"j = {j} out of range for a set of size {len(xs)}")
    if xs[-1] > n:
        raise ValueError(f"X must lie inside [1, {n}]")
    head = xs[:j]
    return mask([n - x + 1 for x in head] + [n + x for x in head])


def diamond_leq(I, J, order: PrecOrder) -> bool:
    """``J & I == J & [max(I)]``, the initial segment taken in ``order``."""
    a, b = as_mask(I), as_mask(J)
    if size(a) != size(b):
        raise ValueError("diamond order compares sets of equal size")
    if not a:
        return True
    rank = order.rank
    top = max(rank[x] for x in elements(a))
    segment = mask(x for x in order.sequence[:top])
    return b & a == b & segment


def diamond_leq_lexmin(I, J, order: PrecOrder) -> bool:
    """Direct form: ``I`` is the lexicographically least ``#I``-subset of ``I | J``."""
    a, b = as_mask(I), as_mask(J)
    if size(a) != size(b):
        raise ValueError("diamond order compares sets of equal size")
    least = sorted(elements(a | b), key=order.key)[: size(a)]
    return mask(least) == a


def shift_set(i: int, j: int, I) -> int:
    m = as_mask(I)
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    if m & bi and not m & bj:
        return m ^ bi ^ bj
    return m


def shift_family(i: int, j: int, X: SetFamily) -> SetFamily:
    """Move ``i`` to ``j`` in every member unless the result is already present."""
    if i == j:
        raise ValueError("shift needs distinct elements")
    out = set()
    for m in X.members:
        s = shift_set(i, j, m)
        out.add(s if s != m and s not in X.members else m)
    return SetFamily(max(X.ground, i, j), frozenset(out))
