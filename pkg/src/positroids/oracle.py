"""
Transversal matroids of generic matrices, given only by their support.

This is the ground truth the closed forms are checked against: ranks are
maximum bipartite matchings between rows and a set of columns, bases are the
full-rank column sets, and the Tutte polynomial comes straight from its
rank-generating definition.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Sequence

from .config import bounds, require
from .families import SetFamily, as_mask, complement, elements, full, mask, size
from .poly import BivariatePoly

__all__ = [
    "SupportPattern", "pattern_Mw", "rank_of", "rank_table", "enumerate_bases",
    "tutte_by_rank", "dual_family", "find_isomorphism", "shift_pattern",
]


@dataclass(frozen=True)
class SupportPattern:
    """
    ``rows[p]`` is the mask of columns where row ``p + 1`` has a generic entry.
    """

    rows: tuple[int, ...]
    cols: int

    def __post_init__(self):
        if not self.rows or self.cols <= 0:
            raise ValueError("pattern dimensions must be positive")
        if any(r >> self.cols for r in self.rows):
            raise ValueError("row support outside the column range")

    @property
    def n(self) -> int:
        return len(self.rows)

    def column(self, q: int) -> int:
        """Mask of rows (bit ``p - 1`` for row ``p``) that are nonzero in column ``q``."""
        bit = 1 << (q - 1)
        return mask(p for p, r in enumerate(self.rows, 1) if r & bit)

    def has_transversal(self) -> bool:
        return rank_of(self, full(self.cols)) == self.n

    def to_text(self) -> str:
        return "\n".join(
            " ".join("*" if r >> q & 1 else "0" for q in range(self.cols)) for r in self.rows
        )

    @classmethod
    def from_text(cls, text: str) -> "SupportPattern":
        rows, width = [], None
        for line in text.strip().splitlines():
            cells = line.replace("&", " ").split()
            if width is None:
                width = len(cells)
            elif len(cells) != width:
                raise ValueError("ragged support grid")
            rows.append(mask(q for q, c in enumerate(cells, 1) if c not in {"0", "."}))
        return cls(tuple(rows), width or 0)

    @classmethod
    def from_rows(cls, rows: Sequence, cols: int) -> "SupportPattern":
        return cls(tuple(as_mask(r) for r in rows), cols)


def pattern_Mw(w: Sequence[int]) -> SupportPattern:
    """Row ``i`` supported on the interval ``[w(i), n + i]`` of ``[2n]``."""
    n = len(w)
    return SupportPattern(
        tuple(mask(range(w[i - 1], n + i + 1)) for i in range(1, n + 1)), 2 * n
    )


def _augment(adj: Sequence[int], col: int, row_of: list[int], seen: int) -> tuple[bool, int]:
    # adj[q] = row mask of column q (0-based); row_of[p] = column matched to row p or -1
    cand = adj[col] & ~seen
    while cand:
        bit = cand & -cand
        cand ^= bit
        seen |= bit
        p = bit.bit_length() - 1
        if row_of[p] < 0:
            row_of[p] = col
            return True, seen
        ok, seen = _augment(adj, row_of[p], row_of, seen)
        if ok:
            row_of[p] = col
            return True, seen
    return False, seen


def _adjacency(S: SupportPattern) -> list[int]:
    adj = [0] * S.cols
    for p, r in enumerate(S.rows):
        for q in elements(r):
            adj[q - 1] |= 1 << p
    return adj


def rank_of(S: SupportPattern, I) -> int:
    """Size of a maximum matching between the rows and the columns in ``I``."""
    m = as_mask(I)
    if m >> S.cols:
        raise ValueError("column set outside the pattern")
    adj = _adjacency(S)
    row_of = [-1] * S.n
    r = 0
    for q in elements(m):
        ok, _ = _augment(adj, q - 1, row_of, 0)
        r += ok
        if r == S.n:
            break
    return r


def rank_table(S: SupportPattern) -> list[int]:
    """Ranks of all ``2^cols`` column subsets, indexed by mask."""
    require(S.cols, bounds().tutte_max_ground, "ground set size")
    adj = _adjacency(S)
    total = 1 << S.cols
    ranks = [0] * total
    states: list[tuple[int, ...] | None] = [None] * total
    states[0] = (-1,) * S.n
    for m in range(1, total):
        low = m & -m
        prev = m ^ low
        row_of = list(states[prev])
        ok, _ = _augment(adj, low.bit_length() - 1, row_of, 0)
        ranks[m] = ranks[prev] + ok
        states[m] = tuple(row_of)
    return ranks


def enumerate_bases(S: SupportPattern) -> SetFamily:
    """All ``n``-sets of columns admitting a full transversal."""
    require(S.n, bounds().enumerate_max_n, "number of rows")
    n, m = S.n, S.cols
    adj = _adjacency(S)
    out: set[int] = set()

    # extend only independent column sets; a dependent prefix cannot grow into a basis
    def grow(start: int, chosen: int, k: int, row_of: list[int]) -> None:
        if k == n:
            out.add(chosen)
            return
        for q in range(start, m - (n - k) + 1):
            trial = list(row_of)
            ok, _ = _augment(adj, q, trial, 0)
            if ok:
                grow(q + 1, chosen | 1 << q, k + 1, trial)

    if n <= m:
        grow(0, 0, 0, [-1] * n)
    return SetFamily(m, frozenset(out))


def tutte_by_rank(S: SupportPattern) -> BivariatePoly:
    """Sum of ``(x-1)^(r(E)-r(I)) (y-1)^(|I|-r(I))`` over all column sets."""
    ranks = rank_table(S)
    top = ranks[-1]
    counts: Counter[tuple[int, int]] = Counter()
    for m, r in enumerate(ranks):
        counts[(top - r, size(m) - r)] += 1
    return _expand_shifted(counts)


def _expand_shifted(counts: Counter) -> BivariatePoly:
    # sum of c * (x-1)^a * (y-1)^b, expanded binomially
    coeffs: dict[tuple[int, int], int] = {}
    for (a, b), c in counts.items():
        for i in range(a + 1):
            ca = comb(a, i) * (-1) ** (a - i)
            for j in range(b + 1):
                k = (i, j)
                coeffs[k] = coeffs.get(k, 0) + c * ca * comb(b, j) * (-1) ** (b - j)
    return BivariatePoly(coeffs)


def dual_family(B: SetFamily) -> SetFamily:
    if not B.members:
        raise ValueError("dual of an empty family")
    B.rank()
    return B.map(lambda m: complement(m, B.ground))


def shift_pattern(i: int, j: int, S: SupportPattern) -> SupportPattern:
    """
    Column shift ``i -> j``: in every row where column ``j`` is zero the entry
    of column ``i`` moves to column ``j``; other rows are untouched.
    """
    if i == j:
        raise ValueError("shift needs distinct columns")
    if not (1 <= i <= S.cols and 1 <= j <= S.cols):
        raise ValueError("column out of range")
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    rows = []
    for r in S.rows:
        if not r & bj and r & bi:
            r = r ^ bi ^ bj
        rows.append(r)
    return SupportPattern(tuple(rows), S.cols)


def find_isomorphism(B1: SetFamily, B2: SetFamily) -> tuple[int, ...] | None:
    """
    A bijection ``sigma`` of the ground set (one-line, one-indexed) carrying
    ``B1`` onto ``B2``, or ``None`` when none exists.

    Candidates are pruned by refined element colours (basis counts and pairwise
    co-occurrence counts); every basis of ``B1`` is checked as soon as all its
    elements are placed.
    """
    if B1.ground != B2.ground:
        raise ValueError("families live on different ground sets")
    g = B1.ground
    require(g, bounds().isomorphism_max_ground, "ground set size")
    if len(B1) != len(B2):
        return None
    if B1.members and B1.rank() != B2.rank():
        return None

    co1, co2 = _cooccurrence(B1), _cooccurrence(B2)
    col1, col2 = _refine(co1, co2)
    if sorted(col1) != sorted(col2):
        return None

    by_colour: dict[int, list[int]] = {}
    for f in range(g):
        by_colour.setdefault(col2[f], []).append(f)
    class_size = Counter(col1)
    order = _placement_order(co1, col1, class_size)
    pos = {e: k for k, e in enumerate(order)}

    # bases of B1 grouped by the step at which their last element is placed
    closing: list[list[int]] = [[] for _ in range(g)]
    for b in B1.members:
        last = max(pos[x - 1] for x in elements(b))
        closing[last].append(b)
    targets = B2.members

    sigma = [-1] * g
    used = [False] * g

    def image(b: int) -> int:
        return mask(sigma[x - 1] + 1 for x in elements(b))

    def place(k: int) -> bool:
        if k == g:
            return True
        e = order[k]
        for f in by_colour[col1[e]]:
            if used[f]:
                continue
            if any(co1[e][order[t]] != co2[f][sigma[order[t]]] for t in range(k)):
                continue
            sigma[e], used[f] = f, True
            if all(image(b) in targets for b in closing[k]) and place(k + 1):
                return True
            sigma[e], used[f] = -1, False
        return False

    if not place(0):
        return None
    return tuple(s + 1 for s in sigma)


def _cooccurrence(B: SetFamily) -> list[list[int]]:
    g = B.ground
    co = [[0] * g for _ in range(g)]
    for b in B.members:
        xs = [x - 1 for x in elements(b)]
        for a in xs:
            for c in xs:
                co[a][c] += 1
    return co


def _refine(co1: list[list[int]], co2: list[list[int]]) -> tuple[list[int], list[int]]:
    # colour refinement run on both families with a shared signature table
    g = len(co1)
    col1 = [co1[e][e] for e in range(g)]
    col2 = [co2[e][e] for e in range(g)]
    while True:
        table: dict = {}

        def sig(co, col, e):
            nbrs = tuple(sorted((col[f], co[e][f]) for f in range(g) if f != e))
            return table.setdefault((col[e], nbrs), len(table))

        new1 = [sig(co1, col1, e) for e in range(g)]
        new2 = [sig(co2, col2, e) for e in range(g)]
        if len(set(new1)) == len(set(col1)) and len(set(new2)) == len(set(col2)):
            return new1, new2
        col1, col2 = new1, new2


def _placement_order(co, col, class_size) -> list[int]:
    # small colour classes first, then prefer elements tied to already placed ones
    g = len(co)
    left = set(range(g))
    order: list[int] = []
    while left:
        e = min(
            left,
            key=lambda x: (class_size[col[x]], -sum(1 for y in order if co[x][y]), x),
        )
        order.append(e)
        left.discard(e)
    return order

