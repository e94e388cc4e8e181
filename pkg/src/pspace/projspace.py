"""Enumeration of Grassmannians and full projective spaces.

Subspaces are generated directly as RREF matrices: choose the pivot
columns, then run an odometer over the free entries.  Each Grassmannian is
sorted into the canonical (dim, rows) order; concatenating k = 0..n then
yields the canonical order of the whole projective space for free.

The module also exposes the exact Gaussian binomial, dimension
distributions, and the bipartite disjointness graphs that the matching
constructions consume.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .subspace import AmbientSpec, Subspace, Vector, dual

ENUM_GUARD = 10**8


def _smallest_prime_factor(n: int) -> int:
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = _smallest_prime_factor(q)
    while q % p == 0:
        q //= p
    return q == 1


def gaussian(n: int, k: int, q: int) -> int:
    """q-ary Gaussian binomial: the number of k-subspaces of F_q^n.

    Exact big-integer evaluation of the product formula.
    """
    if not _is_prime_power(q):
        raise ValueError(f"q={q} is not a prime power")
    if k < 0 or k > n:
        raise ValueError(f"k={k} out of range for n={n}")
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    value, rem = divmod(num, den)
    assert rem == 0
    return value


@dataclass(frozen=True)
class SubspaceSet:
    """Ordered, duplicate-free collection of subspaces of one ambient."""

    ambient: AmbientSpec
    members: tuple[Subspace, ...]

    def __post_init__(self) -> None:
        prev = None
        for s in self.members:
            if s.ambient != self.ambient:
                raise ValueError("member ambient mismatch")
            key = s.sort_key()
            if prev is not None and key <= prev:
                raise ValueError("members must be strictly sorted in canonical order")
            prev = key

    @classmethod
    def from_members(cls, amb: AmbientSpec, members: Sequence[Subspace]) -> "SubspaceSet":
        uniq = sorted(set(members), key=Subspace.sort_key)
        return cls(ambient=amb, members=tuple(uniq))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Subspace]:
        return iter(self.members)

    def __getitem__(self, i: int) -> Subspace:
        return self.members[i]

    @cached_property
    def _index(self) -> dict[Subspace, int]:
        return {s: i for i, s in enumerate(self.members)}

    def index_of(self, s: Subspace) -> int:
        return self._index[s]

    def __contains__(self, s: Subspace) -> bool:
        return s in self._index


def _free_positions(pivots: Sequence[int], n: int) -> list[tuple[int, int]]:
    """(row, column) slots that an RREF matrix with these pivots leaves free."""
    pivot_set = set(pivots)
    slots = []
    for i, p in enumerate(pivots):
        for j in range(p + 1, n):
            if j not in pivot_set:
                slots.append((i, j))
    return slots


def iter_grassmannian_rows(amb: AmbientSpec, k: int) -> Iterator[tuple[Vector, ...]]:
    """Yield the RREF row tuples of all k-subspaces (generation order)."""
    n, q = amb.n, amb.q
    if k < 0 or k > n:
        raise ValueError(f"k={k} out of range for n={n}")
    if k == 0:
        yield ()
        return
    for pivots in itertools.combinations(range(n), k):
        slots = _free_positions(pivots, n)
        base = []
        for i, p in enumerate(pivots):
            row = [0] * n
            row[p] = 1
            base.append(row)
        values = [0] * len(slots)
        while True:
            rows = [list(r) for r in base]
            for (i, j), v in zip(slots, values):
                rows[i][j] = v
            yield tuple(tuple(r) for r in rows)
            pos = len(slots) - 1
            while pos >= 0 and values[pos] == q - 1:
                values[pos] = 0
                pos -= 1
            if pos < 0:
                break
            values[pos] += 1


def iter_grassmannian_masks(n: int, k: int) -> Iterator[list[int]]:
    """q = 2 fast path: yield bit-packed rows of all k-subspaces of F_2^n."""
    if k == 0:
        yield []
        return
    for pivots in itertools.combinations(range(n), k):
        slots = _free_positions(pivots, n)
        base = [1 << p for p in pivots]
        nslots = len(slots)
        for assignment in range(1 << nslots):
            rows = list(base)
            a = assignment
            for i, j in slots:
                if a & 1:
                    rows[i] |= 1 << j
                a >>= 1
            yield rows


def _guard(count: int) -> None:
    if count > ENUM_GUARD:
        raise ValueError(f"enumeration of {count} subspaces exceeds the guard of {ENUM_GUARD}")


def enum_grassmannian(amb: AmbientSpec, k: int) -> SubspaceSet:
    """All k-subspaces of the ambient space in canonical order."""
    _guard(gaussian(amb.n, k, amb.q))
    rows = sorted(iter_grassmannian_rows(amb, k))
    members = tuple(Subspace(ambient=amb, rows=r) for r in rows)
    return SubspaceSet(ambient=amb, members=members)


def enum_projective(amb: AmbientSpec) -> SubspaceSet:
    """The whole projective space: all subspaces, dimensions 0..n."""
    _guard(sum(gaussian(amb.n, k, amb.q) for k in range(amb.n + 1)))
    members: list[Subspace] = []
    for k in range(amb.n + 1):
        members.extend(enum_grassmannian(amb, k).members)
    return SubspaceSet(ambient=amb, members=tuple(members))


def dimension_distribution(s: SubspaceSet) -> tuple[int, ...]:
    """Counts D_0..D_n of members by dimension."""
    counts = [0] * (s.ambient.n + 1)
    for m in s:
        counts[m.dim] += 1
    return tuple(counts)


def dualize_set(s: SubspaceSet) -> SubspaceSet:
    """Apply the orthogonal complement memberwise and re-sort."""
    return SubspaceSet.from_members(s.ambient, [dual(m) for m in s])


@dataclass(frozen=True)
class DisjointnessGraph:
    """Bipartite graph between G(n, k) and G(n, n - k), edges on trivial meet."""

    left: SubspaceSet
    right: SubspaceSet
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return self.left[0].dim if len(self.left) else 0

    def degree_profile(self) -> tuple[set[int], set[int]]:
        left_deg = {len(nbrs) for nbrs in self.adjacency}
        right_deg_count = [0] * len(self.right)
        for nbrs in self.adjacency:
            for j in nbrs:
                right_deg_count[j] += 1
        return left_deg, set(right_deg_count)


def disjointness_graph(amb: AmbientSpec, k: int) -> DisjointnessGraph:
    """Graph pairing k-subspaces with the (n-k)-subspaces meeting them in 0."""
    from .subspace import stacked_rank

    n = amb.n
    left = enum_grassmannian(amb, k)
    right = enum_grassmannian(amb, n - k) if n - k != k else left
    adjacency = []
    for x in left:
        nbrs = [j for j, y in enumerate(right) if stacked_rank(x, y) == n]
        adjacency.append(tuple(nbrs))
    return DisjointnessGraph(left=left, right=right, adjacency=tuple(adjacency))
