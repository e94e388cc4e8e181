"""Subspaces of F_q^n in canonical reduced row echelon form.

A subspace is stored as its unique RREF basis matrix, so structural
equality of the row tuples is equality of subspaces and the pair
(dimension, rows) gives a deterministic total order.  All values are
immutable and all operations are pure.

For q = 2 the heavy operations (rank, hence distance and hull tests) run
on rows packed into machine integers; the generic path works for every
supported field and the two are cross-checked in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .field import FieldSpec, fe_add, fe_inv, fe_mul, fe_neg, fe_sub, field_spec

Vector = tuple[int, ...]


@dataclass(frozen=True)
class AmbientSpec:
    """Ambient space F_q^n within the enumeration-feasible bounds."""

    field: FieldSpec
    n: int

    def __post_init__(self) -> None:
        limit = 16 if self.field.q == 2 else 8
        if not 1 <= self.n <= limit:
            raise ValueError(
                f"ambient dimension n={self.n} out of range [1, {limit}] for q={self.field.q}"
            )

    @property
    def q(self) -> int:
        return self.field.q


def ambient(q: int, n: int) -> AmbientSpec:
    """Shorthand constructor for AmbientSpec."""
    return AmbientSpec(field=field_spec(q), n=n)


@dataclass(frozen=True)
class Subspace:
    """An element of the projective space: an RREF matrix over F_q.

    ``rows`` is a k x n tuple-of-tuples; k = 0 encodes the null space.
    """

    ambient: AmbientSpec
    rows: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    def sort_key(self) -> tuple[int, tuple[Vector, ...]]:
        return (len(self.rows), self.rows)

    def __lt__(self, other: "Subspace") -> bool:
        return self.sort_key() < other.sort_key()

    def validate(self) -> None:
        """Check the RREF invariants; raise ValueError on violation."""
        n, fs = self.ambient.n, self.ambient.field
        pivots = []
        for row in self.rows:
            if len(row) != n:
                raise ValueError("row length does not match ambient dimension")
            if any(not 0 <= e < fs.q for e in row):
                raise ValueError("entry out of field range")
            nz = [j for j, e in enumerate(row) if e != 0]
            if not nz:
                raise ValueError("zero row in basis")
            piv = nz[0]
            if pivots and piv <= pivots[-1]:
                raise ValueError("pivot columns not strictly increasing")
            if row[piv] != 1:
                raise ValueError("pivot entry is not 1")
            pivots.append(piv)
        for i, row in enumerate(self.rows):
            for j, piv in enumerate(pivots):
                if i != j and row[piv] != 0:
                    raise ValueError("nonzero entry above or below a pivot")


def _rref(rows: list[list[int]], fs: FieldSpec) -> list[Vector]:
    """Reduced row echelon form over F_q; zero rows dropped."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivot_rows: list[Vector] = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, nrows):
            if mat[i][c] != 0:
                sel = i
                break
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = fe_inv(mat[r][c], fs)
        if inv != 1:
            mat[r] = [fe_mul(inv, e, fs) for e in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [fe_sub(e, fe_mul(f, g, fs), fs) for e, g in zip(mat[i], mat[r])]
        r += 1
        if r == nrows:
            break
    for row in mat[:r]:
        pivot_rows.append(tuple(row))
    return pivot_rows


# -- bit-packed fast path for q = 2 -----------------------------------------
# A row is an int with bit j set iff column j is 1.


def _mask_of(row: Sequence[int]) -> int:
    m = 0
    for j, e in enumerate(row):
        if e:
            m |= 1 << j
    return m


def masks_of(s: Subspace) -> list[int]:
    """Bit-packed rows of a q = 2 subspace."""
    return [_mask_of(r) for r in s.rows]


def _rank2(masks: Iterable[int]) -> int:
    pivots: list[int] = []
    for m in masks:
        for p in pivots:
            low = p & -p
            if m & low:
                m ^= p
        if m:
            pivots.append(m)
    return len(pivots)


def _rank_generic(rows: list[Vector], fs: FieldSpec) -> int:
    return len(_rref([list(r) for r in rows], fs))


def canonicalize(vectors: Iterable[Vector], amb: AmbientSpec) -> Subspace:
    """Subspace spanned by the given vectors, as its unique RREF basis."""
    vecs = [list(v) for v in vectors]
    for v in vecs:
        if len(v) != amb.n:
            raise ValueError("vector length does not match ambient dimension")
    rows = _rref(vecs, amb.field) if vecs else []
    return Subspace(ambient=amb, rows=tuple(rows))


def zero_subspace(amb: AmbientSpec) -> Subspace:
    return Subspace(ambient=amb, rows=())


def full_subspace(amb: AmbientSpec) -> Subspace:
    rows = []
    for i in range(amb.n):
        row = [0] * amb.n
        row[i] = 1
        rows.append(tuple(row))
    return Subspace(ambient=amb, rows=tuple(rows))


def _require_same_ambient(x: Subspace, y: Subspace) -> None:
    if x.ambient != y.ambient:
        raise ValueError("ambient mismatch")


def subspace_sum(x: Subspace, y: Subspace) -> Subspace:
    """Smallest subspace containing both (the lattice join X + Y)."""
    _require_same_ambient(x, y)
    return canonicalize(x.rows + y.rows, x.ambient)


def stacked_rank(x: Subspace, y: Subspace) -> int:
    """rank of the stacked bases = dim(X + Y)."""
    _require_same_ambient(x, y)
    if x.ambient.q == 2:
        return _rank2(masks_of(x) + masks_of(y))
    return _rank_generic(list(x.rows + y.rows), x.ambient.field)


def distance(x: Subspace, y: Subspace) -> int:
    """Subspace distance dim X + dim Y - 2 dim(X intersect Y)."""
    return 2 * stacked_rank(x, y) - x.dim - y.dim


def dual(x: Subspace) -> Subspace:
    """Orthogonal complement under the standard inner product."""
    amb = x.ambient
    n, fs = amb.n, amb.field
    k = x.dim
    if k == 0:
        return full_subspace(amb)
    pivots = [next(j for j, e in enumerate(row) if e != 0) for row in x.rows]
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = fe_neg(x.rows[i][f], fs)
        basis.append(v)
    return canonicalize([tuple(v) for v in basis], amb)


def intersect(x: Subspace, y: Subspace) -> Subspace:
    """Largest common subspace, computed as dual(dual X + dual Y)."""
    _require_same_ambient(x, y)
    return dual(subspace_sum(dual(x), dual(y)))


def intersect_via_kernel(x: Subspace, y: Subspace) -> Subspace:
    """Intersection by the left-kernel of the stacked bases.

    Independent of the duality route; used to cross-check intersect().
    """
    _require_same_ambient(x, y)
    amb, fs = x.ambient, x.ambient.field
    if x.dim == 0 or y.dim == 0:
        return zero_subspace(amb)
    # (u, w) with u*X + w*Y = 0  <=>  u*X = -(w*Y) lies in both row spaces
    stacked = [list(r) for r in x.rows + y.rows]
    m = len(stacked)
    # left kernel of `stacked` = (right) kernel of its transpose
    transposed = [[stacked[i][j] for i in range(m)] for j in range(amb.n)]
    ker = _kernel_basis(transposed, m, fs)
    vectors = []
    for coeffs in ker:
        v = [0] * amb.n
        for i in range(x.dim):
            c = coeffs[i]
            if c:
                v = [fe_add(e, fe_mul(c, g, fs), fs) for e, g in zip(v, x.rows[i])]
        vectors.append(tuple(v))
    return canonicalize(vectors, amb)


def _kernel_basis(rows: list[list[int]], width: int, fs: FieldSpec) -> list[list[int]]:
    """Basis of {v : rows * v = 0} for a matrix given as a list of rows."""
    red = _rref(rows, fs) if rows else []
    pivots = [next(j for j, e in enumerate(r) if e != 0) for r in red]
    free = [j for j in range(width) if j not in pivots]
    out = []
    for f in free:
        v = [0] * width
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = fe_neg(red[i][f], fs)
        out.append(v)
    return out


def hull(x: Subspace) -> Subspace:
    """X intersected with its orthogonal complement."""
    return intersect(x, dual(x))


def has_trivial_hull(x: Subspace) -> bool:
    """True iff X meets its orthogonal complement only in 0.

    Equivalent to the Gram matrix of the basis being nonsingular, which is
    much cheaper than computing the hull; validated against hull() in tests.
    """
    k = x.dim
    if k == 0:
        return True
    amb = x.ambient
    if amb.q == 2:
        ms = masks_of(x)
        gram = []
        for a in ms:
            g = 0
            for j, b in enumerate(ms):
                if (a & b).bit_count() & 1:
                    g |= 1 << j
            gram.append(g)
        return _rank2(gram) == k
    fs = amb.field
    gram_rows = []
    for ra in x.rows:
        row = []
        for rb in x.rows:
            acc = 0
            for e, g in zip(ra, rb):
                acc = fe_add(acc, fe_mul(e, g, fs), fs)
            row.append(acc)
        gram_rows.append(row)
    return _rank_generic([tuple(r) for r in gram_rows], fs) == k


def is_subspace_of(x: Subspace, y: Subspace) -> bool:
    """True iff X is contained in Y."""
    _require_same_ambient(x, y)
    return stacked_rank(x, y) == y.dim


def vectors_of(x: Subspace) -> Iterator[Vector]:
    """All q^k vectors of X, in odometer order over basis coefficients."""
    amb, fs = x.ambient, x.ambient.field
    k = x.dim
    coeffs = [0] * k
    while True:
        v = [0] * amb.n
        for i, c in enumerate(coeffs):
            if c:
                v = [fe_add(e, fe_mul(c, g, fs), fs) for e, g in zip(v, x.rows[i])]
        yield tuple(v)
        i = k - 1
        while i >= 0 and coeffs[i] == fs.q - 1:
            coeffs[i] = 0
            i -= 1
        if i < 0:
            return
        coeffs[i] += 1
