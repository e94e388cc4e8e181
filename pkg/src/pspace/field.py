"""Exact arithmetic in small finite fields GF(q).

Elements are integer indices in [0, q).  For prime q the index is the
residue mod p.  For the three supported extension fields the index is the
base-p encoding of the coefficient vector of a polynomial residue, least
significant coefficient first:

    GF(4):  x^2 + x + 1
    GF(8):  x^3 + x + 1
    GF(9):  x^2 + 1

The GF(8) modulus is pinned so that the element x (index 2) satisfies
x^3 = x + 1; the two-dimensional code construction in pspace.linear relies
on that identity.  Index 0 is the additive identity and index 1 the
multiplicative identity in every supported field.

Arithmetic for q <= 9 is table-driven; larger prime fields use plain
modular arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

# Moduli for the supported extension fields, keyed by (p, m).  Coefficients
# ascending, leading coefficient included.
_EXTENSION_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (3, 2): (1, 0, 1),
}

MAX_PRIME = 251
_TABLE_LIMIT = 9


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Description of a supported field: order q = p^m with a fixed modulus.

    ``modulus`` is empty for prime fields and the ascending coefficient
    tuple of the monic irreducible polynomial otherwise.
    """

    p: int
    m: int
    q: int
    modulus: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.q != self.p**self.m:
            raise ValueError(f"q={self.q} is not p^m for p={self.p}, m={self.m}")
        if self.m == 1:
            if not _is_prime(self.p) or self.p > MAX_PRIME:
                raise ValueError(f"unsupported prime field GF({self.p})")
            if self.modulus != ():
                raise ValueError("prime fields carry no modulus")
        else:
            expected = _EXTENSION_MODULI.get((self.p, self.m))
            if expected is None:
                raise ValueError(f"unsupported extension field GF({self.p}^{self.m})")
            if self.modulus != expected:
                raise ValueError(f"modulus for GF({self.q}) must be {expected}")


@lru_cache(maxsize=None)
def field_spec(q: int) -> FieldSpec:
    """Return the FieldSpec for a supported order q.

    Supported orders are the primes up to 251 and the extension fields
    4, 8 and 9.
    """
    for (p, m), modulus in _EXTENSION_MODULI.items():
        if p**m == q:
            return FieldSpec(p=p, m=m, q=q, modulus=modulus)
    if _is_prime(q) and q <= MAX_PRIME:
        return FieldSpec(p=q, m=1, q=q, modulus=())
    raise ValueError(f"unsupported field order q={q}")


def _poly_from_index(i: int, p: int, m: int) -> list[int]:
    coeffs = []
    for _ in range(m):
        coeffs.append(i % p)
        i //= p
    return coeffs


def _poly_to_index(coeffs: list[int], p: int) -> int:
    i = 0
    for c in reversed(coeffs):
        i = i * p + c
    return i


class _Tables:
    """Dense add/mul/neg/inv tables for one field of order q <= 9."""

    __slots__ = ("q", "add", "mul", "neg", "inv")

    def __init__(self, s: FieldSpec) -> None:
        q, p, m = s.q, s.p, s.m
        self.q = q
        if m == 1:
            self.add = [[(a + b) % p for b in range(q)] for a in range(q)]
            self.mul = [[(a * b) % p for b in range(q)] for a in range(q)]
        else:
            polys = [_poly_from_index(i, p, m) for i in range(q)]
            self.add = [
                [_poly_to_index([(x + y) % p for x, y in zip(pa, pb)], p) for pb in polys]
                for pa in polys
            ]
            self.mul = [[self._mul_poly(pa, pb, s) for pb in polys] for pa in polys]
        self.neg = [row.index(0) for row in self.add]
        self.inv = [0] * q
        for a in range(1, q):
            self.inv[a] = self.mul[a].index(1)

    @staticmethod
    def _mul_poly(pa: list[int], pb: list[int], s: FieldSpec) -> int:
        p, m = s.p, s.m
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(pa):
            if x == 0:
                continue
            for j, y in enumerate(pb):
                prod[i + j] = (prod[i + j] + x * y) % p
        # reduce by the monic modulus
        for d in range(len(prod) - 1, m - 1, -1):
            c = prod[d]
            if c == 0:
                continue
            prod[d] = 0
            for j in range(m):
                prod[d - m + j] = (prod[d - m + j] - c * s.modulus[j]) % p
        return _poly_to_index(prod[:m], p)


@lru_cache(maxsize=None)
def _tables(s: FieldSpec) -> _Tables:
    return _Tables(s)


def _check(a: int, s: FieldSpec) -> None:
    if not 0 <= a < s.q:
        raise ValueError(f"element index {a} out of range for GF({s.q})")


def fe_add(a: int, b: int, s: FieldSpec) -> int:
    """Field addition."""
    _check(a, s)
    _check(b, s)
    if s.q > _TABLE_LIMIT:
        return (a + b) % s.p
    return _tables(s).add[a][b]


def fe_neg(a: int, s: FieldSpec) -> int:
    """Additive inverse."""
    _check(a, s)
    if s.q > _TABLE_LIMIT:
        return (-a) % s.p
    return _tables(s).neg[a]


def fe_sub(a: int, b: int, s: FieldSpec) -> int:
    """Field subtraction a - b."""
    return fe_add(a, fe_neg(b, s), s)


def fe_mul(a: int, b: int, s: FieldSpec) -> int:
    """Field multiplication."""
    _check(a, s)
    _check(b, s)
    if s.q > _TABLE_LIMIT:
        return (a * b) % s.p
    return _tables(s).mul[a][b]


def fe_inv(a: int, s: FieldSpec) -> int:
    """Multiplicative inverse.  Raises ZeroDivisionError for 0."""
    _check(a, s)
    if a == 0:
        raise ZeroDivisionError(f"0 has no multiplicative inverse in GF({s.q})")
    if s.q > _TABLE_LIMIT:
        return pow(a, s.p - 2, s.p)
    return _tables(s).inv[a]


def elements(s: FieldSpec) -> range:
    """All element indices of the field."""
    return range(s.q)
