"""Finite field towers GF(p) < GF(q = p^e) < GF(q^m) with table-driven arithmetic.

Every field in a tower is a :class:`FiniteField` holding full addition and
multiplication tables over integer element codes.  An element of a field that
sits over a subfield of order r with degree d has code ``sum(c_j * r**j)``,
where ``c_j`` are the subfield codes of its coordinates in the polynomial
basis ``1, x, ..., x^(d-1)``.  Because the prime field uses the identity code,
the base-p digits of a top-level code are exactly its flattened nested
coordinates.

Vectors and matrices over a field are plain numpy integer arrays of codes;
table lookups such as ``F.mul[a, b]`` broadcast over them.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import BudgetExceeded, FieldDivisionByZero, NonPrime, RankMetricError, TowerMismatch

MAX_FIELD_ORDER = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class FiniteField:
    """A finite field with precomputed operation tables.

    ``subfield`` is ``None`` for a prime field; otherwise the field is
    ``subfield[x] / (modulus)`` and Frobenius and trace are taken relative to
    ``subfield``.
    """

    def __init__(self, prime: int, subfield: FiniteField | None, modulus: tuple[int, ...],
                 add: np.ndarray, mul: np.ndarray):
        self.prime = prime
        self.subfield = subfield
        self.modulus = modulus
        self.add = add
        self.mul = mul
        self.order = add.shape[0]
        self.neg = np.argmax(add == 0, axis=1)
        self.sub = add[:, self.neg]
        inv = np.argmax(mul == 1, axis=1)
        inv[0] = 0
        self.inv = inv
        if subfield is None:
            self.degree = 1
            self.digits = np.arange(self.order).reshape(-1, 1)
        else:
            self.degree = len(modulus) - 1
            r = subfield.order
            self.digits = (np.arange(self.order)[:, None] // r ** np.arange(self.degree)) % r
        self._weights = (1 if subfield is None else subfield.order) ** np.arange(self.degree)

    @property
    def key(self) -> tuple:
        chain = []
        f: FiniteField | None = self
        while f is not None:
            chain.append(f.modulus)
            f = f.subfield
        return (self.prime, tuple(chain))

    def __eq__(self, other: object) -> bool:
        return self is other or (isinstance(other, FiniteField) and self.key == other.key)

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"GF({self.order})"

    @property
    def characteristic(self) -> int:
        return self.prime

    def __call__(self, code) -> FieldElement:
        return FieldElement(self, int(code))

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, c) for c in range(self.order)]

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def encode(self, digits: np.ndarray) -> np.ndarray:
        """Inverse of ``self.digits`` along the last axis."""
        return np.asarray(digits) @ self._weights

    def power(self, a: int, n: int) -> int:
        if n < 0:
            if a == 0:
                raise FieldDivisionByZero("zero has no inverse")
            a, n = int(self.inv[a]), -n
        result, base = 1, int(a)
        while n:
            if n & 1:
                result = int(self.mul[result, base])
            base = int(self.mul[base, base])
            n >>= 1
        return result

    # -- Frobenius and trace relative to the subfield -------------------------

    @functools.cached_property
    def frobenius_matrix(self) -> np.ndarray:
        """Matrix over the subfield with ``coords(a^r) = F @ coords(a)``."""
        if self.subfield is None:
            return np.ones((1, 1), dtype=np.int64)
        r = self.subfield.order
        cols = [self.digits[self.power(r ** j, r)] for j in range(self.degree)]
        return np.stack(cols, axis=1)

    @functools.cached_property
    def _frobenius_tables(self) -> list[np.ndarray]:
        if self.subfield is None:
            return [np.arange(self.order)]
        sub = self.subfield
        fm = self.frobenius_matrix
        acc = np.zeros((self.order, self.degree), dtype=np.int64)
        for j in range(self.degree):
            acc = sub.add[acc, sub.mul[self.digits[:, j][:, None], fm[:, j][None, :]]]
        once = self.encode(acc)
        tables = [np.arange(self.order)]
        for _ in range(self.degree - 1):
            tables.append(once[tables[-1]])
        return tables

    def frobenius_table(self, i: int) -> np.ndarray:
        """Lookup table for ``a -> a^(r^i)``; ``i`` is reduced modulo the degree."""
        return self._frobenius_tables[i % self.degree]

    @functools.cached_property
    def trace_table(self) -> np.ndarray:
        acc = np.zeros(self.order, dtype=np.int64)
        for t in self._frobenius_tables:
            acc = self.add[acc, t]
        sub_order = self.order if self.subfield is None else self.subfield.order
        assert int(acc.max()) < sub_order, "trace left the subfield"
        return acc


@dataclass(frozen=True, slots=True)
class FieldElement:
    field: FiniteField
    code: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise TowerMismatch(f"{self.field!r} vs {other.field!r}")
            return other.code
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.prime
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return FieldElement(self.field, int(self.field.add[self.code, b]))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, int(self.field.sub[self.code, b]))

    def __rsub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, int(self.field.sub[b, self.code]))

    def __neg__(self):
        return FieldElement(self.field, int(self.field.neg[self.code]))

    def __mul__(self, other):
        b = self._other(other)
        return FieldElement(self.field, int(self.field.mul[self.code, b]))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b == 0:
            raise FieldDivisionByZero("division by zero")
        return FieldElement(self.field, int(self.field.mul[self.code, self.field.inv[b]]))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self._other(other)) / self

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.power(self.code, n))

    def inverse(self) -> FieldElement:
        if self.code == 0:
            raise FieldDivisionByZero("zero has no inverse")
        return FieldElement(self.field, int(self.field.inv[self.code]))

    def __bool__(self) -> bool:
        return self.code != 0

    def __repr__(self) -> str:
        return f"{self.field!r}({self.code})"

    @property
    def coords(self):
        return nested_coords(self.field, self.code)

    def frobenius(self, i: int = 1) -> FieldElement:
        return FieldElement(self.field, int(self.field.frobenius_table(i)[self.code]))

    def trace(self) -> FieldElement:
        """Relative trace into the subfield, returned as a subfield element."""
        sub = self.field.subfield or self.field
        return FieldElement(sub, int(self.field.trace_table[self.code]))


def codes_of(values, field: FiniteField) -> np.ndarray:
    """Array of codes from (nested) sequences of elements of ``field`` or raw codes."""
    if isinstance(values, np.ndarray):
        return values.astype(np.int64, copy=False)

    def conv(v):
        if isinstance(v, FieldElement):
            if v.field != field:
                raise TowerMismatch(f"{v!r} is not an element of {field!r}")
            return v.code
        if isinstance(v, (list, tuple)):
            return [conv(x) for x in v]
        return int(v)

    return np.array(conv(values), dtype=np.int64)


def frobenius(a: FieldElement, i: int = 1) -> FieldElement:
    """``a^(q^i)`` where q is the order of the subfield of ``a``'s field."""
    return a.frobenius(i)


def trace_to_base(a: FieldElement) -> FieldElement:
    return a.trace()


def nested_coords(field: FiniteField, code: int):
    """Coordinates of ``code`` nested down to the prime field (a bare int there)."""
    if field.subfield is None:
        return int(code)
    return [nested_coords(field.subfield, int(c)) for c in field.digits[int(code)]]


def from_nested(field: FiniteField, coords) -> int:
    if field.subfield is None:
        if isinstance(coords, list):
            if len(coords) != 1:
                raise RankMetricError(f"expected a prime-field scalar, got {coords!r}")
            coords = coords[0]
        return int(coords) % field.prime
    if isinstance(coords, (int, np.integer)):
        # bare scalar accepted as an element of the prime field
        return int(coords) % field.prime
    if len(coords) != field.degree:
        raise RankMetricError(f"expected {field.degree} coordinates, got {len(coords)}")
    digits = [from_nested(field.subfield, c) for c in coords]
    return int(field.encode(np.array(digits)))


# -- polynomials over a field, used only for modulus selection ----------------

def _poly_rem(f: Sequence[int], g: Sequence[int], F: FiniteField) -> list[int]:
    """Remainder of f by the monic g; coefficient lists are low-degree first."""
    r = list(f)
    dg = len(g) - 1
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c:
            for j in range(dg + 1):
                r[i - dg + j] = int(F.sub[r[i - dg + j], F.mul[c, g[j]]])
    return r[:dg]


def _monic_polys(F: FiniteField, degree: int) -> Iterator[list[int]]:
    """Monic polynomials of a given degree in increasing base-|F| integer order."""
    r = F.order
    for n in range(r ** degree):
        yield [(n // r ** i) % r for i in range(degree)] + [1]


def is_irreducible(f: Sequence[int], F: FiniteField) -> bool:
    """Trial division by every monic polynomial of degree at most deg(f)/2."""
    d = len(f) - 1
    if d < 1:
        return False
    for dg in range(1, d // 2 + 1):
        for g in _monic_polys(F, dg):
            if not any(_poly_rem(f, g, F)):
                return False
    return True


def smallest_irreducible(F: FiniteField, degree: int) -> tuple[int, ...]:
    for f in _monic_polys(F, degree):
        if is_irreducible(f, F):
            return tuple(f)
    raise AssertionError("irreducible polynomials exist in every degree")


def prime_field(p: int) -> FiniteField:
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    a = np.arange(p)
    return FiniteField(p, None, (), (a[:, None] + a[None, :]) % p, (a[:, None] * a[None, :]) % p)


def extend(sub: FiniteField, modulus: Sequence[int]) -> FiniteField:
    """Build ``sub[x] / (modulus)``; ``modulus`` is monic, low-degree first."""
    modulus = tuple(int(c) for c in modulus)
    d = len(modulus) - 1
    r = sub.order
    Q = r ** d
    digits = (np.arange(Q)[:, None] // r ** np.arange(d)) % r
    weights = r ** np.arange(d)
    add = sub.add[digits[:, None, :], digits[None, :, :]] @ weights

    low = np.array(modulus[:d])
    shifted = [digits]
    for _ in range(d - 1):
        cur = shifted[-1]
        top = cur[:, d - 1]
        nxt = np.concatenate([np.zeros((Q, 1), dtype=cur.dtype), cur[:, :-1]], axis=1)
        shifted.append(sub.sub[nxt, sub.mul[top[:, None], low[None, :]]])
    acc = np.zeros((Q, Q, d), dtype=np.int64)
    for j in range(d):
        acc = sub.add[acc, sub.mul[digits[None, :, j, None], shifted[j][:, None, :]]]
    mul = acc @ weights
    return FiniteField(sub.prime, sub, modulus, add, mul)


@dataclass(frozen=True, eq=False)
class FieldTower:
    """The chain GF(p) < GF(q) < GF(q^m) with explicit moduli."""

    p: int
    e: int
    m: int
    base_modulus: tuple[int, ...]
    ext_modulus: tuple[int, ...]
    prime: FiniteField
    base: FiniteField
    ext: FiniteField

    @property
    def q(self) -> int:
        return self.base.order

    @property
    def order(self) -> int:
        return self.ext.order

    @property
    def frobenius_matrix(self) -> np.ndarray:
        return self.ext.frobenius_matrix

    @property
    def key(self) -> tuple:
        return self.ext.key

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldTower) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, e={self.e}, m={self.m})"

    def __call__(self, code) -> FieldElement:
        return FieldElement(self.ext, int(code))

    def element(self, coords) -> FieldElement:
        return FieldElement(self.ext, from_nested(self.ext, coords))

    def scalar(self, code: int) -> FieldElement:
        return FieldElement(self.base, int(code))

    def descriptor(self) -> dict:
        return {
            "p": self.p,
            "e": self.e,
            "m": self.m,
            "base_modulus": list(self.base_modulus),
            "ext_modulus": [nested_coords(self.base, c) for c in self.ext_modulus],
        }

    @classmethod
    def from_descriptor(cls, desc: dict) -> FieldTower:
        tower = make_tower(int(desc["p"]), int(desc.get("e", 1)), int(desc.get("m", 1)))
        if "base_modulus" in desc and tuple(desc["base_modulus"]) != tower.base_modulus:
            return _custom_tower(desc)
        if "ext_modulus" in desc:
            ext_mod = tuple(from_nested(tower.base, c) for c in desc["ext_modulus"])
            if ext_mod != tower.ext_modulus:
                return _custom_tower(desc)
        return tower


def _check_order(p: int, e: int, m: int, max_order: int) -> None:
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if e < 1 or m < 1:
        raise RankMetricError("extension degrees must be at least 1")
    if p ** (e * m) > max_order:
        raise BudgetExceeded(f"q^m = {p ** (e * m)} exceeds the cap {max_order}")


@functools.lru_cache(maxsize=None)
def _cached_tower(p: int, e: int, m: int) -> FieldTower:
    gf_p = prime_field(p)
    base_mod = smallest_irreducible(gf_p, e)
    base = extend(gf_p, base_mod)
    ext_mod = smallest_irreducible(base, m)
    ext = extend(base, ext_mod)
    return FieldTower(p, e, m, base_mod, ext_mod, gf_p, base, ext)


def make_tower(p: int, e: int = 1, m: int = 1, *, max_order: int = MAX_FIELD_ORDER) -> FieldTower:
    """Tower with the smallest monic irreducible moduli (base-r integer order)."""
    _check_order(p, e, m, min(max_order, MAX_FIELD_ORDER))
    return _cached_tower(p, e, m)


def tower_of(ext: FiniteField) -> FieldTower:
    """Recover the tower whose top field is ``ext``."""
    base = ext.subfield
    if base is None or base.subfield is None:
        raise TowerMismatch(f"{ext!r} is not the top of a three-level tower")
    return FieldTower(ext.prime, base.degree, ext.degree, base.modulus, ext.modulus,
                      base.subfield, base, ext)


def _custom_tower(desc: dict) -> FieldTower:
    p, e, m = int(desc["p"]), int(desc.get("e", 1)), int(desc.get("m", 1))
    _check_order(p, e, m, MAX_FIELD_ORDER)
    gf_p = prime_field(p)
    base_mod = tuple(int(c) % p for c in desc["base_modulus"])
    if len(base_mod) != e + 1 or base_mod[-1] != 1 or not is_irreducible(base_mod, gf_p):
        raise RankMetricError(f"base modulus {base_mod} is not a monic irreducible of degree {e}")
    base = extend(gf_p, base_mod)
    ext_mod = tuple(from_nested(base, c) for c in desc["ext_modulus"])
    if len(ext_mod) != m + 1 or ext_mod[-1] != 1 or not is_irreducible(ext_mod, base):
        raise RankMetricError(f"extension modulus {ext_mod} is not a monic irreducible of degree {m}")
    return FieldTower(p, e, m, base_mod, ext_mod, gf_p, base, extend(base, ext_mod))
