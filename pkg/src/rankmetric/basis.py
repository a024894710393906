"""Bases of GF(q^m) over GF(q): Gram matrices, dual bases, orthonormal searches, expansion."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import linalg
from .errors import EvenCharacteristic, NotABasis, SearchExhausted, TowerMismatch
from .field import FieldElement, FieldTower, codes_of, nested_coords, tower_of


@dataclass(frozen=True, eq=False)
class ExtensionBasis:
    """An ordered GF(q)-basis of GF(q^m), stored as element codes."""

    tower: FieldTower
    codes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "codes", tuple(int(c) for c in self.codes))
        if len(self.codes) != self.tower.m:
            raise NotABasis(f"need {self.tower.m} elements, got {len(self.codes)}")
        if linalg.rank(self.tower.base, self.coordinate_matrix) != self.tower.m:
            raise NotABasis(f"elements {self.codes} are dependent over GF({self.tower.q})")

    @classmethod
    def from_elements(cls, elements: Sequence[FieldElement | int], tower: FieldTower | None = None):
        if tower is None:
            tower = _tower_of(elements)
        codes = []
        for a in elements:
            if isinstance(a, FieldElement):
                if a.field != tower.ext:
                    raise TowerMismatch(f"{a!r} is not in {tower!r}")
                codes.append(a.code)
            else:
                codes.append(int(a))
        return cls(tower, tuple(codes))

    @classmethod
    def polynomial(cls, tower: FieldTower) -> ExtensionBasis:
        """The basis 1, x, ..., x^(m-1) in which element codes are written."""
        return cls(tower, tuple(tower.q ** j for j in range(tower.m)))

    @property
    def elements(self) -> tuple[FieldElement, ...]:
        return tuple(self.tower(c) for c in self.codes)

    @property
    def coordinate_matrix(self) -> np.ndarray:
        """Row j holds the coordinates of the j-th basis element."""
        return self.tower.ext.digits[list(self.codes)]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExtensionBasis) and self.tower == other.tower and self.codes == other.codes

    def __hash__(self) -> int:
        return hash((self.tower.key, self.codes))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.codes)

    def to_json(self) -> list:
        return [nested_coords(self.tower.ext, c) for c in self.codes]

    @classmethod
    def from_json(cls, tower: FieldTower, data: list) -> ExtensionBasis:
        return cls(tower, tuple(tower.element(c).code for c in data))


def _tower_of(elements) -> FieldTower:
    for a in elements:
        if isinstance(a, FieldElement):
            return tower_of(a.field)
    raise TowerMismatch("cannot infer the tower from plain codes; pass it explicitly")


def gram_matrix(B: ExtensionBasis, other: ExtensionBasis | None = None) -> np.ndarray:
    """Entry (i, j) is Tr(a_i b_j) over GF(q); ``other`` defaults to ``B``."""
    other = B if other is None else other
    ext = B.tower.ext
    a = np.array(B.codes)
    b = np.array(other.codes)
    return ext.trace_table[ext.mul[a[:, None], b[None, :]]]


def combine(tower: FieldTower, coeffs: np.ndarray, codes: Sequence[int]) -> int:
    """sum_i coeffs[i] * codes[i] with GF(q) coefficients."""
    ext = tower.ext
    acc = 0
    for c, a in zip(coeffs, codes):
        acc = int(ext.add[acc, ext.mul[int(c), a]])
    return acc


def dual_basis(B: ExtensionBasis) -> ExtensionBasis:
    """The unique basis B' with Tr(a_i a'_j) = delta_ij, via the inverse Gram matrix."""
    T = gram_matrix(B)
    Tinv = linalg.inverse(B.tower.base, T)
    codes = tuple(combine(B.tower, Tinv[j], B.codes) for j in range(len(B)))
    dual = ExtensionBasis(B.tower, codes)
    assert np.array_equal(gram_matrix(B, dual), np.eye(len(B), dtype=np.int64))
    return dual


def is_self_dual(B: ExtensionBasis) -> bool:
    return bool(np.array_equal(gram_matrix(B), np.eye(len(B), dtype=np.int64)))


def is_almost_self_dual(B: ExtensionBasis) -> int | None:
    """Return the base-field code ``a`` when Gram = diag(1, ..., 1, a) with a != 0."""
    T = gram_matrix(B)
    a = int(T[-1, -1])
    target = np.eye(len(B), dtype=np.int64)
    target[-1, -1] = a
    if a != 0 and np.array_equal(T, target):
        return a
    return None


@dataclass(frozen=True)
class NotExists:
    """Typed absence of a basis with the requested Gram form."""

    tower: FieldTower
    reason: str

    def __bool__(self) -> bool:
        return False


def self_dual_admissible(q: int, m: int) -> bool:
    """Parity rule for existence of a self-dual basis of GF(q^m) over GF(q)."""
    return q % 2 == 0 or m % 2 == 1


def _candidate_order(order: int, seed: int | None) -> np.ndarray:
    if seed is None:
        return np.arange(order)
    return np.random.default_rng(seed).permutation(order)


def iter_orthonormal_bases(tower: FieldTower, *, last_free: bool = False,
                           seed: int | None = None) -> Iterator[ExtensionBasis]:
    """Depth-first search over trace-orthonormal tuples.

    Each step keeps the candidates v with Tr(v g) = 0 for every chosen g and
    Tr(v^2) = 1.  With ``last_free`` the final element only needs Tr(v^2) != 0,
    which yields the almost self-dual bases.  Orthogonality to an anisotropic
    set forces linear independence, so every yielded tuple is a basis.
    """
    ext = tower.ext
    m = tower.m
    tr = ext.trace_table
    everything = np.arange(ext.order)
    sq = tr[ext.mul[everything, everything]]
    order = _candidate_order(ext.order, seed)

    def dfs(chosen: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        mask = sq != 0 if (last_free and len(chosen) == m - 1) else sq == 1
        for g in chosen:
            mask &= tr[ext.mul[g]] == 0
        for v in order[mask[order]]:
            nxt = chosen + (int(v),)
            if len(nxt) == m:
                yield nxt
            else:
                yield from dfs(nxt)

    for codes in dfs(()):
        yield ExtensionBasis(tower, codes)


def find_self_dual_basis(tower: FieldTower, seed: int | None = None) -> ExtensionBasis | NotExists:
    """First self-dual basis in search order, or :class:`NotExists` after exhausting it."""
    for B in iter_orthonormal_bases(tower, seed=seed):
        return B
    return NotExists(tower, f"no self-dual basis of GF({tower.order}) over GF({tower.q})")


def find_almost_self_dual_basis(tower: FieldTower, seed: int | None = None) -> ExtensionBasis:
    if tower.q % 2 == 0:
        raise EvenCharacteristic("almost self-dual bases are for odd q; use find_self_dual_basis")
    for B in iter_orthonormal_bases(tower, last_free=True, seed=seed):
        return B
    raise SearchExhausted(f"no almost self-dual basis found for {tower!r}")


def iter_ordered_bases(tower: FieldTower) -> Iterator[ExtensionBasis]:
    """Every ordered basis, by brute force over tuples of nonzero elements."""
    base = tower.base
    digits = tower.ext.digits

    def grow(chosen: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if len(chosen) == tower.m:
            yield chosen
            return
        for v in range(1, tower.order):
            rows = digits[list(chosen) + [v]]
            if linalg.rank(base, rows) == len(chosen) + 1:
                yield from grow(chosen + (v,))

    for codes in grow(()):
        yield ExtensionBasis(tower, codes)


def expand_vector(v, B: ExtensionBasis) -> np.ndarray:
    """n x m matrix M over GF(q) with v_i = sum_j M_ij a_j."""
    return expand_codes(B, codes_of(v, B.tower.ext).reshape(-1))


def expand_codes(B: ExtensionBasis, codes: np.ndarray) -> np.ndarray:
    """Vectorised expansion: trailing axis of length m replaces each element code."""
    inv = _inverse_coordinates(B)
    base = B.tower.base
    D = B.tower.ext.digits[np.asarray(codes, dtype=np.int64)]
    out = np.zeros(D.shape, dtype=np.int64)
    for t in range(B.tower.m):
        out = base.add[out, base.mul[D[..., t, None], inv[t]]]
    return out


_INV_CACHE: dict[tuple, np.ndarray] = {}


def _inverse_coordinates(B: ExtensionBasis) -> np.ndarray:
    key = (B.tower.key, B.codes)
    if key not in _INV_CACHE:
        _INV_CACHE[key] = linalg.inverse(B.tower.base, B.coordinate_matrix)
    return _INV_CACHE[key]


def contract(B: ExtensionBasis, M) -> np.ndarray:
    """Inverse of :func:`expand_vector`: rows of GF(q) coordinates back to element codes."""
    M = np.asarray(M, dtype=np.int64)
    return np.array([combine(B.tower, row, B.codes) for row in M.reshape(-1, B.tower.m)],
                    dtype=np.int64).reshape(M.shape[:-1])


def all_bases_count(q: int, m: int) -> int:
    count = 1
    for i in range(m):
        count *= q ** m - q ** i
    return count


__all__ = [
    "ExtensionBasis",
    "NotExists",
    "all_bases_count",
    "contract",
    "dual_basis",
    "expand_codes",
    "expand_vector",
    "find_almost_self_dual_basis",
    "find_self_dual_basis",
    "gram_matrix",
    "is_almost_self_dual",
    "is_self_dual",
    "iter_ordered_bases",
    "iter_orthonormal_bases",
    "self_dual_admissible",
]
