"""Matrix-side rank-metric codes: F_q-linear spaces of n x m matrices.

Codes and subspaces are stored canonically as the reduced row-echelon basis
of their row-major vectorisations, so equality of subspaces is a literal
array comparison.  The trace inner product Tra(A B^T) equals the dot product
of the vectorisations, which is what lets duals be computed as plain null
spaces.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import linalg
from .errors import AmbientMismatch, NotOptimalAnticode, RankMetricError, ShapeMismatch, ZeroCode
from .field import FiniteField, from_nested, make_tower, nested_coords
from .linalg import DEFAULT_MAX_ENUM


def _field_json(F: FiniteField) -> dict:
    e = F.degree if F.subfield is not None else 1
    return {"q": F.order, "p": F.prime, "e": e}


def _field_from_json(data: dict) -> FiniteField:
    q = int(data["q"])
    p = int(data.get("p", 0)) or _smallest_factor(q)
    e = 0
    while p ** (e + 1) <= q:
        e += 1
    if p ** e != q:
        raise RankMetricError(f"q={q} is not a prime power")
    return make_tower(p, e, 1).base


def _smallest_factor(n: int) -> int:
    for d in range(2, n + 1):
        if n % d == 0:
            return d
    raise RankMetricError(f"invalid field order {n}")


def _entry_json(F: FiniteField, code: int):
    coords = nested_coords(F, int(code))
    return coords[0] if isinstance(coords, list) and len(coords) == 1 else coords


@dataclass(frozen=True, eq=False)
class MatrixCode:
    """An F_q-linear subspace of n x m matrices."""

    field: FiniteField
    n: int
    m: int
    basis: np.ndarray

    @classmethod
    def from_matrices(cls, field: FiniteField, n: int, m: int, mats) -> MatrixCode:
        M = np.asarray(mats, dtype=np.int64)
        if M.size and M.shape[-2:] != (n, m):
            raise ShapeMismatch(f"matrices of shape {M.shape[-2:]}, expected {(n, m)}")
        vecs = M.reshape(-1, n * m)
        return cls(field, n, m, linalg.row_basis(field, vecs, n * m))

    @classmethod
    def from_vectors(cls, field: FiniteField, n: int, m: int, vecs) -> MatrixCode:
        return cls(field, n, m, linalg.row_basis(field, linalg.as_codes(vecs, n * m), n * m))

    @classmethod
    def zero(cls, field: FiniteField, n: int, m: int) -> MatrixCode:
        return cls(field, n, m, np.zeros((0, n * m), dtype=np.int64))

    @classmethod
    def full(cls, field: FiniteField, n: int, m: int) -> MatrixCode:
        return cls(field, n, m, np.eye(n * m, dtype=np.int64))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def generators(self) -> np.ndarray:
        return self.basis.reshape(-1, self.n, self.m)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, MatrixCode) and self.field == other.field
                and (self.n, self.m) == (other.n, other.m) and np.array_equal(self.basis, other.basis))

    def __hash__(self) -> int:
        return hash((self.field.key, self.n, self.m, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"MatrixCode(q={self.field.order}, {self.n}x{self.m}, dim={self.dim})"

    def contains(self, A) -> bool:
        v = np.asarray(A, dtype=np.int64).reshape(1, -1)
        return linalg.rank(self.field, np.concatenate([self.basis, v])) == self.dim

    def to_json(self) -> dict:
        F = self.field
        out = {"n": self.n, "m": self.m, **_field_json(F)}
        out["generators"] = [[[_entry_json(F, x) for x in row] for row in G] for G in self.generators]
        return out

    @classmethod
    def from_json(cls, data: dict) -> MatrixCode:
        F = _field_from_json(data)
        n, m = int(data["n"]), int(data["m"])
        mats = [[[from_nested(F, x) for x in row] for row in G] for G in data["generators"]]
        return cls.from_matrices(F, n, m, np.array(mats, dtype=np.int64).reshape(-1, n, m))


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of F_q^n in canonical row-echelon form."""

    field: FiniteField
    n: int
    basis: np.ndarray

    @classmethod
    def span(cls, field: FiniteField, n: int, vectors) -> Subspace:
        return cls(field, n, linalg.row_basis(field, linalg.as_codes(vectors, n), n))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Subspace) and self.field == other.field and self.n == other.n
                and np.array_equal(self.basis, other.basis))

    def __hash__(self) -> int:
        return hash((self.field.key, self.n, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"Subspace(q={self.field.order}, n={self.n}, basis={self.basis.tolist()})"

    def _check(self, other: Subspace) -> None:
        if self.field != other.field or self.n != other.n:
            raise AmbientMismatch(f"{self!r} and {other!r} live in different spaces")

    def dual(self) -> Subspace:
        return Subspace(self.field, self.n, linalg.nullspace(self.field, self.basis, self.n))

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace.span(self.field, self.n, np.concatenate([self.basis, other.basis]))

    def __and__(self, other: Subspace) -> Subspace:
        self._check(other)
        return (self.dual() + other.dual()).dual()

    def is_lcd(self) -> bool:
        return (self & self.dual()).dim == 0

    def to_json(self) -> dict:
        return {"n": self.n, **_field_json(self.field),
                "basis": [[_entry_json(self.field, x) for x in row] for row in self.basis]}

    @classmethod
    def from_json(cls, data: dict) -> Subspace:
        F = _field_from_json(data)
        n = int(data["n"])
        rows = [[from_nested(F, x) for x in row] for row in data["basis"]]
        return cls.span(F, n, rows)


def subspace_dual(U: Subspace) -> Subspace:
    return U.dual()


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    return U + V


def subspace_intersection(U: Subspace, V: Subspace) -> Subspace:
    return U & V


def is_lcd_subspace(U: Subspace) -> bool:
    return U.is_lcd()


def iter_subspaces(field: FiniteField, n: int) -> Iterator[Subspace]:
    """Every subspace of F_q^n, once each, by enumerating reduced echelon forms."""
    q = field.order
    for d in range(n + 1):
        for pivots in itertools.combinations(range(n), d):
            free = [(i, c) for i, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivots]
            for values in itertools.product(range(q), repeat=len(free)):
                B = np.zeros((d, n), dtype=np.int64)
                for i, p in enumerate(pivots):
                    B[i, p] = 1
                for (i, c), v in zip(free, values):
                    B[i, c] = v
                yield Subspace(field, n, B)


def _check_shapes(C1: MatrixCode, C2: MatrixCode) -> None:
    if (C1.n, C1.m) != (C2.n, C2.m) or C1.field != C2.field:
        raise ShapeMismatch(f"{C1!r} and {C2!r} are not comparable")


def trace_inner_product(field: FiniteField, A, B) -> int:
    """<A, B> = Tra(A B^T)."""
    A, B = np.asarray(A, dtype=np.int64), np.asarray(B, dtype=np.int64)
    if A.shape != B.shape or A.ndim != 2:
        raise ShapeMismatch(f"shapes {A.shape} and {B.shape} differ")
    P = linalg.matmul(field, A, B.T)
    acc = 0
    for i in range(P.shape[0]):
        acc = int(field.add[acc, P[i, i]])
    return acc


def dual(C: MatrixCode) -> MatrixCode:
    return MatrixCode(C.field, C.n, C.m, linalg.nullspace(C.field, C.basis, C.n * C.m))


def code_sum(C1: MatrixCode, C2: MatrixCode) -> MatrixCode:
    _check_shapes(C1, C2)
    return MatrixCode.from_vectors(C1.field, C1.n, C1.m, np.concatenate([C1.basis, C2.basis]))


def intersect(C1: MatrixCode, C2: MatrixCode) -> MatrixCode:
    _check_shapes(C1, C2)
    return dual(code_sum(dual(C1), dual(C2)))


def is_lcd(C: MatrixCode) -> bool:
    return intersect(C, dual(C)).dim == 0


@dataclass(frozen=True)
class RankRange:
    """Exact rank data of a matrix code; ``min_rank`` is 0 when ``has_nonzero`` is false."""

    min_rank: int
    max_rank: int
    has_nonzero: bool
    counts: dict[int, int]

    def to_json(self) -> dict:
        return {"min_rank": self.min_rank, "max_rank": self.max_rank, "has_nonzero": self.has_nonzero,
                "counts": {str(r): c for r, c in sorted(self.counts.items())}}


def rank_range(C: MatrixCode, max_enum: int = DEFAULT_MAX_ENUM) -> RankRange:
    """Minimum nonzero rank and maximum rank by enumerating all q^dim codewords."""
    counts: Counter[int] = Counter({0: 1})
    if C.dim:
        counts = Counter()
        for chunk in linalg.iter_span(C.field, C.basis, max_enum=max_enum):
            ranks = linalg.batch_rank(C.field, chunk.reshape(-1, C.n, C.m))
            values, freq = np.unique(ranks, return_counts=True)
            counts.update(dict(zip(values.tolist(), freq.tolist())))
    nonzero = [r for r in counts if r > 0]
    return RankRange(min(nonzero) if nonzero else 0, max(counts), bool(nonzero), dict(sorted(counts.items())))


def delsarte_bound(n: int, m: int, d: int) -> int:
    """Largest dimension allowed for minimum rank d: max(n,m) (min(n,m) - d + 1)."""
    return max(n, m) * (min(n, m) - d + 1)


def is_mrd_delsarte(C: MatrixCode, max_enum: int = DEFAULT_MAX_ENUM, ranks: RankRange | None = None) -> bool:
    if C.dim == 0:
        raise ZeroCode("MRD is undefined for the zero code")
    ranks = ranks or rank_range(C, max_enum)
    return C.dim == delsarte_bound(C.n, C.m, ranks.min_rank)


def is_optimal_anticode(C: MatrixCode, max_enum: int = DEFAULT_MAX_ENUM, ranks: RankRange | None = None) -> bool:
    """dim C = max(n, m) * maxrk(C)."""
    ranks = ranks or rank_range(C, max_enum)
    return C.dim == max(C.n, C.m) * ranks.max_rank


def lcd_anticode_criterion(C: MatrixCode, max_enum: int = DEFAULT_MAX_ENUM, ranks: RankRange | None = None) -> bool:
    """minrk(C) > min(n, m) - maxrk(C) for a nonzero optimal anticode.

    A true result guarantees C is LCD; a false one says nothing.
    """
    if C.dim == 0:
        raise ZeroCode("the criterion needs a nonzero code")
    ranks = ranks or rank_range(C, max_enum)
    if not is_optimal_anticode(C, ranks=ranks):
        raise NotOptimalAnticode(f"{C!r} is not an optimal anticode")
    return ranks.min_rank > min(C.n, C.m) - ranks.max_rank


def ambient_restriction(U: Subspace, m: int) -> MatrixCode:
    """All n x m matrices whose column space lies in U."""
    n = U.n
    gens = []
    for u in U.basis:
        for j in range(m):
            A = np.zeros((n, m), dtype=np.int64)
            A[:, j] = u
            gens.append(A)
    if not gens:
        return MatrixCode.zero(U.field, n, m)
    return MatrixCode.from_matrices(U.field, n, m, np.array(gens))


def matrix_cartesian_power(C: MatrixCode, s: int) -> MatrixCode:
    """s-fold product of C, stacking the factors as row blocks of (s n) x m matrices."""
    if s < 1:
        raise RankMetricError("s must be at least 1")
    gens = []
    for i in range(s):
        for G in C.generators:
            A = np.zeros((s * C.n, C.m), dtype=np.int64)
            A[i * C.n:(i + 1) * C.n] = G
            gens.append(A)
    if not gens:
        return MatrixCode.zero(C.field, s * C.n, C.m)
    return MatrixCode.from_matrices(C.field, s * C.n, C.m, np.array(gens))
