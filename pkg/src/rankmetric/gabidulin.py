"""Vector-side rank-metric codes over GF(q^m).

A :class:`VectorCode` is the row space of a full-rank generator matrix of
element codes.  The zero code (dimension 0) is a legal value so that duals of
the full space stay total.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .basis import ExtensionBasis, expand_codes
from .delsarte import MatrixCode
from .errors import BadDimension, DependentGenerators, RankMetricError, TowerMismatch
from .field import FieldTower, codes_of, nested_coords
from .linalg import DEFAULT_MAX_ENUM


@dataclass(frozen=True, eq=False)
class VectorCode:
    tower: FieldTower
    generator: np.ndarray
    n: int = field(default=-1)

    def __post_init__(self):
        G = np.array(self.generator, dtype=np.int64)
        if G.ndim == 1:
            G = G.reshape(1, -1) if G.size else G.reshape(0, max(self.n, 0))
        n = G.shape[1] if self.n < 0 else self.n
        if G.shape[0] and G.shape[1] != n:
            raise BadDimension(f"generator has {G.shape[1]} columns, expected {n}")
        G = G.reshape(G.shape[0], n)
        if linalg.rank(self.tower.ext, G) != G.shape[0]:
            raise RankMetricError("generator rows are dependent over GF(q^m)")
        object.__setattr__(self, "generator", G)
        object.__setattr__(self, "n", n)

    @classmethod
    def from_rows(cls, tower: FieldTower, rows, n: int | None = None) -> VectorCode:
        """Code spanned by arbitrary (possibly dependent) rows."""
        R = codes_of(rows, tower.ext) if len(rows) else np.zeros((0, n or 0), dtype=np.int64)
        R = linalg.as_codes(R, n)
        return cls(tower, linalg.row_basis(tower.ext, R, R.shape[1]), R.shape[1])

    @property
    def k(self) -> int:
        return self.generator.shape[0]

    dimension = k

    def canonical(self) -> np.ndarray:
        return linalg.row_basis(self.tower.ext, self.generator, self.n)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, VectorCode) and self.tower == other.tower and self.n == other.n
                and np.array_equal(self.canonical(), other.canonical()))

    def __hash__(self) -> int:
        return hash((self.tower.key, self.n, self.canonical().tobytes()))

    def __repr__(self) -> str:
        return f"VectorCode(q^m={self.tower.order}, n={self.n}, k={self.k})"

    def contains(self, v) -> bool:
        v = codes_of(v, self.tower.ext).reshape(1, -1)
        return linalg.rank(self.tower.ext, np.concatenate([self.generator, v])) == self.k

    def to_json(self) -> dict:
        ext = self.tower.ext
        return {
            "tower": self.tower.descriptor(),
            "n": self.n,
            "generator": [[nested_coords(ext, c) for c in row] for row in self.generator],
        }

    @classmethod
    def from_json(cls, data: dict) -> VectorCode:
        tower = FieldTower.from_descriptor(data["tower"])
        rows = [[tower.element(c).code for c in row] for row in data["generator"]]
        n = data.get("n", len(rows[0]) if rows else 0)
        return cls.from_rows(tower, rows, n)


@dataclass(frozen=True)
class RankProfile:
    min_rank: int
    counts: dict[int, int]

    def to_json(self) -> dict:
        return {"min_rank": self.min_rank, "counts": {str(r): c for r, c in sorted(self.counts.items())}}


def _check_tower(tower: FieldTower, other: FieldTower) -> None:
    if tower != other:
        raise TowerMismatch(f"{tower!r} vs {other!r}")


def vector_rank(tower: FieldTower, v) -> int:
    """Dimension over GF(q) of the span of the coordinates of ``v``."""
    v = codes_of(v, tower.ext).reshape(-1)
    if v.size == 0:
        return 0
    return linalg.rank(tower.base, tower.ext.digits[v])


def vector_ranks(tower: FieldTower, words: np.ndarray) -> np.ndarray:
    """Batched :func:`vector_rank` over the rows of ``words``."""
    words = np.asarray(words, dtype=np.int64)
    return linalg.batch_rank(tower.base, tower.ext.digits[words])


def moore_matrix(tower: FieldTower, g, k: int) -> np.ndarray:
    """k x n matrix whose row i is (g_1^[i], ..., g_n^[i])."""
    g = codes_of(g, tower.ext).reshape(-1)
    n = g.size
    if not 1 <= k <= n:
        raise BadDimension(f"need 1 <= k <= n, got k={k}, n={n}")
    if n > tower.m:
        raise BadDimension(f"length n={n} exceeds m={tower.m}")
    if vector_rank(tower, g) != n:
        raise DependentGenerators("generators are dependent over the base field")
    return np.stack([tower.ext.frobenius_table(i)[g] for i in range(k)])


def gabidulin_code(tower: FieldTower, g, k: int) -> VectorCode:
    return VectorCode(tower, moore_matrix(tower, g, k))


def iter_codewords(C: VectorCode, max_enum: int = DEFAULT_MAX_ENUM):
    if C.k == 0:
        yield np.zeros((1, C.n), dtype=np.int64)
        return
    yield from linalg.iter_span(C.tower.ext, C.generator, max_enum=max_enum)


def min_rank_distance(C: VectorCode, max_enum: int = DEFAULT_MAX_ENUM) -> RankProfile:
    """Exact rank distribution by enumerating all q^(mk) codewords."""
    counts: Counter[int] = Counter()
    for chunk in iter_codewords(C, max_enum):
        ranks = vector_ranks(C.tower, chunk)
        values, freq = np.unique(ranks, return_counts=True)
        counts.update(dict(zip(values.tolist(), freq.tolist())))
    nonzero = [r for r in counts if r > 0]
    return RankProfile(min(nonzero) if nonzero else 0, dict(sorted(counts.items())))


def dual_code(C: VectorCode) -> VectorCode:
    """Euclidean dual over GF(q^m); the zero code when C is the full space."""
    H = linalg.nullspace(C.tower.ext, C.generator, C.n)
    return VectorCode(C.tower, H, C.n)


def gram_product(C: VectorCode) -> np.ndarray:
    """G G^T over GF(q^m)."""
    return linalg.matmul(C.tower.ext, C.generator, C.generator.T)


def is_lcd_massey(C: VectorCode) -> bool:
    """C is LCD iff G G^T is nonsingular."""
    if C.k == 0:
        return True
    return linalg.rank(C.tower.ext, gram_product(C)) == C.k


def hull(C: VectorCode) -> VectorCode:
    """C intersected with its dual, as the null space of the stacked generators."""
    H = dual_code(C).generator
    stacked = np.concatenate([C.generator, H]) if H.size else C.generator
    return VectorCode(C.tower, linalg.nullspace(C.tower.ext, stacked, C.n), C.n)


def hull_dimension(C: VectorCode) -> int:
    D = dual_code(C)
    stacked = np.concatenate([C.generator, D.generator])
    return C.k + D.k - linalg.rank(C.tower.ext, stacked)


def singleton_bound(n: int, k: int, m: int) -> int:
    """Largest d with m k <= max(n, m) (min(n, m) - d + 1); equals n - k + 1 when n <= m."""
    big, small = max(n, m), min(n, m)
    return small + 1 - -(-m * k // big)


def is_mrd(C: VectorCode, max_enum: int = DEFAULT_MAX_ENUM, profile: RankProfile | None = None) -> bool:
    """Meets the rank-metric Singleton bound with equality.

    For n <= m this is d_r = n - k + 1.  For longer codes (cartesian powers)
    the bound is taken in matrix form, m k = max(n, m) (min(n, m) - d_r + 1),
    which is exactly Delsarte MRD-ness of any expansion.
    """
    if C.k == 0:
        raise RankMetricError("the zero code has no minimum rank")
    profile = profile or min_rank_distance(C, max_enum)
    d = profile.min_rank
    m = C.tower.m
    return m * C.k == max(C.n, m) * (min(C.n, m) - d + 1)


def cartesian_power(C: VectorCode, s: int) -> VectorCode:
    """C x ... x C (s factors) with a block-diagonal generator."""
    if s < 1:
        raise BadDimension("s must be at least 1")
    G = np.zeros((C.k * s, C.n * s), dtype=np.int64)
    for i in range(s):
        G[i * C.k:(i + 1) * C.k, i * C.n:(i + 1) * C.n] = C.generator
    return VectorCode(C.tower, G, C.n * s)


def expand_code(C: VectorCode, B: ExtensionBasis) -> MatrixCode:
    """Delsarte code {M_B(c) : c in C} of n x m matrices over GF(q)."""
    _check_tower(C.tower, B.tower)
    tower = C.tower
    m = tower.m
    scalars = np.array([tower.q ** j for j in range(m)])
    # beta * g_i for beta over a GF(q)-basis of GF(q^m) spans C over GF(q)
    words = tower.ext.mul[scalars[:, None, None], C.generator[None, :, :]].reshape(-1, C.n)
    mats = expand_codes(B, words)
    return MatrixCode.from_matrices(tower.base, C.n, m, mats)
