"""Exact Gaussian elimination over a table-driven finite field.

All routines take the field first and operate on integer code arrays.
Pivoting is deterministic: the leftmost pivot column, and within it the first
row at or below the current position.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .errors import EnumerationTooLarge, RankMetricError
from .field import FiniteField

DEFAULT_MAX_ENUM = 2 ** 20


def as_codes(M, cols: int | None = None) -> np.ndarray:
    A = np.array(M, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(1, -1) if A.size or cols is None else A.reshape(0, cols)
    if A.size == 0 and cols is not None:
        A = A.reshape(0, cols)
    return A


def rref(F: FiniteField, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form and pivot columns."""
    A = as_codes(M).copy()
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = F.mul[F.inv[A[r, c]], A[r]]
        factors = A[:, c].copy()
        factors[r] = 0
        A = F.sub[A, F.mul[factors[:, None], A[r][None, :]]]
        pivots.append(c)
        r += 1
    return A, pivots


def row_basis(F: FiniteField, M, cols: int | None = None) -> np.ndarray:
    """Canonical basis (nonzero RREF rows) of the row space of ``M``."""
    A = as_codes(M, cols)
    if A.shape[0] == 0:
        return A.reshape(0, A.shape[1])
    R, piv = rref(F, A)
    return R[: len(piv)]


def rank(F: FiniteField, M) -> int:
    A = as_codes(M)
    if A.size == 0:
        return 0
    return len(rref(F, A)[1])


def nullspace(F: FiniteField, M, cols: int | None = None) -> np.ndarray:
    """Canonical basis of ``{x : M x = 0}``, as rows."""
    A = as_codes(M, cols)
    n = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref(F, A)
    free = [c for c in range(n) if c not in piv]
    N = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        N[t, f] = 1
        for i, pc in enumerate(piv):
            N[t, pc] = F.neg[R[i, f]]
    return row_basis(F, N, n)


def matmul(F: FiniteField, A, B) -> np.ndarray:
    A, B = as_codes(A), as_codes(B)
    if A.shape[1] != B.shape[0]:
        raise RankMetricError(f"cannot multiply {A.shape} by {B.shape}")
    acc = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(A.shape[1]):
        acc = F.add[acc, F.mul[A[:, t, None], B[None, t, :]]]
    return acc


def inverse(F: FiniteField, M) -> np.ndarray:
    A = as_codes(M)
    n = A.shape[0]
    if A.shape != (n, n):
        raise RankMetricError("only square matrices are invertible")
    R, piv = rref(F, np.concatenate([A, np.eye(n, dtype=np.int64)], axis=1))
    if piv[:n] != list(range(n)):
        raise RankMetricError("matrix is singular")
    return R[:, n:]


def same_row_space(F: FiniteField, A, B, cols: int) -> bool:
    a, b = row_basis(F, A, cols), row_basis(F, B, cols)
    return a.shape == b.shape and bool(np.array_equal(a, b))


def batch_rank(F: FiniteField, mats: np.ndarray) -> np.ndarray:
    """Ranks of a stack of matrices with shape (N, rows, cols)."""
    A = np.array(mats, dtype=np.int64)
    N, rows, cols = A.shape
    if rows < cols:
        A = A.transpose(0, 2, 1).copy()
        rows, cols = cols, rows
    rk = np.zeros(N, dtype=np.int64)
    idx = np.arange(N)
    row_ids = np.arange(rows)
    for c in range(cols):
        live = (A[:, :, c] != 0) & (row_ids[None, :] >= rk[:, None])
        has = live.any(axis=1)
        if not has.any():
            continue
        b = idx[has]
        piv = np.argmax(live[has], axis=1)
        dest = rk[has]
        # swap pivot row into position rk
        tmp = A[b, dest].copy()
        A[b, dest] = A[b, piv]
        A[b, piv] = tmp
        prow = F.mul[F.inv[A[b, dest, c]][:, None], A[b, dest]]
        A[b, dest] = prow
        below = row_ids[None, :] > dest[:, None]
        factors = np.where(below, A[b, :, c], 0)
        A[b] = F.sub[A[b], F.mul[factors[:, :, None], prow[:, None, :]]]
        rk[has] += 1
    return rk


def span_size(F: FiniteField, dim: int) -> int:
    return F.order ** dim


def iter_span(F: FiniteField, rows, *, max_enum: int = DEFAULT_MAX_ENUM,
              chunk: int = 1 << 15) -> Iterator[np.ndarray]:
    """Yield every F-linear combination of ``rows`` in chunks of shape (N, len).

    Combination index ``i`` uses coefficient ``(i // |F|^t) % |F|`` on row t,
    so the first element is always the zero vector.
    """
    R = as_codes(rows)
    k, length = R.shape
    total = F.order ** k
    if total > max_enum:
        raise EnumerationTooLarge(f"{total} codewords exceed the enumeration cap {max_enum}")
    for start in range(0, total, chunk):
        ids = np.arange(start, min(total, start + chunk))
        acc = np.zeros((ids.size, length), dtype=np.int64)
        for t in range(k):
            coef = (ids // F.order ** t) % F.order
            acc = F.add[acc, F.mul[coef[:, None], R[t][None, :]]]
        yield acc
