"""Small dense-matrix routines for defective Jacobians.

Rank detection by row reduction with a relative pivot threshold, Jordan
block-size detection by rank stabilization of the shifted-matrix powers,
and construction of chains of generalized eigenvectors

    A X_1 = lam X_1,   A X_k = lam X_k + X_{k-1}   (k = 2..s)

for the single-block case s = dim, which is the only one the solvers need.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ChainConstructionError,
    InvalidInputError,
    PreconditionError,
    UnsupportedConfigurationError,
)

MAX_DIM = 8
DEFAULT_TOL = 1e-10


def _as_square(M) -> np.ndarray:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise InvalidInputError(f"expected a square matrix, got shape {M.shape}")
    if M.shape[0] < 1 or M.shape[0] > MAX_DIM:
        raise InvalidInputError(f"matrix dimension must be in [1, {MAX_DIM}]")
    if not np.all(np.isfinite(M)):
        raise InvalidInputError("matrix entries must be finite")
    return M


def _inf_norm(M: np.ndarray) -> float:
    return float(np.abs(M).sum(axis=1).max())


def numeric_rank(M, tol: float = DEFAULT_TOL) -> int:
    """Rank of M by Gaussian elimination with pivot threshold tol*||M||_inf.

    The zero matrix has rank 0.
    """
    A = _as_square(M).copy()
    if tol <= 0:
        raise InvalidInputError("tol must be positive")
    n = A.shape[0]
    thresh = tol * _inf_norm(A)
    rank = 0
    row = 0
    for col in range(n):
        p = int(np.argmax(np.abs(A[row:, col]))) + row
        if abs(A[p, col]) <= thresh:
            continue
        if p != row:
            A[[row, p]] = A[[p, row]]
        A[row + 1 :] -= np.outer(A[row + 1 :, col] / A[row, col], A[row])
        rank += 1
        row += 1
        if row == n:
            break
    return rank


def block_size(A, lam: float, tol: float = DEFAULT_TOL) -> int:
    """Least s >= 1 with rank((A - lam I)^s) == rank((A - lam I)^{s+1}).

    s equal to the matrix dimension means a single Jordan block.
    """
    A = _as_square(A)
    n = A.shape[0]
    B = A - lam * np.eye(n)
    if numeric_rank(B, tol) >= n:
        raise PreconditionError(f"{lam!r} is not an eigenvalue within tolerance")

    def rank_of_power(s: int) -> int:
        P = np.linalg.matrix_power(B, s)
        # Cancellation in powers of a nilpotent matrix can leave roundoff
        # residue; measure it against the scale ||B||^s, not against itself.
        scale = max(_inf_norm(B), 1.0) ** s
        P = np.where(np.abs(P) <= tol * scale, 0.0, P)
        return numeric_rank(P, tol) if np.any(P) else 0

    prev = rank_of_power(1)
    for s in range(1, n + 2):
        nxt = rank_of_power(s + 1)
        if nxt == prev:
            return s
        prev = nxt
    raise RuntimeError("rank sequence failed to stabilize (numerical drift)")


def _solve_with_free(B: np.ndarray, b: np.ndarray, free_values, thresh: float) -> np.ndarray:
    """Solve B x = b by Gauss-Jordan reduction, assigning the values in
    ``free_values`` to the non-pivot (free) unknowns in column order.

    Columns are scanned last-to-first so that for the lower-triangular-type
    shifted Jacobians of the supported systems the free unknowns land on the
    same components the analytic chains parameterize."""
    n = B.shape[0]
    Ab = np.column_stack([B, b]).astype(float)
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in reversed(range(n)):
        p = int(np.argmax(np.abs(Ab[row:, col]))) + row
        if abs(Ab[p, col]) <= thresh:
            continue
        if p != row:
            Ab[[row, p]] = Ab[[p, row]]
        Ab[row] = Ab[row] / Ab[row, col]
        for r in range(n):
            if r != row:
                Ab[r] = Ab[r] - Ab[r, col] * Ab[row]
        pivots.append((row, col))
        row += 1
        if row == n:
            break
    rhs_scale = 1.0 + float(np.abs(b).max(initial=0.0))
    for r in range(row, n):
        if abs(Ab[r, n]) > thresh * rhs_scale:
            raise ChainConstructionError("chain system is inconsistent (no solution)")
    pivot_cols = {c for _, c in pivots}
    free_cols = [c for c in range(n) if c not in pivot_cols]
    x = np.zeros(n)
    for i, c in enumerate(free_cols):
        x[c] = free_values[i] if i < len(free_values) else 0.0
    for r, c in pivots:
        x[c] = Ab[r, n] - sum(Ab[r, fc] * x[fc] for fc in free_cols)
    return x


@dataclass(frozen=True)
class JordanChain:
    """Ordered generalized-eigenvector set X_1..X_s for eigenvalue ``eigenvalue``.

    ``vectors`` holds X_k as rows; ``matrix()`` returns them as columns, the
    transformation matrix P with A P = P J."""

    eigenvalue: float
    vectors: np.ndarray
    free_params: tuple[float, ...]
    residual: float

    @property
    def length(self) -> int:
        return self.vectors.shape[0]

    def matrix(self) -> np.ndarray:
        return self.vectors.T.copy()


def jordan_matrix(lam: float, s: int) -> np.ndarray:
    """The s x s single Jordan block with lam on the diagonal."""
    return lam * np.eye(s) + np.diag(np.ones(s - 1), 1)


def build_chain(A, lam: float, s: int, free_params=None, tol: float = DEFAULT_TOL) -> JordanChain:
    """Construct the Jordan chain X_1..X_s for a single-block eigenvalue.

    X_1 is the true eigenvector with its free component normalized to 1;
    each later solve's free unknown is taken from ``free_params`` in order
    (default 0). Only s == dim is supported.
    """
    A = _as_square(A)
    n = A.shape[0]
    if s != n:
        raise UnsupportedConfigurationError(
            f"only full-length chains are supported (s = {s}, dim = {n})"
        )
    free = [float(v) for v in (free_params if free_params is not None else [])]
    B = A - lam * np.eye(n)
    thresh = tol * max(_inf_norm(B), 1.0)

    vectors = np.zeros((s, n))
    vectors[0] = _solve_with_free(B, np.zeros(n), [1.0], thresh)
    if np.abs(vectors[0]).max() <= thresh:
        raise ChainConstructionError("eigenvector solve returned the zero vector")
    for k in range(1, s):
        val = free[k - 1] if k - 1 < len(free) else 0.0
        vectors[k] = _solve_with_free(B, vectors[k - 1], [val], thresh)

    residual = 0.0
    prev = np.zeros(n)
    for k in range(s):
        r = A @ vectors[k] - lam * vectors[k] - prev
        residual = max(residual, float(np.abs(r).max()))
        prev = vectors[k]
    if residual > tol * (1.0 + _inf_norm(A)):
        raise ChainConstructionError(f"chain residual {residual:.3e} exceeds tolerance")
    return JordanChain(float(lam), vectors, tuple(free), residual)


def chain_determinant(chain: JordanChain) -> float:
    """Determinant of P = [X_1 | ... | X_s]; requires a full-length chain."""
    s, n = chain.vectors.shape
    if s < n:
        raise UnsupportedConfigurationError("chain shorter than dimension has no square P")
    return float(np.linalg.det(chain.matrix()))


def chain_defect(A, chain: JordanChain) -> float:
    """|| A P - P J ||_inf for a constructed chain; verification helper."""
    A = _as_square(A)
    P = chain.matrix()
    J = jordan_matrix(chain.eigenvalue, chain.length)
    return _inf_norm(A @ P - P @ J)
