"""Prime-field linear algebra: row reduction, rank, and exact solving.

Matrices are integer numpy arrays interpreted modulo a prime p. All
routines reduce their inputs into 0..p-1, never modify them in place, and
use deterministic first-nonzero pivoting.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class SolveError(ValueError):
    """A linear system could not be solved uniquely."""


class UnderdeterminedError(SolveError):
    """Coefficient matrix has rank below its column count."""


class InconsistentError(SolveError):
    """No solution exists; signals corrupted input rows."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A prime field GF(p)."""

    p: int

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")
        if self.p >= 1 << 31:
            raise ValueError("modulus too large for int64 arithmetic")

    @property
    def is_even(self) -> bool:
        return self.p == 2


def _as_residues(matrix: np.ndarray, p: int) -> np.ndarray:
    a = np.array(matrix, dtype=np.int64, copy=True)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {a.shape}")
    return a % p


def _row_reduce(a: np.ndarray, p: int, limit_cols: int) -> tuple[np.ndarray, list[int]]:
    """Gauss-Jordan reduction in place; pivots only in the first limit_cols."""
    rows = a.shape[0]
    pivots: list[int] = []
    r = 0
    for col in range(limit_cols):
        pivot_row = -1
        for i in range(r, rows):
            if a[i, col]:
                pivot_row = i
                break
        if pivot_row < 0:
            continue
        if pivot_row != r:
            a[[r, pivot_row]] = a[[pivot_row, r]]
        inv = pow(int(a[r, col]), -1, p)
        a[r] = a[r] * inv % p
        for i in range(rows):
            if i != r and a[i, col]:
                a[i] = (a[i] - a[i, col] * a[r]) % p
        pivots.append(col)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(matrix: np.ndarray, field: FieldSpec) -> int:
    """Rank of the matrix over GF(p)."""
    a = _as_residues(matrix, field.p)
    if a.size == 0:
        return 0
    _, pivots = _row_reduce(a, field.p, a.shape[1])
    return len(pivots)


def solve(a: np.ndarray, b: np.ndarray, field: FieldSpec) -> np.ndarray:
    """Solve a X = b over GF(p) for the unique X.

    Requires a to have full column rank; raises InconsistentError when no
    solution exists and UnderdeterminedError when the solution would not
    be unique.
    """
    p = field.p
    lhs = _as_residues(a, p)
    rhs = _as_residues(b, p)
    if lhs.shape[0] != rhs.shape[0]:
        raise ValueError(
            f"row mismatch: lhs has {lhs.shape[0]} rows, rhs has {rhs.shape[0]}"
        )
    cols = lhs.shape[1]
    aug = np.concatenate([lhs, rhs], axis=1)
    aug, pivots = _row_reduce(aug, p, cols)
    for i in range(len(pivots), aug.shape[0]):
        if aug[i, cols:].any():
            raise InconsistentError("system has no solution")
    if len(pivots) < cols:
        raise UnderdeterminedError(
            f"rank {len(pivots)} below column count {cols}"
        )
    return aug[:cols, cols:].copy()
