"""Exact linear algebra over the rationals and over prime fields.

Rational work is done fraction-free (Bareiss) on integer matrices; rows
with rational entries are cleared of denominators first.  Prime-field
matrices are numpy ``int64`` arrays reduced into ``[0, p)``, falling back
to Python-int object arrays when ``n * p**2`` could overflow.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np


class SingularSystemError(ArithmeticError):
    """Linear system without a unique solution."""


def _integer_rows(rows) -> list[list[int]]:
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        d = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * d) for x in row])
    return out


def bareiss_echelon(M: list[list[int]], ncols: int | None = None):
    """In-place fraction-free row echelon form of an integer matrix.

    Only the first ``ncols`` columns are used for pivoting.  Returns the
    list of pivot columns.
    """
    m = len(M)
    if m == 0:
        return []
    n = len(M[0]) if ncols is None else ncols
    width = len(M[0])
    pivots = []
    prev = 1
    r = 0
    for c in range(n):
        if r >= m:
            break
        piv = next((i for i in range(r, m) if M[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            M[r], M[piv] = M[piv], M[r]
        a = M[r][c]
        Mr = M[r]
        for i in range(r + 1, m):
            Mi = M[i]
            b = Mi[c]
            if b == 0:
                if prev != 1 or a != 1:
                    for j in range(c + 1, width):
                        Mi[j] = (a * Mi[j]) // prev
                continue
            for j in range(c + 1, width):
                Mi[j] = (a * Mi[j] - b * Mr[j]) // prev
            Mi[c] = 0
        prev = a
        pivots.append(c)
        r += 1
    return pivots


def rank_rational(rows) -> int:
    M = _integer_rows(rows)
    if not M or not M[0]:
        return 0
    return len(bareiss_echelon(M))


def solve_rational(A, b) -> list[Fraction]:
    """Unique solution of ``A x = b`` over Q (A may have more rows than columns)."""
    m = len(A)
    n = len(A[0]) if m else 0
    aug = _integer_rows([list(A[i]) + [b[i]] for i in range(m)])
    pivots = bareiss_echelon(aug, ncols=n)
    if len(pivots) < n:
        raise SingularSystemError("coefficient matrix has a kernel")
    for i in range(n, m):
        if aug[i][n] != 0:
            raise SingularSystemError("inconsistent system")
    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        s = Fraction(aug[i][n])
        for j in range(i + 1, n):
            if aug[i][j]:
                s -= aug[i][j] * x[j]
        x[i] = s / aug[i][i]
    return x


# --- prime fields -------------------------------------------------------------


def _needs_object(n: int, p: int) -> bool:
    return n * (p - 1) ** 2 >= 2**62


def as_mod_p(M, p: int) -> np.ndarray:
    """Reduce an integer or rational matrix into [0, p)."""
    arr = np.asarray(M, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx, x in np.ndenumerate(arr):
        out[idx] = reduce_scalar(x, p)
    n = arr.shape[-1] if arr.ndim else 1
    if _needs_object(n, p):
        return out
    return out.astype(np.int64)


def reduce_scalar(x, p: int) -> int:
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ZeroDivisionError(f"denominator {x.denominator} divisible by {p}")
    return x.numerator * pow(x.denominator, -1, p) % p


def matmul_mod(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    return (A @ B) % p


def identity_mod(n: int, p: int) -> np.ndarray:
    return np.eye(n, dtype=object if _needs_object(n, p) else np.int64)


def rank_mod_p(rows, p: int) -> int:
    M = [[reduce_scalar(x, p) for x in row] for row in rows]
    if not M or not M[0]:
        return 0
    m, n = len(M), len(M[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, p)
        Mr = [x * inv % p for x in M[r]]
        M[r] = Mr
        for i in range(r + 1, m):
            b = M[i][c]
            if b:
                Mi = M[i]
                M[i] = [(Mi[j] - b * Mr[j]) % p for j in range(n)]
        r += 1
        if r == m:
            break
    return r


def mat_power_mod(M: np.ndarray, k: int, p: int) -> np.ndarray:
    n = M.shape[0]
    result = identity_mod(n, p)
    base = M % p
    while k:
        if k & 1:
            result = matmul_mod(result, base, p)
        base = matmul_mod(base, base, p)
        k >>= 1
    return result


def inverse_mod(M: np.ndarray, p: int) -> np.ndarray:
    n = M.shape[0]
    A = [[int(x) % p for x in row] + [int(i == j) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c]), None)
        if piv is None:
            raise SingularSystemError("matrix not invertible mod p")
        A[c], A[piv] = A[piv], A[c]
        inv = pow(A[c][c], -1, p)
        A[c] = [x * inv % p for x in A[c]]
        for i in range(n):
            if i != c and A[i][c]:
                b = A[i][c]
                A[i] = [(x - b * y) % p for x, y in zip(A[i], A[c])]
    out = identity_mod(n, p).copy()
    for i in range(n):
        for j in range(n):
            out[i, j] = A[i][n + j]
    return out


# --- nilpotency ------------------------------------------------------------------


def nilpotency_degree(M, p: int | None = None):
    """Least ``m`` with ``M**m == 0``, or ``None`` if ``M`` is not nilpotent.

    ``p=None`` means exact arithmetic over Q (entries int or Fraction).
    """
    n = len(M)
    if p is None:
        A = np.array(M, dtype=object)
        P = A.copy()
    else:
        A = as_mod_p(M, p)
        P = A.copy()
    for m in range(1, n + 2):
        if not np.any(P != 0):
            return m
        P = (P @ A) if p is None else matmul_mod(P, A, p)
    return None


def is_zero(M) -> bool:
    return not np.any(np.asarray(M) != 0)


def rational_matrix(rows: Sequence[Sequence]) -> np.ndarray:
    return np.array([[Fraction(x) for x in row] for row in rows], dtype=object)
