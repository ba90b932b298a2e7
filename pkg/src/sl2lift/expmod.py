"""Exponentials in the adjoint representation and the SL2 image over F_p.

Exponentials are computed exactly over Q as ``sum_i s^i (ad x)^i / i!``;
each coefficient matrix is checked for p-integrality before it is reduced
mod p.  The reduced coefficients then give ``x(s) = exp(s ad X)`` for
every ``s`` in F_p, and likewise ``y(s)``; the torus acts by ``t^i`` on
the eigenspace of ``ad H`` with eigenvalue ``i``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, lcm

import numpy as np

from .chevalley import LieElt, adjoint_matrix
from .linalg import as_mod_p, identity_mod, inverse_mod, matmul_mod, nilpotency_degree
from .rootdata import bad_primes
from .sl2 import Sl2Triple, order_p_criterion


class NotNilpotentError(ValueError):
    pass


class RealizationError(RuntimeError):
    """A precondition gate of the big-cell realization failed."""

    def __init__(self, gate: str, detail: str):
        super().__init__(f"{gate}: {detail}")
        self.gate = gate
        self.detail = detail


def exp_coefficients(x: LieElt) -> list[np.ndarray]:
    """The matrices (ad x)^i / i! for i = 0 .. (nilpotency degree - 1), exactly."""
    if x.p is not None:
        raise ValueError("exact exponentials need a rational element")
    ad = adjoint_matrix(x)
    n = ad.shape[0]
    den = lcm(1, *(Fraction(v).denominator for v in ad.flat))
    N = np.empty((n, n), dtype=object)
    for idx, v in np.ndenumerate(ad):
        N[idx] = int(Fraction(v) * den)
    out = [np.array([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], dtype=object)]
    P = np.eye(n, dtype=int).astype(object)
    for i in range(1, n + 1):
        P = P.dot(N)
        if not P.any():
            return out
        scale = den**i * factorial(i)
        C = np.empty((n, n), dtype=object)
        for idx, v in np.ndenumerate(P):
            C[idx] = Fraction(int(v), scale)
        out.append(C)
    raise NotNilpotentError("ad x is not nilpotent")


def exact_exp_ad(x: LieElt) -> np.ndarray:
    """exp(ad x) over Q; refused unless ad x is nilpotent."""
    coeffs = exp_coefficients(x)
    total = coeffs[0].copy()
    for C in coeffs[1:]:
        total = total + C
    return total


def p_integrality_check(M, p: int) -> bool:
    return all(Fraction(v).denominator % p != 0 for v in np.asarray(M, dtype=object).flat)


def _reduce(M: np.ndarray, p: int) -> np.ndarray:
    return as_mod_p(M, p)


@dataclass(eq=False)
class BigCellRealization:
    p: int
    triple: Sl2Triple
    x_coeffs: list = field(repr=False)
    y_coeffs: list = field(repr=False)
    degrees: tuple = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.degrees)

    def _poly(self, coeffs, s: int) -> np.ndarray:
        p = self.p
        out = np.zeros_like(identity_mod(self.dim, p))
        power = 1
        for C in coeffs:
            out = (out + power * C) % p
            power = power * s % p
        return out

    def x_of(self, s: int) -> np.ndarray:
        return self._poly(self.x_coeffs, s % self.p)

    def y_of(self, s: int) -> np.ndarray:
        return self._poly(self.y_coeffs, s % self.p)

    def h_of(self, t: int) -> np.ndarray:
        p = self.p
        t %= p
        if t == 0:
            raise ZeroDivisionError("h_of needs a unit")
        M = identity_mod(self.dim, p)
        for k, d in enumerate(self.degrees):
            M[k, k] = pow(t, d, p)
        return M

    def n_of(self, t: int) -> np.ndarray:
        """x(t) y(-1/t) x(t)."""
        p = self.p
        tinv = pow(t, -1, p)
        return matmul_mod(matmul_mod(self.x_of(t), self.y_of(-tinv), p), self.x_of(t), p)


def ad_eigenvalues(H: LieElt) -> tuple[int, ...]:
    """Diagonal of ad H (ad H is diagonal in the Chevalley basis)."""
    M = adjoint_matrix(H)
    n = M.shape[0]
    for i in range(n):
        for j in range(n):
            if i != j and M[i, j] != 0:
                raise ValueError("ad H is not diagonal")
    return tuple(int(M[i, i]) for i in range(n))


def realize_big_cell(T: Sl2Triple, p: int) -> BigCellRealization:
    R = T.algebra.root_system
    g = T.grading
    if p in bad_primes(R):
        raise RealizationError("good_prime", f"{p} is bad for {R.label}")
    if not order_p_criterion(g, p, None):
        raise RealizationError("order_p", f"grading height {g.max_degree} >= 2p = {2 * p}")
    if p in T.denominator_primes:
        raise RealizationError("denominators", f"{p} divides a denominator of Y")
    reduced = []
    for name, elt in (("exp_ad_X", T.X), ("exp_ad_Y", T.Y)):
        coeffs = exp_coefficients(elt)
        total = coeffs[0].copy()
        for C in coeffs[1:]:
            total = total + C
        if not p_integrality_check(total, p) or not all(p_integrality_check(C, p) for C in coeffs):
            raise RealizationError("p_integrality", f"{name} is not {p}-integral")
        reduced.append([_reduce(C, p) for C in coeffs])
    return BigCellRealization(p, T, reduced[0], reduced[1], ad_eigenvalues(T.H))


def is_unipotent(M: np.ndarray, p: int) -> bool:
    n = M.shape[0]
    return nilpotency_degree((M - identity_mod(n, p)) % p, p) is not None


def unipotent_order(M: np.ndarray, p: int) -> int:
    """Order of a unipotent matrix over F_p (always a power of p)."""
    n = M.shape[0]
    M = np.asarray(M) % p
    if not is_unipotent(M, p):
        raise NotNilpotentError("matrix is not unipotent")
    one = identity_mod(n, p)
    order, P = 1, M
    while not np.array_equal(P, one):
        Q = one
        for _ in range(p):
            Q = matmul_mod(Q, P, p)
        P = Q
        order *= p
    return order


def verify_sl2_relations(B: BigCellRealization) -> dict:
    """Check the SL2 relations on all of F_p; returns a per-identity report."""
    p = B.p
    t0 = time.perf_counter()
    counts: dict[str, list[int]] = {}

    def record(name, ok):
        c = counts.setdefault(name, [0, 0])
        c[0 if ok else 1] += 1

    xs = [B.x_of(s) for s in range(p)]
    ys = [B.y_of(s) for s in range(p)]
    hs = {t: B.h_of(t) for t in range(1, p)}
    hinv = {t: hs[pow(t, -1, p)] for t in range(1, p)}
    for s in range(p):
        for s2 in range(p):
            record("x_additive", np.array_equal(matmul_mod(xs[s], xs[s2], p), xs[(s + s2) % p]))
            record("y_additive", np.array_equal(matmul_mod(ys[s], ys[s2], p), ys[(s + s2) % p]))
    for t in range(1, p):
        for t2 in range(1, p):
            record("h_multiplicative", np.array_equal(matmul_mod(hs[t], hs[t2], p), hs[t * t2 % p]))
    for t in range(1, p):
        for s in range(p):
            lhs = matmul_mod(matmul_mod(hs[t], xs[s], p), hinv[t], p)
            record("h_conjugates_x", np.array_equal(lhs, xs[t * t * s % p]))
    n_minus1 = B.n_of(p - 1)
    for t in range(1, p):
        record("weyl_n_n", np.array_equal(matmul_mod(B.n_of(t), n_minus1, p), hs[t]))
    n1 = B.n_of(1)
    n1inv = inverse_mod(n1, p)
    conj = [matmul_mod(matmul_mod(n1, xs[s], p), n1inv, p) for s in range(p)]
    sign = None
    for c in (1, -1):
        if np.array_equal(conj[1], ys[c % p]):
            sign = c
            break
    for s in range(p):
        ok = sign is not None and np.array_equal(conj[s], ys[sign * s % p])
        record("weyl_conjugates_x", ok)
    identities = {k: {"pass": v[0], "fail": v[1]} for k, v in counts.items()}
    return {
        "p": p,
        "dim": B.dim,
        "sign": sign,
        "identities": identities,
        "all_pass": all(v[1] == 0 for v in counts.values()) and sign is not None,
        "seconds": round(time.perf_counter() - t0, 3),
    }
