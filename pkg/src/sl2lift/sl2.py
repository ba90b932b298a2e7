"""Integral sl2-triples attached to distinguished parabolic gradings.

For a distinguished grading, ``X`` is a Richardson element of degree 2
with small positive integer coefficients, ``H`` is the cocharacter tau
written in simple coroots, and ``Y`` is the unique degree -2 solution of
``[X, Y] = H``.  "Defined over the valuation ring at p" is certified by
the primes occurring in the denominators of ``Y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from .chevalley import LieElt, adjoint_matrix, bracket, reduce_mod_p
from .linalg import SingularSystemError, mat_power_mod, rank_mod_p, rank_rational, solve_rational
from .parabolic import (
    ParabolicGrading,
    associated_cocharacter_coroots,
    is_distinguished,
    NotDistinguishedError,
)

RICHARDSON_BOUND = 4


class RichardsonSearchError(RuntimeError):
    pass


class TripleError(ArithmeticError):
    pass


def prime_factors(n: int) -> set[int]:
    n = abs(n)
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


@dataclass(frozen=True, eq=False)
class Sl2Triple:
    X: LieElt
    Y: LieElt
    H: LieElt
    denominator_primes: frozenset
    grading: ParabolicGrading

    @property
    def algebra(self):
        return self.X.algebra

    def to_json(self) -> dict:
        g = self.grading
        return {
            "type": g.root_system.label,
            "levi": sorted(j + 1 for j in g.levi),
            "parabolic": sorted(i + 1 for i in g.I),
            "X": self.X.to_json(),
            "Y": self.Y.to_json(),
            "H": self.H.to_json(),
            "denominator_primes": sorted(self.denominator_primes),
        }


def _block(g: ParabolicGrading, x: LieElt, src: int, dst: int) -> list[list]:
    """Matrix of ad x : g(src) -> g(dst) in the graded basis."""
    C = g.algebra
    rows = g.part(dst)
    pos = {b: i for i, b in enumerate(rows)}
    cols = g.part(src)
    M = [[0] * len(cols) for _ in rows]
    for j, b in enumerate(cols):
        y = bracket(x, C.basis_element(b, x.p))
        for k, c in y.coeffs.items():
            if k not in pos:
                raise TripleError(f"[x, {C.basis_labels[b]}] leaves degree {dst}")
            M[pos[k]][j] = c
    return M


def _rank(M, p):
    if not M or not M[0]:
        return 0
    return rank_rational(M) if p is None else rank_mod_p(M, p)


def central_defect(g: ParabolicGrading, p: int | None) -> int:
    """Dimension of the centre of the Levi's derived algebra over F_p (0 over Q)."""
    if p is None:
        return 0
    R = g.root_system
    J = sorted(g.levi)
    A = [[R.cartan_matrix[i][j] for j in J] for i in J]
    return len(J) - _rank(A, p)


def surjectivity_rank(g: ParabolicGrading, X: LieElt, p: int | None = None) -> int:
    """Rank of ad X : g(0) -> g(2)."""
    return _rank(_block(g, X, 0, 2), p)


def injectivity_rank(g: ParabolicGrading, X: LieElt, p: int | None = None) -> int:
    """Rank of ad X : g(-2) -> g(0)."""
    return _rank(_block(g, X, -2, 0), p)


def richardson_certificate(g: ParabolicGrading, X: LieElt, p: int | None = None) -> bool:
    """Rank certificate for X being Richardson, over Q (``p=None``) or F_p.

    ad X must be injective on g(-2), and ad X : g(0) -> g(2) must be onto
    up to the central defect: when p divides the order of the centre, the
    central toral elements are killed by ad X and the map cannot be onto.
    """
    if injectivity_rank(g, X, p) != g.dim(-2):
        return False
    return surjectivity_rank(g, X, p) >= g.dim(2) - central_defect(g, p)


def _coefficient_vectors(n: int, bound: int):
    yield (1,) * n
    for b in range(2, bound + 1):
        for v in product(range(1, b + 1), repeat=n):
            if max(v) == b:
                yield v


def richardson_candidate(g: ParabolicGrading, p: int | None = None,
                         bound: int = RICHARDSON_BOUND) -> LieElt:
    """First X on g(2) in the fixed search order that passes the certificate over Q (and F_p)."""
    if not is_distinguished(g):
        raise NotDistinguishedError("Richardson search needs a distinguished grading")
    C = g.algebra
    basis = g.part(2)
    for coeffs in _coefficient_vectors(len(basis), bound):
        X = C.element(dict(zip(basis, coeffs)))
        if not richardson_certificate(g, X):
            continue
        if p is not None and not richardson_certificate(g, reduce_mod_p(X, p), p):
            continue
        return X
    raise RichardsonSearchError(f"no Richardson element with coefficients in 1..{bound}")


def cartan_element(g: ParabolicGrading) -> LieElt:
    """H = d tau(1) in the H_i basis."""
    C = g.algebra
    c = associated_cocharacter_coroots(g)
    if any(x.denominator != 1 for x in c):
        raise TripleError("tau is not integral on the coroot lattice")
    return C.element({C.h(i): x for i, x in enumerate(c)})


def solve_triple(g: ParabolicGrading, X: LieElt) -> Sl2Triple:
    if not is_distinguished(g):
        raise NotDistinguishedError("triples are built for distinguished gradings only")
    C = g.algebra
    H = cartan_element(g)
    M = _block(g, X, -2, 0)
    target = g.part(0)
    rhs = [H.coeffs.get(b, 0) for b in target]
    try:
        sol = solve_rational(M, rhs)
    except SingularSystemError as exc:
        raise TripleError("ad X is not injective on g(-2); X is not Richardson") from exc
    Y = C.element(dict(zip(g.part(-2), sol)))
    dens = set()
    for v in Y.coeffs.values():
        dens |= prime_factors(Fraction(v).denominator)
    T = Sl2Triple(X, Y, H, frozenset(dens), g)
    if not verify_triple(T):
        raise TripleError("constructed triple fails the sl2 relations")
    return T


def build_triple(g: ParabolicGrading, p: int | None = None) -> Sl2Triple:
    return solve_triple(g, richardson_candidate(g, p))


def verify_triple(T: Sl2Triple, p: int | None = None) -> bool:
    """[X, Y] = H, [H, X] = 2X, [H, Y] = -2Y over Q (p=None) or F_p."""
    X, Y, H = T.X, T.Y, T.H
    if p is not None:
        if p in T.denominator_primes:
            raise TripleError(f"triple not defined over the valuation ring at {p}")
        X, Y, H = (reduce_mod_p(v, p) for v in (X, Y, H))
    return (bracket(X, Y) == H
            and bracket(H, X) == 2 * X
            and bracket(H, Y) == -2 * Y)


def order_p_criterion(g: ParabolicGrading, p: int, triple: Sl2Triple | None = None) -> bool:
    """max{i : g(i) != 0} < 2p; when it holds, also checks (ad X_k)^p = 0 over F_p."""
    ok = g.max_degree < 2 * p
    if ok and triple is not None and p not in triple.denominator_primes:
        adX = adjoint_matrix(reduce_mod_p(triple.X, p))
        if mat_power_mod(adX, p, p).any():
            raise TripleError(f"(ad X)^{p} != 0 mod {p} although the degree bound holds")
    return ok


def center_order(R) -> int:
    """Order of the centre of the simply connected group (det of the Cartan matrix)."""
    A = [list(row) for row in R.cartan_matrix]
    n = len(A)
    if n == 0:
        return 1
    # Bareiss determinant
    M = [row[:] for row in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next(i for i in range(k + 1, n) if M[i][k] != 0)
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return abs(sign * M[n - 1][n - 1])


def touches_center_boundary(R, p: int) -> bool:
    """True when p divides the centre order, where (ad X)^p = 0 is weaker than X^[p] = 0."""
    return gcd(center_order(R), p) != 1
