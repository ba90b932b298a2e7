"""Trace-form projection and the Springer map for GL(n), Sp(2n), SO(n).

Groups are realized on ``V = F^n`` preserving an antidiagonal form:
``Sp`` uses ``J = [[0, K], [-K, 0]]`` with ``K`` the antidiagonal ones
matrix, ``SO`` uses the antidiagonal ones matrix itself, ``GL`` has no
form.  The Lie algebra is computed as the kernel of
``X -> X^T J + J X`` over the prime field; the projection onto it is
orthogonal for ``beta(A, B) = tr(AB)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .ffield import GF, Matrix, field as make_field

FAMILIES = ("GL", "Sp", "SO")


class SetupError(ValueError):
    pass


class NotInGroupError(ValueError):
    pass


def _form(family: str, n: int, F: GF) -> Matrix | None:
    if family == "GL":
        return None
    J = F.zeros(n)
    if family == "SO":
        for i in range(n):
            J[i][n - 1 - i] = 1
        return J
    if n % 2:
        raise SetupError("Sp(n) needs even n")
    h = n // 2
    for i in range(h):
        J[i][n - 1 - i] = 1
        J[n - 1 - i][i] = F.neg(1)
    return J


def _matrix_units(n: int) -> list[Matrix]:
    out = []
    for i in range(n):
        for j in range(n):
            M = [[0] * n for _ in range(n)]
            M[i][j] = 1
            out.append(M)
    return out


def _form_algebra(F: GF, J: Matrix | None, n: int, mask=None) -> list[Matrix]:
    """Basis of {X : X^T J + J X = 0}, optionally restricted to entries allowed by ``mask``."""
    units = [(i, j) for i in range(n) for j in range(n) if mask is None or mask(i, j)]
    if J is None:
        return [_unit(n, i, j) for i, j in units]
    # columns: unknown entries; rows: entries of X^T J + J X
    rows = []
    Jt = J
    for a in range(n):
        for b in range(n):
            row = []
            for (i, j) in units:
                # (X^T J)[a][b] = X[i][a] J[i][b] for the unit at (i, j) with j == a
                v = 0
                if j == a:
                    v = F.add(v, Jt[i][b])
                # (J X)[a][b] = J[a][i] X[i][b] with j == b
                if j == b:
                    v = F.add(v, J[a][i])
                row.append(v)
            rows.append(row)
    basis = []
    for vec in F.nullspace(rows, len(units)):
        M = F.zeros(n)
        for c, (i, j) in zip(vec, units):
            M[i][j] = c
        basis.append(M)
    return basis


def _unit(n, i, j):
    M = [[0] * n for _ in range(n)]
    M[i][j] = 1
    return M


@dataclass(eq=False)
class MatrixGroupSetup:
    family: str
    n: int
    field: GF
    form: Matrix | None
    lie_basis: list = field(repr=False)
    gram: Matrix = field(repr=False)
    gram_inverse: Matrix = field(repr=False)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def dim(self) -> int:
        return len(self.lie_basis)

    def beta(self, A: Matrix, B: Matrix) -> int:
        F = self.field
        return F.trace(F.matmul(A, B))

    def combine(self, coeffs) -> Matrix:
        F = self.field
        M = F.zeros(self.n)
        for c, B in zip(coeffs, self.lie_basis):
            if c:
                M = F.matadd(M, F.scale(c, B))
        return M

    def coordinates(self, A: Matrix) -> list[int]:
        """Coordinates of project(A) in the Lie basis."""
        F = self.field
        rhs = [[self.beta(A, B)] for B in self.lie_basis]
        return [r[0] for r in F.matmul(self.gram_inverse, rhs)]

    def in_algebra(self, A: Matrix) -> bool:
        F = self.field
        if self.form is None:
            return True
        J = self.form
        return F.is_zero(F.matadd(F.matmul(F.transpose(A), J), F.matmul(J, A)))

    def in_group(self, g: Matrix) -> bool:
        F = self.field
        if F.det(g) == 0:
            return False
        if self.form is None:
            return True
        J = self.form
        if F.matmul(F.matmul(F.transpose(g), J), g) != J:
            return False
        return self.family != "SO" or F.det(g) == 1


def build_setup(family: str, n: int, p: int, m: int = 1) -> MatrixGroupSetup:
    if family not in FAMILIES:
        raise SetupError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if family in ("Sp", "SO") and p == 2:
        raise SetupError(f"p = 2 is excluded for {family}")
    F = make_field(p, m)
    J = _form(family, n, F)
    basis = _form_algebra(F, J, n)
    gram = [[F.trace(F.matmul(A, B)) for B in basis] for A in basis]
    if F.det(gram) == 0:
        raise SetupError(f"trace form on {family}({n}) is degenerate at p = {p}")
    return MatrixGroupSetup(family, n, F, J, basis, gram, F.inverse(gram))


def project(A: Matrix, S: MatrixGroupSetup) -> Matrix:
    """Orthogonal projection of A onto the Lie algebra for the trace form."""
    return S.combine(S.coordinates(A))


def check_p_power_compat(g: Matrix, S: MatrixGroupSetup) -> bool:
    """pi(g^p) == pi(g)^p, with the p-operation the ordinary matrix power."""
    if not S.in_group(g):
        raise NotInGroupError("element does not preserve the form")
    F, p = S.field, S.p
    return project(F.matpow(g, p), S) == F.matpow(project(g, S), p)


def is_unipotent(u: Matrix, F: GF) -> bool:
    N = F.matsub(u, F.identity(len(u)))
    return F.is_zero(F.matpow(N, len(u)))


def is_nilpotent(N: Matrix, F: GF) -> bool:
    return F.is_zero(F.matpow(N, len(N)))


def springer_map(u: Matrix, S: MatrixGroupSetup) -> Matrix:
    """u - 1 for GL; the trace-form projection of u otherwise."""
    F = S.field
    if not is_unipotent(u, F):
        raise ValueError("springer_map needs a unipotent element")
    if not S.in_group(u):
        raise NotInGroupError("element does not preserve the form")
    if S.family == "GL":
        return F.matsub(u, F.identity(S.n))
    return project(u, S)


# --- pseudorandom group elements -------------------------------------------------


def _random_vector(F: GF, n: int, rng: random.Random) -> list[int]:
    while True:
        v = [rng.randrange(F.q) for _ in range(n)]
        if any(v):
            return v


def _outer(F: GF, u, v) -> Matrix:
    return [[F.mul(a, b) for b in v] for a in u]


def _generator(S: MatrixGroupSetup, rng: random.Random) -> list[Matrix]:
    """One or two elementary form-preserving matrices (a single element of G)."""
    F, n = S.field, S.n
    one = F.identity(n)
    if S.family == "GL":
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        M = F.identity(n)
        if i != j:
            M[i][j] = rng.randrange(F.q)
        k = rng.randrange(n)
        M[k][k] = F.mul(M[k][k], rng.randrange(1, F.q))
        return [M]
    J = S.form
    if S.family == "Sp":
        # transvection x -> x + a <x, v> v with <x, v> = x^T J v
        v = _random_vector(F, n, rng)
        a = rng.randrange(1, F.q)
        Jv = [sum_(F, (F.mul(J[i][k], v[k]) for k in range(n))) for i in range(n)]
        return [F.matadd(one, F.scale(a, _outer(F, v, Jv)))]
    # SO: product of two reflections x -> x - 2 B(x, v)/B(v, v) v
    out = []
    for _ in range(2):
        while True:
            v = _random_vector(F, n, rng)
            Sv = [sum_(F, (F.mul(J[i][k], v[k]) for k in range(n))) for i in range(n)]
            Bvv = sum_(F, (F.mul(a, b) for a, b in zip(v, Sv)))
            if Bvv:
                break
        c = F.neg(F.mul(F.from_int(2), F.inv(Bvv)))
        out.append(F.matadd(one, F.scale(c, _outer(F, v, Sv))))
    return [F.matmul(out[0], out[1])]


def sum_(F: GF, xs) -> int:
    s = 0
    for x in xs:
        s = F.add(s, x)
    return s


def random_group_element(S: MatrixGroupSetup, rng: random.Random, length: int = 6) -> Matrix:
    F = S.field
    g = F.identity(S.n)
    for _ in range(length):
        for M in _generator(S, rng):
            g = F.matmul(g, M)
    return g


def nilradical_basis(S: MatrixGroupSetup) -> list[Matrix]:
    """Strictly upper triangular elements of the Lie algebra (a Borel nilradical)."""
    return _form_algebra(S.field, S.form, S.n, mask=lambda i, j: j > i)


def truncated_exp(N: Matrix, F: GF) -> Matrix:
    """sum N^k / k! for a nilpotent N with N^p = 0."""
    n = len(N)
    if not F.is_zero(F.matpow(N, F.p)):
        raise ValueError("truncated exponential needs N^p = 0")
    out = F.identity(n)
    term = F.identity(n)
    for k in range(1, F.p):
        term = F.scale(F.inv(F.from_int(k)), F.matmul(term, N))
        out = F.matadd(out, term)
    return out


def random_unipotent(S: MatrixGroupSetup, rng: random.Random) -> Matrix:
    """exp of a random Borel nilpotent, conjugated by a random group element."""
    F = S.field
    coeffs = [rng.randrange(F.q) for _ in nilradical_basis(S)]
    N = F.zeros(S.n)
    for c, B in zip(coeffs, nilradical_basis(S)):
        N = F.matadd(N, F.scale(c, B))
    u = truncated_exp(N, F)
    g = random_group_element(S, rng)
    return F.matmul(F.matmul(g, u), F.inverse(g))


def torus_element(S: MatrixGroupSetup, entries) -> Matrix:
    """Diagonal element of the standard maximal torus from free parameters.

    GL: n units; Sp(2h): h units a_i giving diag(a_1..a_h, a_h^-1..a_1^-1);
    SO(n): floor(n/2) units, with a middle 1 when n is odd.
    """
    F, n = S.field, S.n
    d = [1] * n
    if S.family == "GL":
        d = list(entries)
    else:
        for i, a in enumerate(entries):
            d[i] = a
            d[n - 1 - i] = F.inv(a)
    M = F.zeros(n)
    for i, a in enumerate(d):
        M[i][i] = a
    return M


def torus_rank(S: MatrixGroupSetup) -> int:
    return S.n if S.family == "GL" else S.n // 2


def diagonal_lie_basis(S: MatrixGroupSetup) -> list[Matrix]:
    """Basis of the diagonal Cartan subalgebra, each element H with H^p = H."""
    F, n = S.field, S.n
    out = []
    for i in range(torus_rank(S)):
        H = F.zeros(n)
        H[i][i] = 1
        if S.family != "GL":
            H[n - 1 - i][n - 1 - i] = F.neg(1)
        out.append(H)
    return out


def perp_torus_basis(S: MatrixGroupSetup) -> list[Matrix]:
    """Diagonal matrices beta-orthogonal to the Lie algebra."""
    F, n = S.field, S.n
    rows = [[B[i][i] for i in range(n)] for B in S.lie_basis]
    out = []
    for v in F.nullspace(rows, n):
        D = F.zeros(n)
        for i, c in enumerate(v):
            D[i][i] = c
        out.append(D)
    return out


def toral_p_root(A: Matrix, n: int, F: GF) -> Matrix:
    """Inverse of A -> A^[p^n] on diagonal matrices over F_{p^m}."""
    size = len(A)
    if any(A[i][j] for i in range(size) for j in range(size) if i != j):
        raise ValueError("toral_p_root is only implemented for diagonal matrices")
    k = (F.m - n) % F.m
    out = F.zeros(size)
    for i in range(size):
        out[i][i] = F.frobenius(A[i][i], k)
    return out


# --- suites -----------------------------------------------------------------------


def springer_suite(family: str, n: int, p: int, m: int = 1, samples: int = 100, seed: int = 0) -> dict:
    """Randomized checks of the projection and the Springer map; JSON-ready report."""
    S = build_setup(family, n, p, m)
    F = S.field
    rng = random.Random(seed)
    counts = {}

    def record(name, ok):
        c = counts.setdefault(name, [0, 0])
        c[0 if ok else 1] += 1

    one = F.identity(n)
    record("pi_of_identity_zero", F.is_zero(springer_map(one, S)))
    for B in S.lie_basis:
        record("projection_fixes_algebra", project(B, S) == B)
    for _ in range(samples):
        g = random_group_element(S, rng)
        record("in_group", S.in_group(g))
        record("p_power_compat", check_p_power_compat(g, S))
        A = [[rng.randrange(F.q) for _ in range(n)] for _ in range(n)]
        P = project(A, S)
        R = F.matsub(A, P)
        record("projection_orthogonal", all(S.beta(R, B) == 0 for B in S.lie_basis))
        record("projection_idempotent", project(P, S) == P)
        gi = F.inverse(g)
        record("projection_equivariant",
               project(F.matmul(F.matmul(g, A), gi), S) == F.matmul(F.matmul(g, P), gi))
    for _ in range(max(1, samples // 10)):
        u = random_unipotent(S, rng)
        L = springer_map(u, S)
        record("springer_nilpotent", is_nilpotent(L, F))
        record("springer_p_power", springer_map(F.matpow(u, p), S) == F.matpow(L, p))
        if family == "GL":
            record("gl_is_x_minus_1", L == F.matsub(u, one))
        g = random_group_element(S, rng)
        gi = F.inverse(g)
        record("springer_equivariant",
               springer_map(F.matmul(F.matmul(g, u), gi), S) == F.matmul(F.matmul(g, L), gi))
    units = list(F.units())
    for _ in range(max(1, samples // 10)):
        s = torus_element(S, [rng.choice(units) for _ in range(torus_rank(S))])
        record("semisimple_p_power_compat", check_p_power_compat(s, S))
    return {
        "family": family,
        "n": n,
        "p": p,
        "m": m,
        "samples": samples,
        "seed": seed,
        "lie_dim": S.dim,
        "gram_invertible": True,
        "checks": {k: {"pass": v[0], "fail": v[1]} for k, v in sorted(counts.items())},
        "all_pass": all(v[1] == 0 for v in counts.values()),
    }


def theta_suite(p: int, m: int, n: int = 1, samples: int = 100, size: int = 3, seed: int = 0) -> dict:
    F = make_field(p, m)
    rng = random.Random(seed)
    fails = 0
    for _ in range(samples):
        A = F.zeros(size)
        for i in range(size):
            A[i][i] = rng.randrange(F.q)
        T = toral_p_root(A, n, F)
        back = [[F.pow(x, p**n) for x in row] for row in T]
        fails += back != A
    return {"p": p, "m": m, "n": n, "samples": samples, "fail": fails, "all_pass": fails == 0}
