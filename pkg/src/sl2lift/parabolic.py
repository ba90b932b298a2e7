"""Standard parabolic gradings and distinguished parabolics.

A grading is given by a subset ``I`` of simple roots: ``f`` is 0 on ``I``
and 2 on the other simple roots, extended additively.  Optionally the
grading is restricted to a standard Levi subalgebra with simple roots
``levi`` (``I`` must be contained in it); the Levi part consists of the
``E_alpha`` with ``alpha`` supported on ``levi`` and the ``H_j`` with ``j``
in ``levi``.  With ``levi=None`` the whole algebra is graded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .chevalley import ChevalleyAlgebra, bracket
from .linalg import _integer_rows, bareiss_echelon, rank_rational, solve_rational
from .rootdata import CoweightVector, Root, coroot_coweight, is_integral_on_coroot_lattice


class NotDistinguishedError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ParabolicGrading:
    algebra: ChevalleyAlgebra
    I: frozenset
    levi: frozenset
    f_values: dict
    graded_basis: dict
    dim_vector: dict

    @property
    def root_system(self):
        return self.algebra.root_system

    @property
    def is_full(self) -> bool:
        return len(self.levi) == self.algebra.rank

    def degree_of(self, idx: int) -> int | None:
        """Degree of a basis vector, or None when it lies outside the Levi part."""
        return self._degree.get(idx)

    @cached_property
    def _degree(self) -> dict:
        return {b: d for d, idxs in self.graded_basis.items() for b in idxs}

    def part(self, i: int) -> list[int]:
        return self.graded_basis.get(i, [])

    def dim(self, i: int) -> int:
        return self.dim_vector.get(i, 0)

    @property
    def max_degree(self) -> int:
        return max(self.dim_vector)

    def nilradical(self) -> list[int]:
        return [b for d in sorted(self.graded_basis) if d > 0 for b in self.graded_basis[d]]

    def parabolic(self) -> list[int]:
        return [b for d in sorted(self.graded_basis) if d >= 0 for b in self.graded_basis[d]]

    def dims_json(self) -> dict:
        return {str(d): n for d, n in sorted(self.dim_vector.items())}


def _supported_on(root: Root, J: frozenset) -> bool:
    return all(c == 0 or i in J for i, c in enumerate(root))


def grading(C: ChevalleyAlgebra, I: Iterable[int], levi: Iterable[int] | None = None) -> ParabolicGrading:
    R = C.root_system
    I = frozenset(I)
    J = frozenset(range(R.rank)) if levi is None else frozenset(levi)
    if not I <= J:
        raise ValueError(f"I={sorted(I)} is not contained in the Levi {sorted(J)}")
    if not J <= set(range(R.rank)):
        raise ValueError("simple index out of range")
    weights = [0 if i in I else 2 for i in range(R.rank)]
    f_values = {}
    graded: dict[int, list[int]] = {}
    for idx, a in enumerate(R.roots):
        if not _supported_on(a, J):
            continue
        f = sum(c * w for c, w in zip(a, weights))
        f_values[a] = f
        graded.setdefault(f, []).append(idx)
    for j in sorted(J):
        graded.setdefault(0, []).append(C.h(j))
    graded.setdefault(0, [])
    graded = {d: sorted(v) for d, v in sorted(graded.items())}
    dims = {d: len(v) for d, v in graded.items()}
    return ParabolicGrading(C, I, J, f_values, graded, dims)


def is_distinguished(g: ParabolicGrading) -> bool:
    """dim g(0) == dim g(2); the centre term vanishes for semisimple data."""
    return g.dim(0) == g.dim(2)


def _span_rank(vectors) -> int:
    rows = [v.dense() for v in vectors if v]
    return rank_rational(rows) if rows else 0


def _span_basis(C: ChevalleyAlgebra, vectors) -> list:
    rows = _integer_rows([v.dense() for v in vectors if v])
    if not rows:
        return []
    pivots = bareiss_echelon(rows)
    return [C.element(dict(enumerate(rows[i]))) for i in range(len(pivots))]


def is_distinguished_oracle(g: ParabolicGrading) -> bool:
    """Same test through dim u - dim [u, u], with [u, u] from explicit brackets."""
    C = g.algebra
    u = [C.basis_element(b) for b in g.nilradical()]
    derived = [bracket(x, y) for i, x in enumerate(u) for y in u[i + 1:]]
    return len(u) - _span_rank(derived) == len(g.parabolic()) - len(u)


def associated_cocharacter_coroots(g: ParabolicGrading) -> tuple[Fraction, ...]:
    """The cocharacter tau in the simple-coroot basis (zero outside the Levi)."""
    R = g.root_system
    J = sorted(g.levi)
    r = R.rank
    # <alpha_i, tau> = sum_j c_j A[j][i] = f(alpha_i) for i in J
    A_T = [[R.cartan_matrix[j][i] for j in J] for i in J]
    rhs = [0 if i in g.I else 2 for i in J]
    c = solve_rational(A_T, rhs) if J else []
    out = [Fraction(0)] * r
    for j, x in zip(J, c):
        out[j] = x
    return tuple(out)


def associated_cocharacter(g: ParabolicGrading) -> CoweightVector:
    """Cocharacter tau with <alpha, tau> = f(alpha), as an ambient coweight."""
    if not is_distinguished(g):
        raise NotDistinguishedError(
            f"I={sorted(g.I)} is not distinguished; integrality of tau is not guaranteed")
    R = g.root_system
    tau = coroot_coweight(R, associated_cocharacter_coroots(g))
    if not is_integral_on_coroot_lattice(R, tau):
        raise ArithmeticError("cocharacter of a distinguished parabolic is not integral")
    return tau


def subsets(S: Iterable[int]) -> list[frozenset]:
    S = sorted(S)
    return [frozenset(c) for k in range(len(S) + 1) for c in combinations(S, k)]


def canonical_key(I: Iterable[int]):
    s = sorted(I)
    return (len(s), s)


def enumerate_distinguished(C: ChevalleyAlgebra, levi: Iterable[int] | None = None) -> list[frozenset]:
    J = range(C.rank) if levi is None else levi
    out = [I for I in subsets(J) if is_distinguished(grading(C, I, levi))]
    return sorted(out, key=canonical_key)


def nilradical_class(g: ParabolicGrading) -> int:
    """n(P) - 1, where n(P) is the least n >= 0 with g(2n) = 0."""
    if not g.nilradical():
        return 0
    n = 0
    while g.dim(2 * n) > 0:
        n += 1
    return n - 1


def nilradical_class_lcs(g: ParabolicGrading) -> int:
    """Nilpotence class of u from its lower central series."""
    C = g.algebra
    u = [C.basis_element(b) for b in g.nilradical()]
    term = u
    c = 0
    while _span_rank(term) > 0:
        c += 1
        term = _span_basis(C, [bracket(x, y) for x in u for y in term])
    return c
