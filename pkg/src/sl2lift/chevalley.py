"""Chevalley basis, integral structure constants and exact brackets.

Basis order: ``E_alpha`` for the positive roots (in the root order of
:mod:`sl2lift.rootdata`), then ``E_alpha`` for the negative roots in the
same order, then ``H_1 .. H_r`` (simple coroots, simply connected form).

Signs: ``N(alpha, beta) = +(q + 1)`` on extraspecial pairs; every other
constant follows from the standard identities between the ``N``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Mapping

import numpy as np

from .linalg import as_mod_p, reduce_scalar
from .rootdata import Root, RootSystem, build_root_system, neg, root_sort_key


class RingMismatchError(TypeError):
    pass


class NotIntegralError(ArithmeticError):
    """Element not defined over the valuation ring at p."""


def _add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


class _StructureConstants:
    """Recursive computation of N(alpha, beta) for all root pairs."""

    def __init__(self, R: RootSystem):
        self.R = R
        self.pos = set(R.positive_roots)
        self.key = {a: root_sort_key(a) for a in R.positive_roots}
        self.extraspecial: dict[Root, tuple[Root, Root]] = {}
        for xi in R.positive_roots:
            cands = [a for a in R.positive_roots if _sub(xi, a) in self.pos]
            if cands:
                a = min(cands, key=self.key.__getitem__)
                self.extraspecial[xi] = (a, _sub(xi, a))
        self.memo: dict[tuple[Root, Root], int] = {}

    def norm(self, a: Root) -> int:
        return self.R.inner(a, a)

    def q(self, a: Root, b: Root) -> int:
        """Largest i with b - i a a root."""
        i = 0
        c = b
        while True:
            c = _sub(c, a)
            if not self.R.is_root(c):
                return i
            i += 1

    def N(self, a: Root, b: Root) -> int:
        s = _add(a, b)
        if not self.R.is_root(s):
            return 0
        k = (a, b)
        if k not in self.memo:
            self.memo[k] = self._compute(a, b)
        return self.memo[k]

    def _compute(self, a: Root, b: Root) -> int:
        pos = self.pos
        if a in pos and b in pos:
            if self.key[a] > self.key[b]:
                return -self.N(b, a)
            xi = _add(a, b)
            g, d = self.extraspecial[xi]
            if (a, b) == (g, d):
                return self.q(a, b) + 1
            # four-term identity on (a, b, -g, -d)
            ng, nd = neg(g), neg(d)
            t = Fraction(0)
            bg = _sub(b, g)
            if self.R.is_root(bg):
                t += Fraction(self.N(b, ng) * self.N(a, nd), self.norm(bg))
            ag = _sub(a, g)
            if self.R.is_root(ag):
                t += Fraction(self.N(ng, a) * self.N(b, nd), self.norm(ag))
            val = Fraction(self.norm(xi), self.N(g, d)) * t
            assert val.denominator == 1
            return int(val)
        if a not in pos and b not in pos:
            return -self.N(neg(a), neg(b))
        # mixed signs: a + b + c = 0 and
        # N(a,b)/(c,c) = N(b,c)/(a,a) = N(c,a)/(b,b)
        c = neg(_add(a, b))
        if (b in pos) == (c in pos):
            val = Fraction(self.norm(c) * self.N(b, c), self.norm(a))
        else:
            val = Fraction(self.norm(c) * self.N(c, a), self.norm(b))
        assert val.denominator == 1
        return int(val)


@dataclass(frozen=True, eq=False)
class ChevalleyAlgebra:
    root_system: RootSystem
    structure_table: Mapping[tuple[int, int], tuple[tuple[int, int], ...]] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.root_system.rank

    @property
    def dim(self) -> int:
        return len(self.root_system.roots) + self.rank

    @property
    def nroots(self) -> int:
        return len(self.root_system.roots)

    def e(self, root: Root) -> int:
        """Basis index of E_root."""
        return self.root_system.root_index[tuple(root)]

    def h(self, i: int) -> int:
        """Basis index of H_{i+1}."""
        return self.nroots + i

    def is_cartan(self, idx: int) -> bool:
        return idx >= self.nroots

    def root_of(self, idx: int) -> Root | None:
        return None if idx >= self.nroots else self.root_system.roots[idx]

    @cached_property
    def basis_labels(self) -> list[str]:
        labels = ["E[" + ",".join(str(c) for c in a) + "]" for a in self.root_system.roots]
        labels += [f"H{i + 1}" for i in range(self.rank)]
        return labels

    @cached_property
    def label_index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.basis_labels)}

    def basis_bracket(self, i: int, j: int) -> tuple[tuple[int, int], ...]:
        return self.structure_table.get((i, j), ())

    def element(self, coeffs: Mapping[int, object] | None = None, p: int | None = None) -> "LieElt":
        return LieElt(self, coeffs or {}, p)

    def basis_element(self, i: int, p: int | None = None) -> "LieElt":
        return LieElt(self, {i: 1}, p)

    def to_json(self) -> str:
        """Structure table as ``[[i, j, [[k, c], ...]], ...]`` with 1-based-free basis labels."""
        entries = [[i, j, [list(t) for t in v]] for (i, j), v in sorted(self.structure_table.items())]
        return json.dumps({
            "type": self.root_system.label,
            "basis": self.basis_labels,
            "table": entries,
        }, separators=(",", ":"))


def structure_constants(R: RootSystem | str) -> ChevalleyAlgebra:
    """Chevalley algebra of a root system with its integral structure table."""
    if isinstance(R, str):
        R = build_root_system(R)
    sc = _StructureConstants(R)
    roots = R.roots
    nroots = len(roots)
    index = R.root_index
    r = R.rank
    table: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {}
    coroots = {a: R.coroot_coords(a) for a in R.positive_roots}
    for i, a in enumerate(roots):
        for j, b in enumerate(roots):
            s = _add(a, b)
            if not any(s):
                # [E_a, E_-a] = H_a
                if a in coroots:
                    co = coroots[a]
                    table[(i, j)] = tuple((nroots + k, c) for k, c in enumerate(co) if c)
                else:
                    co = coroots[neg(a)]
                    table[(i, j)] = tuple((nroots + k, -c) for k, c in enumerate(co) if c)
            elif s in index:
                n = sc.N(a, b)
                table[(i, j)] = ((index[s], n),)
    for k in range(r):
        for j, b in enumerate(roots):
            c = R.coroot_pairing(b, k)
            if c:
                table[(nroots + k, j)] = ((j, c),)
                table[(j, nroots + k)] = ((j, -c),)
    return ChevalleyAlgebra(R, table)


def N_constant(C: ChevalleyAlgebra, a: Root, b: Root) -> int:
    """N(a, b) read off the structure table (0 if a + b is not a root)."""
    for k, c in C.basis_bracket(C.e(a), C.e(b)):
        if not C.is_cartan(k):
            return c
    return 0


# --- elements ---------------------------------------------------------------------


class LieElt:
    """Sparse element of a Chevalley algebra over Q (``p=None``) or F_p.

    Rational coefficients are ``Fraction`` or ``int``; prime-field
    coefficients are ints in ``[0, p)``.  Zero coefficients are never stored.
    """

    __slots__ = ("algebra", "coeffs", "p")

    def __init__(self, algebra: ChevalleyAlgebra, coeffs: Mapping[int, object], p: int | None = None):
        self.algebra = algebra
        self.p = p
        clean = {}
        for k, v in coeffs.items():
            v = _normalize(v, p)
            if v:
                clean[int(k)] = v
        self.coeffs = clean

    def _check(self, other: "LieElt"):
        if other.algebra is not self.algebra:
            raise RingMismatchError("elements of different algebras")
        if other.p != self.p:
            raise RingMismatchError(f"scalar ring mismatch: {self.ring} vs {other.ring}")

    @property
    def ring(self) -> str:
        return "Q" if self.p is None else f"F{self.p}"

    def __add__(self, other: "LieElt") -> "LieElt":
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return LieElt(self.algebra, out, self.p)

    def __neg__(self) -> "LieElt":
        return LieElt(self.algebra, {k: -v for k, v in self.coeffs.items()}, self.p)

    def __sub__(self, other: "LieElt") -> "LieElt":
        return self + (-other)

    def __rmul__(self, scalar) -> "LieElt":
        s = _normalize(scalar, self.p)
        return LieElt(self.algebra, {k: s * v for k, v in self.coeffs.items()}, self.p)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElt):
            return NotImplemented
        return self.algebra is other.algebra and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, frozenset(self.coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        labels = self.algebra.basis_labels
        terms = " + ".join(f"{v}*{labels[k]}" for k, v in sorted(self.coeffs.items()))
        return f"LieElt[{self.ring}]({terms or '0'})"

    def support(self) -> set[int]:
        return set(self.coeffs)

    def dense(self) -> list:
        v = [0] * self.algebra.dim
        for k, c in self.coeffs.items():
            v[k] = c
        return v

    def to_json(self) -> list:
        labels = self.algebra.basis_labels
        return [[labels[k], _scalar_json(v)] for k, v in sorted(self.coeffs.items())]


def _normalize(v, p):
    if p is None:
        v = Fraction(v)
        return int(v) if v.denominator == 1 else v
    return reduce_scalar(v, p)


def _scalar_json(v):
    if isinstance(v, Fraction):
        return str(v)
    return int(v)


def bracket(a: LieElt, b: LieElt) -> LieElt:
    a._check(b)
    C = a.algebra
    table = C.structure_table
    out: dict[int, object] = {}
    for i, x in a.coeffs.items():
        for j, y in b.coeffs.items():
            terms = table.get((i, j))
            if not terms:
                continue
            xy = x * y
            for k, c in terms:
                out[k] = out.get(k, 0) + c * xy
    return LieElt(C, out, a.p)


def adjoint_matrix(x: LieElt) -> np.ndarray:
    """Matrix of ad x in the Chevalley basis (column j = [x, b_j])."""
    C = x.algebra
    n = C.dim
    M = np.zeros((n, n), dtype=object)
    M[:] = 0
    table = C.structure_table
    for i, c in x.coeffs.items():
        for j in range(n):
            terms = table.get((i, j))
            if terms:
                for k, v in terms:
                    M[k, j] += c * v
    if x.p is not None:
        return as_mod_p(M, x.p)
    return M


def reduce_mod_p(x: LieElt, p: int) -> LieElt:
    if x.p is not None:
        if x.p != p:
            raise RingMismatchError(f"cannot reduce an F{x.p} element mod {p}")
        return x
    out = {}
    for k, v in x.coeffs.items():
        if Fraction(v).denominator % p == 0:
            raise NotIntegralError(f"coefficient {v} is not defined over the valuation ring at {p}")
        out[k] = reduce_scalar(v, p)
    return LieElt(x.algebra, out, p)


def _integer_ad_matrices(C: ChevalleyAlgebra) -> np.ndarray:
    n = C.dim
    ads = np.zeros((n, n, n), dtype=np.int64)
    for (i, j), terms in C.structure_table.items():
        for k, c in terms:
            ads[i, k, j] = c
    return ads


def jacobi_exhaustive(C: ChevalleyAlgebra) -> int:
    """Number of basis triples (a, b, c) where the Jacobi sum is nonzero.

    Uses ad[a,b] = [ad a, ad b], which is the Jacobi identity with c free.
    """
    ads = _integer_ad_matrices(C)
    n = C.dim
    failures = 0
    for a in range(n):
        comm = np.einsum("ij,bjk->bik", ads[a], ads) - np.einsum("bij,jk->bik", ads, ads[a])
        lhs = np.zeros_like(comm)
        for b in range(n):
            for k, c in C.structure_table.get((a, b), ()):
                lhs[b] += c * ads[k]
        failures += int(np.count_nonzero((lhs - comm).any(axis=1)))
    return failures


def jacobi_sum(C: ChevalleyAlgebra, a: int, b: int, c: int) -> LieElt:
    x, y, z = (C.basis_element(i) for i in (a, b, c))
    return bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))


def jacobi_random(C: ChevalleyAlgebra, samples: int, rng) -> int:
    """Failures among ``samples`` basis triples drawn from ``rng`` (a random.Random)."""
    n = C.dim
    return sum(bool(jacobi_sum(C, rng.randrange(n), rng.randrange(n), rng.randrange(n)))
               for _ in range(samples))
