"""Root systems of the simple types A-G and their products.

Roots live in simple-root coordinates: a root is a tuple of integers
giving its expansion in the simple roots.  Coweights are stored by their
pairings with the simple roots, i.e. in the basis of fundamental
coweights.  Nothing is ever embedded in a Euclidean space; every pairing
goes through the Cartan matrix ``A[i][j] = <alpha_j, alpha_i^vee>``.

Simple roots are numbered as in Bourbaki.  Indices are 0-based in the
Python API; labels and JSON use 1-based indices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

Root = tuple[int, ...]

ADMISSIBLE = {"A": 1, "B": 2, "C": 3, "D": 4, "E": 6, "F": 4, "G": 2}

BAD_PRIMES = {
    "A": frozenset(),
    "B": frozenset({2}),
    "C": frozenset({2}),
    "D": frozenset({2}),
    "E": frozenset({2, 3}),
    "F": frozenset({2, 3}),
    "G": frozenset({2, 3}),
}


class RootDataError(ValueError):
    """Inadmissible type label or malformed root data."""


def check_admissible(letter: str, rank: int) -> None:
    letter = letter.upper()
    if letter not in ADMISSIBLE:
        raise RootDataError(f"unknown type letter {letter!r}")
    if rank < ADMISSIBLE[letter]:
        raise RootDataError(f"{letter}{rank} is not admissible")
    if letter == "E" and rank not in (6, 7, 8):
        raise RootDataError(f"E{rank} is not admissible")
    if letter == "F" and rank != 4:
        raise RootDataError(f"F{rank} is not admissible")
    if letter == "G" and rank != 2:
        raise RootDataError(f"G{rank} is not admissible")


def parse_type(label: str) -> list[tuple[str, int]]:
    """Parse ``"A2xA1"``-style labels (case-insensitive) into components."""
    parts = [s.strip() for s in label.strip().lower().split("x")]
    out = []
    for part in parts:
        m = re.fullmatch(r"([a-g])\s*(\d+)", part)
        if not m:
            raise RootDataError(f"cannot parse type label {label!r}")
        letter, rank = m.group(1).upper(), int(m.group(2))
        check_admissible(letter, rank)
        out.append((letter, rank))
    return out


def format_type(type_label: Sequence[tuple[str, int]]) -> str:
    if not type_label:
        return "0"
    return "x".join(f"{l}{n}" for l, n in type_label)


def simple_cartan(letter: str, n: int) -> list[list[int]]:
    """Cartan matrix of an indecomposable type, Bourbaki numbering."""
    check_admissible(letter, n)
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, a_ij=-1, a_ji=-1):
        A[i][j] = a_ij
        A[j][i] = a_ji

    if letter in "ABC":
        for i in range(n - 1):
            bond(i, i + 1)
        if letter == "B":
            # alpha_n short
            A[n - 1][n - 2] = -2
        elif letter == "C":
            # alpha_n long
            A[n - 2][n - 1] = -2
    elif letter == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif letter == "E":
        bond(0, 2)
        bond(1, 3)
        for i in range(2, n - 1):
            bond(i, i + 1)
    elif letter == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    elif letter == "G":
        # alpha_1 short, alpha_2 long
        bond(0, 1, -3, -1)
    return A


def block_diagonal(blocks: Sequence[Sequence[Sequence[int]]]) -> list[list[int]]:
    n = sum(len(b) for b in blocks)
    A = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                A[off + i][off + j] = x
        off += len(b)
    return A


def height(root: Root) -> int:
    return sum(root)


def root_sort_key(root: Root):
    """Total order on positive roots: height, then reverse lexicographic.

    With this key alpha_1 < alpha_2 < ... < alpha_r among the simple roots.
    """
    return (sum(root), tuple(-c for c in root))


@dataclass(frozen=True)
class RootSystem:
    type_label: tuple[tuple[str, int], ...]
    cartan_matrix: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    components: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan_matrix)

    @property
    def label(self) -> str:
        return format_type(self.type_label)

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        r = self.rank
        return tuple(tuple(int(i == j) for j in range(r)) for i in range(r))

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        """Positive roots in order, followed by their negatives in the same order."""
        return self.positive_roots + tuple(neg(a) for a in self.positive_roots)

    @cached_property
    def root_set(self) -> frozenset:
        return frozenset(self.roots)

    @cached_property
    def root_index(self) -> dict:
        return {a: i for i, a in enumerate(self.roots)}

    def is_root(self, v: Root) -> bool:
        return v in self.root_set

    def coroot_pairing(self, root: Root, i: int) -> int:
        """``<root, alpha_i^vee>``."""
        row = self.cartan_matrix[i]
        return sum(c * a for c, a in zip(root, row))

    def reflect(self, root: Root, i: int) -> Root:
        """Simple reflection s_i applied to a root."""
        k = self.coroot_pairing(root, i)
        out = list(root)
        out[i] -= k
        return tuple(out)

    @cached_property
    def half_norms(self) -> tuple[int, ...]:
        """(alpha_i, alpha_i)/2 for the simple roots, shortest = 1 per component."""
        A = self.cartan_matrix
        d: list[Fraction | None] = [None] * self.rank
        for comp in self.components:
            d[comp[0]] = Fraction(1)
            stack = [comp[0]]
            while stack:
                i = stack.pop()
                for j in comp:
                    if A[i][j] != 0 and i != j and d[j] is None:
                        # A[i][j] d_i = A[j][i] d_j
                        d[j] = d[i] * A[i][j] / A[j][i]
                        stack.append(j)
            m = min(d[i] for i in comp)
            for i in comp:
                d[i] = d[i] / m
        return tuple(int(x) for x in d)

    def inner(self, a: Root, b: Root) -> int:
        """Invariant form with (alpha, alpha) = 2 on short roots."""
        A, d = self.cartan_matrix, self.half_norms
        # (alpha_i, alpha_j) = A[i][j] * d_i
        return sum(a[i] * b[j] * A[i][j] * d[i]
                   for i in range(self.rank) if a[i]
                   for j in range(self.rank) if b[j])

    def coroot_coords(self, root: Root) -> tuple[int, ...]:
        """Coroot of ``root`` in the basis of simple coroots."""
        n = self.inner(root, root)
        out = []
        for c, d in zip(root, self.half_norms):
            q, r = divmod(2 * c * d, n)
            assert r == 0
            out.append(q)
        return tuple(out)

    @cached_property
    def highest_roots(self) -> tuple[Root, ...]:
        """One highest root per indecomposable component."""
        out = []
        for comp in self.components:
            cands = [a for a in self.positive_roots if any(a[i] for i in comp)]
            out.append(max(cands, key=height))
        return tuple(out)

    @cached_property
    def bad_primes(self) -> frozenset:
        return bad_primes(self)


def neg(a: Root) -> Root:
    return tuple(-c for c in a)


def _positive_roots(A: Sequence[Sequence[int]]) -> list[Root]:
    """Enumerate positive roots by root strings, height by height."""
    r = len(A)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for b in layer:
            for i in range(r):
                # q = longest string b - alpha_i, b - 2 alpha_i, ... inside R+
                q = 0
                c = list(b)
                while True:
                    c[i] -= 1
                    if tuple(c) in roots:
                        q += 1
                    else:
                        break
                pairing = sum(x * a for x, a in zip(b, A[i]))
                if q - pairing > 0:
                    up = list(b)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=root_sort_key)


def _components(A: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    r = len(A)
    seen: set[int] = set()
    out = []
    for s in range(r):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(r):
                if j != i and A[i][j] != 0 and j not in seen:
                    seen.add(j)
                    stack.append(j)
        out.append(tuple(sorted(comp)))
    return out


def from_cartan(A: Sequence[Sequence[int]], type_label=None) -> RootSystem:
    A = tuple(tuple(int(x) for x in row) for row in A)
    comps = _components(A)
    if type_label is None:
        type_label = classify_cartan(A)
    return RootSystem(
        type_label=tuple(type_label),
        cartan_matrix=A,
        positive_roots=tuple(_positive_roots(A)) if A else (),
        components=tuple(comps),
    )


def build_root_system(type_label) -> RootSystem:
    """Root system of a type label: a string such as ``"A2xA1"`` or a list of (letter, rank)."""
    if isinstance(type_label, str):
        comps = parse_type(type_label)
    else:
        comps = [(l.upper(), int(n)) for l, n in type_label]
        for l, n in comps:
            check_admissible(l, n)
    A = block_diagonal([simple_cartan(l, n) for l, n in comps])
    return from_cartan(A, type_label=comps)


def bad_primes(R: RootSystem) -> frozenset:
    out: set[int] = set()
    for letter, n in R.type_label:
        out |= BAD_PRIMES[letter]
        if letter == "E" and n == 8:
            out.add(5)
    return frozenset(out)


def is_good_prime(R: RootSystem, p: int) -> bool:
    return p not in bad_primes(R)


# --- Cartan matrix classification -----------------------------------------


def _classify_component(A, comp) -> tuple[str, int]:
    n = len(comp)
    if n == 1:
        return ("A", 1)
    nbrs = {i: [j for j in comp if j != i and A[i][j] != 0] for i in comp}
    mult = {}
    for i in comp:
        for j in nbrs[i]:
            mult[(i, j)] = A[i][j] * A[j][i]
    maxmult = max(mult.values())
    degrees = sorted(len(v) for v in nbrs.values())
    if maxmult == 3:
        return ("G", 2)
    if maxmult == 2:
        if n == 2:
            return ("B", 2)
        (u, v) = next(k for k, m in mult.items() if m == 2)
        # short node s has A[s][long] == -2
        short, long_ = (u, v) if A[u][v] == -2 else (v, u)
        if len(nbrs[short]) == 1:
            return ("B", n)
        if len(nbrs[long_]) == 1:
            return ("C", n)
        return ("F", 4)
    if degrees[-1] <= 2:
        return ("A", n)
    branch = next(i for i in comp if len(nbrs[i]) == 3)
    arms = []
    for start in nbrs[branch]:
        length, prev, cur = 1, branch, start
        while True:
            nxt = [j for j in nbrs[cur] if j != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return ("D", n)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return ("E", n)
    raise RootDataError(f"not a finite-type Cartan matrix: arms {arms}")


def classify_cartan(A) -> list[tuple[str, int]]:
    """Type label of a Cartan matrix, components in canonical sorted form."""
    comps = _components(A)
    labels = [_classify_component(A, c) for c in comps]
    return sorted(labels, key=lambda t: (t[0], -t[1]))


def levi_subsystem(R: RootSystem, J: Iterable[int]) -> RootSystem:
    """Sub-root system spanned by the simple roots indexed by ``J``.

    The result is expressed in the ambient coordinates restricted to ``J``
    (sorted); use :func:`embed_levi_root` to map back.
    """
    J = sorted(set(J))
    for j in J:
        if not 0 <= j < R.rank:
            raise RootDataError(f"simple index {j} out of range")
    A = [[R.cartan_matrix[i][j] for j in J] for i in J]
    if not J:
        return RootSystem((), (), (), ())
    return from_cartan(A)


def embed_levi_root(R: RootSystem, J: Sequence[int], root: Root) -> Root:
    J = sorted(J)
    out = [0] * R.rank
    for c, j in zip(root, J):
        out[j] = c
    return tuple(out)


def roots_supported_on(R: RootSystem, J: Iterable[int]) -> list[Root]:
    Js = set(J)
    return [a for a in R.roots if all(c == 0 or i in Js for i, c in enumerate(a))]


# --- coweights ---------------------------------------------------------------


@dataclass(frozen=True)
class CoweightVector:
    """A coweight, by its pairings with the simple roots."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in coords))

    def __len__(self):
        return len(self.coords)


def pairing(alpha: Sequence[int], gamma: CoweightVector) -> Fraction:
    if len(alpha) != len(gamma.coords):
        raise ValueError("dimension mismatch between root and coweight")
    return sum((Fraction(a) * c for a, c in zip(alpha, gamma.coords)), Fraction(0))


def fundamental_coweight(R: RootSystem, i: int) -> CoweightVector:
    return CoweightVector([int(i == j) for j in range(R.rank)])


def coroot_coweight(R: RootSystem, coroot: Sequence[int]) -> CoweightVector:
    """Coweight of ``sum_j c_j alpha_j^vee``: pairing with alpha_i is sum_j c_j A[j][i]."""
    A = R.cartan_matrix
    r = R.rank
    return CoweightVector([sum(coroot[j] * A[j][i] for j in range(r)) for i in range(r)])


def coweight_in_coroots(R: RootSystem, gamma: CoweightVector) -> tuple[Fraction, ...]:
    """Solve A^T c = coords for the coroot coordinates c."""
    from .linalg import solve_rational

    r = R.rank
    At = [[R.cartan_matrix[j][i] for j in range(r)] for i in range(r)]
    return tuple(solve_rational(At, list(gamma.coords)))


def is_integral_on_coroot_lattice(R: RootSystem, gamma: CoweightVector) -> bool:
    return all(c.denominator == 1 for c in coweight_in_coroots(R, gamma))


def reflect_coweight(R: RootSystem, v: Sequence[Fraction], i: int) -> tuple[Fraction, ...]:
    """s_i(v) = v - <alpha_i, v> alpha_i^vee."""
    k = v[i]
    row = R.cartan_matrix[i]
    return tuple(x - k * a for x, a in zip(v, row))


def apply_word(R: RootSystem, word: Sequence[int], gamma: CoweightVector) -> CoweightVector:
    """Apply ``s_{w[0]} s_{w[1]} ... s_{w[-1]}`` (rightmost first)."""
    v = gamma.coords
    for i in reversed(word):
        v = reflect_coweight(R, v, i)
    return CoweightVector(v)


def dominant_representative(R: RootSystem, gamma: CoweightVector):
    """Dominant Weyl conjugate of ``gamma`` and a word ``w`` with ``w(dominant) = gamma``.

    Each step reflects in a simple root with negative pairing, which raises
    the coweight in dominance order, so the loop terminates.
    """
    v = gamma.coords
    word: list[int] = []
    while True:
        neg_idx = next((i for i, x in enumerate(v) if x < 0), None)
        if neg_idx is None:
            break
        v = reflect_coweight(R, v, neg_idx)
        word.append(neg_idx)
    # dominant = s_{w_k} ... s_{w_1} gamma, so gamma = s_{w_1} ... s_{w_k} dominant
    return CoweightVector(v), word
