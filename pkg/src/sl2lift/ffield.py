"""Small finite fields F_{p^m} and dense matrices over them.

Elements are ints in ``[0, q)``: the base-p digits are the coefficients of
a polynomial in the generator, so the prime subfield is ``0 .. p-1`` with
its usual arithmetic.  The defining polynomial is the first monic
primitive polynomial of degree m in lexicographic order, which makes
``log``/``exp`` tables available for multiplication.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Sequence

Matrix = list[list[int]]


def _polymulmod(a, b, f, p):
    """Multiply coefficient lists (low degree first) modulo the monic f."""
    m = len(f) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    for d in range(len(out) - 1, m - 1, -1):
        c = out[d]
        if c:
            for k in range(m + 1):
                out[d - m + k] = (out[d - m + k] - c * f[k]) % p
    return (out + [0] * m)[:m]


def _find_primitive(p: int, m: int) -> tuple[int, ...]:
    """First monic f of degree m (m >= 2) for which x has order p^m - 1 mod f."""
    q = p**m
    one = [1] + [0] * (m - 1)
    x = [0, 1] + [0] * (m - 2)
    for tail in product(range(p), repeat=m):
        f = list(reversed(tail)) + [1]
        if f[0] == 0:
            continue
        cur, order = x, 1
        while cur != one and order < q:
            cur = _polymulmod(cur, x, f, p)
            order += 1
        if order == q - 1:
            return tuple(f)
    raise ValueError(f"no primitive polynomial of degree {m} over F_{p}")


class GF:
    """The field with ``p**m`` elements."""

    def __init__(self, p: int, m: int = 1):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p, self.m, self.q = p, m, p**m
        if m == 1:
            self.modulus = (0, 1)
            self._exp = self._log = None
            return
        self.modulus = _find_primitive(p, m)
        q = self.q
        exp = [0] * (q - 1)
        log = [0] * q
        cur = [1] + [0] * (m - 1)
        x = [0, 1] + [0] * (m - 2)
        for k in range(q - 1):
            e = self._encode(cur)
            exp[k] = e
            log[e] = k
            cur = _polymulmod(cur, x, list(self.modulus), p)
        self._exp, self._log = exp, log

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.m) == (other.p, other.m)

    def __hash__(self):
        return hash((self.p, self.m))

    def _encode(self, digits) -> int:
        v = 0
        for d in reversed(digits):
            v = v * self.p + d
        return v

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        return self._encode([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        return self._encode([(-x) % self.p for x in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self.m == 1:
            return pow(a, -1, self.p)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 1 if k == 0 else 0
        if self.m == 1:
            return pow(a, k, self.p)
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def from_int(self, n: int) -> int:
        """Image of an integer in the prime subfield."""
        return n % self.p

    def frobenius(self, a: int, k: int = 1) -> int:
        return self.pow(a, self.p**k)

    # --- matrices --------------------------------------------------------

    def zeros(self, r: int, c: int | None = None) -> Matrix:
        return [[0] * (r if c is None else c) for _ in range(r)]

    def identity(self, n: int) -> Matrix:
        return [[int(i == j) for j in range(n)] for i in range(n)]

    def matmul(self, A: Matrix, B: Matrix) -> Matrix:
        Bt = list(zip(*B))
        out = []
        for row in A:
            new = []
            for col in Bt:
                s = 0
                for x, y in zip(row, col):
                    if x and y:
                        s = self.add(s, self.mul(x, y))
                new.append(s)
            out.append(new)
        return out

    def matadd(self, A: Matrix, B: Matrix) -> Matrix:
        return [[self.add(x, y) for x, y in zip(r, s)] for r, s in zip(A, B)]

    def matsub(self, A: Matrix, B: Matrix) -> Matrix:
        return [[self.sub(x, y) for x, y in zip(r, s)] for r, s in zip(A, B)]

    def scale(self, c: int, A: Matrix) -> Matrix:
        return [[self.mul(c, x) for x in r] for r in A]

    def transpose(self, A: Matrix) -> Matrix:
        return [list(r) for r in zip(*A)]

    def trace(self, A: Matrix) -> int:
        s = 0
        for i in range(len(A)):
            s = self.add(s, A[i][i])
        return s

    def matpow(self, A: Matrix, k: int) -> Matrix:
        result = self.identity(len(A))
        base = A
        while k:
            if k & 1:
                result = self.matmul(result, base)
            base = self.matmul(base, base)
            k >>= 1
        return result

    def is_zero(self, A: Matrix) -> bool:
        return all(x == 0 for r in A for x in r)

    def rref(self, A: Matrix) -> tuple[Matrix, list[int]]:
        M = [list(r) for r in A]
        rows = len(M)
        cols = len(M[0]) if rows else 0
        pivots = []
        r = 0
        for c in range(cols):
            piv = next((i for i in range(r, rows) if M[i][c]), None)
            if piv is None:
                continue
            M[r], M[piv] = M[piv], M[r]
            inv = self.inv(M[r][c])
            M[r] = [self.mul(inv, x) for x in M[r]]
            for i in range(rows):
                if i != r and M[i][c]:
                    f = M[i][c]
                    M[i] = [self.sub(x, self.mul(f, y)) for x, y in zip(M[i], M[r])]
            pivots.append(c)
            r += 1
            if r == rows:
                break
        return M, pivots

    def rank(self, A: Matrix) -> int:
        return len(self.rref(A)[1]) if A else 0

    def det(self, A: Matrix) -> int:
        n = len(A)
        M = [list(r) for r in A]
        d = 1
        for c in range(n):
            piv = next((i for i in range(c, n) if M[i][c]), None)
            if piv is None:
                return 0
            if piv != c:
                M[c], M[piv] = M[piv], M[c]
                d = self.neg(d)
            d = self.mul(d, M[c][c])
            inv = self.inv(M[c][c])
            for i in range(c + 1, n):
                if M[i][c]:
                    f = self.mul(M[i][c], inv)
                    M[i] = [self.sub(x, self.mul(f, y)) for x, y in zip(M[i], M[c])]
        return d

    def inverse(self, A: Matrix) -> Matrix:
        n = len(A)
        aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(A)]
        R, piv = self.rref(aug)
        if piv[:n] != list(range(n)):
            raise ZeroDivisionError("singular matrix")
        return [row[n:] for row in R]

    def solve(self, A: Matrix, b: Sequence[int]) -> list[int]:
        n = len(A)
        return [row[0] for row in self.matmul(self.inverse(A), [[x] for x in b])] if n else []

    def nullspace(self, A: Matrix, ncols: int) -> list[list[int]]:
        """Basis of {x : A x = 0} as a list of vectors."""
        if not A:
            return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
        R, pivots = self.rref(A)
        free = [c for c in range(ncols) if c not in pivots]
        basis = []
        for f in free:
            v = [0] * ncols
            v[f] = 1
            for r, c in enumerate(pivots):
                v[c] = self.neg(R[r][f])
            basis.append(v)
        return basis


@lru_cache(maxsize=None)
def field(p: int, m: int = 1) -> GF:
    return GF(p, m)
