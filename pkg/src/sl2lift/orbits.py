"""Bala-Carter catalogue of nilpotent orbits.

Every pair (standard Levi ``J``, distinguished parabolic ``I`` of that
Levi) gives a cocharacter tau of the Levi.  Its dominant Weyl conjugate
in the ambient group is the weighted Dynkin diagram, which is used as
the deduplication key.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import lru_cache

from .chevalley import ChevalleyAlgebra
from .parabolic import (
    associated_cocharacter,
    canonical_key,
    enumerate_distinguished,
    grading,
    subsets,
)
from .rootdata import (
    CoweightVector,
    dominant_representative,
    format_type,
    is_integral_on_coroot_lattice,
    levi_subsystem,
)


class BadPrimeError(ValueError):
    pass


@dataclass(frozen=True)
class OrbitRecord:
    levi_subset: tuple[int, ...]
    levi_type: str
    dist_parabolic: tuple[int, ...]
    weighted_diagram: tuple[int, ...]
    grading_height: int
    order_p_good_primes: dict = field(default_factory=dict, compare=False, hash=False)
    orbit_dim: int | None = None

    def to_json(self) -> dict:
        """Indices are 1-based (Bourbaki numbering) in the serialized form."""
        return {
            "levi_subset": [j + 1 for j in self.levi_subset],
            "levi_type": self.levi_type,
            "dist_parabolic": [i + 1 for i in self.dist_parabolic],
            "weighted_diagram": list(self.weighted_diagram),
            "grading_height": self.grading_height,
            "order_p_good_primes": {str(p): v for p, v in sorted(self.order_p_good_primes.items())},
            "orbit_dim": self.orbit_dim,
        }


def weighted_diagram(R, tau: CoweightVector) -> tuple[int, ...]:
    """Labels <alpha_i, tau_dom> of the dominant conjugate of an integral coweight."""
    if not is_integral_on_coroot_lattice(R, tau):
        raise ValueError("weighted diagrams are only defined for integral coweights")
    dom, _ = dominant_representative(R, tau)
    return tuple(int(c) for c in dom.coords)


def diagram_grading_dims(R, diagram) -> dict[int, int]:
    dims: dict[int, int] = {0: R.rank}
    for a in R.roots:
        d = sum(c * w for c, w in zip(a, diagram))
        dims[d] = dims.get(d, 0) + 1
    return dims


def grading_height(R, diagram) -> int:
    return max((sum(c * w for c, w in zip(a, diagram)) for a in R.roots), default=0)


def orbit_dimension(R, diagram) -> int:
    dims = diagram_grading_dims(R, diagram)
    total = R.rank + len(R.roots)
    return total - dims.get(0, 0) - dims.get(1, 0)


def order_p_flags(rec: OrbitRecord, primes, R) -> dict[int, bool]:
    bad = [p for p in primes if p in R.bad_primes]
    if bad:
        raise BadPrimeError(f"{bad[0]} is bad for {R.label}")
    return {p: rec.grading_height < 2 * p for p in primes}


def bala_carter_catalogue(C: ChevalleyAlgebra, primes=()) -> list[OrbitRecord]:
    R = C.root_system
    bad = [p for p in primes if p in R.bad_primes]
    if bad:
        raise BadPrimeError(f"{bad[0]} is bad for {R.label}")
    best: dict[tuple[int, ...], tuple] = {}
    for J in subsets(range(R.rank)):
        levi_type = format_type(levi_subsystem(R, J).type_label)
        for I in enumerate_distinguished(C, levi=J):
            tau = associated_cocharacter(grading(C, I, levi=J))
            diag = weighted_diagram(R, tau)
            key = (canonical_key(J), canonical_key(I))
            if diag not in best or key < best[diag][0]:
                best[diag] = (key, J, I, levi_type)
    records = []
    for diag, (_, J, I, levi_type) in best.items():
        h = grading_height(R, diag)
        rec = OrbitRecord(
            levi_subset=tuple(sorted(J)),
            levi_type=levi_type,
            dist_parabolic=tuple(sorted(I)),
            weighted_diagram=diag,
            grading_height=h,
            orbit_dim=orbit_dimension(R, diag),
        )
        records.append(replace(rec, order_p_good_primes=order_p_flags(rec, primes, R)))
    records.sort(key=lambda r: (r.weighted_diagram, r.levi_type))
    return records


@lru_cache(maxsize=None)
def type_A_partition_oracle(n: int) -> int:
    """Number of partitions of n, by direct enumeration."""
    def count(m, largest):
        if m == 0:
            return 1
        return sum(count(m - k, k) for k in range(min(m, largest), 0, -1))
    return count(n, n)


def partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def dual_partition(lam) -> tuple[int, ...]:
    return tuple(sum(1 for x in lam if x > i) for i in range(lam[0])) if lam else ()


def type_A_orbit_dims(n: int) -> list[int]:
    """Orbit dimensions n^2 - sum (dual partition)_i^2 over all partitions of n."""
    return sorted(n * n - sum(x * x for x in dual_partition(lam)) for lam in partitions(n))
