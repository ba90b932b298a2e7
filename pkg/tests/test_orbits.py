import random

import pytest

from sl2lift.chevalley import structure_constants
from sl2lift.orbits import (
    BadPrimeError,
    bala_carter_catalogue,
    grading_height,
    order_p_flags,
    partitions,
    type_A_orbit_dims,
    type_A_partition_oracle,
    weighted_diagram,
)
from sl2lift.parabolic import associated_cocharacter, grading
from sl2lift.rootdata import CoweightVector
from sl2lift.sl2 import build_triple, verify_triple


def test_partition_counts():
    assert [type_A_partition_oracle(n) for n in range(2, 7)] == [2, 3, 5, 7, 11]
    assert len(list(partitions(6))) == 11


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_type_a_catalogue(n):
    recs = bala_carter_catalogue(structure_constants(f"A{n - 1}"))
    assert len(recs) == type_A_partition_oracle(n)
    assert sorted(r.orbit_dim for r in recs) == type_A_orbit_dims(n)


def test_a1_diagrams():
    recs = bala_carter_catalogue(structure_constants("A1"))
    assert [r.weighted_diagram for r in recs] == [(0,), (2,)]


@pytest.mark.parametrize("label,size", [("B2", 4), ("B3", 7), ("C3", 8), ("D4", 12), ("G2", 5),
                                        ("F4", 16), ("E6", 21)])
def test_catalogue_sizes(label, size):
    recs = bala_carter_catalogue(structure_constants(label))
    assert len(recs) == size
    r = recs[0].weighted_diagram.__len__()
    assert all(set(x.weighted_diagram) <= {0, 1, 2} for x in recs)
    assert len({x.weighted_diagram for x in recs}) == size
    assert sum(x.weighted_diagram == (2,) * r for x in recs) == 1
    assert sum(x.weighted_diagram == (0,) * r for x in recs) == 1


def test_regular_a2_and_subregular():
    C = structure_constants("A2")
    R = C.root_system
    assert weighted_diagram(R, associated_cocharacter(grading(C, []))) == (2, 2)
    minimal = weighted_diagram(R, associated_cocharacter(grading(C, [], levi=[0])))
    assert minimal == (1, 1)


def test_weighted_diagram_rejects_fractional():
    R = structure_constants("A2").root_system
    with pytest.raises(ValueError):
        weighted_diagram(R, CoweightVector([1, 0]))


def test_order_p_flags():
    C = structure_constants("A2")
    recs = {r.weighted_diagram: r for r in bala_carter_catalogue(C, [3])}
    assert recs[(2, 2)].order_p_good_primes == {3: True}
    assert recs[(0, 0)].order_p_good_primes == {3: True}
    G2 = structure_constants("G2")
    regular = [r for r in bala_carter_catalogue(G2, [5]) if r.weighted_diagram == (2, 2)][0]
    assert grading_height(G2.root_system, (2, 2)) == 10
    assert regular.order_p_good_primes == {5: False}


def test_bad_prime_refused():
    with pytest.raises(BadPrimeError, match="2 is bad"):
        bala_carter_catalogue(structure_constants("G2"), [2])


def test_dedup_independent_of_order(monkeypatch):
    import sl2lift.orbits as orbits

    C = structure_constants("C3")
    base = [r.to_json() for r in bala_carter_catalogue(C)]
    original = orbits.subsets

    def shuffled(S):
        out = original(S)
        random.Random(7).shuffle(out)
        return out

    monkeypatch.setattr(orbits, "subsets", shuffled)
    assert [r.to_json() for r in bala_carter_catalogue(C)] == base


@pytest.mark.parametrize("label,p", [("B3", 5), ("C3", 7), ("G2", 7), ("A3", 5)])
def test_levi_triples_reduce(label, p):
    C = structure_constants(label)
    for rec in bala_carter_catalogue(C, [p]):
        if not rec.order_p_good_primes[p]:
            continue
        g = grading(C, rec.dist_parabolic, levi=rec.levi_subset)
        T = build_triple(g, p)
        assert p not in T.denominator_primes
        assert verify_triple(T, p)


def test_json_is_one_based():
    recs = bala_carter_catalogue(structure_constants("B2"), [5])
    d = recs[-1].to_json()
    assert set(d) == {"levi_subset", "levi_type", "dist_parabolic", "weighted_diagram",
                      "grading_height", "order_p_good_primes", "orbit_dim"}
    assert d["levi_subset"] == [1, 2]
