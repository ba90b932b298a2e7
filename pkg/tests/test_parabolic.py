import pytest

from sl2lift.chevalley import structure_constants
from sl2lift.parabolic import (
    NotDistinguishedError,
    associated_cocharacter,
    associated_cocharacter_coroots,
    enumerate_distinguished,
    grading,
    is_distinguished,
    is_distinguished_oracle,
    nilradical_class,
    nilradical_class_lcs,
    subsets,
)
from sl2lift.rootdata import pairing

TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"]


def test_grading_dims():
    C = structure_constants("A2")
    assert grading(C, []).dim_vector == {-4: 1, -2: 2, 0: 2, 2: 2, 4: 1}
    assert grading(C, [0]).dim_vector == {-2: 2, 0: 4, 2: 2}
    assert grading(C, [0, 1]).dim_vector == {0: 8}


def test_small_distinguished_examples():
    assert is_distinguished(grading(structure_constants("A1"), []))
    assert not is_distinguished(grading(structure_constants("A2"), [0]))
    assert is_distinguished_oracle(grading(structure_constants("A2"), []))


@pytest.mark.parametrize("label", TYPES)
def test_oracle_agrees(label):
    C = structure_constants(label)
    for I in subsets(range(C.rank)):
        g = grading(C, I)
        assert is_distinguished(g) == is_distinguished_oracle(g)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_type_a_only_borel(n):
    assert enumerate_distinguished(structure_constants(f"A{n}")) == [frozenset()]


def test_exceptional_counts():
    assert len(enumerate_distinguished(structure_constants("G2"))) == 2
    assert len(enumerate_distinguished(structure_constants("F4"))) == 4
    assert enumerate_distinguished(structure_constants("B2")) == [frozenset()]


def test_cocharacters():
    A1 = structure_constants("A1")
    tau = associated_cocharacter(grading(A1, []))
    assert tau.coords == (2,)
    assert associated_cocharacter_coroots(grading(A1, [])) == (1,)
    A2 = structure_constants("A2")
    assert associated_cocharacter(grading(A2, [])).coords == (2, 2)
    assert associated_cocharacter_coroots(grading(A2, [])) == (2, 2)
    G2 = structure_constants("G2")
    tau = associated_cocharacter(grading(G2, []))
    assert pairing(G2.root_system.highest_roots[0], tau) == 10
    with pytest.raises(NotDistinguishedError):
        associated_cocharacter(grading(A2, [0]))


@pytest.mark.parametrize("label", TYPES)
def test_cocharacter_matches_grading(label):
    C = structure_constants(label)
    for I in enumerate_distinguished(C):
        g = grading(C, I)
        tau = associated_cocharacter(g)
        for a, f in g.f_values.items():
            assert pairing(a, tau) == f


def test_nilradical_class():
    assert nilradical_class(grading(structure_constants("A2"), [])) == 2
    assert nilradical_class(grading(structure_constants("A1"), [])) == 1
    assert nilradical_class(grading(structure_constants("A2"), [0, 1])) == 0
    assert nilradical_class_lcs(grading(structure_constants("A2"), [0, 1])) == 0


@pytest.mark.parametrize("label", ["A3", "B3", "C3", "G2", "F4"])
def test_nilradical_class_against_lcs(label):
    C = structure_constants(label)
    for I in enumerate_distinguished(C):
        g = grading(C, I)
        assert nilradical_class(g) == nilradical_class_lcs(g)


def test_levi_grading():
    C = structure_constants("A3")
    g = grading(C, [], levi=[0, 1])
    assert g.dim_vector == {-4: 1, -2: 2, 0: 2, 2: 2, 4: 1}
    assert is_distinguished(g)
    with pytest.raises(ValueError):
        grading(C, [2], levi=[0, 1])
