import pytest

from sl2lift.chevalley import LieElt, adjoint_matrix, reduce_mod_p, structure_constants
from sl2lift.linalg import mat_power_mod
from sl2lift.parabolic import enumerate_distinguished, grading
from sl2lift.sl2 import (
    Sl2Triple,
    TripleError,
    build_triple,
    center_order,
    injectivity_rank,
    order_p_criterion,
    richardson_candidate,
    richardson_certificate,
    surjectivity_rank,
    touches_center_boundary,
    verify_triple,
)
from sl2lift.rootdata import build_root_system

PRIMES = (2, 3, 5, 7, 11, 13)


def test_a1_triple():
    C = structure_constants("A1")
    T = build_triple(grading(C, []))
    assert T.X == C.basis_element(0)
    assert T.Y == C.basis_element(1)
    assert T.H == C.basis_element(2)
    assert T.denominator_primes == frozenset()
    assert verify_triple(T, 5)


def test_a2_richardson():
    C = structure_constants("A2")
    g = grading(C, [])
    X = richardson_candidate(g)
    assert X == C.element({C.e((1, 0)): 1, C.e((0, 1)): 1})
    assert surjectivity_rank(g, X) == 2
    T = build_triple(g)
    assert verify_triple(T)


def test_a2_centre_boundary():
    C = structure_constants("A2")
    g = grading(C, [])
    X = richardson_candidate(g)
    assert surjectivity_rank(g, reduce_mod_p(X, 3), 3) == 1
    assert surjectivity_rank(g, reduce_mod_p(X, 5), 5) == 2
    assert richardson_certificate(g, reduce_mod_p(X, 3), 3)
    assert center_order(C.root_system) == 3
    assert touches_center_boundary(C.root_system, 3)


def test_g2_richardson_mod_p():
    C = structure_constants("G2")
    g = grading(C, [])
    X = richardson_candidate(g)
    for p in (5, 7, 11):
        assert surjectivity_rank(g, reduce_mod_p(X, p), p) == g.dim(2)


@pytest.mark.parametrize("label", ["A3", "B2", "B3", "C3", "D4", "G2", "F4"])
def test_triples_over_q_and_mod_p(label):
    C = structure_constants(label)
    R = C.root_system
    for I in enumerate_distinguished(C):
        g = grading(C, I)
        T = build_triple(g)
        assert verify_triple(T)
        assert injectivity_rank(g, T.X) == g.dim(-2) == g.dim(0)
        for p in PRIMES:
            if p in R.bad_primes or not order_p_criterion(g, p):
                continue
            Tp = build_triple(g, p)
            assert p not in Tp.denominator_primes
            assert verify_triple(Tp, p)


def test_corrupted_triple_fails():
    C = structure_constants("A2")
    T = build_triple(grading(C, []))
    bad = Sl2Triple(T.X, 2 * T.Y, T.H, T.denominator_primes, T.grading)
    assert not verify_triple(bad)


def test_denominator_prime_refused():
    C = structure_constants("A1")
    T = build_triple(grading(C, []))
    bad = Sl2Triple(T.X, T.Y, T.H, frozenset({5}), T.grading)
    with pytest.raises(TripleError):
        verify_triple(bad, 5)


def test_order_p_examples():
    A1 = grading(structure_constants("A1"), [])
    assert order_p_criterion(A1, 2)
    A2 = grading(structure_constants("A2"), [])
    T = build_triple(A2, 3)
    assert order_p_criterion(A2, 3, T)
    adX = adjoint_matrix(reduce_mod_p(T.X, 3))
    assert not mat_power_mod(adX, 3, 3).any()
    G2 = grading(structure_constants("G2"), [])
    assert not order_p_criterion(G2, 5)


def test_center_orders():
    expected = {"A1": 2, "A2": 3, "A4": 5, "B3": 2, "C3": 2, "D4": 4, "E6": 3, "E7": 2,
                "E8": 1, "F4": 1, "G2": 1}
    for label, n in expected.items():
        assert center_order(build_root_system(label)) == n


def test_levi_triple():
    C = structure_constants("B3")
    g = grading(C, [], levi=[1, 2])
    T = build_triple(g, 5)
    assert verify_triple(T, 5)
    assert all(C.root_of(k) is None or C.root_of(k)[0] == 0 for k in T.X.coeffs)


def test_json_shape():
    C = structure_constants("G2")
    d = build_triple(grading(C, [])).to_json()
    assert d["levi"] == [1, 2] and d["parabolic"] == []
    assert all(isinstance(lab, str) for lab, _ in d["X"])
