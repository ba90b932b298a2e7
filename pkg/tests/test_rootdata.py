from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from sl2lift.rootdata import (
    CoweightVector,
    RootDataError,
    apply_word,
    bad_primes,
    build_root_system,
    classify_cartan,
    dominant_representative,
    fundamental_coweight,
    is_integral_on_coroot_lattice,
    levi_subsystem,
    pairing,
    parse_type,
    reflect_coweight,
    simple_cartan,
)

ROOT_COUNTS = {"A1": 2, "A2": 6, "A3": 12, "B2": 8, "B3": 18, "C3": 18, "D4": 24,
               "G2": 12, "F4": 48, "E6": 72, "E7": 126, "E8": 240, "A2xA1": 8}


def weyl_closure(R):
    """All roots by closing the simple roots under simple reflections."""
    seen = set(R.simple_roots)
    frontier = list(seen)
    while frontier:
        a = frontier.pop()
        for i in range(R.rank):
            b = R.reflect(a, i)
            if b not in seen:
                seen.add(b)
                frontier.append(b)
    return seen


@pytest.mark.parametrize("label,count", ROOT_COUNTS.items())
def test_root_counts(label, count):
    assert len(build_root_system(label).roots) == count


@pytest.mark.parametrize("label", ["A3", "B3", "C3", "D4", "G2", "F4", "E6", "A2xA1"])
def test_string_algorithm_matches_weyl_closure(label):
    R = build_root_system(label)
    assert set(R.roots) == weyl_closure(R)


def test_positive_roots_ordered_by_height():
    R = build_root_system("B3")
    heights = [sum(a) for a in R.positive_roots]
    assert heights == sorted(heights)
    assert R.positive_roots[:3] == R.simple_roots


def test_bad_primes():
    assert bad_primes(build_root_system("A4")) == frozenset()
    assert bad_primes(build_root_system("E8")) == {2, 3, 5}
    assert bad_primes(build_root_system("G2")) == {2, 3}
    assert bad_primes(build_root_system("B2")) == {2}


def test_inadmissible_labels():
    for bad in ["E5", "F3", "G3", "B1", "D3", "Q2", "A0"]:
        with pytest.raises(RootDataError):
            parse_type(bad)


def test_pairings():
    R = build_root_system("A2")
    for i in range(2):
        for j in range(2):
            assert pairing(R.simple_roots[i], fundamental_coweight(R, j)) == (i == j)
    rho = CoweightVector([1, 1])
    assert pairing(R.highest_roots[0], rho) == 2
    assert pairing((-1, 0), fundamental_coweight(R, 0)) == -1


def test_dominant_examples():
    A1 = build_root_system("A1")
    dom, word = dominant_representative(A1, CoweightVector([-2]))
    assert dom.coords == (2,) and word == [0]
    A2 = build_root_system("A2")
    v = CoweightVector([2, 3])
    assert dominant_representative(A2, v) == (v, [])


def weyl_orbit(R, v):
    seen = {tuple(v)}
    frontier = [tuple(v)]
    while frontier:
        x = frontier.pop()
        for i in range(R.rank):
            y = reflect_coweight(R, x, i)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3", "C3"])
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_dominant_against_orbit(label, data):
    R = build_root_system(label)
    coords = data.draw(st.lists(st.integers(-4, 4), min_size=R.rank, max_size=R.rank))
    gamma = CoweightVector(coords)
    dom, word = dominant_representative(R, gamma)
    orbit = weyl_orbit(R, gamma.coords)
    dominant = [x for x in orbit if all(c >= 0 for c in x)]
    assert dominant == [dom.coords]
    assert apply_word(R, word, dom) == gamma


def test_a2_orbit_has_six_elements():
    R = build_root_system("A2")
    assert len(weyl_orbit(R, (Fraction(-1), Fraction(2)))) == 6


def canonical(A):
    """Permutation-invariant fingerprint for comparing Cartan matrices."""
    n = len(A)
    return min(tuple(tuple(A[p[i]][p[j]] for j in range(n)) for i in range(n))
               for p in permutations(range(n)))


def test_levi_examples():
    assert levi_subsystem(build_root_system("A3"), []).roots == ()
    L = levi_subsystem(build_root_system("A3"), [0, 2])
    assert classify_cartan(L.cartan_matrix) == [("A", 1), ("A", 1)]
    L = levi_subsystem(build_root_system("F4"), [0, 1])
    assert classify_cartan(L.cartan_matrix) == [("A", 2)]


@pytest.mark.parametrize("letter,n", [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("D", 5),
                                      ("E", 6), ("E", 7), ("F", 4), ("G", 2), ("B", 2)])
def test_classify_round_trip(letter, n):
    A = simple_cartan(letter, n)
    assert classify_cartan(A) == [(letter, n)]


def test_classify_is_permutation_invariant():
    A = simple_cartan("E", 6)
    perm = [5, 3, 0, 1, 4, 2]
    B = [[A[perm[i]][perm[j]] for j in range(6)] for i in range(6)]
    assert canonical(A) == canonical(B)
    assert classify_cartan(B) == [("E", 6)]


def test_distinguished_coweights_integral():
    R = build_root_system("A2")
    assert is_integral_on_coroot_lattice(R, CoweightVector([2, 2]))
    assert not is_integral_on_coroot_lattice(R, CoweightVector([1, 0]))
