import random

import pytest

from sl2lift.ffield import field
from sl2lift.springer import (
    SetupError,
    build_setup,
    check_p_power_compat,
    diagonal_lie_basis,
    is_nilpotent,
    perp_torus_basis,
    project,
    random_group_element,
    random_unipotent,
    springer_map,
    springer_suite,
    theta_suite,
    toral_p_root,
    torus_element,
)


def test_dimensions_and_gram():
    assert build_setup("Sp", 4, 5).dim == 10
    assert build_setup("GL", 3, 7).dim == 9
    assert build_setup("SO", 5, 7).dim == 10


def test_so3_mod_3():
    # no claim in advance: the determinant decides
    try:
        S = build_setup("SO", 3, 3)
    except SetupError as exc:
        assert "degenerate" in str(exc)
    else:
        assert S.field.det(S.gram) != 0


def test_refusals():
    with pytest.raises(SetupError):
        build_setup("Sp", 4, 2)
    with pytest.raises(SetupError):
        build_setup("SL", 3, 5)
    with pytest.raises(SetupError):
        build_setup("Sp", 3, 5)


def test_projection_basics():
    S = build_setup("Sp", 4, 5)
    F = S.field
    for B in S.lie_basis:
        assert project(B, S) == B
    assert F.is_zero(project(F.identity(4), S))
    rng = random.Random(0)
    A = [[rng.randrange(5) for _ in range(4)] for _ in range(4)]
    R = F.matsub(A, project(A, S))
    assert all(S.beta(R, B) == 0 for B in S.lie_basis)
    assert S.in_algebra(project(A, S))


def test_p_power_compat_sp4():
    S = build_setup("Sp", 4, 5)
    rng = random.Random(0)
    assert check_p_power_compat(S.field.identity(4), S)
    for _ in range(100):
        g = random_group_element(S, rng)
        assert S.in_group(g)
        assert check_p_power_compat(g, S)


def test_semisimple_sp4_f25():
    S = build_setup("Sp", 4, 5, 2)
    F = S.field
    rng = random.Random(1)
    for _ in range(10):
        s = torus_element(S, [rng.randrange(1, F.q) for _ in range(2)])
        assert S.in_group(s)
        assert check_p_power_compat(s, S)


def test_springer_map():
    S = build_setup("GL", 3, 7)
    F = S.field
    assert F.is_zero(springer_map(F.identity(3), S))
    J = [[1, 1, 0], [0, 1, 1], [0, 0, 1]]
    assert springer_map(J, S) == F.matsub(J, F.identity(3))
    with pytest.raises(ValueError):
        springer_map([[2, 0, 0], [0, 1, 0], [0, 0, 1]], S)
    T = build_setup("Sp", 4, 5)
    rng = random.Random(2)
    for _ in range(10):
        u = random_unipotent(T, rng)
        L = springer_map(u, T)
        assert is_nilpotent(L, T.field)
        assert T.field.is_zero(T.field.matpow(L, 5))
        assert T.field.matpow(u, 5) == T.field.identity(4)


@pytest.mark.parametrize("fam,n,p,m", [("Sp", 4, 5, 1), ("SO", 5, 7, 1), ("GL", 3, 5, 2),
                                       ("SO", 4, 5, 1), ("Sp", 6, 7, 1)])
def test_suite(fam, n, p, m):
    rep = springer_suite(fam, n, p, m, samples=20, seed=3)
    assert rep["all_pass"], rep["checks"]


def test_theta():
    F9 = field(3, 2)
    A = [[F9.elements()[5], 0], [0, 1]]
    assert toral_p_root(A, 1, F9) == [[F9.pow(5, 3), 0], [0, 1]]
    F7 = field(7)
    assert toral_p_root([[3, 0], [0, 4]], 1, F7) == [[3, 0], [0, 4]]
    with pytest.raises(ValueError):
        toral_p_root([[1, 1], [0, 1]], 1, F9)
    for p, m in [(3, 2), (3, 3), (5, 2)]:
        for n in range(1, 4):
            assert theta_suite(p, m, n, samples=100, seed=n)["all_pass"]


@pytest.mark.parametrize("fam,n", [("GL", 3), ("Sp", 4), ("SO", 5)])
def test_torus_bases(fam, n):
    S = build_setup(fam, n, 5)
    F = S.field
    for H in diagonal_lie_basis(S):
        assert S.in_algebra(H)
        assert F.matpow(H, 5) == H
    perp = perp_torus_basis(S)
    for D in perp:
        P = F.matpow(D, 5)
        assert all(S.beta(P, B) == 0 for B in S.lie_basis)


def test_perp_closure_sp4():
    # diagonals beta-orthogonal to sp(4) stay orthogonal after p-th powers
    S = build_setup("Sp", 4, 7)
    F = S.field
    perp = perp_torus_basis(S)
    assert len(perp) == 2
    rng = random.Random(0)
    for _ in range(20):
        D = F.zeros(4)
        for B in perp:
            D = F.matadd(D, F.scale(rng.randrange(7), B))
        P = F.matpow(D, 7)
        assert all(S.beta(P, B) == 0 for B in S.lie_basis)
