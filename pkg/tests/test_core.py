import pytest
from hypothesis import given, settings, strategies as st

from fsnlab import (
    Group, InputError, Permutation, ResourceCapError, center, centralizer, conjugate_subgroup, core,
    derived_series, derived_subgroup, fitting_subgroup, is_abelian, is_nilpotent, is_normal,
    is_soluble, lower_central_series, normalizer, pcore, quotient, sylow_subgroup,
)
from fsnlab.core import Config
from fsnlab.groupgen import alternating, cyclic, dihedral, direct_product, quaternion8, symmetric

from oracles import closure_elements


def gens_strategy(n):
    return st.lists(st.permutations(list(range(n))).map(Permutation), min_size=1, max_size=3)


@settings(max_examples=40, deadline=None)
@given(gens_strategy(6))
def test_order_matches_closure(gens):
    G = Group(6, gens)
    assert G.order == len(closure_elements(6, gens))
    assert set(G.elements()) == closure_elements(6, gens)


@settings(max_examples=40, deadline=None)
@given(gens_strategy(6), st.permutations(list(range(6))).map(Permutation))
def test_membership_matches_closure(gens, g):
    G = Group(6, gens)
    assert (g in G) == (g in closure_elements(6, gens))


def test_standard_orders():
    assert symmetric(5).order == 120
    assert alternating(5).order == 60
    assert dihedral(6).order == 12
    assert quaternion8().order == 8
    assert direct_product(symmetric(3), cyclic(4)).order == 24


def test_degree_cap_enforced():
    with pytest.raises(ResourceCapError):
        Group(10, [Permutation.identity(10)], config=Config(degree_cap=8))


def test_subgroup_rejects_foreign_element():
    G = alternating(4)
    with pytest.raises(InputError):
        G.subgroup([Permutation.from_cycles(4, "(0 1)")])


def test_s4_structure():
    S4 = symmetric(4)
    assert derived_subgroup(S4).order == 12
    assert [H.order for H in derived_series(S4)] == [24, 12, 4, 1]
    assert [H.order for H in lower_central_series(S4)] == [24, 12]
    assert fitting_subgroup(S4).order == 4
    assert center(S4).order == 1
    assert is_soluble(S4) and not is_nilpotent(S4) and not is_abelian(S4)
    assert not is_soluble(alternating(5))
    P = sylow_subgroup(S4, 2)
    assert P.order == 8 and normalizer(S4, P) == P
    assert pcore(S4, 2).order == 4 and pcore(S4, 3).order == 1
    H = S4.subgroup([Permutation.from_cycles(4, "(0 1)")])
    assert core(S4, H).order == 1
    assert centralizer(S4, H).order == 4
    assert not is_normal(S4, H) and is_normal(S4, fitting_subgroup(S4))


def test_conjugate_subgroup():
    S4 = symmetric(4)
    H = S4.subgroup([Permutation.from_cycles(4, "(0 1)")])
    K = conjugate_subgroup(H, Permutation.from_cycles(4, "(1 2)"))
    assert Permutation.from_cycles(4, "(0 2)") in K


def test_quotient_project_and_preimage():
    S4 = symmetric(4)
    V = fitting_subgroup(S4)
    Q = quotient(S4, V)
    assert Q.order == 6 and not is_abelian(Q)
    A4 = derived_subgroup(S4)
    image = Q.project(A4)
    assert image.order == 3
    assert Q.preimage(image) == A4


def test_quotient_by_non_normal_rejected():
    S3 = symmetric(3)
    with pytest.raises(InputError):
        quotient(S3, S3.subgroup([Permutation.from_cycles(3, "(0 1)")]))


@settings(max_examples=25, deadline=None)
@given(gens_strategy(5))
def test_lagrange_and_sylow(gens):
    G = Group(5, gens)
    for p in (2, 3, 5):
        if G.order % p:
            with pytest.raises(InputError):
                sylow_subgroup(G, p)
            continue
        P = sylow_subgroup(G, p)
        n = G.order
        while n % p == 0:
            n //= p
        assert P.order == G.order // n
