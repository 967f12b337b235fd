import functools

import pytest
from hypothesis import given, settings, strategies as st

from fsnlab import (
    METANILPOTENT, NILPOTENT, SUPERSOLUBLE, InputError, Subgroup, carter_subgroups, classify_lattice,
    conjugate_subgroup, is_f_abnormal, is_f_projector, is_f_subnormal, is_minimal_non_f,
    is_schmidt_group, is_self_normalizing, maximal_subgroups, packaged_corpus, subgroup_lattice,
)
from fsnlab.formations import ABELIAN
from fsnlab.groupgen import alternating, cyclic, quaternion8, symmetric


@functools.lru_cache(maxsize=None)
def small_groups():
    specs = [s for n in ("soluble_le_24", "family_le_200") for s in packaged_corpus(n)]
    return tuple(s.build() for s in specs if s.expected_order <= 48)


@st.composite
def group_and_subgroup(draw):
    G = draw(st.sampled_from(small_groups()))
    masks = sorted(subgroup_lattice(G).all_masks())
    return G, Subgroup(G, draw(st.sampled_from(masks))), draw(st.sampled_from(G.elements()))


@settings(max_examples=150, deadline=None)
@given(group_and_subgroup(), st.sampled_from([NILPOTENT, SUPERSOLUBLE, METANILPOTENT]))
def test_predicates_are_conjugation_invariant(case, F):
    G, H, g = case
    K = conjugate_subgroup(H, g)
    assert is_f_subnormal(F, G, H)[0] == is_f_subnormal(F, G, K)[0]
    assert is_f_abnormal(F, G, H) == is_f_abnormal(F, G, K)
    assert is_self_normalizing(G, H) == is_self_normalizing(G, K)


@settings(max_examples=150, deadline=None)
@given(group_and_subgroup(), st.sampled_from([NILPOTENT, SUPERSOLUBLE, METANILPOTENT]))
def test_proper_subgroup_is_not_both_subnormal_and_abnormal(case, F):
    G, H, _ = case
    if H.order < G.order:
        assert not (is_f_subnormal(F, G, H)[0] and is_f_abnormal(F, G, H))


@settings(max_examples=150, deadline=None)
@given(group_and_subgroup())
def test_subnormality_grows_with_the_formation(case):
    G, H, _ = case
    if is_f_subnormal(NILPOTENT, G, H)[0]:
        assert is_f_subnormal(METANILPOTENT, G, H)[0]
    if is_f_abnormal(METANILPOTENT, G, H):
        assert is_f_abnormal(NILPOTENT, G, H)


@settings(max_examples=100, deadline=None)
@given(group_and_subgroup())
def test_witness_is_a_valid_chain(case):
    G, H, _ = case
    ok, w = is_f_subnormal(METANILPOTENT, G, H)
    if ok:
        links = w.links
        assert links[0] == H and links[-1].order == G.order
        lat = subgroup_lattice(G)
        for k, l in zip(links, links[1:]):
            assert k.mask in lat.maximal_in(l.mask)


def test_s3_classification():
    S3 = symmetric(3)
    rows = {c.subgroup.order: c for c in classify_lattice(NILPOTENT, S3)}
    assert rows[3].f_subnormal and not rows[3].f_abnormal
    assert not rows[2].f_subnormal and rows[2].f_abnormal and rows[2].self_normalizing
    assert rows[1].f_subnormal and rows[6].f_subnormal


def test_subgroups_of_a_subgroup():
    S4 = symmetric(4)
    A4 = [M for M in maximal_subgroups(S4) if M.order == 12][0]
    V = [H for H in subgroup_lattice(S4).representatives() if H.order == 4 and H <= A4 and H.is_normal()][0]
    assert is_f_subnormal(NILPOTENT, A4, V)[0]


def test_carter_subgroups():
    assert [c.order for c in carter_subgroups(symmetric(4))] == [8]
    assert [c.order for c in carter_subgroups(alternating(4))] == [3]
    assert [c.order for c in carter_subgroups(quaternion8())] == [8]


def test_projectors_of_s4():
    S4 = symmetric(4)
    by_order = {M.order: M for M in maximal_subgroups(S4)}
    assert is_f_projector(NILPOTENT, S4, by_order[8])
    assert not is_f_projector(NILPOTENT, S4, by_order[6])
    assert is_f_projector(SUPERSOLUBLE, S4, by_order[6])
    assert not is_f_projector(SUPERSOLUBLE, S4, by_order[8])


def test_projectors_match_brute_force(corpus_groups):
    """Every quotient image is F-maximal, checked on explicit quotient groups."""
    from fsnlab import belongs, normal_subgroups, quotient

    for G in [G for G in corpus_groups if G.order <= 24]:
        lat = subgroup_lattice(G)
        quotients = [quotient(G, N) for N in normal_subgroups(G)]
        for F in (NILPOTENT, SUPERSOLUBLE):
            for H in lat.representatives():
                expected = True
                for Q in quotients:
                    image = Q.project(H)
                    if not belongs(F, image):
                        expected = False
                        break
                    qlat = subgroup_lattice(Q)
                    if any(belongs(F, Subgroup(Q, m)) for m in qlat.overgroups(image.mask, proper=True)):
                        expected = False
                        break
                assert is_f_projector(F, G, H) == expected, (G.name, F.name, H.order)


def test_schmidt_and_minimal_non_f():
    assert is_schmidt_group(symmetric(3))
    assert is_schmidt_group(alternating(4))
    assert not is_schmidt_group(symmetric(4))
    assert not is_schmidt_group(cyclic(6))
    assert is_minimal_non_f(SUPERSOLUBLE, alternating(4))
    assert is_minimal_non_f(METANILPOTENT, symmetric(4))
    with pytest.raises(InputError):
        is_minimal_non_f(NILPOTENT.with_flags(subgroup_closed=False), symmetric(3))


def test_abelian_formation_abnormality():
    S3 = symmetric(3)
    C2 = S3.subgroup([S3.generators[1]])
    assert is_f_abnormal(ABELIAN, S3, C2)
