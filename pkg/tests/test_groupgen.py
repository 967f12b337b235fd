import numpy as np
import pytest

from fsnlab import InputError, derived_subgroup, is_abelian, is_nilpotent
from fsnlab.classify import is_schmidt_group
from fsnlab.groupgen import (
    ActionSpec, affine_group, alternating, are_isomorphic, automorphisms, cyclic, dihedral,
    direct_product, elementary_abelian, find_isomorphism, invariants, make_standard, quaternion8,
    reduce_degree, semidirect_product, symmetric, table_group,
)


def test_make_standard():
    assert make_standard("cyclic", 5).order == 5
    assert make_standard("dihedral", 4).order == 8
    assert make_standard("symmetric", 4).order == 24
    with pytest.raises(InputError):
        make_standard("sporadic", 1)


def test_small_degree_semidirect_products():
    c3 = cyclic(3)
    s3 = semidirect_product(c3, cyclic(2), ActionSpec([[c3.generators[0] ** 2]]))
    assert s3.order == 6 and s3.degree == 3 and are_isomorphic(s3, symmetric(3))
    c7 = cyclic(7)
    f21 = semidirect_product(c7, cyclic(3), ActionSpec([[c7.generators[0] ** 2]]))
    assert f21.order == 21 and f21.degree == 7 and is_schmidt_group(f21)


def test_q8_by_c3_is_sl23():
    Q = quaternion8()
    a, b = Q.generators
    G = semidirect_product(Q, cyclic(3), ActionSpec([[b, a * b]]))
    t = G.table
    census = dict(zip(*np.unique(t.orders, return_counts=True)))
    assert {int(k): int(v) for k, v in census.items()} == {1: 1, 2: 1, 3: 8, 4: 6, 6: 8}


def test_invalid_actions_rejected():
    c3 = cyclic(3)
    with pytest.raises(InputError):
        semidirect_product(c3, cyclic(2), ActionSpec([[c3.generators[0]] * 2]))
    with pytest.raises(InputError):
        # squaring is an automorphism of C3 of order 2, so C3 cannot act through it
        semidirect_product(c3, cyclic(3), ActionSpec([[c3.generators[0] ** 2]]))


def test_automorphism_counts():
    assert len(automorphisms(alternating(4))) == 24
    assert len(automorphisms(elementary_abelian(2, 3))) == 168
    assert len(automorphisms(cyclic(12))) == 4


def test_isomorphism():
    assert are_isomorphic(dihedral(3), symmetric(3))
    assert not are_isomorphic(dihedral(4), quaternion8())
    assert not are_isomorphic(cyclic(4), elementary_abelian(2, 2))
    A, B = dihedral(6), direct_product(symmetric(3), cyclic(2))
    iso = find_isomorphism(A, B)
    ta, tb = A.table, B.table
    assert iso is not None
    assert np.array_equal(iso[ta.mul], tb.mul[iso[:, None], iso[None, :]])
    assert invariants(A) == invariants(B)


def test_table_group_and_reduce_degree():
    G = table_group(symmetric(4).table.mul.astype(np.int64))
    assert G.order == 24 and G.degree == 4
    R = reduce_degree(direct_product(cyclic(2), cyclic(3)))
    assert R.order == 6 and R.degree <= 5


def test_affine_group():
    G = affine_group(3, 2, [[[2, 0], [0, 2]]])
    assert G.order == 18 and derived_subgroup(G).order == 9
    assert is_abelian(derived_subgroup(G)) and not is_nilpotent(G)
