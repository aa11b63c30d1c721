"""Lie-algebra data: roots, weights, inner products, dimensions, triality."""

from fractions import Fraction

import pytest

from csd4 import rootsystem as rs


def test_cartan_inverse_exact():
    for i in range(4):
        for j in range(4):
            entry = sum(
                rs.CARTAN[i][l] * rs.INVERSE_CARTAN[l][j] for l in range(4)
            )
            assert entry == (1 if i == j else 0)


def test_weight_gram_matrix():
    # diagonal (1,2,1,1); (l_i, l_2) = 1 for i in {1,3,4}; (l_i, l_j) = 1/2
    diag = [rs.INVERSE_CARTAN[i][i] for i in range(4)]
    assert diag == [1, 2, 1, 1]
    for i in (0, 2, 3):
        assert rs.INVERSE_CARTAN[i][1] == 1
        for j in (0, 2, 3):
            if i != j:
                assert rs.INVERSE_CARTAN[i][j] == Fraction(1, 2)


def test_positive_roots_table():
    roots = rs.positive_roots()
    assert len(roots) == 12
    assert (1, 0, 0, 0) in roots and rs.height((1, 0, 0, 0)) == 1
    assert (1, 2, 1, 1) in roots and rs.height((1, 2, 1, 1)) == 5
    assert roots[-1] == (1, 2, 1, 1)  # the highest root closes the list
    assert sorted(rs.height(r) for r in roots) == [1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 4, 5]
    total = tuple(sum(r[i] for r in roots) for i in range(4))
    assert total == (6, 10, 6, 6)  # = 2 rho in root coordinates
    assert total == tuple(2 * c for c in rs.WEYL_VECTOR_ROOT)
    assert roots == sorted(roots, key=lambda r: (rs.height(r), r))


def test_root_to_weight_columns():
    assert rs.root_to_weight((1, 0, 0, 0)) == (2, -1, 0, 0)
    assert rs.root_to_weight((0, 1, 0, 0)) == (-1, 2, -1, -1)
    assert rs.root_to_weight((0, 0, 1, 0)) == (0, -1, 2, 0)
    assert rs.root_to_weight((0, 0, 0, 1)) == (0, -1, 0, 2)
    assert rs.root_to_weight((0, 0, 0, 0)) == (0, 0, 0, 0)


def test_weight_root_roundtrip():
    for r in rs.positive_roots():
        assert rs.weight_to_root(rs.root_to_weight(r)) == r
    with pytest.raises(ValueError):
        rs.weight_to_root((1, 0, 0, 0))  # lambda_1 is not in the root lattice


def test_weyl_vector():
    assert rs.root_to_weight(rs.WEYL_VECTOR_ROOT) == rs.WEYL_VECTOR


def test_simple_root_inner_products():
    # (a_i, a_i) = 2; (a_2, a_i) = -1 for i in {1,3,4}; 0 otherwise
    simple = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    for i in range(4):
        wi = rs.root_to_weight(simple[i])
        for j in range(4):
            wj = rs.root_to_weight(simple[j])
            got = rs.inner(wi, wj)
            if i == j:
                assert got == 2
            elif 1 in (i, j):
                assert got == -1
            else:
                assert got == 0


def test_rho_pairing_equals_height():
    for r in rs.positive_roots():
        assert rs.inner(rs.WEYL_VECTOR, rs.root_to_weight(r)) == rs.height(r)


def test_weyl_dimension_values():
    assert rs.weyl_dimension((0, 0, 0, 0)) == 1
    assert rs.weyl_dimension((1, 0, 0, 0)) == 8
    assert rs.weyl_dimension((0, 1, 0, 0)) == 28
    assert rs.weyl_dimension((0, 0, 1, 0)) == 8
    assert rs.weyl_dimension((0, 0, 0, 1)) == 8
    assert rs.weyl_dimension((2, 0, 0, 0)) == 35
    assert rs.weyl_dimension((1, 0, 1, 0)) == 56


def test_weyl_dimension_rejects_non_dominant():
    with pytest.raises(ValueError):
        rs.weyl_dimension((1, -1, 0, 0))


def test_triality_permute():
    swap13 = {1: 3, 2: 2, 3: 1, 4: 4}
    assert rs.apply_triality((1, 2, 3, 4), swap13) == (3, 2, 1, 4)
    ident = rs.TRIALITY_MAPS[0]
    assert rs.apply_triality((5, 6, 7, 8), ident) == (5, 6, 7, 8)
    cycle = {1: 3, 2: 2, 3: 4, 4: 1}
    assert rs.apply_triality((1, 0, 0, 0), cycle) == (0, 0, 1, 0)
    with pytest.raises(ValueError):
        rs.apply_triality((1, 2, 3, 4), {1: 2, 2: 1, 3: 3, 4: 4})


def test_triality_group_closure():
    maps = rs.TRIALITY_MAPS
    assert len(maps) == 6
    as_tuples = {tuple(s[i] for i in (1, 2, 3, 4)) for s in maps}
    assert len(as_tuples) == 6
    for s in maps:
        assert s[2] == 2 and sorted((s[1], s[3], s[4])) == [1, 3, 4]


def test_dimension_triality_invariant():
    for m in [(1, 2, 0, 3), (0, 1, 2, 0), (2, 0, 0, 1), (1, 1, 1, 1)]:
        dims = {rs.weyl_dimension(rs.apply_triality(m, s)) for s in rs.TRIALITY_MAPS}
        assert len(dims) == 1
