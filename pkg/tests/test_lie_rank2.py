from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weightgen.exact_series import LaurentPoly2, lp_coeff
from weightgen.genfunc_c2 import fundamental_chars_c2
from weightgen.lie_rank2 import (A2, C2, Weight, contains_weight, contains_weight_c2, dominant_representative,
                                 dominant_weights, freudenthal_mult, freudenthal_table, mult_from_character,
                                 mult_table, root_system, weyl_character, weyl_dim, weyl_orbit)

small = st.integers(0, 6)


# root systems -----------------------------------------------------------------

def test_c2_structure():
    assert len(C2.weyl_group) == 8
    assert set(C2.positive_roots) == {(2, -1), (-2, 2), (0, 1), (2, 0)}
    assert C2.gram == ((1, 1), (1, 2))
    assert C2.rho == (1, 1)


def test_a2_structure():
    assert len(A2.weyl_group) == 6
    assert len(A2.positive_roots) == 3
    assert A2.gram[0][0] == Fraction(2, 3)


@pytest.mark.parametrize("rs", [C2, A2])
def test_weyl_elements_permute_roots(rs):
    roots = rs.roots
    for g in rs.weyl_group:
        image = {Weight(g[0][0] * r.m + g[0][1] * r.n, g[1][0] * r.m + g[1][1] * r.n) for r in roots}
        assert image == roots


@pytest.mark.parametrize("rs", [C2, A2])
def test_weyl_group_preserves_inner_product(rs):
    u, v = Weight(3, -1), Weight(-2, 5)
    for g in rs.weyl_group:
        gu = Weight(g[0][0] * u.m + g[0][1] * u.n, g[1][0] * u.m + g[1][1] * u.n)
        gv = Weight(g[0][0] * v.m + g[0][1] * v.n, g[1][0] * v.m + g[1][1] * v.n)
        assert rs.inner(gu, gv) == rs.inner(u, v)


def test_root_system_lookup():
    assert root_system("c2") is C2
    with pytest.raises(ValueError):
        root_system("G2")


# orbits -----------------------------------------------------------------------

@pytest.mark.parametrize("w, size", [((0, 0), 1), ((1, 0), 4), ((0, 1), 4), ((1, 1), 8)])
def test_orbit_sizes(w, size):
    assert len(weyl_orbit(C2, w)) == size


def test_orbit_of_l1_matches_z1_monomials():
    z1, z2 = fundamental_chars_c2()
    assert set(weyl_orbit(C2, (1, 0))) == set(z1.terms)
    assert set(weyl_orbit(C2, (0, 1))) == set(z2.terms) - {(0, 0)}


@pytest.mark.parametrize("w, dom", [((-1, 1), (1, 0)), ((3, 2), (3, 2)), ((0, -1), (0, 1))])
def test_dominant_representative(w, dom):
    assert dominant_representative(C2, w) == dom


@given(st.integers(-8, 8), st.integers(-8, 8))
def test_orbit_has_exactly_one_dominant_weight(m, n):
    for rs in (C2, A2):
        orbit = weyl_orbit(rs, (m, n))
        dominant = [w for w in orbit if w.m >= 0 and w.n >= 0]
        assert len(dominant) == 1
        assert dominant_representative(rs, (m, n)) == dominant[0]


# containment and dimension ----------------------------------------------------

def test_contains_examples():
    assert contains_weight_c2(10, 5, 6, 4)
    assert contains_weight(C2, (0, 1), (0, 0))
    assert not contains_weight(C2, (1, 0), (0, 0))


def test_containment_region_vertices():
    # the boundary through (m, n) reaches (m+2n, 0) and (0, m+n)
    m, n = 6, 4
    assert contains_weight_c2(m + 2 * n, 0, m, n)
    assert contains_weight_c2(0, m + n, m, n)
    assert not contains_weight_c2(m + 2 * n - 2, 0, m, n)
    assert not contains_weight_c2(0, m + n - 1, m, n)


def test_containment_matches_freudenthal():
    for p in range(13):
        for q in range(13):
            for m in range(p + 2 * q + 2):
                for n in range(p + q + 2):
                    assert contains_weight(C2, (p, q), (m, n)) == (freudenthal_mult(C2, (p, q), (m, n)) > 0)


@pytest.mark.parametrize("r, dim", [((1, 0), 4), ((0, 1), 5), ((2, 0), 10), ((0, 0), 1)])
def test_weyl_dim_c2(r, dim):
    assert weyl_dim(C2, r) == dim


@given(small, small)
def test_weyl_dim_closed_forms(p, q):
    assert weyl_dim(C2, (p, q)) == (p + 1) * (q + 1) * (p + q + 2) * (p + 2 * q + 3) // 6
    assert weyl_dim(A2, (p, q)) == (p + 1) * (q + 1) * (p + q + 2) // 2


# Freudenthal ----------------------------------------------------------------------

@pytest.mark.parametrize("r, w, mult", [((1, 0), (1, 0), 1), ((2, 0), (0, 0), 2), ((10, 5), (0, 0), 33),
                                        ((10, 9), (0, 0), 55), ((1, 0), (0, 0), 0)])
def test_freudenthal_examples(r, w, mult):
    assert freudenthal_mult(C2, r, w) == mult


def test_freudenthal_a2_adjoint():
    assert freudenthal_mult(A2, (1, 1), (0, 0)) == 2
    assert freudenthal_mult(A2, (3, 0), (0, 0)) == 1


@pytest.mark.parametrize("rs", [C2, A2])
def test_dimension_sum(rs):
    for p in range(13):
        for q in range(13):
            table = freudenthal_table(rs, (p, q))
            assert sum(v * len(weyl_orbit(rs, w)) for w, v in table.items()) == weyl_dim(rs, (p, q))
            assert table[Weight(p, q)] == 1


@given(small, small, st.integers(-10, 10), st.integers(-10, 10))
def test_weyl_invariance(p, q, m, n):
    for rs in (C2, A2):
        v = freudenthal_mult(rs, (p, q), (m, n))
        for w in weyl_orbit(rs, (m, n)):
            assert freudenthal_mult(rs, (p, q), w) == v


# characters -------------------------------------------------------------------

def test_characters_of_fundamentals():
    z1, z2 = fundamental_chars_c2()
    assert weyl_character(C2, (1, 0)) == z1
    assert weyl_character(C2, (0, 1)) == z2
    assert weyl_character(C2, (0, 0)) == LaurentPoly2.constant(1)


def test_character_tensor_square():
    # 4 x 4 = 10 + 5 + 1, an identity independent of both oracles
    z1, _ = fundamental_chars_c2()
    rhs = weyl_character(C2, (2, 0)) + weyl_character(C2, (0, 1)) + weyl_character(C2, (0, 0))
    assert z1 * z1 == rhs


@pytest.mark.parametrize("rs", [C2, A2])
def test_character_agrees_with_freudenthal(rs):
    for p in range(13):
        for q in range(13):
            chi = weyl_character(rs, (p, q))
            assert chi.evaluate(1, 1) == weyl_dim(rs, (p, q))
            for w in dominant_weights(rs, (p, q)):
                assert mult_from_character(chi, w) == freudenthal_mult(rs, (p, q), w)


def test_mult_from_character_examples():
    assert mult_from_character(weyl_character(C2, (1, 0)), (1, 0)) == 1
    assert mult_from_character(weyl_character(C2, (0, 1)), (0, 0)) == 1
    assert mult_from_character(weyl_character(C2, (2, 0)), (0, 0)) == 2
    assert lp_coeff(weyl_character(C2, (0, 1)), 2, -1) == 1


# tables -----------------------------------------------------------------------

def test_mult_table_trivial():
    assert mult_table(C2, (0, 0)).entries == {(0, 0): 1}


def test_mult_table_methods_agree():
    ref = mult_table(C2, (10, 9)).entries
    assert ref[Weight(0, 0)] == 55
    for method in ("character", "genfunc", "counting"):
        assert mult_table(C2, (10, 9), method).entries == ref


def test_mult_table_left_edge():
    t = mult_table(C2, (10, 5))
    assert [t[(0, n)] for n in range(4)] == [33, 33, 31, 29]
    assert t.dimension() == weyl_dim(C2, (10, 5))


def test_mult_table_restrictions():
    with pytest.raises(ValueError):
        mult_table(A2, (1, 1), "genfunc")
    with pytest.raises(ValueError):
        mult_table(A2, (1, 1), "counting")
    with pytest.raises(ValueError):
        mult_table(C2, (1, 1), "guess")
