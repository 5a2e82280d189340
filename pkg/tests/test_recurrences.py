import pytest
from hypothesis import given
from hypothesis import strategies as st

from weightgen.lie_rank2 import C2, dominant_weights, freudenthal_mult
from weightgen.recurrences import (CartesianWeight, border_vertical_alternative, border_mults, counting_rule_mult,
                                   epsilon_domain_classify, epsilon_indicator, in_convex_polygon, overlap_region,
                                   rec1_residual, rec2_residual, theta, y_indicator)

idx = st.integers(0, 15)


def test_cartesian_coordinates():
    assert CartesianWeight.from_weight(3, 2) == (3, 7)
    assert CartesianWeight(3, 7).to_weight() == (3, 2)
    with pytest.raises(ValueError):
        CartesianWeight(1, 2).to_weight()


@pytest.mark.parametrize("args, value", [((10, 5, 6, 4), 1), ((0, 2, 0, 1), 0), ((1, 0, 0, 0), 0)])
def test_y_indicator_examples(args, value):
    assert y_indicator(*args) == value


@pytest.mark.parametrize("args, value", [((0, 0, 0, 0), 1), ((2, 0, 0, 0), 1), ((0, 2, 0, 1), 0)])
def test_rec1_examples(args, value):
    assert rec1_residual(*args) == value


@given(idx, idx, idx, idx)
def test_rec1_property(p, q, m, n):
    assert rec1_residual(p, q, m, n) == y_indicator(p, q, m, n)


@pytest.mark.parametrize("args, flags", [((0, 0, 0, 0), (1, 0, 0)), ((0, 2, 0, 0), (1, 0, 1)),
                                         ((2, 2, 0, 0), (0, 0, 1))])
def test_epsilon_examples(args, flags):
    e = epsilon_indicator(*args)
    assert (e.X, e.Y, e.Z) == flags
    assert e.value == flags[0] + flags[1] - flags[2]


def test_epsilon_vanishes_off_the_weight_class():
    assert epsilon_indicator(1, 3, 0, 0).value == 0
    assert rec2_residual(1, 3, 0, 0) == 0


@pytest.mark.parametrize("args, value", [((0, 0, 0, 0), 1), ((2, 2, 0, 0), -1), ((10, 5, 10, 5), 1)])
def test_rec2_examples(args, value):
    assert rec2_residual(*args) == value


@given(idx, idx, idx, idx)
def test_rec2_property(p, q, m, n):
    e = epsilon_indicator(p, q, m, n)
    assert e.X * e.Y == 0
    assert e.value in (-1, 0, 1)
    assert rec2_residual(p, q, m, n) == e.value


@pytest.mark.parametrize("args, value", [((2, 0, 0, 0), 2), ((2, 2, 0, 0), 5), ((10, 5, 0, 0), 33)])
def test_counting_rule_examples(args, value):
    assert counting_rule_mult(*args) == value


def test_counting_rule_matches_freudenthal():
    for p in range(16):
        for q in range(16):
            for w in dominant_weights(C2, (p, q)):
                assert counting_rule_mult(p, q, *w) == freudenthal_mult(C2, (p, q), w)


def test_counting_rule_rejects_negative():
    with pytest.raises(ValueError):
        counting_rule_mult(-1, 0, 0, 0)


# polygons and domains --------------------------------------------------------------

def test_polygon_membership():
    square = [(0, 0), (2, 0), (2, 2), (0, 2)]
    assert in_convex_polygon((1, 1), square)
    assert in_convex_polygon((2, 1), square)
    assert not in_convex_polygon((3, 1), square)
    assert in_convex_polygon((1, 1), [(0, 0), (2, 2), (2, 2)])
    assert not in_convex_polygon((1, 0), [(0, 0), (2, 2)])
    assert in_convex_polygon((4, 4), [(4, 4)])


@pytest.mark.parametrize("p, q, case", [(10, 5, "none"), (10, 9, "T"), (5, 10, "K"), (10, 6, "T")])
def test_overlap_cases(p, q, case):
    assert overlap_region(p, q)[0] == case


def test_domain_examples():
    assert epsilon_domain_classify(10, 5, 0, 5) == 1
    # near the y axis above y = p in R(10, 9): inside the triangle
    assert epsilon_domain_classify(10, 9, 0, 5) == 0
    assert epsilon_domain_classify(10, 9, 0, 4) == -1
    assert epsilon_domain_classify(5, 10, 1, 5) == 0


def test_domains_match_epsilon():
    cases = set()
    for p in range(13):
        for q in range(13):
            cases.add(overlap_region(p, q)[0])
            for w in dominant_weights(C2, (p, q)):
                assert epsilon_domain_classify(p, q, *w) == epsilon_indicator(p, q, *w).value
    assert cases == {"none", "T", "K"}


# borders --------------------------------------------------------------------------

def test_theta():
    assert [theta(r) for r in range(4)] == [1, 0, 1, 0]


def test_border_examples():
    b = border_mults(4, 2)
    assert b.by_formula[1][(6, 0)] == 1
    assert b.by_formula[1][(4, 0)] == 4
    assert b.by_formula[2][(2, 0)] == 7 == b.by_formula[3][(2, 0)]
    assert b.by_formula[4][(0, 4)] == 1


def test_border_preconditions():
    for p, q in [(3, 0), (4, 1), (4, 4), (-2, 0)]:
        with pytest.raises(ValueError):
            border_mults(p, q)


def test_borders_match_freudenthal():
    for p in range(0, 15, 2):
        for q in range(0, p // 2 + 1, 2):
            b = border_mults(p, q)
            assert not b.conflicts()
            for vals in b.by_formula.values():
                for w, v in vals.items():
                    assert v == freudenthal_mult(C2, (p, q), w)
            for s, d in b.differences.items():
                assert d == freudenthal_mult(C2, (p, q), (0, s)) - freudenthal_mult(C2, (p, q), (0, s + 1))
            assert b.by_formula[1][(p, 0)] == b.by_formula[2][(p, 0)]
            assert b.by_formula[2][(q, 0)] == b.by_formula[3][(q, 0)]


def test_alternative_vertical_formula_differs():
    # the leading term (s+1)(s+2)/2 only matches at s = q
    alt = border_vertical_alternative(8, 2)
    assert alt[(0, 2)] == freudenthal_mult(C2, (8, 2), (0, 2))
    assert alt[(0, 4)] != freudenthal_mult(C2, (8, 2), (0, 4))
