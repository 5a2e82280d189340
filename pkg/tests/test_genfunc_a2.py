from weightgen.exact_series import LaurentPoly2, lp_coeff
from weightgen.genfunc_a2 import char_gf_a2, char_gf_a2_expand, fundamental_chars_a2, zero_weight_gf_a2
from weightgen.lie_rank2 import A2, freudenthal_mult, weyl_character


def test_fundamental_characters():
    z1, z2 = fundamental_chars_a2()
    assert z1.evaluate(1, 1) == 3
    assert z1.swap() == z2
    assert lp_coeff(z1, -1, 1) == 1


def test_g_numerator_and_denominator():
    num, den = char_gf_a2()
    assert num.evaluate(t1=0, t2=0, z1=5, z2=7) == 1
    assert den.evaluate(t1=0, t2=0, z1=5, z2=7) == 1


def test_g_low_order():
    chars = char_gf_a2_expand(2)
    z1, z2 = fundamental_chars_a2()
    assert chars[(0, 0)] == LaurentPoly2.constant(1)
    assert chars[(1, 0)] == z1
    assert chars[(1, 1)] == z1 * z2 - 1


def test_g_expansion_matches_weyl_characters():
    for (p, q), chi in char_gf_a2_expand(6).items():
        assert chi == weyl_character(A2, (p, q))


def test_zero_weight_examples():
    s = zero_weight_gf_a2().series(6)
    assert s.coeff(0, 0) == 1
    assert s.coeff(1, 1) == 2
    assert s.coeff(3, 0) == 1
    assert str(zero_weight_gf_a2()) == "(1 - t1³t2³)/((1 - t1³)(1 - t1t2)²(1 - t2³))"


def test_zero_weight_matches_freudenthal_and_is_symmetric():
    s = zero_weight_gf_a2().series(24)
    for p in range(13):
        for q in range(13):
            assert s.coeff(p, q) == freudenthal_mult(A2, (p, q), (0, 0))
            assert s.coeff(p, q) == s.coeff(q, p)
