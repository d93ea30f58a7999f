import pytest

from bentcodes import (
    DimensionMismatch,
    InvalidStrength,
    assmus_mattson,
    design_from_codewords,
    macwilliams_dual,
    verify_t_design,
    weight_distribution,
)


@pytest.fixture(scope="module")
def m3_pair(code_m3_l3):
    wd = weight_distribution(code_m3_l3)
    return wd, macwilliams_dual(wd)


def test_direct_orientation_fails_for_bent_code(m3_pair):
    # [64, 10, 28] with a [64, 54, 4] dual: the dual has far too many
    # weights below v - t for the condition to hold this way round
    wd, dual = m3_pair
    rep = assmus_mattson(wd, dual, 1)
    assert (rep.v, rep.d, rep.d_dual) == (64, 28, 4)
    assert rep.s == 29
    assert not rep.holds
    assert not assmus_mattson(wd, dual, 2).holds


def test_swapped_orientation_certifies_1_designs(m3_pair):
    # with the dual in the primary slot the bent code contributes only
    # s = 3 weights (28, 32, 36) below v - t, against d_dual - t = 3
    wd, dual = m3_pair
    rep = assmus_mattson(dual, wd, 1)
    assert rep.d == 4
    assert rep.counted_weights == (28, 32, 36)
    assert rep.s == 3
    assert rep.holds
    assert not assmus_mattson(dual, wd, 2).holds


def test_rm14_self_certifies_3_designs(rm14):
    wd = weight_distribution(rm14)
    rep = assmus_mattson(wd, macwilliams_dual(wd), 3)
    assert rep.d == 8
    assert rep.s == 5
    assert rep.holds


def test_certified_strength_is_attained(rm14, code_m3_l1):
    # where the condition holds, every weight class below the length must
    # actually carry a t-design; spot-verify by direct counting
    D = design_from_codewords(rm14, 8)
    assert verify_t_design(D, 3) == 3  # 3-(16, 8, 3)

    wd = weight_distribution(code_m3_l1)
    dual = macwilliams_dual(wd)
    assert assmus_mattson(dual, wd, 1).holds
    for w in (28, 32, 36):
        assert verify_t_design(design_from_codewords(code_m3_l1, w), 1) is not None


def test_counted_weights_shrink_with_t(rm14):
    wd = weight_distribution(rm14)
    dual = macwilliams_dual(wd)
    counted = {t: assmus_mattson(wd, dual, t).counted_weights for t in (1, 7)}
    # the interval (0, v - t] tightens: dual weights 10 and 12 drop out
    assert counted[1] == (4, 6, 8, 10, 12)
    assert counted[7] == (4, 6, 8)
    assert set(counted[7]) < set(counted[1])


def test_strength_bounds(m3_pair):
    wd, dual = m3_pair
    with pytest.raises(InvalidStrength):
        assmus_mattson(wd, dual, 0)
    with pytest.raises(InvalidStrength):
        assmus_mattson(wd, dual, 28)  # t must stay below d


def test_rejects_non_dual_pair(m3_pair, rm14):
    wd, dual = m3_pair
    rm_wd = weight_distribution(rm14)
    with pytest.raises(DimensionMismatch):
        assmus_mattson(wd, rm_wd, 1)  # lengths 64 vs 16
    with pytest.raises(DimensionMismatch):
        assmus_mattson(wd, wd, 1)  # dimensions 10 + 10 != 64
