"""End-to-end checks of the headline results, one test per criterion.

The terminal summary (see conftest) prints a PASS/FAIL line for each
criterion after the run.
"""

import random
from itertools import combinations
from math import comb

import numpy as np
import pytest

from bentcodes import (
    BitMatrix,
    LinearCode,
    TruthTable,
    assmus_mattson,
    bent_enumerator,
    build_code,
    census_16_7_6,
    check_bent_enumerator,
    complement_design,
    cyclic_code,
    derived_design,
    extend_code,
    gold_basis_family,
    intersection_spectrum,
    is_bent_vectorial,
    linear_code,
    macwilliams_dual,
    make_field,
    min_weight_codewords,
    min_weight_design,
    parse_anf,
    parse_poly_spec,
    rm1_generator,
    rm1_tuple_generator,
    sdp_check,
    select_components,
    span_equals,
    truth_table_from_anf,
    vectorial_function,
    verify_2_design,
    walsh_transform,
    weight_distribution,
)
from bentcodes import _kernels
from bentcodes.boolfun import enumerate_bent_functions
from bentcodes.designs import expected_pair_count
from bentcodes.lincode import bent_span_census, dual_basis, rm1_span_ints

from oracles import naive_weight_hist

# quadratic forms on six variables whose pairwise and triple sums stay bent
ANF_A = "x1*x6 + x2*x5 + x3*x4"
ANF_B = "x1*x5 + x2*x4 + x3*x5 + x3*x6"
ANF_C = "x1*x4 + x2*x5 + x2*x6 + x3*x4 + x3*x5 + x5*x6"
ANF_D = "x1*x4 + x2*x3 + x3*x6 + x5*x6"

CYCLIC_CHECK_10 = "(x+1)(x^3+x^2+1)(x^6+x^5+x^4+x+1)"
CYCLIC_CHECK_7 = "(x+1)(x^6+x^5+x^4+x+1)"

M5_MODULUS = "x^10+x^6+x^5+x^3+x^2+x+1"


@pytest.fixture(scope="module")
def anf_codes():
    codes = []
    for chosen in ((ANF_A, ANF_B, ANF_C), (ANF_A, ANF_B, ANF_D)):
        tables = [truth_table_from_anf(parse_anf(e, 6)) for e in chosen]
        codes.append(build_code(rm1_tuple_generator(6), tables))
    return codes


@pytest.fixture(scope="module")
def cyclic_codes():
    c10 = cyclic_code(63, parse_poly_spec(CYCLIC_CHECK_10))
    c7 = cyclic_code(63, parse_poly_spec(CYCLIC_CHECK_7))
    return {"63_10": c10, "63_7": c7,
            "64_10": extend_code(c10), "64_7": extend_code(c7)}


@pytest.fixture(scope="module")
def m5_codes():
    field = make_field(10, parse_poly_spec(M5_MODULUS))
    codes = []
    for i in (1, 7):
        F = select_components(gold_basis_family(field, i=i), [1, 2, 3])
        codes.append(build_code(rm1_generator(field), F))
    return codes


def test_criterion_01(gf64, code_m2_l1, code_m2_l2, rm14, anf_codes,
                      cyclic_codes, m5_codes):
    # a: first-order Reed-Muller baselines
    assert dict(weight_distribution(rm14).items()) == {0: 1, 8: 30, 16: 1}
    rm16 = LinearCode(rm1_generator(gf64))
    assert dict(weight_distribution(rm16).items()) == {0: 1, 32: 126, 64: 1}

    # b: one bent component on 4 variables
    assert dict(weight_distribution(code_m2_l1).items()) == {
        0: 1, 6: 16, 8: 30, 10: 16, 16: 1
    }

    # c: a bent pair gives [16, 7, 6]
    wd = weight_distribution(code_m2_l2)
    assert (code_m2_l2.length, code_m2_l2.dimension, wd.min_weight()) == (16, 7, 6)
    assert dict(wd.items()) == {0: 1, 6: 48, 8: 30, 10: 48, 16: 1}

    # d: two six-variable triples, both [64, 10, 28]
    for C in anf_codes:
        wd = weight_distribution(C)
        assert (C.length, C.dimension, wd.min_weight()) == (64, 10, 28)
        assert dict(wd.items()) == {0: 1, 28: 448, 32: 126, 36: 448, 64: 1}

    # e: the cyclic route to the same [64, 10, 28] shape
    assert dict(weight_distribution(cyclic_codes["63_10"]).items()) == {
        0: 1, 27: 196, 28: 252, 31: 63, 32: 63, 35: 252, 36: 196, 63: 1
    }
    assert dict(weight_distribution(cyclic_codes["63_7"]).items()) == {
        0: 1, 31: 63, 32: 63, 63: 1
    }
    assert dict(weight_distribution(cyclic_codes["64_7"]).items()) == {
        0: 1, 32: 126, 64: 1
    }
    assert dict(weight_distribution(cyclic_codes["64_10"]).items()) == {
        0: 1, 28: 448, 32: 126, 36: 448, 64: 1
    }

    # f: ten variables, two exponents, identical enumerator
    expect = {0: 1, 496: 7168, 512: 2046, 528: 7168, 1024: 1}
    for C in m5_codes:
        wd = weight_distribution(C)
        assert (C.length, C.dimension, wd.min_weight()) == (1024, 14, 496)
        assert dict(wd.items()) == expect
        assert check_bent_enumerator(wd, m=5, ell=3)


def test_criterion_02():
    # both directions, exhaustively: an ordered pair of weight-6 bent
    # tables spans dimension 7 with the certificate enumerator exactly
    # when the pair is bent as a vectorial function
    bent_set = {t.as_int() for t in enumerate_bent_functions(4)}
    weight6 = sorted(v for v in bent_set if v.bit_count() == 6)
    assert len(weight6) == 448
    rm = np.array(rm1_span_ints(4), dtype=np.int64)

    # independent flat-spectrum oracle for every pairwise xor
    xors = sorted({a ^ b for a, b in combinations(weight6, 2)})
    idx = np.arange(16, dtype=np.int64)
    signs = 1 - 2 * ((np.array(xors, dtype=np.int64)[:, None] >> idx) & 1)
    _kernels.fwht_batch(signs)
    flat = np.abs(signs).max(axis=1) == 4  # exact Parseval budget: all +-4
    for v, ok in zip(xors, flat):
        assert bool(ok) == (v in bent_set)
    xor_bent = dict(zip(xors, (bool(x) for x in flat)))

    # the pair code splits into four cosets of the affine layer, and the
    # two single-component cosets always contribute {6: 16, 10: 16}; the
    # enumerator therefore matches iff the xor coset does too
    pop = np.array([x.bit_count() for x in range(1 << 16)], dtype=np.uint8)
    w6 = np.array(weight6, dtype=np.int64)
    totals = {"pair_bent": 0, "same_class": 0, "full_dim_other": 0}
    for f in weight6:
        v = f ^ w6
        coset_w = pop[v[:, None] ^ rm[None, :]]
        certificate = ((coset_w == 6).sum(axis=1) == 16) & (
            (coset_w == 10).sum(axis=1) == 16
        )
        in_rm = np.isin(v, rm)
        pair_bent = np.fromiter(
            (x in bent_set for x in v), dtype=bool, count=len(v)
        )
        off = v != 0
        assert np.array_equal(certificate[off], pair_bent[off])
        assert not np.any(pair_bent[off] & in_rm[off])
        totals["pair_bent"] += int(pair_bent[off].sum())
        totals["same_class"] += int(in_rm[off].sum())
        totals["full_dim_other"] += int((~pair_bent[off] & ~in_rm[off]).sum())
    assert sum(totals.values()) == 448 * 447
    assert totals == {
        "pair_bent": 86016, "same_class": 6720, "full_dim_other": 107520
    }

    # cross-check the reduction against the full pipeline on a sample
    census = bent_span_census()
    sample = [(weight6[0], weight6[j]) for j in range(1, 448, 31)]
    sample.append(tuple(census.class_members[0][:2]))  # same class
    sample.append((census.class_members[0][0], census.class_members[1][0]))
    G0 = rm1_tuple_generator(4)
    for f, g in sample:
        tf, tg = TruthTable.from_int(4, f), TruthTable.from_int(4, g)
        C = build_code(G0, [tf, tg])
        full_cert = (
            C.dimension == 7
            and weight_distribution(C) == bent_enumerator(2, 2)
        )
        want = xor_bent.get(f ^ g)
        assert want is not None
        assert full_cert == want
        assert is_bent_vectorial(vectorial_function([tf, tg])) == want


def test_criterion_03():
    assert census_16_7_6() == 56
    census = bent_span_census()
    assert len(census.class_reps) == 28
    assert all(len(members) == 16 for members in census.class_members)
    seen = set()
    for members in census.class_members:
        seen.update(members)
    weight6 = {
        t.as_int()
        for t in enumerate_bent_functions(4)
        if t.as_int().bit_count() == 6
    }
    assert seen == weight6 and len(seen) == 448  # a true partition


def test_criterion_04(vec_m3, gf64, code_m2_l1, code_m2_l2, code_m3_l1,
                      code_m3_l3, m5_codes):
    cases = [
        (code_m2_l1, 2, 1),
        (code_m2_l2, 2, 2),
        (code_m3_l1, 3, 1),
        (build_code(rm1_generator(gf64), select_components(vec_m3, [1, 2])), 3, 2),
        (code_m3_l3, 3, 3),
    ]
    for C, m, ell in cases:
        D = min_weight_design(C)
        p = verify_2_design(D)
        assert p.lam == ((1 << ell) - 1) * ((1 << (2 * m - 2)) - (1 << (m - 1)))
        assert p.lam == expected_pair_count(m, ell)
        pc = verify_2_design(complement_design(D))
        assert pc.lam == ((1 << ell) - 1) * ((1 << (2 * m - 2)) + (1 << (m - 1)))
    # the large instance: 2-(1024, 496, 1680)
    p = verify_2_design(min_weight_design(m5_codes[0]))
    assert (p.v, p.k, p.lam) == (1024, 496, 1680)


def test_criterion_05(code_m2_l1, code_m2_l2, code_m3_l1, code_m3_l3):
    cases = [
        (code_m2_l2, {3: 20, 2: 15, 1: 12}),
        (code_m3_l3, {14: 216, 12: 63, 10: 168}),
    ]
    for C, profile in cases:
        spec = intersection_spectrum(min_weight_design(C))
        assert spec.uniform_profile() == profile
    for m, C in ((2, code_m2_l1), (3, code_m3_l1)):
        spec = intersection_spectrum(min_weight_design(C))
        assert spec.uniform_profile() == {
            (1 << (2 * m - 2)) - (1 << (m - 1)): (1 << (2 * m)) - 1
        }


def test_criterion_06(code_m2_l1, code_m3_l1):
    for C, b in ((code_m2_l1, 16), (code_m3_l1, 64)):
        D = min_weight_design(C)
        assert D.b == b
        assert sdp_check(D)
    assert comb(16, 3) == 560      # triples scanned at m=2
    assert comb(64, 3) == 41664    # triples scanned at m=3


def test_criterion_07(code_m2_l1, code_m2_l2, anf_codes, cyclic_codes,
                      m5_codes):
    codes = [code_m2_l1, code_m2_l2, *anf_codes, *cyclic_codes.values(),
             *m5_codes]
    assert len(codes) == 10
    for C in codes:
        assert span_equals(C, min_weight_codewords(C))


def test_criterion_08(code_m2_l1, code_m3_l1):
    der = derived_design(min_weight_design(code_m2_l1))
    p = verify_2_design(der)
    assert (p.v, p.k, p.lam) == (6, 2, 1)
    assert der.b == 15 == (1 << 4) - 1
    assert set(intersection_spectrum(der).aggregate_dict()) == {1, 0}

    der = derived_design(min_weight_design(code_m3_l1))
    p = verify_2_design(der)
    assert (p.v, p.k, p.lam) == (28, 12, 11)
    assert der.b == 63 == (1 << 6) - 1
    assert set(intersection_spectrum(der).aggregate_dict()) == {6, 4}


def test_criterion_09(code_m3_l3):
    wd = weight_distribution(code_m3_l3)
    dual = macwilliams_dual(wd)
    assert dual.min_weight() == 4  # exact transform, no floats involved

    # the sufficient condition reaches t = 1 with the low-distance member
    # of the pair in the primary slot: only three weights land below v - t
    rep = assmus_mattson(dual, wd, 1)
    assert rep.counted_weights == (28, 32, 36)
    assert rep.s == 3 and rep.holds
    assert not assmus_mattson(dual, wd, 2).holds
    # the other orientation counts 29 dual weights and never fires
    direct = assmus_mattson(wd, dual, 1)
    assert direct.s == 29 and not direct.holds

    # the 2-design the condition cannot certify is still there, by counting
    p = verify_2_design(min_weight_design(code_m3_l3))
    assert (p.lam, p.r, p.b) == (84, 196, 448)


def test_criterion_10(gf16, code_m2_l2, code_m3_l3):
    # exact Parseval on 1000 random tables up to ten variables
    rng = random.Random(1009)
    for _ in range(1000):
        n = rng.randrange(1, 11)
        t = TruthTable.from_int(n, rng.randrange(1 << (1 << n)))
        assert walsh_transform(t).parseval_holds()

    # every pair-spanned [16, 7, 6] code is closed under complement
    census = bent_span_census()
    G0 = rm1_tuple_generator(4)
    full = (1 << 16) - 1
    for a, b, c in census.triples:
        C = linear_code(
            G0.vstack(BitMatrix.from_int_rows([a, b], 16, scheme="binary"))
        )
        assert C.dimension == 7
        assert C.contains(full)
        assert C.contains(c)  # the third class sits in the same span
        wd = weight_distribution(C)
        assert all(wd[w] == wd[16 - w] for w in range(17))

    # dual distribution through the identity vs direct enumeration
    direct = naive_weight_hist(dual_basis(code_m2_l2).int_rows(), 16)
    assert dict(macwilliams_dual(weight_distribution(code_m2_l2)).items()) == direct

    # incremental-walk enumeration vs subset expansion on random subcodes
    rng = random.Random(1013)
    basis_rows = code_m3_l3.basis.int_rows()
    for _ in range(10):
        k = rng.randrange(1, 9)
        rows = rng.sample(basis_rows, k)
        C = linear_code(BitMatrix.from_int_rows(rows, 64))
        assert dict(weight_distribution(C).items()) == naive_weight_hist(rows, 64)
    for _ in range(10):
        n = rng.randrange(8, 40)
        rows = [rng.randrange(1, 1 << n) for _ in range(rng.randrange(1, 8))]
        C = linear_code(BitMatrix.from_int_rows(rows, n))
        assert dict(weight_distribution(C).items()) == naive_weight_hist(
            C.basis.int_rows(), n
        )
