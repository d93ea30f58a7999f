import random

import pytest

from bentcodes import make_field, enumerate_field, poly_divide, subfield_basis, trace
from bentcodes.errors import (
    DivisionByZero,
    FieldMismatch,
    InvalidBasis,
    InvalidSubfield,
    NotAGenerator,
    ReducibleModulus,
)
from bentcodes.gf2e import (
    DEFAULT_MODULI,
    format_poly,
    parse_poly_spec,
    poly_degree,
    poly_divmod,
    poly_gcd,
    poly_is_irreducible,
    poly_mul,
    power_basis,
)


# ------------------------------------------------------------ polynomials

def test_poly_mul_against_naive():
    rng = random.Random(7)
    for _ in range(200):
        a = rng.randrange(1 << 12)
        b = rng.randrange(1 << 12)
        expect = 0
        for i in range(12):
            if (a >> i) & 1:
                expect ^= b << i
        assert poly_mul(a, b) == expect


def test_poly_divmod_roundtrip():
    rng = random.Random(8)
    for _ in range(200):
        num = rng.randrange(1 << 20)
        den = rng.randrange(1, 1 << 10)
        q, r = poly_divmod(num, den)
        assert poly_mul(q, den) ^ r == num
        assert r == 0 or poly_degree(r) < poly_degree(den)


def test_poly_divide_exact_and_remainder():
    q, r = poly_divide(poly_mul(0b1011, 0b111), 0b1011)
    assert (q, r) == (0b111, 0)
    _, r = poly_divmod(0b1011, 0b10)
    assert r == 1


def test_poly_gcd():
    a, b, c = 0b1011, 0b111, 0b1101
    assert poly_gcd(poly_mul(a, b), poly_mul(a, c)) == a
    assert poly_gcd(a, 0) == a


def test_irreducibility_against_trial_division():
    def reducible_by_trial(p):
        d = poly_degree(p)
        for f in range(2, 1 << (d // 2 + 1)):
            if poly_degree(f) <= d // 2 and poly_divmod(p, f)[1] == 0:
                return True
        return False

    for p in range(2, 1 << 9):
        assert poly_is_irreducible(p) == (not reducible_by_trial(p)), bin(p)


def test_default_moduli_are_irreducible():
    for degree, p in DEFAULT_MODULI.items():
        assert poly_degree(p) == degree
        assert poly_is_irreducible(p)


@pytest.mark.parametrize(
    "spec,expected",
    [
        ("0x46f", 0x46F),
        ("19", 19),
        ("10,6,5,3,2,1,0", 0x46F),
        ("x^4+x+1", 0b10011),
        ("x+1", 0b11),
        ("1", 1),
        ("(x+1)(x^3+x^2+1)", poly_mul(0b11, 0b1101)),
        ("(x+1)(x^3+x^2+1)(x^6+x^5+x^4+x+1)", poly_mul(poly_mul(0b11, 0b1101), 0b1110011)),
    ],
)
def test_parse_poly_spec(spec, expected):
    assert parse_poly_spec(spec) == expected


@pytest.mark.parametrize("bad", ["", "x^-1", "y+1", "(x+1", "-3", "2,-1"])
def test_parse_poly_spec_rejects(bad):
    with pytest.raises(ValueError):
        parse_poly_spec(bad)


def test_format_poly_parse_roundtrip():
    rng = random.Random(9)
    for _ in range(50):
        p = rng.randrange(1, 1 << 14)
        assert parse_poly_spec(format_poly(p).replace(" ", "")) == p


# ------------------------------------------------------------ field core

def test_field_tables_are_inverse_maps(gf16):
    for a in range(1, gf16.order):
        assert gf16.pow(gf16.generator, gf16.discrete_log(a)) == a


def test_mul_matches_polynomial_reduction(gf16):
    rng = random.Random(10)
    for _ in range(300):
        a = rng.randrange(16)
        b = rng.randrange(16)
        _, expect = poly_divmod(poly_mul(a, b), gf16.modulus)
        assert gf16.mul(a, b) == expect


def test_inverse_and_division_by_zero(gf64):
    for a in range(1, 64):
        assert gf64.mul(a, gf64.inv(a)) == 1
    with pytest.raises(DivisionByZero):
        gf64.inv(0)
    with pytest.raises(ZeroDivisionError):
        gf64.inv(0)


def test_pow_and_frobenius(gf64):
    rng = random.Random(11)
    for _ in range(100):
        a = rng.randrange(1, 64)
        e = rng.randrange(-5, 200)
        expect = 1
        for _ in range(e % 63):
            expect = gf64.mul(expect, a)
        assert gf64.pow(a, e) == expect
    for a in range(64):
        assert gf64.pow2(a, 1) == gf64.mul(a, a)
        assert gf64.pow2(a, 6) == a


def test_trace_is_gf2_linear_and_balanced(gf64):
    tr = [gf64.trace_bit(a) for a in range(64)]
    assert sum(tr) == 32
    for a in range(64):
        for b in range(64):
            assert tr[a ^ b] == tr[a] ^ tr[b]


def test_trace_matches_frobenius_sum(gf16):
    for a in range(16):
        s = 0
        x = a
        for _ in range(4):
            s ^= x
            x = gf16.mul(x, x)
        assert s in (0, 1)
        assert gf16.trace_bit(a) == s


def test_relative_trace_lands_in_subfield(gf64):
    for a in range(64):
        t = gf64.trace(a, target_degree=3)
        assert gf64.in_subfield(t, 3)
    # transitivity: tr_{6/1} = tr_{3/1} o tr_{6/3}, where the inner trace of
    # an embedded GF(8) element is its own Frobenius sum y + y^2 + y^4
    for a in range(64):
        y = gf64.trace(a, 3)
        sub_tr = y ^ gf64.pow2(y, 1) ^ gf64.pow2(y, 2)
        assert gf64.trace_bit(a) == sub_tr


def test_relative_trace_needs_divisor_degree(gf64):
    with pytest.raises(InvalidSubfield):
        gf64.trace(1, target_degree=4)


def test_subfield_membership_counts(gf64):
    assert sum(gf64.in_subfield(a, 3) for a in range(64)) == 8
    assert sum(gf64.in_subfield(a, 2) for a in range(64)) == 4
    assert sum(gf64.in_subfield(a, 1) for a in range(64)) == 2


def test_multiplicative_order_divides_group_order(gf16):
    for a in range(1, 16):
        o = gf16.multiplicative_order(a)
        assert 15 % o == 0
        assert gf16.pow(a, o) == 1
        assert all(gf16.pow(a, d) != 1 for d in range(1, o))


def test_dual_index_table_is_a_permutation(gf16):
    dual = gf16.dual_index_table()
    # entry a is the tuple-coordinate index of the form y -> tr(a*y); the
    # pairing is nondegenerate, so the table is a permutation fixing 0
    assert len(dual) == 16
    assert len(set(dual)) == 16
    assert dual[0] == 0
    for a, mask in enumerate(dual):
        for i in range(4):
            assert (mask >> i) & 1 == gf16.trace_bit(gf16.mul(a, 1 << i))


def test_element_values_order(gf16):
    vals = gf16.element_values()
    assert vals[0] == 0 and vals[1] == 1
    assert vals[2] == gf16.generator
    for j in range(2, 15):
        assert vals[j + 1] == gf16.mul(vals[j], gf16.generator)


def test_make_field_rejects_reducible_and_nongenerator():
    with pytest.raises(ReducibleModulus):
        make_field(4, 0b10101)  # (x^2+x+1)^2
    # x^4+x^3+x^2+x+1 is irreducible but x has order 5, not 15
    with pytest.raises(NotAGenerator):
        make_field(4, 0b11111, 2)


def test_make_field_default_determinism():
    assert make_field(4) == make_field(4)
    assert make_field(4) is make_field(4)  # cached
    assert make_field(4, generator=None).generator == 2


def test_make_field_degree_one():
    f2 = make_field(1)
    assert f2.order == 2
    assert f2.mul(1, 1) == 1
    assert f2.trace_bit(1) == 1


def test_field_element_wrappers(gf16):
    g = gf16.gen
    assert (g + g).value == 0
    assert (g * g.inverse()).value == 1
    assert (g ** 15).value == 1
    assert g.trace_bit() in (0, 1)
    assert trace(g).value == g.trace_bit()
    assert bool(gf16.zero) is False
    assert gf16.one.value == 1
    other = make_field(6).gen
    with pytest.raises(FieldMismatch):
        _ = g + other


def test_enumerate_field(gf16):
    elems = enumerate_field(gf16)
    assert len(elems) == 16
    assert sorted(e.value for e in elems) == list(range(16))


# ------------------------------------------------------------ bases

def test_power_basis_spans_subfield(gf64):
    basis = power_basis(gf64, 3)
    assert len(basis.elements) == 3
    spanned = {0}
    for b in basis.elements:
        spanned |= {s ^ b for s in spanned}
    assert spanned == {a for a in range(64) if gf64.in_subfield(a, 3)}


def test_subfield_basis_rejects_dependent_sets(gf64):
    sub = [a for a in range(1, 64) if gf64.in_subfield(a, 3)]
    with pytest.raises(InvalidBasis):
        subfield_basis(gf64, 3, [sub[0], sub[0], sub[1]])
    with pytest.raises(InvalidBasis):
        subfield_basis(gf64, 3, [1, 2, 3])  # 2 is not in GF(8) here
    with pytest.raises(InvalidSubfield):
        subfield_basis(gf64, 4, [1, 2, 3, 4])  # 4 does not divide 6


def test_subfield_basis_accepts_any_independent_triple(gf64):
    sub = [a for a in range(1, 64) if gf64.in_subfield(a, 3)]
    basis = subfield_basis(gf64, 3, sub[:1] + sub[1:2] + sub[3:4])
    assert len(basis.elements) == 3
