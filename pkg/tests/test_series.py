"""Core series arithmetic: rings, truncation, Pochhammers, prefixed series."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from unirank.series import (
    GF2, QQ, ZETA, ZZ,
    CoefficientRangeError, LatticeMismatchError, NotInvertibleError,
    OrderMismatchError, PrefixedSeries, SingularPochhammerError,
    TruncatedSeries, ZetaLaurent, pochhammer, pochhammer_prefixed,
)

N = 30

# classical C(n) values frozen from the standard recurrences, used as an
# independent oracle for the product machinery
PARTITIONS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176,
              231, 297, 385, 490, 627, 792, 1002, 1255, 1575, 1958, 2436,
              3010, 3718, 4565, 5604]
DISTINCT_PARTS = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27, 32,
                  38, 46, 54, 64, 76, 89, 104, 122, 142, 165, 192, 222, 256,
                  296]


def test_partition_numbers_from_infinite_product():
    P = pochhammer((1, 0, 1), None, N, ring=ZZ).invert()
    assert P.coeffs == PARTITIONS


def test_distinct_part_counts_from_product():
    D = pochhammer((-1, 0, 1), None, N, ring=ZZ)
    assert D.coeffs == DISTINCT_PARTS


def test_pochhammer_finite_matches_manual():
    # (q; q)_3 = (1-q)(1-q^2)(1-q^3)
    f = pochhammer((1, 0, 1), 3, 8, ring=ZZ)
    assert f.coeffs == [1, -1, -1, 0, 1, 1, -1, 0, 0]


def test_pochhammer_step():
    # (q; q^2)_2 = (1-q)(1-q^3)
    f = pochhammer((1, 0, 1), 2, 6, ring=ZZ, step=2)
    assert f.coeffs == [1, -1, 0, -1, 1, 0, 0]


def test_pochhammer_negative_index_defining_property():
    # (a;q)_{-n} * (a q^{-n}; q)_n = 1 with everything invertible
    for a, n in [((1, 1, 3), 2), ((2, 0, 5), 3), ((1, -1, 4), 1)]:
        c, e, t = a
        left = pochhammer(a, -n, 20)
        right = pochhammer((c, e, t - n), n, 20)
        prod = left * right
        assert prod.coeffs[0] == ZetaLaurent.from_int(1)
        assert all(not v for v in prod.coeffs[1:])


def test_pochhammer_negative_index_singular():
    # (zeta q; q)_{-1} needs 1/(1 - zeta), which is not a unit
    with pytest.raises(SingularPochhammerError):
        pochhammer((1, 1, 1), -1, 10)


def test_pochhammer_prefixed_negative_exponents():
    # (q^{-1}; q^2)_2 = (1 - q^{-1})(1 - q) = -q^{-1} (1-q)^2
    f = pochhammer_prefixed((1, 0, -1), 2, 10, step=2)
    assert f.scalar == -1 and f.q24 == -24 and f.zeta_half == 0
    assert [c.coeff(0) for c in f.body.coeffs[:4]] == [1, -2, 1, 0]


def test_pochhammer_prefixed_matches_plain_when_regular():
    plain = pochhammer([(1, 1, 1), (1, -1, 1)], 4, 15)
    pre = pochhammer_prefixed([(1, 1, 1), (1, -1, 1)], 4, 15)
    assert pre.scalar == 1 and pre.q24 == 0 and pre.zeta_half == 0
    assert pre.body.coeffs == plain.coeffs


def test_mul_div_binomial_roundtrip():
    f = TruncatedSeries.from_int_coeffs(ZZ, PARTITIONS, N)
    g = f.mul_binomial(3, 7).div_binomial(3, 7)
    assert g == f


def test_invert_roundtrip():
    f = TruncatedSeries.from_int_coeffs(ZZ, [1, 4, -2, 5] + [3] * (N - 3), N)
    assert (f * f.invert()) == TruncatedSeries.one(ZZ, N)


def test_invert_requires_unit():
    f = TruncatedSeries.from_int_coeffs(ZZ, [2, 1, 1], 2)
    with pytest.raises(NotInvertibleError):
        f.invert()


def test_coefficient_range_guard():
    f = TruncatedSeries.one(ZZ, 5)
    with pytest.raises(CoefficientRangeError):
        f.coeff(6)


def test_order_mismatch_guard():
    f = TruncatedSeries.one(ZZ, 5)
    g = TruncatedSeries.one(ZZ, 6)
    with pytest.raises(OrderMismatchError):
        _ = f + g
    assert (f + g.truncate(5)).coeffs[0] == 2


def test_substitute_q_power():
    f = TruncatedSeries.from_int_coeffs(ZZ, [1, 2, 3, 4], 3)
    g = f.substitute_q_power(2, order=7)
    assert g.coeffs == [1, 0, 2, 0, 3, 0, 4, 0]
    with pytest.raises(OrderMismatchError):
        f.substitute_q_power(1, order=10)


def test_shift_q():
    f = TruncatedSeries.from_int_coeffs(ZZ, [0, 0, 1, 5], 3)
    up = f.shift_q(1)
    assert up.coeffs == [0, 0, 0, 1]
    down = f.shift_q(-2)
    assert down.coeffs == [1, 5] and down.order == 1
    with pytest.raises(CoefficientRangeError):
        f.shift_q(-3)


def test_negate_q_and_zeta_ops():
    f = pochhammer((1, 1, 1), 2, 6)
    assert f.negate_q().negate_q() == f
    assert f.bar().bar() == f
    assert f.negate_zeta().negate_zeta() == f
    # (zeta q; q)_2 marginal at zeta=1 equals (q; q)_2
    assert f.marginal().coeffs == pochhammer((1, 0, 1), 2, 6, ring=ZZ).coeffs


def test_gf2_arithmetic():
    one_plus_q = TruncatedSeries.from_int_coeffs(GF2, [1, 1], 4)
    sq = one_plus_q * one_plus_q
    assert sq.coeffs == [1, 0, 1, 0, 0]


def test_zeta_laurent_divexact():
    num = (ZetaLaurent.from_int(1) - ZetaLaurent.monomial(1, 2)) * \
        ZetaLaurent({-1: 3, 0: 1, 2: -4})
    assert num.divexact_one_minus(1, 2) == ZetaLaurent({-1: 3, 0: 1, 2: -4})
    with pytest.raises(NotInvertibleError):
        ZetaLaurent({0: 1, 1: 1}).divexact_one_minus(1, 2)
    # negative-exponent form
    w = ZetaLaurent({0: 1, 1: 2})
    num2 = (ZetaLaurent.from_int(1) - ZetaLaurent.monomial(-1, -1)) * w
    assert num2.divexact_one_minus(-1, -1) == w


def test_prefixed_lattice_mismatch_is_reported_not_raised():
    f = PrefixedSeries(1, 0, 1, 0, TruncatedSeries.one(ZETA, 5))
    g = PrefixedSeries(1, 0, 0, 0, TruncatedSeries.one(ZETA, 5))
    res = f.compare(g)
    assert not res.equal and "lattice" in res.reason


def test_prefixed_offset_normalization():
    body = pochhammer([(1, 1, 1)], 3, 10)
    # q^(48/24) * body == q^0 * (q^2 * body)
    f = PrefixedSeries(1, 0, 0, 48, body)
    g = PrefixedSeries(1, 0, 0, 0, body.shift_q(2))
    assert f.compare(g).equal
    # zeta^(2/2) * body == body * zeta
    f2 = PrefixedSeries(1, 0, 2, 0, body)
    g2 = PrefixedSeries(1, 0, 0, 0,
                        body.scalar_mul(ZetaLaurent.monomial(1, 1)))
    assert f2.compare(g2).equal
    # i^2 * body == -body
    f3 = PrefixedSeries(1, 2, 0, 0, body)
    g3 = PrefixedSeries(-1, 0, 0, 0, body)
    assert f3.compare(g3).equal


def test_prefixed_invert_roundtrip():
    body = pochhammer([(1, 1, 2), (1, -1, 1)], 3, 12).shift_q(2)
    f = PrefixedSeries(Fraction(3, 2), 1, 3, 7, body)
    prod = f * f.invert()
    one = PrefixedSeries.one(10)
    assert prod.compare(one).equal


def test_prefixed_add_collects_terms():
    b = TruncatedSeries.one(ZETA, 6)
    f = PrefixedSeries(1, 1, 1, 1, b)
    g = PrefixedSeries(2, 1, 3, 25, b)
    h = f + g
    # i zeta^(1/2) q^(1/24) (1 + 2 zeta q)
    assert h.compare(PrefixedSeries(
        1, 1, 1, 1,
        TruncatedSeries.one(ZETA, 6).mul_binomial(
            1, ZetaLaurent.monomial(2, 1)))).equal


def test_prefixed_evaluate_consistency():
    f = pochhammer_prefixed((1, 1, -2), 3, 12)
    z0, q0 = 0.4 + 0.3j, 0.17
    direct = 1.0
    for i in range(3):
        direct *= 1 - z0 * q0 ** (-2 + i)
    assert abs(f.evaluate(q0, z0) - direct) < 1e-12


# -- ring axioms (hypothesis) -------------------------------------------------

AXIOM_ORDER = 30


def _zeta_values():
    coeff = st.integers(min_value=-5, max_value=5)
    return st.dictionaries(st.integers(min_value=-3, max_value=3), coeff,
                           max_size=3).map(ZetaLaurent)


def _ring_and_series():
    def build(ring, vals):
        return TruncatedSeries(ring, vals, AXIOM_ORDER)

    small_int = st.integers(min_value=-9, max_value=9)
    frac = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    per_ring = {
        "ZZ": (ZZ, small_int),
        "GF2": (GF2, st.integers(min_value=0, max_value=1)),
        "QQ": (QQ, frac),
        "ZETA": (ZETA, _zeta_values()),
    }
    return st.sampled_from(sorted(per_ring)).flatmap(
        lambda name: st.tuples(
            st.just(per_ring[name][0]),
            st.lists(per_ring[name][1], min_size=AXIOM_ORDER + 1,
                     max_size=AXIOM_ORDER + 1).map(
                lambda vs, r=per_ring[name][0]: build(r, vs)),
            st.lists(per_ring[name][1], min_size=AXIOM_ORDER + 1,
                     max_size=AXIOM_ORDER + 1).map(
                lambda vs, r=per_ring[name][0]: build(r, vs)),
            st.lists(per_ring[name][1], min_size=AXIOM_ORDER + 1,
                     max_size=AXIOM_ORDER + 1).map(
                lambda vs, r=per_ring[name][0]: build(r, vs)),
        ))


@settings(max_examples=100, deadline=None)
@given(_ring_and_series())
def test_ring_axioms_add_commutes_and_associates(data):
    _, f, g, h = data
    assert (f + g) == (g + f)
    assert ((f + g) + h) == (f + (g + h))


@settings(max_examples=100, deadline=None)
@given(_ring_and_series())
def test_ring_axioms_mul_associates_and_distributes(data):
    _, f, g, h = data
    assert ((f * g) * h) == (f * (g * h))
    assert (f * (g + h)) == (f * g + f * h)
    assert (f * g) == (g * f)


@settings(max_examples=100, deadline=None)
@given(_ring_and_series())
def test_ring_axioms_identities(data):
    ring, f, _, _ = data
    one = TruncatedSeries.one(ring, AXIOM_ORDER)
    zero = TruncatedSeries.zero(ring, AXIOM_ORDER)
    assert (f * one) == f
    assert (f + zero) == f
    assert (f + (-f)) == zero


@settings(max_examples=60, deadline=None)
@given(_ring_and_series())
def test_invert_when_unit(data):
    ring, f, _, _ = data
    try:
        inv = f.invert()
    except NotInvertibleError:
        return
    assert (f * inv) == TruncatedSeries.one(ring, AXIOM_ORDER)
