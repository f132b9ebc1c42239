"""Tests for the generating-function library."""

import cmath
import os
from fractions import Fraction

import pytest

from unirank import families as fam
from unirank import gflib as gf
from unirank.series import UnirankError, ZetaLaurent

ORDER = 24


def _zeta_table(series, n):
    return {m: c for m, k, c in series.iter_zeta_entries() if k == n}


def test_series_marginals_match_family_counts():
    cases = [
        ("Uzeta", "strongly-unimodal", False),
        ("Ubar", "left-heavy-overlined", False),
        ("Ubar2", "m2-left-heavy-overlined", True),
        ("U2", "m2-left-heavy", True),
    ]
    for key, family, flip in cases:
        series = gf.build(key, ORDER)
        one_var = series.marginal().negate_q() if flip else series.marginal()
        counts = [fam.count(family, n) for n in range(ORDER + 1)]
        assert one_var.coeffs == counts, key


def test_series_rank_tables_match_families():
    cases = [
        ("Uzeta", "strongly-unimodal", False),
        ("Ubar", "left-heavy-overlined", False),
        ("Ubar2", "m2-left-heavy-overlined", True),
        ("U2", "m2-left-heavy", True),
    ]
    for key, family, flip in cases:
        series = gf.build(key, 20)
        if flip:
            series = series.negate_q()
        for n in range(21):
            assert _zeta_table(series, n) == fam.count_by_rank(family, n), (
                key, n)


def test_partition_style_specializations():
    P = gf.build("P", ORDER)
    assert gf.build("R", ORDER).marginal() == P
    over = [fam.count("overpartition", n) for n in range(ORDER + 1)]
    assert gf.build("Rbar", ORDER).marginal().coeffs == over
    assert gf.build("Rbar2", ORDER).marginal().coeffs == over
    # partitions without repeated odd parts
    assert gf.build("R2", ORDER).marginal().coeffs[:13] == [
        1, 1, 1, 2, 3, 4, 5, 7, 10, 13, 16, 21, 28]


def test_partition_rank_table():
    R = gf.build("R", 12)
    for n in range(13):
        assert _zeta_table(R, n) == fam.count_by_rank("partition-with-rank", n)


def test_rank_series_are_conjugation_symmetric():
    for key in ("Uzeta", "R", "Rbar", "Rbar2", "R2", "Ubar", "Ubar2", "U2"):
        series = gf.build(key, 20)
        assert series.bar() == series, key


def test_one_variable_keys_are_marginals():
    assert gf.build("U", 20) == gf.build("Uzeta", 20).marginal()
    assert gf.build("Ubar-q", 20) == gf.build("Ubar", 20).marginal()
    assert (gf.build("Ubar2-q", 20)
            == gf.build("Ubar2", 20).marginal().negate_q())
    assert gf.build("U2-q", 20) == gf.build("U2", 20).marginal().negate_q()
    assert all(c >= 0 for c in gf.build("Ubar2-q", 30).coeffs)
    assert all(c >= 0 for c in gf.build("U2-q", 30).coeffs)


def test_negq_product_forms_match_substitution():
    assert gf.series_Ubar2_negq(30) == gf.series_Ubar2(30).negate_q()
    assert gf.series_U2_negq(30) == gf.series_U2(30).negate_q()


def test_substituted_rank_series():
    assert gf.series_R_neg_zeta(20) == gf.series_R(20).negate_zeta()
    assert (gf.series_R2_negs(20)
            == gf.series_R2(20).negate_zeta().negate_q())


def test_sheared_rank_series():
    """R at argument -zeta*q over q^2, checked by shearing the plain table."""
    M = 20
    src = gf.series_R(M)
    from unirank.series import TruncatedSeries, ZETA
    want = TruncatedSeries.zero(ZETA, M)
    for m, v, c in src.iter_zeta_entries():
        t = 2 * v + m
        if 0 <= t <= M:
            sign = -c if m % 2 else c
            want.coeffs[t] = want.coeffs[t] + ZetaLaurent.monomial(sign, m)
    assert gf.series_R_negzq_q2(M) == want
    assert gf.series_R_negq_q2(M).coeffs == want.marginal().coeffs


def test_theta_sum_equals_product():
    cmp = gf.theta_sum(1, 0, 0, 1, 36).compare(gf.theta_product(36))
    assert cmp.equal, cmp.reason


def test_eta_prefix_and_body():
    eta = gf.eta_power(1, 15)
    assert (eta.scalar, eta.phase, eta.zeta_half, eta.q24) == (1, 0, 0, 1)
    assert [z.coeff(0) for z in eta.body.coeffs] == [
        1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1]
    eta2 = gf.eta_power(2, 10)
    assert eta2.q24 == 2
    assert [z.coeff(0) for z in eta2.body.coeffs] == [
        1, 0, -1, 0, -1, 0, 0, 0, 0, 0, 1]


def test_bilateral_lambert_series():
    s1, poles = gf.bilateral_expand(
        gf.BilateralSpec(flip=1, quad=Fraction(2), lin=Fraction(3),
                         pole_sign=-1, pole_zeta=1, pole_coeff=2,
                         pole_shift=1), 12)
    assert poles == []
    assert s1.coeffs[0] == ZetaLaurent({0: 1, -1: -1})
    assert s1.coeffs[1] == ZetaLaurent({-2: 1, 1: -1})

    kernel, kpoles = gf.bilateral_expand(
        gf.BilateralSpec(flip=0, quad=Fraction(1, 2), lin=Fraction(1, 2),
                         step=1, pole_sign=-1, pole_zeta=-1,
                         pole_coeff=1, pole_shift=0), 12)
    assert kpoles == [gf.SingularTerm(1, 0, 0, -1, -1)]


def test_bilateral_rejects_bad_spec():
    with pytest.raises(UnirankError):
        gf.bilateral_expand(gf.BilateralSpec(flip=0, quad=Fraction(-1),
                                             lin=Fraction(0)), 10)
    with pytest.raises(UnirankError):
        gf.bilateral_expand(gf.BilateralSpec(flip=0, quad=Fraction(1, 2),
                                             lin=Fraction(0)), 10)


def test_appell_float_oracle():
    q0 = 0.11
    z0 = cmath.exp(0.31j)
    parts = gf.appell_sum(2, (1, 0, 0), (0, 1), 1, 30)
    direct = sum((-1) ** n * q0 ** (n * n + n) / (1 - z0 * q0 ** n)
                 for n in range(-60, 61)) * z0
    got = parts.regular.evaluate(q0, z0)
    got += sum(p.coef * z0 ** p.zeta_exp * q0 ** p.q_exp /
               (1 - p.pole_sign * z0 ** p.pole_zeta)
               for p in parts.poles) * z0
    assert abs(got - direct) < 1e-12

    parts3 = gf.appell_sum(3, (1, 0, 0), (-1, 0), 1, 30)
    direct3 = sum((-1) ** n * q0 ** ((3 * n * n + n) // 2) / (1 - z0 * q0 ** n)
                  for n in range(-60, 61)) * z0 ** 1.5
    got3 = parts3.regular.evaluate(q0, z0)
    got3 += sum(p.coef * z0 ** p.zeta_exp * q0 ** p.q_exp /
                (1 - p.pole_sign * z0 ** p.pole_zeta)
                for p in parts3.poles) * z0 ** 1.5
    assert abs(got3 - direct3) < 1e-12


def test_mu_float_oracle():
    mu = gf.mu_sum((1, 1, 1), (0, 1), 2, 40)
    assert mu.poles == ()
    t0 = complex(0.05, 0.35)
    q0 = cmath.exp(2j * cmath.pi * t0)
    z0 = cmath.exp(2j * cmath.pi * complex(0.07, 0.11))
    theta = sum(cmath.exp(cmath.pi * 1j * (k + .5) ** 2 * 2 * t0
                          + 2j * cmath.pi * (k + .5))
                for k in range(-40, 40))
    ksum = sum(q0 ** (n * (n + 1)) / (1 + z0 * q0 ** (2 * n + 1))
               for n in range(-50, 51))
    direct = 1j * z0 ** 0.5 * q0 ** 0.5 / theta * ksum
    assert abs(mu.regular.evaluate(q0, z0) - direct) < 1e-10


def test_cleared_pole_assembly():
    parts = gf.appell_sum(2, (1, 0, 0), (0, 1), 1, 12)
    poly = ZetaLaurent({0: 1, 1: -1})   # 1 - zeta, kills the n=0 pole
    cleared = parts.cleared(poly)
    plain = parts.regular.body.scalar_mul(poly)
    diff = cleared.body - plain
    assert diff.coeffs[0] == ZetaLaurent({0: 1})
    assert all(not c for c in diff.coeffs[1:])


def test_build_dispatch_and_errors():
    for key in gf.SERIES_KEYS + gf.ANALYTIC_KEYS:
        out = gf.build(key, 10)
        assert out is not None
    with pytest.raises(UnirankError):
        gf.build("nope", 10)
    with pytest.raises(UnirankError):
        gf.build("P", 0)


def test_default_order_env(monkeypatch):
    monkeypatch.delenv("UNIRANK_ORDER", raising=False)
    assert gf.default_order() == gf.DEFAULT_ORDER
    monkeypatch.setenv("UNIRANK_ORDER", "37")
    assert gf.default_order() == 37
    monkeypatch.setenv("UNIRANK_ORDER", "0")
    with pytest.raises(UnirankError):
        gf.default_order()


def test_rank_coefficients_are_nonnegative():
    for key in ("Uzeta", "R", "Rbar", "Rbar2", "R2"):
        series = gf.build(key, 25)
        for _, _, c in series.iter_zeta_entries():
            assert c > 0, key
    for series in (gf.series_Ubar2_negq(25), gf.series_U2_negq(25)):
        for _, _, c in series.iter_zeta_entries():
            assert c > 0
