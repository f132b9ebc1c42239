"""Tests for the identity catalog and its verification machinery."""

import pytest

from unirank import identities as idn
from unirank.series import ZZ, UnirankError, pochhammer

ORDER = 36


def test_catalog_lists_twenty_keys():
    assert len(idn.IDENTITY_KEYS) == 20
    assert len(set(idn.IDENTITY_KEYS)) == 20
    for key in idn.IDENTITY_KEYS:
        record = idn.REGISTRY[key]
        assert record.key == key
        assert record.description


def test_every_identity_verifies():
    for key in idn.IDENTITY_KEYS:
        report = idn.verify(key, order=ORDER)
        assert report.passed, (key, report.detail)
        assert report.first_mismatch is None, key
        assert report.order == ORDER


def test_report_fields():
    report = idn.verify("jtp", order=20)
    assert report.key == "jtp"
    assert report.passed is True
    assert report.order == 20
    assert report.elapsed >= 0.0
    assert "agree through q^20" in report.detail


def test_order_from_environment(monkeypatch):
    monkeypatch.setenv("UNIRANK_ORDER", "18")
    report = idn.verify("omega")
    assert report.order == 18
    assert report.passed


def test_negative_controls_fail_where_planted():
    cases = [
        ("eq1.1", (0, 11), (0, 11)),
        ("eq1.2", (2, 17), (2, 17)),
        ("prop4.1", (1, 13), (1, 13)),
        ("prop5.3-mod2", (0, 17), (0, 17)),
        ("thetid", (0, 17), (0, 17)),
    ]
    for key, perturb, expected in cases:
        report = idn.verify(key, order=24, _perturb=perturb)
        assert not report.passed, key
        assert report.first_mismatch == expected, key


def test_negative_controls_on_prefixed_sides():
    # these right-hand sides carry prefactors, so the planted bump lands on
    # a shifted lattice point; only the failure itself is pinned down
    for key, perturb in (("cor3.2", (0, 17)), ("jtp", (1, 9))):
        report = idn.verify(key, order=24, _perturb=perturb)
        assert not report.passed, key
        assert report.first_mismatch is not None, key


def test_perturbation_beyond_order_rejected():
    with pytest.raises(UnirankError):
        idn.verify("jtp", order=16, _perturb=(0, 40))


def test_unknown_key_rejected():
    with pytest.raises(UnirankError):
        idn.verify("no-such-identity", order=12)
    with pytest.raises(UnirankError):
        idn.verify("jtp", order=0)


def test_verify_all_covers_catalog():
    reports = idn.verify_all(order=20)
    assert list(reports) == list(idn.IDENTITY_KEYS)
    assert all(r.passed for r in reports.values())


def test_verify_classical_sweeps():
    assert idn.verify_classical("heine", order=28).passed
    assert idn.verify_classical("watson", order=28).passed
    with pytest.raises(UnirankError):
        idn.verify_classical("jtp", order=20)


def test_specialization_tables_have_enough_entries():
    assert len(idn.HEINE_SPECS) >= 5
    assert len(idn.WATSON_SPECS) >= 5
    assert len(idn.LOVEJOY_SPECS) == 3


def test_lovejoy_pair_values():
    alpha, beta = idn.lovejoy_pair(3, 1, 1, 1)
    assert alpha(2, 20).coeffs == [
        0, 0, 0, 3, -4, 6, -3, 2, -2, 9, -17, 20, -15, 7, -6, 17, -33, 40,
        -31, 15, -10]
    assert beta(2, 20).coeffs == [
        1, -1, 2, 1, 0, 3, 4, -1, 8, 5, 2, 11, 11, 2, 20, 14, 8, 26, 24, 10,
        40]
    assert idn.check_bailey_pair(alpha, beta, 3, 1, 20)


def test_bailey_pair_subscript_convention():
    # beta_n = sum_j alpha_j / ((q;q)_{n-j} (aq;q)_{n+j}); transposing the
    # two subscripts breaks the relation already at n = 1
    order = 20
    alpha, beta = idn.lovejoy_pair(3, 1, 1, 1)

    def p1(exp, n):
        return pochhammer([(1, 0, exp)], n, order, ring=ZZ)

    lhs = beta(1, order)
    standard = (alpha(0, order) * (p1(1, 1) * p1(4, 1)).invert()
                + alpha(1, order) * (p1(1, 0) * p1(4, 2)).invert())
    transposed = (alpha(0, order) * (p1(1, 2) * p1(4, 0)).invert()
                  + alpha(1, order) * (p1(1, 1) * p1(4, 1)).invert())
    assert (lhs - standard).is_zero()
    assert not (lhs - transposed).is_zero()


def test_lovejoy_pair_parameter_guards():
    with pytest.raises(UnirankError):
        idn.lovejoy_pair(3, 0, 1, 1)
    with pytest.raises(UnirankError):
        idn.lovejoy_pair(3, 3, 1, 1)
    with pytest.raises(UnirankError):
        idn.lovejoy_pair(4, 2, 2, 1)
    with pytest.raises(UnirankError):
        idn.lovejoy_pair(5, 1, 1, 1)


def test_bailey_lemma_guard():
    alpha, beta = idn.lovejoy_pair(3, 1, 1, 1)
    with pytest.raises(UnirankError):
        idn.apply_bailey_lemma(alpha, beta, 3, 2, 2, 1, 20)
