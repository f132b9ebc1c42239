"""Tests for the growth and asymptotics module."""

import math

import pytest

from unirank import families as fam
from unirank import gflib as gf
from unirank import growth as gw
from unirank.series import UnirankError

U2BAR_PREFIX = [0, 0, 1, 1, 1, 1, 4, 5, 5, 7, 11, 13, 18, 23, 31, 41, 49,
                61, 80, 97, 122, 152, 187, 231, 282]
U2_PREFIX = [0, 0, 1, 1, 2, 2, 5, 6, 10, 13, 20, 25, 38, 48, 68, 88, 120,
             153, 206, 260, 343, 433, 560, 702, 899]


def test_partition_counts():
    p = gw.exact_counts("p", 1000)
    assert p[:10] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    assert p[50] == 204226
    assert p[1000] == 24061467864032622473692149727991


def test_strongly_unimodal_counts_match_enumerator():
    u = gw.exact_counts("u", 24)
    assert u == [fam.count("strongly-unimodal", n) for n in range(25)]
    assert u[:12] == [0, 1, 1, 3, 4, 6, 10, 15, 21, 30, 43, 59]


def test_peak_counts_match_series_builders():
    assert gw.exact_counts("u2", 80) == gf.series_U2_negq(80).marginal().coeffs
    assert gw.exact_counts("u2bar", 80) == \
        gf.series_Ubar2_negq(80).marginal().coeffs


def test_peak_count_examples():
    u2bar = gw.exact_counts("u2bar", 24)
    u2 = gw.exact_counts("u2", 24)
    assert u2bar == U2BAR_PREFIX
    assert u2 == U2_PREFIX
    assert u2bar[7] == 5
    assert u2[6] == 5


def test_milestone_counts():
    u2bar = gw.exact_counts("u2bar", 2000)
    u2 = gw.exact_counts("u2", 2000)
    assert u2bar[500] == 2449917488573725891
    assert u2bar[2000] == 3349114354077243864040563200706570928213
    assert u2[500] == 2820650549217157738362
    assert u2[2000] == 8209348634503779875923511385869304815967001593


def test_ratio_trends():
    for key in gw.COUNT_KEYS:
        assert gw.ratios_strictly_improving(key)
    report = dict(gw.ratio_report("u2bar"))
    assert report[500] == pytest.approx(0.932303094649, rel=1e-9)
    assert report[1000] == pytest.approx(0.950613546883, rel=1e-9)
    assert report[2000] == pytest.approx(0.964264812367, rel=1e-9)
    report = dict(gw.ratio_report("u2"))
    assert report[2000] == pytest.approx(0.987040238497, rel=1e-9)


def test_log_ratio_convergence():
    for key in ("u2bar", "u2"):
        counts = gw.exact_counts(key, 2000)
        ratio = math.log(counts[2000]) \
            / math.log(gw.asymptotic_main(key, 2000))
        assert abs(ratio - 1.0) < 0.01


def test_partition_calibration():
    p = gw.exact_counts("p", 1000)
    r = p[1000] / gw.asymptotic_main("p", 1000)
    assert 0.5 < r < 1.5


def test_monotonicity():
    assert gw.monotonicity_check("u2bar", 800) is None
    assert gw.monotonicity_check("u2", 800) is None
    assert gw.nonneg_prefix_ok(800)


def test_group_identities():
    result = gw.group_identities(400)
    assert all(result.values()), result


def test_partial_sum_terms_recombine():
    terms = gw.partial_sum_terms(120)
    total = [sum(col) for col in zip(*terms)]
    counts = gw.exact_counts("u2bar", 120)
    diffs = [counts[0]] + [counts[i] - counts[i - 1] for i in range(1, 121)]
    assert total == diffs


def test_lambert_split():
    assert gw.lambert_split_check(60)


def test_limit_probes_converge():
    targets = {"half": 0.5, "quarter": 0.25, "one": 1.0,
               "four-thirds": 4.0 / 3.0}
    rows = [gw.lambert_limit_probe(w) for w in (0.2, 0.1, 0.05)]
    for name, goal in targets.items():
        errs = [abs(row[name] - goal) for row in rows]
        assert errs[0] > errs[1] > errs[2]
        assert errs[2] < 0.05


def test_eta_probe():
    probe = gw.eta_asymptotic_probe((0.5, 0.25, 0.125))
    gaps = [abs(r - 1.0) for _, r in probe]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 0.01
    # far from the w -> 0 regime the ratio is visibly off
    (_, far), = gw.eta_asymptotic_probe((5.0,))
    assert abs(far - 1.0) > 0.2
    ratios = gw.eta_product_probe(0.05)
    for name in ("dedekind", "plus", "minus"):
        assert abs(ratios[name] - 1.0) < 0.02


def test_tauberian_consistency():
    for n in (500, 2000):
        assert gw.tauberian_main(0.25, 0.0, math.pi ** 2 / 8, n) == \
            pytest.approx(gw.asymptotic_main("u2bar", n), rel=1e-12)
        assert gw.tauberian_main(1 / (6 * math.sqrt(2)), 0.0,
                                 math.pi ** 2 / 6, n) == \
            pytest.approx(gw.asymptotic_main("u2", n), rel=1e-12)


def test_guards():
    with pytest.raises(UnirankError):
        gw.exact_counts("p", 5001)
    with pytest.raises(UnirankError):
        gw.exact_counts("nope", 10)
    with pytest.raises(UnirankError):
        gw.exact_counts("p", -1)
    with pytest.raises(UnirankError):
        gw.asymptotic_main("nope", 10)
    with pytest.raises(UnirankError):
        gw.asymptotic_main("p", 0)
    with pytest.raises(UnirankError):
        gw.tauberian_main(1.0, 0.0, 1.0, 0)
    with pytest.raises(UnirankError):
        gw.eta_product_probe(0.0)
    with pytest.raises(UnirankError):
        gw.lambert_limit_probe(-0.5)
