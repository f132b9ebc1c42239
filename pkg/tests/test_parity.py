"""Tests for the parity module."""

import pytest

from unirank import gflib as gf
from unirank import parity as par
from unirank.series import UnirankError

ODD_BELOW_200 = [
    2, 3, 6, 9, 11, 17, 20, 21, 24, 26, 30, 33, 38, 39, 45, 48, 53, 54, 56,
    60, 63, 65, 72, 74, 75, 80, 81, 90, 92, 93, 98, 101, 105, 108, 110, 111,
    114, 119, 123, 129, 138, 141, 144, 146, 147, 152, 153, 165, 171, 173,
    179, 180, 186, 188, 189, 191, 195, 198]


def test_count_parity_matches_exact_series():
    order = 120
    exact = gf.series_U2_negq(order).marginal()
    bits = par.count_parity_bits(order)
    for n in range(order + 1):
        assert (bits >> n) & 1 == exact.coeffs[n] % 2, n


def test_odd_positions_below_200():
    bits = par.count_parity_bits(200)
    assert [n for n in range(201) if (bits >> n) & 1] == ODD_BELOW_200


def test_three_routes_agree():
    report = par.parity_agreement(600)
    assert report["disagreements"] == []
    assert report["count"] == report["theta"]
    # the norm row has no coefficient at n = 0
    assert report["norm"] == report["count"] & ~1


def test_criterion_matches_bits():
    bits = par.count_parity_bits(400)
    for n in range(1, 401):
        assert par.odd_criterion(n) == bool((bits >> n) & 1), n


def test_rep_count_small_values():
    # (5, 0); (7, 2); (7, -2) for m = 25 and so on
    assert [par.rep_count(m) for m in range(1, 13)] == [
        1, 0, 1, 1, 0, 0, 0, 0, 1, 2, 0, 1]
    assert par.rep_count(25) == 3
    assert par.rep_count(10) == 2


def test_rep_count_respects_domain_boundary():
    # m = 3 has the solutions (3, 1) and (3, -1); only v = +u/3 is kept
    assert par.rep_count(3) == 1


def test_ideal_count_formula_cases():
    assert par.ideal_count(1) == 1
    # 2 alone has odd two-exponent
    assert par.ideal_count(2) == 0
    # norm 10 = 2 * 5 balances the two-exponent against g = 1
    assert par.ideal_count(10) == 2
    # primes that are 7, 11, 13, 17 mod 24 must appear to even powers
    assert par.ideal_count(7) == 0
    assert par.ideal_count(49) == 1
    # split primes that are 1 or 19 mod 24 contribute e + 1
    assert par.ideal_count(19) == 2
    assert par.ideal_count(19 * 19) == 3
    assert par.ideal_count(73) == 2


def test_ideal_count_matches_rep_count():
    for m in range(1, 2001):
        assert par.ideal_count(m) == par.rep_count(m), m


def test_norm_parity_values():
    assert par.norm_parity(2) == 1
    assert par.norm_parity(1) == 0
    assert par.norm_parity(17) == 1


def test_guards():
    with pytest.raises(UnirankError):
        par.rep_count(0)
    with pytest.raises(UnirankError):
        par.ideal_count(-3)
    with pytest.raises(UnirankError):
        par.norm_parity(0)
    with pytest.raises(UnirankError):
        par.odd_criterion(0)
    with pytest.raises(UnirankError):
        par.count_parity_bits(-1)
    with pytest.raises(UnirankError):
        par.theta_parity_bits(-1)
