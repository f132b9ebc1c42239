"""Catalog of exact series identities with machine verification.

Each catalog entry expands both sides of one identity through a configurable
truncation order over an exact coefficient ring (integers, integers mod 2,
or Laurent polynomials in the rank variable zeta) and compares every
coefficient.  Sides that live on fractional exponent lattices are compared
as prefixed series; sides with removable zeta poles are first multiplied by
the clearing polynomial so that both become honest power series.

``verify`` runs one catalog entry and returns a ``VerificationReport``;
``verify_all`` sweeps the whole catalog.  The private ``_perturb`` hook
injects a single monomial into the right-hand side so tests can confirm
that each comparison rejects corrupted input.

The module also exposes the alpha/beta pair machinery: ``check_bailey_pair``
(the defining relation), ``apply_bailey_lemma`` (the limiting chain
transform), and ``lovejoy_pair`` (a three-parameter pair construction).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Callable, Optional

from .series import (
    GF2,
    ZETA,
    ZZ,
    PrefixedSeries,
    TruncatedSeries,
    UnirankError,
    ZetaLaurent,
    monomial_inv,
    monomial_mul,
    monomial_neg,
    pochhammer,
    pochhammer_prefixed,
)
from .gflib import (
    BilateralSpec,
    PrefixedWithPoles,
    appell_sum,
    bilateral_expand,
    default_order,
    eta_power,
    mu_sum,
    series_P,
    series_R,
    series_R2_negs,
    series_R_neg_zeta,
    series_R_negq_q2,
    series_R_negzq_q2,
    series_Rbar,
    series_U2_negq,
    series_Ubar,
    series_Ubar2_negq,
    series_Uzeta,
    series_omega_negq,
    theta_product,
    theta_sum,
)

_ONE = ZetaLaurent.from_int(1)


def _zm(c, e: int = 0) -> ZetaLaurent:
    return ZetaLaurent.monomial(c, e)


# -- monomial-parametrized series helpers ---------------------------------------
#
# A parameter monomial is (coef, zeta_exp, q_exp), as in series.pochhammer.

def _mul_factor(s: TruncatedSeries, mono, shift: int = 0) -> TruncatedSeries:
    """Multiply by (1 - coef * zeta^z * q^(e + shift))."""
    c, z, e = mono
    e += shift
    if e < 0:
        raise UnirankError(f"factor exponent {e} is negative")
    if e == 0:
        const = _ONE - _zm(c, z)
        if not const:
            raise UnirankError("factor vanishes identically")
        return s.scalar_mul(const)
    return s.mul_binomial(e, _zm(-c, z))


def _div_factor(s: TruncatedSeries, mono, shift: int = 0) -> TruncatedSeries:
    """Divide by (1 - coef * zeta^z * q^(e + shift)); needs e + shift >= 1."""
    c, z, e = mono
    e += shift
    if e < 1:
        raise UnirankError(f"cannot divide by a binomial with exponent {e}")
    return s.div_binomial(e, _zm(-c, z))


def _mul_mono(s: TruncatedSeries, mono, shift: int = 0) -> TruncatedSeries:
    """Multiply by the monomial coef * zeta^z * q^(e + shift), e + shift >= 0."""
    c, z, e = mono
    e += shift
    if e < 0:
        raise UnirankError(f"monomial exponent {e} is negative")
    out = s.scalar_mul(_zm(c, z)) if (c, z) != (1, 0) else s
    return out.shift_q(e)


def _ps_mul_one_minus(ps: PrefixedSeries, mono, shift: int = 0) -> PrefixedSeries:
    """Multiply a prefixed series by (1 - coef * zeta^z * q^(e + shift)).

    Negative exponents are rewritten through
    (1 - c z^z q^e) = (-c z^z q^e)(1 - c^{-1} z^{-z} q^{-e}).
    """
    c, z, e = mono
    e += shift
    c = Fraction(c)
    if e >= 1:
        return ps.mul_binomial(e, _zm(-c, z))
    if e == 0:
        const = _ONE - _zm(c, z)
        if not const:
            raise UnirankError("factor vanishes identically")
        return PrefixedSeries(ps.scalar, ps.phase, ps.zeta_half, ps.q24,
                              ps.body.scalar_mul(const))
    out = ps.times_scalar(-c).times_zeta_half(2 * z).times_q24(24 * e)
    return out.mul_binomial(-e, _zm(-1 / c, -z))


def _ps_div_one_minus(ps: PrefixedSeries, mono, shift: int = 0) -> PrefixedSeries:
    """Divide a prefixed series by (1 - coef * zeta^z * q^(e + shift))."""
    c, z, e = mono
    e += shift
    c = Fraction(c)
    if e >= 1:
        return ps.div_binomial(e, _zm(-c, z))
    if e == 0:
        raise UnirankError("cannot divide by a constant binomial here")
    out = ps.times_scalar(-1 / c).times_zeta_half(-2 * z).times_q24(-24 * e)
    return out.div_binomial(-e, _zm(-1 / c, -z))


def _ps_mul_mono(ps: PrefixedSeries, mono) -> PrefixedSeries:
    c, z, e = mono
    return ps.times_scalar(c).times_zeta_half(2 * z).times_q24(24 * e)


def _hyper_sum(nums, dens, mult, s: int, order: int) -> TruncatedSeries:
    """Sum over n >= 0 of prod_x (x;q^s)_n / prod_y (y;q^s)_n * mult^n.

    All parameters are monomials; the per-step multiplier must carry a
    positive q power so the sum terminates at the truncation order.
    """
    mc, mz, me = mult
    if me < 1:
        raise UnirankError("step multiplier needs a positive q power")
    for (_, _, e) in dens:
        if e < 1:
            raise UnirankError("denominator parameters need q power >= 1")
    acc = TruncatedSeries.one(ZETA, order)
    term = TruncatedSeries.one(ZETA, order)
    n = 0
    while (n + 1) * me <= order:
        for x in nums:
            term = _mul_factor(term, x, s * n)
        for y in dens:
            term = _div_factor(term, y, s * n)
        term = _mul_mono(term, mult)
        acc = acc + term
        n += 1
    return acc


# -- two-variable rank series pairs ---------------------------------------------

def _pairs_eq11(order: int):
    # q^(n^2) / (z q, z^-1 q; q)_{-n}  ==  (z, z^-1; q)_n q^n, using the
    # reciprocal convention (x; q)_{-n} = 1 / (x q^{-n}; q)_n.
    pairs = []
    for n in range(1, 9):
        lhs = pochhammer_prefixed(
            [(1, 1, 1 - n), (1, -1, 1 - n)], n, order).times_q24(24 * n * n)
        rhs = pochhammer_prefixed(
            [(1, 1, 0), (1, -1, 0)], n, order).times_q24(24 * n)
        pairs.append((f"n={n}", lhs, rhs))
    return pairs


def _pairs_eq12(order: int):
    lhs = series_Uzeta(order).scalar_mul(ZetaLaurent({1: 1, 0: 2, -1: 1}))
    spec = BilateralSpec(flip=0, quad=Fraction(1, 2), lin=Fraction(1, 2),
                         step=1, pole_sign=-1, pole_zeta=-1)
    reg, poles = bilateral_expand(spec, order)
    kernel = PrefixedWithPoles(PrefixedSeries.from_series(reg), tuple(poles))
    cleared = kernel.cleared(ZetaLaurent({0: 1, -1: 1}))
    rhs = series_P(order, ring=ZETA) * cleared.body - series_R_neg_zeta(order)
    return [("lambert", lhs, rhs)]


def _pairs_lemma31(order: int):
    lhs = series_Ubar(order).scalar_mul(ZetaLaurent({0: 2, 1: -1, -1: -1}))
    quot = pochhammer([(-1, 1, 1), (-1, -1, 1)], None, order) \
        * pochhammer([(-1, 0, 1)], None, order).invert()
    rhs = series_Rbar(order) - quot * series_R(order)
    return [("rank-pair", lhs, rhs)]


def _pairs_cor32(order: int):
    # both sides are multiplied by (1 - zeta)(1 - zeta^2); the single power
    # (1 - zeta) clears the n = 0 pole inside each Appell sum and the
    # remaining (1 - zeta^2) absorbs the explicit denominators
    one_minus_z = ZetaLaurent({0: 1, 1: -1})
    clear = one_minus_z * ZetaLaurent({0: 1, 2: -1})
    lhs = PrefixedSeries.from_series(series_Ubar(order).scalar_mul(clear))
    e1i = eta_power(1, order).invert()
    a2 = appell_sum(2, (1, 0, 0), (0, 1), 1, order).cleared(one_minus_z)
    t1 = (a2 * eta_power(2, order) * e1i * e1i).times_body(_zm(-2, 1))
    a3 = appell_sum(3, (1, 0, 0), (-1, 0), 1, order).cleared(one_minus_z)
    t2 = (theta_sum(1, 0, 1, 1, order) * a3 * e1i
          * eta_power(2, order).invert()).times_scalar(-1)
    t3 = PrefixedSeries.from_series(TruncatedSeries.monomial(
        ZETA, _zm(-1, 1) * one_minus_z, 0, order))
    return [("mock", lhs, t1 + t2 + t3)]


def _pairs_prop41(order: int):
    lhs = series_Ubar2_negq(order).scalar_mul(ZetaLaurent({0: 2, 2: -2}))
    lam = []
    for quad, lin, const in ((2, 3, 0), (1, 3, 1), (1, 1, 0)):
        reg, poles = bilateral_expand(
            BilateralSpec(flip=1 if quad == 2 else 0, quad=Fraction(quad),
                          lin=Fraction(lin), const=const, pole_sign=-1,
                          pole_zeta=1, pole_coeff=2, pole_shift=1), order)
        if poles:
            raise UnirankError("unexpected singular bilateral term")
        lam.append(reg)
    num1 = pochhammer([(-1, 1, 2), (-1, -1, 2), (-1, 0, 1)], None, order,
                      step=2)
    den1 = pochhammer([(1, 0, 1)], None, order) \
        * pochhammer([(-1, 0, 2)], None, order, step=2)
    t1 = (lam[0] * num1 * den1.invert()).shift_q(1).scalar_mul(
        ZetaLaurent({1: -2, 2: -2}))
    c24 = pochhammer([(1, 0, 2)], None, order, step=4) \
        * pochhammer([(1, 0, 4)], None, order, step=4).invert()
    rhs = t1 + (lam[1] * c24).scalar_mul(_zm(1, 2)) \
        + (lam[2] * c24).scalar_mul(_zm(-1, 1))
    return [("lambert", lhs, rhs)]


def _pairs_cor42(order: int):
    z2 = ZetaLaurent({0: 1, 2: -1})
    lhs = PrefixedSeries.from_series(series_Ubar2_negq(order).scalar_mul(z2))
    e1i = eta_power(1, order).invert()
    e2 = eta_power(2, order)
    e4i = eta_power(4, order).invert()
    a2 = appell_sum(2, (1, 1, 1), (1, 1), 2, order)
    if a2.poles:
        raise UnirankError("unexpected pole in the level-2 sum")
    ta = theta_sum(1, 0, 1, 2, order) * a2.regular * e2 * e2 \
        * e1i * e1i * e4i * e4i
    ta = ta.times_zeta_half(1).times_scalar(-1)
    mu = mu_sum((1, 1, 1), (0, 1), 2, order)
    if mu.poles:
        raise UnirankError("unexpected pole in the mu sum")
    inner = mu.regular.times_scalar(2) \
        + PrefixedSeries(1, 1, 1, 6, TruncatedSeries.one(ZETA, order))
    tb = inner.times_i_power(1).times_scalar(-1).times_zeta_half(1)
    tb = tb.times_q24(-6)
    return [("mock", lhs, ta + tb)]


def _dual_sum(order: int) -> TruncatedSeries:
    """Sum over n >= 1 of (-z q^2, -z^-1 q^2; q^2)_{n-1} (-1)^n q^n
    / (q, -q^2; q^2)_n."""
    acc = TruncatedSeries.zero(ZETA, order)
    term = TruncatedSeries.monomial(ZETA, _zm(-1, 0), 1, order)
    term = term.div_binomial(1, _zm(-1, 0)).div_binomial(2, _zm(1, 0))
    n = 1
    while n <= order:
        acc = acc + term
        term = term.mul_binomial(2 * n, _zm(1, 1)).mul_binomial(2 * n, _zm(1, -1))
        term = term.shift_q(1).scalar_mul(_zm(-1, 0))
        term = term.div_binomial(2 * n + 1, _zm(-1, 0))
        term = term.div_binomial(2 * n + 2, _zm(1, 0))
        n += 1
    return acc


def _pairs_false_dual(order: int):
    pairs = []
    # termwise q -> -1/q flip of the even-peak overlined summands
    for n in range(1, 6):
        nums = []
        for i in range(n - 1):
            nums.append((-1, 1, -2 - 2 * i))
            nums.append((-1, -1, -2 - 2 * i))
        dens = [((-1) ** i, 0, -1 - i) for i in range(2 * n)]
        lhs = pochhammer_prefixed(nums, 1, order) \
            * pochhammer_prefixed(dens, 1, order).invert()
        lhs = lhs.times_q24(-48 * n)
        body = pochhammer([(-1, 1, 2), (-1, -1, 2)], n - 1, order, step=2) \
            * pochhammer([(1, 0, 1), (-1, 0, 2)], n, order, step=2).invert()
        rhs = PrefixedSeries.from_series(
            body.shift_q(n).scalar_mul(_zm((-1) ** n, 0)))
        pairs.append((f"flip n={n}", lhs, rhs))
    # finite reciprocal-base product law (w; 1/q)_n at monomial w
    for j, n in ((0, 3), (1, 4), (3, 2)):
        lhs = pochhammer_prefixed([(1, 1, j - i) for i in range(n)], 1, order)
        rhs = pochhammer_prefixed([(1, -1, -j)], n, order)
        rhs = rhs.times_scalar((-1) ** n).times_zeta_half(2 * n)
        rhs = rhs.times_q24(24 * (n * j - n * (n - 1) // 2))
        pairs.append((f"base-flip w=zeta*q^{j}, n={n}", lhs, rhs))
    # signed theta form of the dual sum
    dual = _dual_sum(order)
    theta = TruncatedSeries.zero(ZETA, order)
    n = 1
    while n * n <= order:
        sgn = -1 if n % 2 else 1
        theta.coeffs[n * n] = theta.coeffs[n * n] \
            + _zm(sgn, 1 - n) + _zm(-sgn, 1 + n)
        n += 1
    pairs.append(("dual-series",
                  dual.scalar_mul(ZetaLaurent({0: 1, 2: -1})), theta))
    counting = TruncatedSeries.zero(ZZ, order)
    n = 1
    while n * n <= order:
        counting.coeffs[n * n] = -n if n % 2 else n
        n += 1
    pairs.append(("marginal", dual.marginal(), counting))
    return pairs


def _pairs_prop51(order: int):
    lhs = series_U2_negq(order).scalar_mul(ZetaLaurent({1: 1, 0: 2, -1: 1}))
    # (-zeta, -1/zeta; q^2)_inf with the two constant factors pulled out
    zz = pochhammer([(-1, 1, 2), (-1, -1, 2)], None, order, step=2)
    zz = zz.scalar_mul(ZetaLaurent({1: 1, 0: 2, -1: 1}))
    q2i = pochhammer([(1, 0, 1)], None, order, step=2).invert()
    t2 = (zz * q2i * series_R_negzq_q2(order)).div_binomial(1, _zm(1, 1))
    t2 = t2.scalar_mul(_zm(-1, -1))
    q2 = pochhammer([(1, 0, 1)], None, order, step=2)
    t3 = pochhammer([(1, 0, 1)], None, order) * q2 * q2 \
        * pochhammer([(-1, 1, 1), (-1, -1, 1)], None, order).invert()
    t4 = (zz * q2i).scalar_mul(_zm(1, -1))
    rhs = -series_R2_negs(order) + t2 + t3 + t4
    return [("rank-pair", lhs, rhs)]


def _pairs_cor52(order: int):
    w = ZetaLaurent({0: 1, 1: 1})
    w2 = w * w
    lhs = PrefixedSeries.from_series(series_U2_negq(order).scalar_mul(w2))
    e1 = eta_power(1, order)
    e1i = e1.invert()
    e2i = eta_power(2, order).invert()
    a2 = appell_sum(2, (1, 0, 1), (-1, 0), 2, order).cleared(w)
    t1 = (a2 * e1 * e2i * e2i).times_q24(3)
    a3 = appell_sum(3, (1, 1, 1), (-2, 0), 2, order)
    if a3.poles:
        raise UnirankError("unexpected pole in the level-3 sum")
    t2 = theta_sum(1, 0, 1, 2, order) * a3.regular * e1i * e2i
    t2 = t2.times_i_power(1).times_zeta_half(-4).times_q24(-39).times_body(w)
    theta_half_reduced = PrefixedSeries(
        -1, 0, -1, 3,
        pochhammer([(-1, 1, 1), (-1, -1, 1), (1, 0, 1)], None, order))
    t3 = e1 * e1 * e1 * e1 * e2i * e2i * theta_half_reduced.invert()
    t3 = t3.times_zeta_half(1).times_q24(3).times_scalar(-1)
    t4 = theta_sum(1, 0, 1, 2, order) * e1i
    t4 = t4.times_zeta_half(-1).times_q24(-5).times_scalar(-1).times_body(w)
    check = PrefixedSeries(-1, 0, -1, 3,
                           theta_half_reduced.body.scalar_mul(w))
    return [
        ("mock", lhs, t1 + t2 + t3 + t4),
        ("theta-half-product", check, theta_sum(1, 0, 1, 1, order)),
    ]


def _gf2_from_zz(s: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries(GF2, [int(c) & 1 for c in s.coeffs], s.order)


def _pairs_prop53(order: int):
    lhs = _gf2_from_zz(series_U2_negq(order).marginal())
    rhs = TruncatedSeries.zero(GF2, order)
    n = 0
    while n * n + 3 * n + 2 <= order:
        for j in range(n + 1):
            e = 3 * n * n + 6 * n - 2 * j * j - 3 * j + 2
            for exp in (e, e + 2 * j + 1):
                if exp <= order:
                    rhs.coeffs[exp] ^= 1
        n += 1
    return [("mod2", lhs, rhs)]


def _thetid_lhs(order: int) -> TruncatedSeries:
    acc = TruncatedSeries.one(ZZ, order)
    term = TruncatedSeries.one(ZZ, order)
    n = 1
    while 2 * n <= order:
        term = term.mul_binomial(2 * n, -1).mul_binomial(2 * n, -1)
        term = term.div_binomial(2 * n + 1, -1).shift_q(2)
        acc = acc + term
        n += 1
    return acc


def _thetid_rhs(order: int) -> TruncatedSeries:
    acc = TruncatedSeries.zero(ZZ, order)
    n = 0
    while n * n + 3 * n <= order:
        s = TruncatedSeries.zero(ZZ, order)
        sgn = -1 if n % 2 else 1
        for j in range(n + 1):
            e = 3 * n * n + 6 * n - 2 * j * j - 3 * j
            for exp in (e, e + 2 * j + 1):
                if exp <= order:
                    s.coeffs[exp] += sgn
        s = s.mul_binomial(2 * n + 2, 1).div_binomial(2 * n + 2, -1)
        acc = acc + s
        n += 1
    return acc.mul_binomial(1, -1)


def _alpha_q4q2(n: int, order: int) -> TruncatedSeries:
    s = TruncatedSeries.zero(ZZ, order)
    sgn = -1 if n % 2 else 1
    for j in range(n + 1):
        e = 3 * n * n + 4 * n - 2 * j * j - 3 * j
        for exp in (e, e + 2 * j + 1):
            if exp <= order:
                s.coeffs[exp] += sgn
    s = s.mul_binomial(4 * n + 4, -1).mul_binomial(1, -1)
    return s.div_binomial(2, -1).div_binomial(4, -1)


def _beta_q4q2(n: int, order: int) -> TruncatedSeries:
    return pochhammer([(1, 0, 3)], n, order, ring=ZZ, step=2).invert()


def bailey_pair_pairs(alpha, beta, a_exp: int, step: int, order: int,
                      n_max: int = 4, tag: str = "") -> list:
    """Comparison pairs for the defining relation
    beta_n = sum_{0<=j<=n} alpha_j / ((q;q)_{n-j} (aq;q)_{n+j})
    with a = q^a_exp over base q^step."""
    pairs = []
    for n in range(n_max + 1):
        rhs = TruncatedSeries.zero(ZZ, order)
        for j in range(n + 1):
            t = alpha(j, order)
            t = t * pochhammer([(1, 0, step)], n - j, order, ring=ZZ,
                               step=step).invert()
            t = t * pochhammer([(1, 0, a_exp + step)], n + j, order, ring=ZZ,
                               step=step).invert()
            rhs = rhs + t
        pairs.append((f"{tag}n={n}", beta(n, order), rhs))
    return pairs


def check_bailey_pair(alpha, beta, a_exp: int, step: int,
                      order: Optional[int] = None, n_max: int = 4) -> bool:
    """True when (alpha, beta) satisfies the defining pair relation."""
    if order is None:
        order = default_order()
    for _, lhs, rhs in bailey_pair_pairs(alpha, beta, a_exp, step, order,
                                         n_max):
        if lhs != rhs:
            return False
    return True


def apply_bailey_lemma(alpha, beta, a_exp: int, rho1_exp: int, rho2_exp: int,
                       step: int, order: int):
    """Both sides of the limiting chain transform for a pair relative to
    a = q^a_exp over base q^step, with rho_i = q^rho_i_exp:

    sum (rho1, rho2; q)_n (aq/(rho1 rho2))^n beta_n
      == (aq/rho1, aq/rho2; q)_inf / (aq, aq/(rho1 rho2); q)_inf
         * sum (rho1, rho2; q)_n (aq/(rho1 rho2))^n
               / (aq/rho1, aq/rho2; q)_n * alpha_n.
    """
    g = a_exp + step - rho1_exp - rho2_exp
    g1 = a_exp + step - rho1_exp
    g2 = a_exp + step - rho2_exp
    if g < 1 or g1 < 1 or g2 < 1:
        raise UnirankError("chain transform parameters need positive q powers")
    lhs = TruncatedSeries.zero(ZZ, order)
    n = 0
    while g * n <= order:
        t = beta(n, order)
        t = t * pochhammer([(1, 0, rho1_exp)], n, order, ring=ZZ, step=step)
        t = t * pochhammer([(1, 0, rho2_exp)], n, order, ring=ZZ, step=step)
        lhs = lhs + t.shift_q(g * n)
        n += 1
    pref = pochhammer([(1, 0, g1), (1, 0, g2)], None, order, ring=ZZ,
                      step=step) \
        * (pochhammer([(1, 0, a_exp + step)], None, order, ring=ZZ, step=step)
           * pochhammer([(1, 0, g)], None, order, ring=ZZ,
                        step=step)).invert()
    tail = TruncatedSeries.zero(ZZ, order)
    n = 0
    while g * n <= order:
        t = alpha(n, order)
        t = t * pochhammer([(1, 0, rho1_exp)], n, order, ring=ZZ, step=step)
        t = t * pochhammer([(1, 0, rho2_exp)], n, order, ring=ZZ, step=step)
        t = t * (pochhammer([(1, 0, g1)], n, order, ring=ZZ, step=step)
                 * pochhammer([(1, 0, g2)], n, order, ring=ZZ,
                              step=step)).invert()
        tail = tail + t.shift_q(g * n)
        n += 1
    return lhs, pref * tail


def _pairs_thetid(order: int):
    pairs = [("display", _thetid_lhs(order), _thetid_rhs(order))]
    pairs += bailey_pair_pairs(_alpha_q4q2, _beta_q4q2, 4, 2, order,
                               n_max=4, tag="pair ")
    chain_lhs, chain_rhs = apply_bailey_lemma(_alpha_q4q2, _beta_q4q2,
                                              4, 2, 2, 2, order)
    pairs.append(("chain", chain_lhs, chain_rhs))
    return pairs


def _pairs_prop54(order: int):
    lhs = TruncatedSeries.zero(ZZ, order)
    n = 0
    while n * n + 3 * n + 2 <= order:
        for j in range(n + 1):
            e = 3 * n * n + 6 * n - 2 * j * j - 3 * j + 2
            for exp in (e, e + 2 * j + 1):
                if exp <= order:
                    lhs.coeffs[exp] += 1
        n += 1
    lhs = lhs.scalar_mul(2)
    rhs = TruncatedSeries.zero(ZZ, order)
    n_top = isqrt(48 * order) + 9
    for big_n in range(6, n_top + 1, 4):
        for big_j in range(-(big_n // 3) - 1, big_n // 3 + 1):
            if big_j % 2 == 0:
                continue
            if not (-big_n < 3 * big_j <= big_n):
                continue
            num = big_n * big_n - 6 * big_j * big_j + 2
            if num % 16:
                raise UnirankError("exponent leaves the integer lattice")
            e = num // 16
            if 0 <= e <= order:
                rhs.coeffs[e] += 1
    return [("quadratic-form", lhs, rhs)]


def _pairs_omega(order: int):
    lhs = series_R_negq_q2(order)
    rhs = TruncatedSeries.from_int_coeffs(ZZ, [1, 1], order) \
        - series_omega_negq(order).shift_q(1).mul_binomial(1, 1)
    return [("third-order", lhs, rhs)]


# -- classical transformations at monomial parameters ----------------------------

HEINE_SPECS = (
    ((1, 1, 2), (1, 0, 2), (-1, 1, 3), (-1, -1, 1), 2),
    ((1, 0, 1), (1, 0, 2), (1, 0, 3), (1, 0, 2), 1),
    ((-1, 0, 1), (1, 0, 1), (1, 0, 2), (1, 0, 3), 1),
    ((1, 1, 1), (-1, 0, 1), (1, 0, 2), (1, -1, 2), 1),
    ((2, 0, 1), (1, 0, 1), (3, 0, 2), (1, 0, 2), 1),
    ((1, 0, 2), (-1, 1, 1), (1, 0, 3), (1, 0, 1), 1),
)


def _heine_pair(a, b, c, t, s: int, order: int):
    label = f"a={a} b={b} c={c} t={t} step={s}"
    lhs = _hyper_sum([a, b], [c, (1, 0, s)], t, s, order)
    at = monomial_mul(a, t)
    cb = monomial_mul(c, monomial_inv(b))
    tail = _hyper_sum([cb, t], [at, (1, 0, s)], b, s, order)
    pref = pochhammer([b, at], None, order, step=s) \
        * pochhammer([c, t], None, order, step=s).invert()
    return (label, lhs, pref * tail)


def _pairs_heine(order: int):
    return [_heine_pair(a, b, c, t, s, order)
            for (a, b, c, t, s) in HEINE_SPECS]


WATSON_SPECS = (
    ((1, 0, 2), (-1, 1, 1), (-1, -1, 1), (1, 0, 1), (-1, 0, 1), 2),
    ((1, 0, 2), (1, 0, 1), (1, 0, 1), (1, 0, 1), (1, 0, 1), 1),
    ((1, 0, 3), (1, 0, 1), (1, 0, 1), (1, 0, 1), (1, 0, 1), 1),
    ((1, 0, 4), (1, 0, 2), (1, 0, 1), (1, 0, 1), (1, 0, 2), 1),
    ((1, 0, 2), (-1, 0, 1), (1, 0, 1), (1, 1, 1), (1, -1, 1), 1),
    ((1, 0, 6), (1, 0, 1), (1, 0, 2), (1, 0, 1), (1, 0, 3), 2),
)

WATSON_LIMIT_SPECS = (
    ((1, 0, 2), (-1, 0, 1), (-1, 1, 1), (-1, -1, 1), 2),
)


def _watson_tail(lowers, dens, a, mult, lin: int, s: int,
                 order: int) -> TruncatedSeries:
    """Sum over n of the very-well-poised terms
    prod (x;q^s)_n * (1 - a q^{2sn}) * mult^n * q^{s*lin*n(n-1)/2}
    / prod (y;q^s)_n, divided once by (1 - a)."""
    ca, za, ea = a
    mc, mz, me = mult
    acc = TruncatedSeries.zero(ZETA, order)
    term = TruncatedSeries.one(ZETA, order)
    n = 0
    val = 0
    while val <= order:
        acc = acc + term.mul_binomial(ea + 2 * s * n, _zm(-ca, za))
        for x in lowers:
            term = _mul_factor(term, x, s * n)
        for y in dens:
            term = _div_factor(term, y, s * n)
        term = _mul_mono(term, (mc, mz, me + s * lin * n))
        val += me + s * lin * n
        n += 1
    return acc.div_binomial(ea, _zm(-ca, za))


def _watson_pair(a, b, c, d, e, s: int, order: int):
    label = f"a={a} b={b} c={c} d={d} e={e} step={s}"
    aq = monomial_mul(a, (1, 0, s))
    over_b = monomial_mul(aq, monomial_inv(b))
    over_c = monomial_mul(aq, monomial_inv(c))
    over_d = monomial_mul(aq, monomial_inv(d))
    over_e = monomial_mul(aq, monomial_inv(e))
    over_de = monomial_mul(over_d, monomial_inv(e))
    lhs = _hyper_sum([monomial_mul(over_b, monomial_inv(c)), d, e],
                     [over_b, over_c, (1, 0, s)], over_de, s, order)
    mult = monomial_neg(monomial_mul(
        monomial_mul(aq, aq),
        monomial_inv(monomial_mul(monomial_mul(b, c), monomial_mul(d, e)))))
    tail = _watson_tail([a, b, c, d, e],
                        [(1, 0, s), over_b, over_c, over_d, over_e],
                        a, mult, 1, s, order)
    pref = pochhammer([over_d, over_e], None, order, step=s) \
        * pochhammer([aq, over_de], None, order, step=s).invert()
    return (label, lhs, pref * tail)


def _watson_limit_pair(a, b, d, e, s: int, order: int):
    label = f"a={a} b={b} c->inf d={d} e={e} step={s}"
    aq = monomial_mul(a, (1, 0, s))
    over_b = monomial_mul(aq, monomial_inv(b))
    over_d = monomial_mul(aq, monomial_inv(d))
    over_e = monomial_mul(aq, monomial_inv(e))
    over_de = monomial_mul(over_d, monomial_inv(e))
    lhs = _hyper_sum([d, e], [over_b, (1, 0, s)], over_de, s, order)
    mult = monomial_mul(
        monomial_mul(aq, aq),
        monomial_inv(monomial_mul(monomial_mul(b, d), e)))
    tail = _watson_tail([a, b, d, e], [(1, 0, s), over_b, over_d, over_e],
                        a, mult, 2, s, order)
    pref = pochhammer([over_d, over_e], None, order, step=s) \
        * pochhammer([aq, over_de], None, order, step=s).invert()
    return (label, lhs, pref * tail)


def _pairs_watson(order: int):
    pairs = [_watson_pair(a, b, c, d, e, s, order)
             for (a, b, c, d, e, s) in WATSON_SPECS]
    pairs += [_watson_limit_pair(a, b, d, e, s, order)
              for (a, b, d, e, s) in WATSON_LIMIT_SPECS]
    return pairs


# -- partial theta transformations -----------------------------------------------

AB621_SPECS = (
    ((-1, 0, 1), (1, 0, 2), (1, -1, -2), (-1, 1, 2), 2),
    ((-1, 0, 1), (1, 0, 4), (1, -1, -2), (-1, 1, 4), 2),
)


def _ab621_pairs_one(a, b, A, B, s: int, order: int, tie: bool):
    label = f"a={a} b={b} A={A} B={B} step={s}"
    q_s = (1, 0, s)
    neg_abq = monomial_neg(monomial_mul(monomial_mul(A, b), q_s))
    neg_aq = monomial_neg(monomial_mul(a, q_s))
    neg_bq = monomial_neg(monomial_mul(b, q_s))
    a_inv = monomial_inv(a)
    cap_a_inv = monomial_inv(A)
    m_abqa = monomial_mul(monomial_neg(neg_abq), a_inv)
    m_neg_ba = monomial_neg(monomial_mul(B, a_inv))
    m_neg_abqa = monomial_neg(monomial_mul(
        monomial_mul(monomial_mul(A, B), q_s), a_inv))
    m_neg_ainv = monomial_neg(a_inv)
    for mono in (B, neg_abq, neg_aq, neg_bq, cap_a_inv, m_abqa, m_neg_ba,
                 m_neg_abqa):
        if mono[2] < 1:
            raise UnirankError(f"parameter {mono} needs q power >= 1")
    s1 = _hyper_sum([B, neg_abq], [neg_aq, neg_bq], q_s, s, order)
    # second sum, with the (n+1)-indexed denominator product
    s2 = TruncatedSeries.one(ZETA, order).div_binomial(
        m_neg_ba[2], _zm(-m_neg_ba[0], m_neg_ba[1]))
    acc2 = s2
    n = 0
    while (n + 1) * m_abqa[2] <= order:
        s2 = _mul_factor(s2, cap_a_inv, s * n)
        s2 = _mul_mono(s2, m_abqa)
        s2 = _div_factor(s2, m_neg_ba, s * (n + 1))
        acc2 = acc2 + s2
        n += 1
    pp = pochhammer([B, neg_abq], None, order, step=s) \
        * pochhammer([neg_aq, neg_bq], None, order, step=s).invert()
    term2 = _ps_mul_mono(PrefixedSeries.from_series(pp * acc2),
                         monomial_neg(a_inv))
    # third sum over the prefixed lattice (one reciprocal factor)
    t3 = PrefixedSeries.one(order)
    t3 = _ps_mul_one_minus(t3, m_neg_ainv)
    t3 = _ps_div_one_minus(t3, m_neg_ba)
    t3 = _ps_div_one_minus(t3, m_abqa)
    acc3 = t3
    n = 0
    while (n + 1) * b[2] <= order:
        t3 = _ps_mul_one_minus(t3, m_neg_ainv, s * (n + 1))
        t3 = _ps_mul_one_minus(t3, m_neg_abqa, s * n)
        t3 = _ps_mul_mono(t3, monomial_neg(b))
        t3 = _ps_div_one_minus(t3, m_neg_ba, s * (n + 1))
        t3 = _ps_div_one_minus(t3, m_abqa, s * (n + 1))
        acc3 = acc3 + t3
        n += 1
    term3 = _ps_mul_one_minus(acc3, monomial_neg(b))
    pairs = [(label, PrefixedSeries.from_series(s1), term2 + term3)]
    if tie:
        body = series_Ubar2_negq(order)
        body = body.mul_binomial(1, _zm(-1, 0)).mul_binomial(2, _zm(1, 0))
        pairs.append(("even-overlined-tie",
                      PrefixedSeries(1, 0, 0, -48, body),
                      PrefixedSeries.from_series(s1)))
    return pairs


def _pairs_ab621(order: int):
    pairs = []
    for i, (a, b, A, B, s) in enumerate(AB621_SPECS):
        pairs += _ab621_pairs_one(a, b, A, B, s, order, tie=(i == 0))
    return pairs


AB6312_SPECS = (
    ((1, 1, 0), (1, -1, 0), (1, 0, 1), 1),
    ((1, 1, 0), (1, -1, 0), (-1, 0, 1), 2),
    ((1, 0, 2), (1, 0, 1), (1, 0, 1), 1),
)


def _ab6312_pairs_one(a, b, c, s: int, order: int):
    label = f"a={a} b={b} c={c} step={s}"
    q_s = (1, 0, s)
    neg_aq = monomial_neg(monomial_mul(a, q_s))
    neg_bq = monomial_neg(monomial_mul(b, q_s))
    neg_cq = monomial_neg(monomial_mul(c, q_s))
    for mono in (neg_aq, neg_bq, neg_cq):
        if mono[2] < 1:
            raise UnirankError(f"parameter {mono} needs q power >= 1")
    x1 = monomial_mul(monomial_mul(a, q_s), monomial_inv(c))
    x2 = monomial_mul(monomial_mul(b, q_s), monomial_inv(c))
    clear = _ONE
    reduced = []
    for x in (x1, x2):
        if x[2] == 0:
            clear = clear * (_ONE - _zm(x[0], x[1]))
            reduced.append((monomial_mul(x, q_s), 1))
        elif x[2] >= 1:
            reduced.append((x, 0))
        else:
            raise UnirankError(f"parameter {x} has negative q power")
    lhs = _hyper_sum([neg_aq, neg_bq], [neg_cq], q_s, s, order)
    lhs = lhs.shift_q(s).scalar_mul(clear)
    neg_c_inv = monomial_neg(monomial_inv(c))
    m1 = monomial_mul(monomial_mul(a, b), monomial_inv(c))
    m2 = monomial_mul(m1, monomial_inv(c))

    def denom_inv(n):
        den = TruncatedSeries.one(ZETA, order)
        for x, off in reduced:
            den = den * pochhammer([x], n - off, order, step=s)
        return PrefixedSeries.from_series(den).invert()

    sum1 = None
    n = 1
    while s * n * (n + 1) // 2 + (n - 1) * (m1[2]) - c[2] <= order:
        t = pochhammer_prefixed([neg_c_inv], n, order, step=s) * denom_inv(n)
        coef = Fraction(m1[0]) ** (n - 1)
        t = _ps_mul_mono(t, (coef, m1[1] * (n - 1),
                             m1[2] * (n - 1) + s * n * (n + 1) // 2))
        sum1 = t if sum1 is None else sum1 + t
        n += 1
    sum2 = None
    n = 1
    # the 1/c prefactor lowers every product term by c's q power, so the
    # cutoff must include terms whose raw lead sits just past the order
    while s * n * n + (n - 1) * m2[2] - c[2] <= order:
        t = denom_inv(n)
        coef = Fraction(m2[0]) ** (n - 1)
        t = _ps_mul_mono(t, (coef, m2[1] * (n - 1),
                             m2[2] * (n - 1) + s * n * n))
        sum2 = t if sum2 is None else sum2 + t
        n += 1
    pref = pochhammer([neg_aq, neg_bq], None, order, step=s) \
        * pochhammer([neg_cq], None, order, step=s).invert()
    term2 = _ps_mul_mono(PrefixedSeries.from_series(pref), monomial_inv(c))
    rhs = sum1 - term2 * sum2
    return (label, PrefixedSeries.from_series(lhs), rhs)


def _pairs_ab6312(order: int):
    return [_ab6312_pairs_one(a, b, c, s, order)
            for (a, b, c, s) in AB6312_SPECS]


# -- alpha/beta pair machinery ----------------------------------------------------

def lovejoy_pair(a_exp: int, b_exp: int, c_exp: int, d_exp: int,
                 step: int = 1):
    """Alpha/beta builders for the three-parameter pair construction at
    a = q^a_exp, b = q^b_exp, c = q^c_exp, d = q^d_exp over base q^step.

    The exponents must satisfy a > max(b, c, d), a >= b + c + d, and
    min(b, c, d) >= 1 so every intermediate stays a power series; the
    beta numerator parameter bcd q^step / a must also be a positive
    power of q.
    """
    if min(b_exp, c_exp, d_exp) < 1:
        raise UnirankError("lower parameters need q power >= 1")
    if a_exp <= max(b_exp, c_exp, d_exp):
        raise UnirankError("top parameter must dominate the lower ones")
    if a_exp < b_exp + c_exp + d_exp:
        raise UnirankError("top parameter must dominate the lower product")
    if b_exp + c_exp + d_exp + step - a_exp < 1:
        raise UnirankError("beta numerator parameter needs q power >= 1")

    def alpha(n: int, order: int) -> TruncatedSeries:
        exp = n * (b_exp + c_exp + d_exp + step - a_exp) \
            + step * n * (n - 1) // 2
        out = pochhammer([(1, 0, a_exp - b_exp), (1, 0, a_exp - c_exp),
                          (1, 0, a_exp - d_exp)], n, order, ring=ZZ,
                         step=step)
        out = out * pochhammer([(1, 0, b_exp + step), (1, 0, c_exp + step),
                                (1, 0, d_exp + step)], n, order, ring=ZZ,
                               step=step).invert()
        inner = TruncatedSeries.one(ZZ, order)
        t = TruncatedSeries.one(ZZ, order)
        for j in range(1, n + 1):
            for xe in (b_exp, c_exp, d_exp):
                t = t.mul_binomial(xe + step * (j - 1), -1)
            if j >= 2:
                t = t.mul_binomial(a_exp + step * (j - 2), -1)
            t = t.mul_binomial(a_exp + step * (2 * j - 1), -1)
            if j >= 2:
                t = t.div_binomial(a_exp + step * (2 * j - 3), -1)
            t = t.div_binomial(step * j, -1)
            for xe in (a_exp - b_exp, a_exp - c_exp, a_exp - d_exp):
                t = t.div_binomial(xe + step * (j - 1), -1)
            t = t.shift_q(a_exp - b_exp - c_exp - d_exp)
            inner = inner + t
        out = out * inner
        out = out.mul_binomial(a_exp + 2 * step * n, -1)
        out = out.div_binomial(a_exp, -1).shift_q(exp)
        return -out if n % 2 else out

    def beta(n: int, order: int) -> TruncatedSeries:
        num = pochhammer([(1, 0, b_exp + c_exp + d_exp + step - a_exp)],
                         n, order, ring=ZZ, step=step)
        den = pochhammer([(1, 0, b_exp + step), (1, 0, c_exp + step),
                          (1, 0, d_exp + step)], n, order, ring=ZZ, step=step)
        return num * den.invert()

    return alpha, beta


LOVEJOY_SPECS = ((3, 1, 1, 1, 1), (4, 1, 1, 2, 1), (6, 2, 2, 2, 2))


def _pairs_lovejoy(order: int):
    pairs = []
    for (ae, be, ce, de, s) in LOVEJOY_SPECS:
        alpha, beta = lovejoy_pair(ae, be, ce, de, s)
        tag = f"a=q^{ae} b=q^{be} c=q^{ce} d=q^{de} step={s}; "
        pairs += bailey_pair_pairs(alpha, beta, ae, s, order, n_max=3,
                                   tag=tag)
    return pairs


def _pairs_bailey_lemma(order: int):
    pairs = []
    chain = apply_bailey_lemma(_alpha_q4q2, _beta_q4q2, 4, 2, 2, 2, order)
    pairs.append(("chain a=q^4 rho=q^2,q^2", chain[0], chain[1]))
    alpha, beta = lovejoy_pair(3, 1, 1, 1, 1)
    chain = apply_bailey_lemma(alpha, beta, 3, 1, 1, 1, order)
    pairs.append(("chain a=q^3 rho=q,q", chain[0], chain[1]))
    chain = apply_bailey_lemma(alpha, beta, 3, 2, 1, 1, order)
    pairs.append(("chain a=q^3 rho=q^2,q", chain[0], chain[1]))
    alpha, beta = lovejoy_pair(4, 1, 1, 2, 1)
    chain = apply_bailey_lemma(alpha, beta, 4, 2, 1, 1, order)
    pairs.append(("chain a=q^4 rho=q^2,q", chain[0], chain[1]))
    return pairs


def _pairs_jtp(order: int):
    return [("triple-product", theta_sum(1, 0, 0, 1, order),
             theta_product(order))]


# -- catalog and verification ------------------------------------------------------

@dataclass(frozen=True)
class IdentityRecord:
    """One verifiable identity: a stable key, a short description, and a
    builder returning labeled (lhs, rhs) comparison pairs."""

    key: str
    description: str
    builder: Callable[[int], list]


_RECORDS = (
    IdentityRecord(
        "eq1.1",
        "Negative-index Pochhammer flip relating the rank summands",
        _pairs_eq11),
    IdentityRecord(
        "eq1.2",
        "Strongly unimodal rank series via the partition rank and a "
        "bilateral Lambert kernel",
        _pairs_eq12),
    IdentityRecord(
        "lemma3.1",
        "Signed overlined-sequence series via overpartition and partition "
        "ranks",
        _pairs_lemma31),
    IdentityRecord(
        "cor3.2",
        "Signed overlined-sequence series via eta quotients, a theta "
        "factor, and level 2 and 3 Appell sums",
        _pairs_cor32),
    IdentityRecord(
        "prop4.1",
        "Even-peak overlined series as three bilateral Lambert sums with "
        "infinite-product prefactors",
        _pairs_prop41),
    IdentityRecord(
        "cor4.2",
        "Even-peak overlined series via a level-2 Appell sum and a "
        "mu-function correction",
        _pairs_cor42),
    IdentityRecord(
        "false-dual",
        "Reciprocal-base dual of the even-peak overlined series as a "
        "signed theta-type sum",
        _pairs_false_dual),
    IdentityRecord(
        "prop5.1",
        "Even-peak series via two partition-type rank series and infinite "
        "products",
        _pairs_prop51),
    IdentityRecord(
        "cor5.2",
        "Even-peak series via level 2 and 3 Appell sums and theta "
        "quotients",
        _pairs_cor52),
    IdentityRecord(
        "prop5.3-mod2",
        "Mod-2 reduction of the even-peak series as a double theta-type "
        "sum",
        _pairs_prop53),
    IdentityRecord(
        "thetid",
        "Single-sum versus double-sum identity from the alpha/beta chain "
        "at a = q^4 over base q^2",
        _pairs_thetid),
    IdentityRecord(
        "prop5.4",
        "Double theta-type sum as a count of binary quadratic form values",
        _pairs_prop54),
    IdentityRecord(
        "omega",
        "Odd-base rank specialization via a third-order mock theta "
        "function",
        _pairs_omega),
    IdentityRecord(
        "heine",
        "Heine transformation of a 2phi1 series at monomial parameters",
        _pairs_heine),
    IdentityRecord(
        "watson",
        "Watson transformation of a very-well-poised 8phi7 at monomial "
        "parameters",
        _pairs_watson),
    IdentityRecord(
        "ab621",
        "Three-term partial-theta transformation for a balanced series",
        _pairs_ab621),
    IdentityRecord(
        "ab6312",
        "Two-term partial-theta expansion with an infinite-product "
        "prefactor",
        _pairs_ab6312),
    IdentityRecord(
        "bailey-lemma",
        "Limiting chain transform applied to verified alpha/beta pairs",
        _pairs_bailey_lemma),
    IdentityRecord(
        "lovejoy-bp",
        "Three-parameter alpha/beta pair construction at monomial "
        "parameters",
        _pairs_lovejoy),
    IdentityRecord(
        "jtp",
        "Triple-product expansion of the theta sum",
        _pairs_jtp),
)

REGISTRY = {r.key: r for r in _RECORDS}
IDENTITY_KEYS = tuple(REGISTRY)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of verifying one catalog entry through q^order."""

    key: str
    passed: bool
    order: int
    first_mismatch: Optional[tuple]
    elapsed: float
    detail: str


def _compare(lhs, rhs):
    if isinstance(lhs, PrefixedSeries) or isinstance(rhs, PrefixedSeries):
        res = lhs.compare(rhs)
        return res.equal, res.first_mismatch
    if lhs.ring is not rhs.ring:
        raise UnirankError(
            f"ring mismatch: {lhs.ring.name} vs {rhs.ring.name}")
    through = min(lhs.order, rhs.order)
    for n in range(through + 1):
        a, b = lhs.coeffs[n], rhs.coeffs[n]
        if a != b:
            if lhs.ring is ZETA:
                diff = a - b
                return False, (min(diff.c), n)
            return False, (0, n)
    return True, None


def _perturbed(rhs, m: int, n: int):
    if isinstance(rhs, PrefixedSeries):
        if n > rhs.body.order:
            raise UnirankError(f"perturbation at q^{n} is beyond the order")
        bump = TruncatedSeries.monomial(ZETA, _zm(1, m), n, rhs.body.order)
        return PrefixedSeries(rhs.scalar, rhs.phase, rhs.zeta_half, rhs.q24,
                              rhs.body + bump)
    if n > rhs.order:
        raise UnirankError(f"perturbation at q^{n} is beyond the order")
    elem = _zm(1, m) if rhs.ring is ZETA else rhs.ring.one
    return rhs + TruncatedSeries.monomial(rhs.ring, elem, n, rhs.order)


def verify(key: str, order: Optional[int] = None,
           _perturb: Optional[tuple] = None) -> VerificationReport:
    """Expand both sides of the keyed identity and compare all coefficients.

    ``_perturb=(m, n)`` adds zeta^m q^n to the first right-hand side, which
    must make verification fail; it exists for negative-control tests.
    """
    if key not in REGISTRY:
        raise UnirankError(
            f"unknown identity key {key!r}; choices: {IDENTITY_KEYS}")
    if order is None:
        order = default_order()
    if order < 1:
        raise UnirankError("order must be >= 1")
    start = time.perf_counter()
    pairs = REGISTRY[key].builder(order)
    if _perturb is not None:
        m, n = _perturb
        label0, lhs0, rhs0 = pairs[0]
        pairs[0] = (label0, lhs0, _perturbed(rhs0, m, n))
    passed = True
    first = None
    fail_label = None
    for label, lhs, rhs in pairs:
        ok, where = _compare(lhs, rhs)
        if not ok and passed:
            passed = False
            first = where
            fail_label = label
    elapsed = time.perf_counter() - start
    if passed:
        detail = f"{len(pairs)} comparison(s) agree through q^{order}"
    else:
        detail = f"{fail_label}: first mismatch at {first}"
    return VerificationReport(key, passed, order, first, elapsed, detail)


def verify_all(order: Optional[int] = None, keys=None) -> dict:
    """Verification reports for every catalog key, in catalog order."""
    if keys is None:
        keys = IDENTITY_KEYS
    return {key: verify(key, order) for key in keys}


def verify_classical(key: str,
                     order: Optional[int] = None) -> VerificationReport:
    """Run the monomial-specialization sweeps for 'heine' or 'watson'."""
    if key not in ("heine", "watson"):
        raise UnirankError(
            "classical sweeps exist for 'heine' and 'watson' only")
    return verify(key, order)


__all__ = [
    "IDENTITY_KEYS", "REGISTRY", "IdentityRecord", "VerificationReport",
    "verify", "verify_all", "verify_classical",
    "bailey_pair_pairs", "check_bailey_pair", "apply_bailey_lemma",
    "lovejoy_pair",
    "HEINE_SPECS", "WATSON_SPECS", "WATSON_LIMIT_SPECS",
    "AB621_SPECS", "AB6312_SPECS", "LOVEJOY_SPECS",
]
