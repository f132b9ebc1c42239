"""Generating-function library.

Exact truncated expansions of the series behind each combinatorial family,
with a two-variable ring tracking the rank variable zeta alongside q, plus
the analytic building blocks (eta products, theta functions, Appell sums,
and bilateral Lambert-type series) used to state the identities.

``build(key, order)`` dispatches on the public series keys.  Keys ending in
``-q`` are one-variable specializations obtained by summing the rank
variable out of the two-variable series (and flipping the sign of q for the
families attached to even peaks), never by separate code paths.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .series import (
    ZZ,
    ZETA,
    PrefixedSeries,
    TruncatedSeries,
    UnirankError,
    ZetaLaurent,
    pochhammer,
)

SERIES_KEYS = (
    "P", "U", "Uzeta", "R", "Rbar", "Rbar2", "R2",
    "Ubar", "Ubar2", "U2", "Ubar-q", "Ubar2-q", "U2-q",
)
ANALYTIC_KEYS = ("eta", "theta", "mu", "appell")

DEFAULT_ORDER = 100


def default_order() -> int:
    """Truncation order, overridable through UNIRANK_ORDER."""
    raw = os.environ.get("UNIRANK_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    value = int(raw)
    if value < 1:
        raise UnirankError("UNIRANK_ORDER must be a positive integer")
    return value


def _zc(c: int, e: int) -> ZetaLaurent:
    return ZetaLaurent.monomial(c, e)


# -- exact sum builders over (q, zeta) ----------------------------------------

def series_P(order: int, ring=ZZ) -> TruncatedSeries:
    """1 / (q;q)_inf."""
    return pochhammer([(1, 0, 1)], None, order, ring=ring).invert()


def series_Uzeta(order: int) -> TruncatedSeries:
    """Strongly unimodal sequences by rank."""
    acc = TruncatedSeries.zero(ZETA, order)
    term = TruncatedSeries.monomial(ZETA, ZETA.one, 1, order)
    n = 1
    while n <= order:
        acc = acc + term
        term = term.mul_binomial(n, _zc(1, 1)).mul_binomial(n, _zc(1, -1))
        term = term.shift_q(1)
        n += 1
    return acc


def series_R(order: int) -> TruncatedSeries:
    """Partition rank series: sum of q^(n^2) / (zq, z^-1 q; q)_n."""
    acc = TruncatedSeries.one(ZETA, order)
    term = TruncatedSeries.one(ZETA, order)
    n = 1
    while n * n <= order:
        term = term.shift_q(2 * n - 1)
        term = term.div_binomial(n, _zc(-1, 1)).div_binomial(n, _zc(-1, -1))
        acc = acc + term
        n += 1
    return acc


def series_Rbar(order: int) -> TruncatedSeries:
    """Overpartition rank series."""
    acc = TruncatedSeries.one(ZETA, order)
    term = TruncatedSeries.one(ZETA, order)
    n = 1
    while n * (n + 1) // 2 <= order:
        term = term.mul_binomial(n - 1, 1) if n > 1 else term.scalar_mul(
            ZETA.from_int(2))
        term = term.shift_q(n)
        term = term.div_binomial(n, _zc(-1, 1)).div_binomial(n, _zc(-1, -1))
        acc = acc + term
        n += 1
    return acc


def series_Rbar2(order: int) -> TruncatedSeries:
    """Second overpartition rank series (linear exponent variant)."""
    acc = TruncatedSeries.one(ZETA, order)
    term = TruncatedSeries.one(ZETA, order)
    n = 1
    while n <= order:
        if n == 1:
            term = term.scalar_mul(ZETA.from_int(2)).mul_binomial(1, 1)
        else:
            term = term.mul_binomial(2 * n - 2, 1).mul_binomial(2 * n - 1, 1)
        term = term.shift_q(1)
        term = term.div_binomial(2 * n, _zc(-1, 1))
        term = term.div_binomial(2 * n, _zc(-1, -1))
        acc = acc + term
        n += 1
    return acc


def series_R2(order: int) -> TruncatedSeries:
    """Rank series for partitions without repeated odd parts."""
    acc = TruncatedSeries.one(ZETA, order)
    term = TruncatedSeries.one(ZETA, order)
    n = 1
    while n * n <= order:
        term = term.mul_binomial(2 * n - 1, 1).shift_q(2 * n - 1)
        term = term.div_binomial(2 * n, _zc(-1, 1))
        term = term.div_binomial(2 * n, _zc(-1, -1))
        acc = acc + term
        n += 1
    return acc


def series_Ubar(order: int) -> TruncatedSeries:
    """Signed left-heavy overlined sequences by rank."""
    acc = TruncatedSeries.zero(ZETA, order)
    term = TruncatedSeries.monomial(ZETA, ZETA.one, 1, order)
    term = term.div_binomial(1, 1)
    n = 1
    while n <= order:
        acc = acc + term
        term = term.mul_binomial(n, _zc(1, 1)).mul_binomial(n, _zc(1, -1))
        term = term.shift_q(1).div_binomial(n + 1, 1)
        n += 1
    return acc


def series_Ubar2(order: int) -> TruncatedSeries:
    """Even-peak overlined sequences by rank (coefficients of zeta^m (-1)^n)."""
    acc = TruncatedSeries.zero(ZETA, order)
    term = TruncatedSeries.monomial(ZETA, ZETA.one, 2, order)
    term = term.div_binomial(1, 1).div_binomial(2, 1)
    n = 1
    while 2 * n <= order:
        acc = acc + term
        term = term.mul_binomial(2 * n, _zc(1, 1)).mul_binomial(2 * n, _zc(1, -1))
        term = term.shift_q(2)
        term = term.div_binomial(2 * n + 1, 1).div_binomial(2 * n + 2, 1)
        n += 1
    return acc


def series_U2(order: int) -> TruncatedSeries:
    """Even-peak plain sequences by rank (coefficients of zeta^m (-1)^n)."""
    acc = TruncatedSeries.zero(ZETA, order)
    term = TruncatedSeries.monomial(ZETA, ZETA.one, 2, order)
    term = term.div_binomial(1, 1)
    n = 1
    while 2 * n <= order:
        acc = acc + term
        term = term.mul_binomial(2 * n, _zc(1, 1)).mul_binomial(2 * n, _zc(1, -1))
        term = term.shift_q(2).div_binomial(2 * n + 1, 1)
        n += 1
    return acc


def series_Ubar2_negq(order: int) -> TruncatedSeries:
    """Even-peak overlined series with q -> -q, in nonnegative product form."""
    acc = TruncatedSeries.zero(ZETA, order)
    term = TruncatedSeries.monomial(ZETA, ZETA.one, 2, order)
    term = term.mul_binomial(1, 1).div_binomial(4, -1)
    n = 1
    while 2 * n <= order:
        acc = acc + term
        term = term.mul_binomial(2 * n, _zc(1, 1)).mul_binomial(2 * n, _zc(1, -1))
        term = term.shift_q(2).mul_binomial(2 * n + 1, 1)
        term = term.mul_binomial(2 * n + 2, -1)
        term = term.div_binomial(4 * n + 2, -1).div_binomial(4 * n + 4, -1)
        n += 1
    return acc


def series_U2_negq(order: int) -> TruncatedSeries:
    """Even-peak plain series with q -> -q, in nonnegative product form."""
    acc = TruncatedSeries.zero(ZETA, order)
    term = TruncatedSeries.monomial(ZETA, ZETA.one, 2, order)
    term = term.div_binomial(1, -1)
    n = 1
    while 2 * n <= order:
        acc = acc + term
        term = term.mul_binomial(2 * n, _zc(1, 1)).mul_binomial(2 * n, _zc(1, -1))
        term = term.shift_q(2).div_binomial(2 * n + 1, -1)
        n += 1
    return acc


def series_R_neg_zeta(order: int) -> TruncatedSeries:
    """Partition rank series with zeta -> -zeta."""
    acc = TruncatedSeries.one(ZETA, order)
    term = TruncatedSeries.one(ZETA, order)
    n = 1
    while n * n <= order:
        term = term.shift_q(2 * n - 1)
        term = term.div_binomial(n, _zc(1, 1)).div_binomial(n, _zc(1, -1))
        acc = acc + term
        n += 1
    return acc


def series_R_negzq_q2(order: int) -> TruncatedSeries:
    """Partition rank series at argument -zeta*q over base q^2."""
    acc = TruncatedSeries.one(ZETA, order)
    term = TruncatedSeries.one(ZETA, order)
    n = 1
    while 2 * n * n <= order:
        term = term.shift_q(4 * n - 2)
        term = term.div_binomial(2 * n + 1, _zc(1, 1))
        term = term.div_binomial(2 * n - 1, _zc(1, -1))
        acc = acc + term
        n += 1
    return acc


def series_R2_negs(order: int) -> TruncatedSeries:
    """No-repeated-odd-parts rank series at (-zeta; -q)."""
    acc = TruncatedSeries.one(ZETA, order)
    term = TruncatedSeries.one(ZETA, order)
    n = 1
    while n * n <= order:
        term = term.mul_binomial(2 * n - 1, -1).shift_q(2 * n - 1)
        term = term.scalar_mul(ZETA.from_int(-1))
        term = term.div_binomial(2 * n, _zc(1, 1))
        term = term.div_binomial(2 * n, _zc(1, -1))
        acc = acc + term
        n += 1
    return acc


def series_R_negq_q2(order: int) -> TruncatedSeries:
    """One-variable R(-q; q^2) used by the omega identity."""
    acc = TruncatedSeries.one(ZZ, order)
    term = TruncatedSeries.one(ZZ, order)
    n = 1
    while 2 * n * n <= order:
        term = term.shift_q(4 * n - 2)
        term = term.div_binomial(2 * n + 1, 1).div_binomial(2 * n - 1, 1)
        acc = acc + term
        n += 1
    return acc


def series_omega_negq(order: int) -> TruncatedSeries:
    """omega(-q) = sum of q^(2n^2+2n) / (-q; q^2)_{n+1}^2."""
    acc = TruncatedSeries.zero(ZZ, order)
    term = TruncatedSeries.one(ZZ, order).div_binomial(1, 1).div_binomial(1, 1)
    n = 0
    while 2 * n * n + 2 * n <= order:
        acc = acc + term
        term = term.shift_q(4 * n + 4)
        term = term.div_binomial(2 * n + 3, 1).div_binomial(2 * n + 3, 1)
        n += 1
    return acc


# -- bilateral Lambert-type series ---------------------------------------------

@dataclass(frozen=True)
class SingularTerm:
    """Monomial numerator sitting over an uncancelled (1 - sign*zeta^e)."""

    coef: int
    zeta_exp: int
    q_exp: int
    pole_sign: int
    pole_zeta: int


@dataclass(frozen=True)
class BilateralSpec:
    """Sum over integer n of
    (-1)^(flip*n) * zeta^(step*n) * q^(quad*n^2 + lin*n + const)
        / (1 - pole_sign * zeta^pole_zeta * q^(pole_coeff*n + pole_shift)).
    """

    flip: int
    quad: Fraction
    lin: Fraction
    const: int = 0
    step: int = 0
    pole_sign: int = 1
    pole_zeta: int = 1
    pole_coeff: int = 1
    pole_shift: int = 0


def _bilateral_term(spec: BilateralSpec, n: int, order: int):
    """(valuation, series-or-None, singular-or-None) for one summand."""
    e_num = spec.quad * n * n + spec.lin * n + spec.const
    if e_num.denominator != 1:
        raise UnirankError(f"non-integral exponent at n={n}: {e_num}")
    e_num = int(e_num)
    sign = -1 if spec.flip and n % 2 else 1
    zexp = spec.step * n
    r = spec.pole_coeff * n + spec.pole_shift
    if r == 0:
        if e_num < 0:
            raise UnirankError(f"negative exponent on singular term n={n}")
        return e_num, None, SingularTerm(sign, zexp, e_num,
                                         spec.pole_sign, spec.pole_zeta)
    if r > 0:
        coef, ze, val, geo_z, geo_q = sign, zexp, e_num, spec.pole_zeta, r
    else:
        # 1/(1 - s*zeta^e*q^r) = -s*zeta^-e*q^-r / (1 - s*zeta^-e*q^-r)
        coef = -sign * spec.pole_sign
        ze = zexp - spec.pole_zeta
        val = e_num - r
        geo_z, geo_q = -spec.pole_zeta, -r
    if val < 0:
        raise UnirankError(f"negative valuation at n={n}")
    if val > order:
        return val, None, None
    out = TruncatedSeries.zero(ZETA, order)
    exp, j = val, 0
    while exp <= order:
        c = coef * (spec.pole_sign ** j) if spec.pole_sign == -1 else coef
        out.coeffs[exp] = out.coeffs[exp] + _zc(c, ze + j * geo_z)
        exp += geo_q
        j += 1
    return val, out, None


def bilateral_expand(spec: BilateralSpec, order: int):
    """(regular part, singular terms) of the bilateral sum through q^order."""
    if spec.quad <= 0:
        raise UnirankError("quadratic coefficient must be positive")
    acc = TruncatedSeries.zero(ZETA, order)
    poles = []
    vertex = int(-(spec.lin / (2 * spec.quad)))
    for direction in (1, -1):
        n = vertex if direction == 1 else vertex - 1
        misses = 0
        while misses < 4:
            val, piece, pole = _bilateral_term(spec, n, order)
            if piece is not None:
                acc = acc + piece
                misses = 0
            elif pole is not None:
                poles.append(pole)
                misses = 0
            else:
                misses += 1
            n += direction
    return acc, poles


# -- analytic building blocks ---------------------------------------------------

def eta_power(mult: int, order: int) -> PrefixedSeries:
    """Dedekind eta at mult*tau: q^(mult/24) * (q^mult; q^mult)_inf."""
    body = pochhammer([(1, 0, mult)], None, order, ring=ZETA, step=mult)
    return PrefixedSeries(1, 0, 0, mult, body)


def theta_sum(eps: int, a: int, b: int, s: int, order: int) -> PrefixedSeries:
    """Jacobi theta at (eps*z + a*tau + b/2; s*tau), as its defining sum."""
    body = TruncatedSeries.zero(ZETA, order)
    for direction in (1, -1):
        k = 0 if direction == 1 else -1
        while True:
            exp = s * k * (k + 1) // 2 + a * k
            if exp > order:
                break
            if exp < 0:
                raise UnirankError("theta parameters leave the lattice")
            c = -1 if (b + 1) % 2 and k % 2 else 1
            body.coeffs[exp] = body.coeffs[exp] + _zc(c, eps * k)
            k += direction
    return PrefixedSeries(1, b + 1, eps, 3 * s + 12 * a, body)


def theta_product(order: int) -> PrefixedSeries:
    """theta(z; tau) as the triple product
    -i q^(1/8) zeta^(-1/2) (q;q)_inf (zeta;q)_inf (zeta^-1 q;q)_inf."""
    body = pochhammer([(1, 0, 1), (1, 1, 1), (1, -1, 1)], None, order,
                      ring=ZETA)
    body = body.scalar_mul(ZetaLaurent({0: 1, 1: -1}))
    return PrefixedSeries(-1, 1, -1, 3, body)


@dataclass(frozen=True)
class PrefixedWithPoles:
    """A prefixed series plus monomial terms over uncancelled zeta poles."""

    regular: PrefixedSeries
    poles: tuple

    def cleared(self, poly: ZetaLaurent) -> PrefixedSeries:
        """Multiply by a polynomial divisible by every pole denominator."""
        body = self.regular.body.scalar_mul(poly)
        for p in self.poles:
            quot = poly.divexact_one_minus(p.pole_sign, p.pole_zeta)
            coef = quot.scale(p.coef).shift(p.zeta_exp)
            body = body + TruncatedSeries.monomial(ZETA, coef, p.q_exp,
                                                   body.order)
        return PrefixedSeries(self.regular.scalar, self.regular.phase,
                              self.regular.zeta_half, self.regular.q24, body)


def appell_sum(ell: int, z1: tuple, z2: tuple, s: int,
               order: int) -> PrefixedWithPoles:
    """Level-ell Appell sum at z1 = (eps1, a1, b1), z2 = (a2, b2), base s*tau.

    z1 encodes eps1*z + a1*tau + b1/2 and z2 encodes a2*tau + b2/2 (the
    second argument must be zeta-free).
    """
    eps1, a1, b1 = z1
    a2, b2 = z2
    if eps1 != 1:
        raise UnirankError("first Appell argument must have unit z part")
    spec = BilateralSpec(
        flip=(ell + b2) % 2,
        quad=Fraction(s * ell, 2),
        lin=Fraction(s * ell, 2) + a2,
        const=0,
        step=0,
        pole_sign=-1 if b1 % 2 else 1,
        pole_zeta=1,
        pole_coeff=s,
        pole_shift=a1,
    )
    body, poles = bilateral_expand(spec, order)
    prefix = PrefixedSeries(1, ell * b1, ell, 12 * ell * a1, body)
    return PrefixedWithPoles(prefix, tuple(poles))


def mu_sum(z1: tuple, z2: tuple, s: int, order: int) -> PrefixedWithPoles:
    """Two-variable mu at z1 = (eps1, a1, b1), z2 = (a2, b2), base s*tau."""
    eps1, a1, b1 = z1
    a2, b2 = z2
    if eps1 != 1:
        raise UnirankError("first mu argument must have unit z part")
    spec = BilateralSpec(
        flip=(1 + b2) % 2,
        quad=Fraction(s, 2),
        lin=Fraction(s, 2) + a2,
        const=0,
        step=0,
        pole_sign=-1 if b1 % 2 else 1,
        pole_zeta=1,
        pole_coeff=s,
        pole_shift=a1,
    )
    body, poles = bilateral_expand(spec, order)
    theta = theta_sum(0, a2, b2, s, order)
    numer = PrefixedSeries(1, b1, 1, 12 * a1, body)
    regular = numer * theta.invert()
    return PrefixedWithPoles(regular, tuple(poles))


# -- dispatch -------------------------------------------------------------------

def _build_exact(key: str, order: int) -> TruncatedSeries:
    if key == "P":
        return series_P(order)
    if key == "Uzeta":
        return series_Uzeta(order)
    if key == "U":
        return series_Uzeta(order).marginal()
    if key == "R":
        return series_R(order)
    if key == "Rbar":
        return series_Rbar(order)
    if key == "Rbar2":
        return series_Rbar2(order)
    if key == "R2":
        return series_R2(order)
    if key == "Ubar":
        return series_Ubar(order)
    if key == "Ubar2":
        return series_Ubar2(order)
    if key == "U2":
        return series_U2(order)
    if key == "Ubar-q":
        return series_Ubar(order).marginal()
    if key == "Ubar2-q":
        return series_Ubar2(order).marginal().negate_q()
    if key == "U2-q":
        return series_U2(order).marginal().negate_q()
    raise UnirankError(f"unknown series key {key!r}")


def build(key: str, order: Optional[int] = None):
    """Series for a public key; analytic keys give a prefixed series."""
    if order is None:
        order = default_order()
    if order < 1:
        raise UnirankError("order must be >= 1")
    if key in SERIES_KEYS:
        return _build_exact(key, order)
    if key == "eta":
        return eta_power(1, order)
    if key == "theta":
        return theta_sum(1, 0, 0, 1, order)
    if key == "mu":
        return mu_sum((1, 1, 1), (0, 1), 2, order).regular
    if key == "appell":
        parts = appell_sum(2, (1, 1, 1), (1, 1), 2, order)
        if parts.poles:
            raise UnirankError("default Appell instance has unexpected poles")
        return parts.regular
    raise UnirankError(
        f"unknown key {key!r}; choices: {SERIES_KEYS + ANALYTIC_KEYS}")


__all__ = [
    "SERIES_KEYS", "ANALYTIC_KEYS", "DEFAULT_ORDER", "default_order",
    "build",
    "series_P", "series_Uzeta", "series_R", "series_Rbar", "series_Rbar2",
    "series_R2", "series_Ubar", "series_Ubar2", "series_U2",
    "series_Ubar2_negq", "series_U2_negq",
    "series_R_neg_zeta", "series_R_negzq_q2", "series_R2_negs",
    "series_R_negq_q2", "series_omega_negq",
    "BilateralSpec", "SingularTerm", "bilateral_expand",
    "eta_power", "theta_sum", "theta_product",
    "PrefixedWithPoles", "appell_sum", "mu_sum",
]
