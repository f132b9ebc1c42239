"""Exact truncated power series over several coefficient rings.

Core objects:

* ``ZetaLaurent``: finite Laurent polynomial in an auxiliary unit ``zeta``,
  with exact integer or rational coefficients.
* ``TruncatedSeries``: dense truncated power series in ``q`` over one of the
  rings ``ZZ``, ``GF2``, ``QQ``, ``ZETA``.
* ``PrefixedSeries``: a series together with an exact monomial prefix
  ``scalar * i^phase * zeta^(zeta_half/2) * q^(q24/24)``, for objects that
  live on fractional exponent lattices.
* ``pochhammer`` / ``pochhammer_prefixed``: finite, infinite, and
  negative-index q-Pochhammer products with monomial arguments.

All arithmetic is exact; nothing here uses floating point except the explicit
``evaluate`` helpers used by numerical cross-checks.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional, Sequence, Union


class UnirankError(Exception):
    """Base class for all package errors."""


class OrderMismatchError(UnirankError):
    """Binary operation on series with different truncation orders."""


class NotInvertibleError(UnirankError):
    """Inversion of a non-unit (constant term not invertible)."""


class CoefficientRangeError(UnirankError):
    """Coefficient index outside the tracked truncation range."""


class SingularPochhammerError(UnirankError):
    """Negative-index Pochhammer whose factors are not invertible."""


class LatticeMismatchError(UnirankError):
    """Prefixed series on incompatible fractional exponent lattices."""


Scalar = Union[int, Fraction]


def _norm_scalar(c: Scalar) -> Scalar:
    """Collapse integral Fractions to int; pass ints through."""
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c)
        return c
    return int(c)


class ZetaLaurent:
    """Finite Laurent polynomial in ``zeta`` with exact coefficients.

    Immutable by convention: no method mutates ``self``.
    """

    __slots__ = ("c",)

    def __init__(self, data: Optional[dict] = None):
        cc = {}
        if data:
            for m, v in data.items():
                v = _norm_scalar(v)
                if v:
                    cc[int(m)] = v
        self.c = cc

    @classmethod
    def from_int(cls, k: Scalar) -> "ZetaLaurent":
        return cls({0: k})

    @classmethod
    def monomial(cls, coef: Scalar, exp: int) -> "ZetaLaurent":
        return cls({exp: coef})

    def coeff(self, m: int) -> Scalar:
        return self.c.get(m, 0)

    def items(self):
        return sorted(self.c.items())

    def __bool__(self) -> bool:
        return bool(self.c)

    def __eq__(self, other) -> bool:
        if isinstance(other, ZetaLaurent):
            return self.c == other.c
        if isinstance(other, (int, Fraction)):
            other = _norm_scalar(other)
            if other == 0:
                return not self.c
            return self.c == {0: other}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __repr__(self) -> str:
        if not self.c:
            return "0"
        parts = []
        for m, v in self.items():
            if m == 0:
                parts.append(str(v))
            elif m == 1:
                parts.append(f"{v}*z")
            else:
                parts.append(f"{v}*z^{m}")
        return " + ".join(parts)

    def __add__(self, other) -> "ZetaLaurent":
        if isinstance(other, (int, Fraction)):
            other = ZetaLaurent({0: other})
        elif not isinstance(other, ZetaLaurent):
            return NotImplemented
        cc = dict(self.c)
        for m, v in other.c.items():
            w = cc.get(m, 0) + v
            if w:
                cc[m] = w
            else:
                cc.pop(m, None)
        out = ZetaLaurent()
        out.c = {m: _norm_scalar(v) for m, v in cc.items()}
        return out

    __radd__ = __add__

    def __neg__(self) -> "ZetaLaurent":
        out = ZetaLaurent()
        out.c = {m: -v for m, v in self.c.items()}
        return out

    def __sub__(self, other: "ZetaLaurent") -> "ZetaLaurent":
        return self + (-other)

    def __mul__(self, other) -> "ZetaLaurent":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, ZetaLaurent):
            return NotImplemented
        if not self.c or not other.c:
            return ZetaLaurent()
        cc: dict = {}
        for m1, v1 in self.c.items():
            for m2, v2 in other.c.items():
                m = m1 + m2
                w = cc.get(m, 0) + v1 * v2
                if w:
                    cc[m] = w
                else:
                    cc.pop(m, None)
        out = ZetaLaurent()
        out.c = {m: _norm_scalar(v) for m, v in cc.items()}
        return out

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "ZetaLaurent":
        c = Fraction(c)
        if not c:
            return ZetaLaurent()
        out = ZetaLaurent()
        out.c = {m: _norm_scalar(v * c) for m, v in self.c.items()}
        return out

    def bar(self) -> "ZetaLaurent":
        """Substitute zeta -> zeta^(-1)."""
        out = ZetaLaurent()
        out.c = {-m: v for m, v in self.c.items()}
        return out

    def negate_zeta(self) -> "ZetaLaurent":
        """Substitute zeta -> -zeta."""
        out = ZetaLaurent()
        out.c = {m: (v if m % 2 == 0 else -v) for m, v in self.c.items()}
        return out

    def shift(self, e: int) -> "ZetaLaurent":
        """Multiply by zeta^e."""
        if not e:
            return self
        out = ZetaLaurent()
        out.c = {m + e: v for m, v in self.c.items()}
        return out

    def zeta_sum(self) -> Scalar:
        """Evaluate at zeta = 1."""
        return _norm_scalar(sum(self.c.values(), Fraction(0)))

    def is_monomial(self) -> bool:
        return len(self.c) == 1

    def monomial_parts(self) -> tuple:
        if len(self.c) != 1:
            raise NotInvertibleError(f"not a monomial: {self!r}")
        ((m, v),) = self.c.items()
        return v, m

    def invert(self) -> "ZetaLaurent":
        v, m = self.monomial_parts()
        if v in (1, -1):
            return ZetaLaurent.monomial(v, -m)
        return ZetaLaurent.monomial(Fraction(1, 1) / Fraction(v), -m)

    def divexact_one_minus(self, sigma: int, e: int) -> "ZetaLaurent":
        """Exact division by (1 - sigma * zeta^e), sigma in {1, -1}, e != 0.

        Raises NotInvertibleError when the division is not exact.
        """
        if sigma not in (1, -1) or e == 0:
            raise ValueError("need sigma in {1,-1} and e != 0")
        if e < 0:
            # (1 - s*z^e) = -s*z^e * (1 - s*z^-e), so divide by the positive
            # form and multiply by the inverted monomial -s*z^-e.
            w = self.divexact_one_minus(sigma, -e)
            return w.scale(-sigma).shift(-e)
        if not self.c:
            return ZetaLaurent()
        lo = min(self.c)
        hi = max(self.c)
        out: dict = {}
        rem = dict(self.c)
        # w[m] = z[m] + sigma * w[m-e], ascending in m
        for m in range(lo, hi + 1):
            v = rem.get(m, 0)
            prev = out.get(m - e, 0)
            w = v + sigma * prev
            if w:
                out[m] = w
        # verify exactness: top e coefficients of w must vanish beyond hi
        for m in range(hi + 1, hi + e + 1):
            prev = out.get(m - e, 0)
            if prev:
                raise NotInvertibleError(
                    f"division by (1 - {sigma}*zeta^{e}) not exact for {self!r}")
        res = ZetaLaurent()
        res.c = {m: _norm_scalar(v) for m, v in out.items()}
        return res

    def evaluate(self, z: complex) -> complex:
        return sum(complex(v) * z**m for m, v in self.c.items())


_Z_ZERO = ZetaLaurent()
_Z_ONE = ZetaLaurent.from_int(1)


class _IntRing:
    name = "ZZ"
    zero = 0
    one = 1

    @staticmethod
    def from_int(k):
        return int(k)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def is_zero(a):
        return a == 0

    @staticmethod
    def invert(a):
        if a in (1, -1):
            return a
        raise NotInvertibleError(f"{a} is not a unit in ZZ")


class _Gf2Ring:
    name = "GF2"
    zero = 0
    one = 1

    @staticmethod
    def from_int(k):
        return int(k) & 1

    @staticmethod
    def add(a, b):
        return a ^ b

    @staticmethod
    def neg(a):
        return a

    @staticmethod
    def mul(a, b):
        return a & b

    @staticmethod
    def is_zero(a):
        return a == 0

    @staticmethod
    def invert(a):
        if a == 1:
            return 1
        raise NotInvertibleError("0 is not a unit in GF2")


class _FractionRing:
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def from_int(k):
        return Fraction(k)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def is_zero(a):
        return a == 0

    @staticmethod
    def invert(a):
        if a == 0:
            raise NotInvertibleError("0 is not a unit in QQ")
        return Fraction(1) / Fraction(a)


class _ZetaRing:
    name = "ZETA"
    zero = _Z_ZERO
    one = _Z_ONE

    @staticmethod
    def from_int(k):
        return ZetaLaurent.from_int(k)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def is_zero(a):
        return not a

    @staticmethod
    def invert(a):
        return a.invert()


ZZ = _IntRing()
GF2 = _Gf2Ring()
QQ = _FractionRing()
ZETA = _ZetaRing()

RINGS = {"ZZ": ZZ, "GF2": GF2, "QQ": QQ, "ZETA": ZETA}


class TruncatedSeries:
    """Dense power series in q, exact through q^order inclusive."""

    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring, coeffs: Sequence, order: Optional[int] = None):
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = list(coeffs[: order + 1])
        while len(cs) < order + 1:
            cs.append(ring.zero)
        self.ring = ring
        self.order = order
        self.coeffs = cs

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, ring, order: int) -> "TruncatedSeries":
        return cls(ring, [ring.zero] * (order + 1), order)

    @classmethod
    def one(cls, ring, order: int) -> "TruncatedSeries":
        s = cls.zero(ring, order)
        s.coeffs[0] = ring.one
        return s

    @classmethod
    def monomial(cls, ring, coef, exp: int, order: int) -> "TruncatedSeries":
        s = cls.zero(ring, order)
        if 0 <= exp <= order:
            s.coeffs[exp] = coef
        elif exp < 0:
            raise CoefficientRangeError("negative exponent in plain series")
        return s

    @classmethod
    def from_int_coeffs(cls, ring, ints: Sequence[int], order: int) -> "TruncatedSeries":
        return cls(ring, [ring.from_int(k) for k in ints], order)

    def copy(self) -> "TruncatedSeries":
        return TruncatedSeries(self.ring, list(self.coeffs), self.order)

    # -- access ------------------------------------------------------------

    def coeff(self, n: int):
        if n < 0:
            return self.ring.zero
        if n > self.order:
            raise CoefficientRangeError(
                f"coefficient q^{n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def valuation(self) -> Optional[int]:
        for i, c in enumerate(self.coeffs):
            if not self.ring.is_zero(c):
                return i
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.ring is other.ring and self.order == other.order
                and self.coeffs == other.coeffs)

    def __repr__(self) -> str:
        head = ", ".join(repr(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order > 5 else ""
        return f"TruncatedSeries({self.ring.name}, N={self.order}; [{head}{tail}])"

    # -- ring ops ----------------------------------------------------------

    def _check(self, other: "TruncatedSeries") -> None:
        if self.ring is not other.ring:
            raise UnirankError(
                f"ring mismatch: {self.ring.name} vs {other.ring.name}")
        if self.order != other.order:
            raise OrderMismatchError(
                f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        add = self.ring.add
        return TruncatedSeries(
            self.ring,
            [add(a, b) for a, b in zip(self.coeffs, other.coeffs)],
            self.order)

    def __neg__(self) -> "TruncatedSeries":
        neg = self.ring.neg
        return TruncatedSeries(self.ring, [neg(a) for a in self.coeffs], self.order)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        ring = self.ring
        n = self.order
        a, b = self.coeffs, other.coeffs
        out = [ring.zero] * (n + 1)
        is_zero = ring.is_zero
        mul = ring.mul
        add = ring.add
        for i, ai in enumerate(a):
            if is_zero(ai):
                continue
            for j in range(0, n + 1 - i):
                bj = b[j]
                if is_zero(bj):
                    continue
                out[i + j] = add(out[i + j], mul(ai, bj))
        return TruncatedSeries(ring, out, n)

    def scalar_mul(self, c) -> "TruncatedSeries":
        mul = self.ring.mul
        return TruncatedSeries(self.ring, [mul(c, a) for a in self.coeffs], self.order)

    def mul_binomial(self, k: int, c) -> "TruncatedSeries":
        """Multiply by (1 + c q^k), k >= 1."""
        if k < 1:
            raise ValueError("k must be >= 1")
        ring = self.ring
        out = list(self.coeffs)
        add, mul = ring.add, ring.mul
        src = self.coeffs
        for i in range(k, self.order + 1):
            out[i] = add(out[i], mul(c, src[i - k]))
        return TruncatedSeries(ring, out, self.order)

    def div_binomial(self, k: int, c) -> "TruncatedSeries":
        """Divide by (1 + c q^k), k >= 1."""
        if k < 1:
            raise ValueError("k must be >= 1")
        ring = self.ring
        out = list(self.coeffs)
        add, mul, neg = ring.add, ring.mul, ring.neg
        for i in range(k, self.order + 1):
            out[i] = add(out[i], neg(mul(c, out[i - k])))
        return TruncatedSeries(ring, out, self.order)

    def invert(self) -> "TruncatedSeries":
        ring = self.ring
        a = self.coeffs
        try:
            u = ring.invert(a[0])
        except NotInvertibleError as exc:
            raise NotInvertibleError(
                f"constant term {a[0]!r} is not a unit") from exc
        n = self.order
        out = [ring.zero] * (n + 1)
        out[0] = u
        add, mul, neg, is_zero = ring.add, ring.mul, ring.neg, ring.is_zero
        for i in range(1, n + 1):
            acc = ring.zero
            for k in range(1, i + 1):
                ak = a[k]
                if is_zero(ak):
                    continue
                acc = add(acc, mul(ak, out[i - k]))
            out[i] = neg(mul(u, acc))
        return TruncatedSeries(ring, out, n)

    def divide(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self * other.invert()

    # -- structural ops ----------------------------------------------------

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise OrderMismatchError(
                f"cannot extend truncation {self.order} to {order}")
        return TruncatedSeries(self.ring, self.coeffs[: order + 1], order)

    def shift_q(self, d: int) -> "TruncatedSeries":
        """Multiply by q^d.  Negative d requires vanishing low coefficients
        and lowers the tracked order by |d|."""
        if d == 0:
            return self
        if d > 0:
            out = [self.ring.zero] * d + self.coeffs[: self.order + 1 - d]
            return TruncatedSeries(self.ring, out, self.order)
        m = -d
        for i in range(min(m, self.order + 1)):
            if not self.ring.is_zero(self.coeffs[i]):
                raise CoefficientRangeError(
                    f"shift by q^{d} hits nonzero coefficient at q^{i}")
        if m > self.order:
            raise OrderMismatchError("shift exceeds truncation order")
        return TruncatedSeries(self.ring, self.coeffs[m:], self.order - m)

    def substitute_q_power(self, k: int, order: Optional[int] = None) -> "TruncatedSeries":
        """Substitute q -> q^k, k >= 1; result exact through ``order``."""
        if k < 1:
            raise ValueError("k must be >= 1")
        if order is None:
            order = self.order
        need = order // k
        if need > self.order:
            raise OrderMismatchError(
                f"substitution needs source order {need}, have {self.order}")
        out = [self.ring.zero] * (order + 1)
        for i in range(need + 1):
            out[i * k] = self.coeffs[i]
        return TruncatedSeries(self.ring, out, order)

    def negate_q(self) -> "TruncatedSeries":
        """Substitute q -> -q."""
        neg = self.ring.neg
        out = [c if i % 2 == 0 else neg(c) for i, c in enumerate(self.coeffs)]
        return TruncatedSeries(self.ring, out, self.order)

    # -- ZETA-specific helpers ----------------------------------------------

    def _need_zeta(self) -> None:
        if self.ring is not ZETA:
            raise UnirankError("operation requires the ZETA coefficient ring")

    def bar(self) -> "TruncatedSeries":
        """Substitute zeta -> zeta^(-1) in every coefficient."""
        self._need_zeta()
        return TruncatedSeries(ZETA, [c.bar() for c in self.coeffs], self.order)

    def negate_zeta(self) -> "TruncatedSeries":
        """Substitute zeta -> -zeta in every coefficient."""
        self._need_zeta()
        return TruncatedSeries(ZETA, [c.negate_zeta() for c in self.coeffs], self.order)

    def marginal(self) -> "TruncatedSeries":
        """Evaluate zeta = 1 coefficientwise; integer result over ZZ."""
        self._need_zeta()
        vals = []
        for c in self.coeffs:
            s = c.zeta_sum()
            if isinstance(s, Fraction):
                raise UnirankError(f"non-integral marginal coefficient {s}")
            vals.append(s)
        return TruncatedSeries(ZZ, vals, self.order)

    def zeta_coeff(self, m: int, n: int):
        self._need_zeta()
        return self.coeff(n).coeff(m)

    def iter_zeta_entries(self) -> Iterator[tuple]:
        """Yield (m, n, c) for all nonzero coefficients, sorted by (n, m)."""
        self._need_zeta()
        for n, zl in enumerate(self.coeffs):
            for m, v in zl.items():
                yield m, n, v

    # -- comparisons and diagnostics ----------------------------------------

    def first_mismatch(self, other: "TruncatedSeries",
                       through: Optional[int] = None) -> Optional[int]:
        if through is None:
            through = min(self.order, other.order)
        for n in range(through + 1):
            a = self.coeffs[n] if n <= self.order else self.ring.zero
            b = other.coeffs[n] if n <= other.order else other.ring.zero
            if a != b:
                return n
        return None

    def agree_through(self, other: "TruncatedSeries", through: int) -> bool:
        return self.first_mismatch(other, through) is None

    def assert_valuation_at_least(self, v: int) -> None:
        for i in range(min(v, self.order + 1)):
            if not self.ring.is_zero(self.coeffs[i]):
                raise UnirankError(
                    f"expected valuation >= {v}, found q^{i} coefficient {self.coeffs[i]!r}")

    # -- numerics -----------------------------------------------------------

    def evaluate(self, q0: complex, z0: Optional[complex] = None) -> complex:
        total = 0j
        for n, c in enumerate(self.coeffs):
            if self.ring is ZETA:
                if z0 is None:
                    raise ValueError("ZETA series needs z0")
                total += c.evaluate(z0) * q0**n
            else:
                total += complex(c) * q0**n
        return total


# -- monomials and Pochhammer products ---------------------------------------

# (coef, zeta_exp, q_exp) represents coef * zeta^zeta_exp * q^q_exp
Monomial = tuple


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return (_norm_scalar(Fraction(a[0]) * Fraction(b[0])), a[1] + b[1], a[2] + b[2])

def monomial_inv(a: Monomial) -> Monomial:
    return (_norm_scalar(Fraction(1) / Fraction(a[0])), -a[1], -a[2])

def monomial_neg(a: Monomial) -> Monomial:
    return (_norm_scalar(-Fraction(a[0])), a[1], a[2])


def _as_factor_list(factors) -> list:
    if isinstance(factors, tuple) and len(factors) == 3 and not isinstance(
            factors[0], tuple):
        return [factors]
    return list(factors)


def _coef_elem(ring, c: Scalar, e: int):
    """Ring element for c * zeta^e."""
    if ring is ZETA:
        return ZetaLaurent.monomial(c, e)
    if e != 0:
        raise UnirankError(f"zeta exponent {e} outside the ZETA ring")
    if ring is QQ:
        return Fraction(c)
    if isinstance(c, Fraction) and c.denominator != 1:
        raise UnirankError(f"rational coefficient {c} outside {ring.name}")
    return ring.from_int(int(c))


def pochhammer(factors, n: Optional[int], order: int, ring=ZETA,
               step: int = 1) -> TruncatedSeries:
    """q-Pochhammer product ``(a_1, ..., a_k; q^step)_n`` as a plain series.

    ``factors`` is a monomial ``(c, zeta_exp, q_exp)`` or a list of them;
    ``n`` is a non-negative int, a negative int (reciprocal convention), or
    ``None`` for the infinite product.  Factors must stay representable as a
    power series: any factor needing a negative q power raises
    SingularPochhammerError (use ``pochhammer_prefixed`` for those).
    """
    if step < 1:
        raise ValueError("step must be >= 1")
    fs = _as_factor_list(factors)
    if n is not None and n < 0:
        m = -n
        shifted = [(c, e, t - m * step) for (c, e, t) in fs]
        for (c, e, t) in shifted:
            if t < 1:
                raise SingularPochhammerError(
                    f"(a;q^{step})_{n} with a = {fs} has non-invertible factors")
        return pochhammer(shifted, m, order, ring, step).invert()
    out = TruncatedSeries.one(ring, order)
    for (c, e, t) in fs:
        rng: Iterable[int]
        if n is None:
            if t < 1:
                raise SingularPochhammerError(
                    f"infinite product needs q_exp >= 1, got {t}")
            rng = range(0, max(0, (order - t) // step + 1))
        else:
            rng = range(n)
        for i in rng:
            k = t + step * i
            if k > order:
                break
            if k < 1:
                raise SingularPochhammerError(
                    f"factor (1 - c q^{k}) not a power series; "
                    "use pochhammer_prefixed")
            out = out.mul_binomial(k, _coef_elem(ring, -Fraction(c), e))
    return out


class PrefixedSeries:
    """A ZETA-ring series with exact monomial prefix.

    Value represented:  ``scalar * i^phase * zeta^(zeta_half/2)
    * q^(q24/24) * body(zeta, q)`` with ``scalar`` rational, ``phase`` in
    {0,1} (factors of i^2 are folded into the scalar sign), ``zeta_half`` and
    ``q24`` integers, and ``body`` a TruncatedSeries over ZETA.
    """

    __slots__ = ("scalar", "phase", "zeta_half", "q24", "body")

    def __init__(self, scalar: Scalar, phase: int, zeta_half: int, q24: int,
                 body: TruncatedSeries):
        if body.ring is not ZETA:
            raise UnirankError("PrefixedSeries body must be over ZETA")
        scalar = Fraction(scalar)
        phase = phase % 4
        if phase >= 2:
            scalar = -scalar
            phase -= 2
        self.scalar = scalar
        self.phase = phase
        self.zeta_half = zeta_half
        self.q24 = q24
        self.body = body

    @classmethod
    def from_series(cls, body: TruncatedSeries) -> "PrefixedSeries":
        return cls(1, 0, 0, 0, body)

    @classmethod
    def one(cls, order: int) -> "PrefixedSeries":
        return cls(1, 0, 0, 0, TruncatedSeries.one(ZETA, order))

    def __repr__(self) -> str:
        return (f"PrefixedSeries({self.scalar} * i^{self.phase} "
                f"* zeta^({self.zeta_half}/2) * q^({self.q24}/24) * {self.body!r})")

    def is_zero(self) -> bool:
        return self.scalar == 0 or self.body.is_zero()

    def times_scalar(self, c: Scalar) -> "PrefixedSeries":
        return PrefixedSeries(self.scalar * Fraction(c), self.phase,
                              self.zeta_half, self.q24, self.body)

    def times_i_power(self, k: int) -> "PrefixedSeries":
        return PrefixedSeries(self.scalar, self.phase + k, self.zeta_half,
                              self.q24, self.body)

    def times_zeta_half(self, k: int) -> "PrefixedSeries":
        return PrefixedSeries(self.scalar, self.phase, self.zeta_half + k,
                              self.q24, self.body)

    def times_q24(self, k: int) -> "PrefixedSeries":
        return PrefixedSeries(self.scalar, self.phase, self.zeta_half,
                              self.q24 + k, self.body)

    def times_body(self, z: ZetaLaurent) -> "PrefixedSeries":
        return PrefixedSeries(self.scalar, self.phase, self.zeta_half,
                              self.q24, self.body.scalar_mul(z))

    def __mul__(self, other: "PrefixedSeries") -> "PrefixedSeries":
        if not isinstance(other, PrefixedSeries):
            return NotImplemented
        a, b = self.body, other.body
        if a.order != b.order:
            m = min(a.order, b.order)
            a, b = a.truncate(m), b.truncate(m)
        return PrefixedSeries(self.scalar * other.scalar,
                              self.phase + other.phase,
                              self.zeta_half + other.zeta_half,
                              self.q24 + other.q24, a * b)

    def mul_binomial(self, k: int, c: ZetaLaurent) -> "PrefixedSeries":
        return PrefixedSeries(self.scalar, self.phase, self.zeta_half,
                              self.q24, self.body.mul_binomial(k, c))

    def div_binomial(self, k: int, c: ZetaLaurent) -> "PrefixedSeries":
        return PrefixedSeries(self.scalar, self.phase, self.zeta_half,
                              self.q24, self.body.div_binomial(k, c))

    def invert(self) -> "PrefixedSeries":
        v = self.body.valuation()
        if v is None:
            raise NotInvertibleError("cannot invert the zero series")
        if self.scalar == 0:
            raise NotInvertibleError("cannot invert zero scalar")
        b = self.body.shift_q(-v)
        lead = b.coeffs[0]
        cu, eu = lead.monomial_parts()
        b = b.scalar_mul(ZetaLaurent.monomial(Fraction(1) / Fraction(cu), -eu))
        inv = b.invert()
        return PrefixedSeries(Fraction(1) / (self.scalar * Fraction(cu)),
                              -self.phase, -self.zeta_half - 2 * eu,
                              -self.q24 - 24 * v, inv)

    def negate(self) -> "PrefixedSeries":
        return self.times_scalar(-1)

    def _aligned_bodies(self, other: "PrefixedSeries"):
        """Push both prefixes onto the bodies over a common lattice point.

        Returns (body_self, body_other, phase, zeta_half, q24) or raises
        LatticeMismatchError.
        """
        dp = (other.phase - self.phase) % 4
        dz = other.zeta_half - self.zeta_half
        dq = other.q24 - self.q24
        if dp % 2 != 0 or dz % 2 != 0 or dq % 24 != 0:
            raise LatticeMismatchError(
                f"prefix lattices differ: d_phase={dp}, d_zeta_half={dz}, "
                f"d_q24={dq}")
        # align to self's lattice point for zeta/phase, min for q
        q24 = min(self.q24, other.q24)
        sa = self.scalar
        sb = other.scalar * (-1) ** ((dp % 4) // 2)
        za = ZetaLaurent.monomial(sa, 0)
        zb = ZetaLaurent.monomial(sb, dz // 2)
        a = self.body.scalar_mul(za).shift_q((self.q24 - q24) // 24)
        b = other.body.scalar_mul(zb).shift_q((other.q24 - q24) // 24)
        m = min(a.order, b.order)
        return a.truncate(m), b.truncate(m), self.phase, self.zeta_half, q24

    def add(self, other: "PrefixedSeries") -> "PrefixedSeries":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        a, b, phase, zh, q24 = self._aligned_bodies(other)
        return PrefixedSeries(1, phase, zh, q24, a + b)

    def __add__(self, other):
        if not isinstance(other, PrefixedSeries):
            return NotImplemented
        return self.add(other)

    def __sub__(self, other):
        if not isinstance(other, PrefixedSeries):
            return NotImplemented
        return self.add(other.negate())

    def compare(self, other: "PrefixedSeries") -> "ComparisonResult":
        if self.is_zero() and other.is_zero():
            return ComparisonResult(True, None, None, None)
        if self.is_zero() or other.is_zero():
            a, b = (self, other) if other.is_zero() else (other, self)
            n = a.body.valuation()
            m = min(a.body.coeff(n).c) if n is not None else None
            return ComparisonResult(False, "one side is zero", (m, n), None)
        try:
            a, b, _, _, q24 = self._aligned_bodies(other)
        except LatticeMismatchError as exc:
            return ComparisonResult(False, str(exc), None, None)
        through = min(a.order, b.order)
        for n in range(through + 1):
            if a.coeffs[n] != b.coeffs[n]:
                diff = a.coeffs[n] - b.coeffs[n]
                m = min(diff.c)
                return ComparisonResult(False, "coefficient mismatch",
                                        (m, n), through)
        return ComparisonResult(True, None, None, through)

    def equals(self, other: "PrefixedSeries") -> bool:
        return self.compare(other).equal

    def evaluate(self, q0: complex, z0: complex) -> complex:
        pre = (complex(self.scalar) * (1j)**self.phase
               * z0**(self.zeta_half / 2.0) * q0**(self.q24 / 24.0))
        return pre * self.body.evaluate(q0, z0)


class ComparisonResult:
    """Outcome of an exact prefixed-series comparison."""

    __slots__ = ("equal", "reason", "first_mismatch", "through")

    def __init__(self, equal: bool, reason, first_mismatch, through):
        self.equal = equal
        self.reason = reason
        self.first_mismatch = first_mismatch
        self.through = through

    def __bool__(self):
        return self.equal

    def __repr__(self):
        if self.equal:
            return f"ComparisonResult(equal through q^{self.through})"
        return (f"ComparisonResult(unequal: {self.reason}, "
                f"first mismatch {self.first_mismatch})")


def pochhammer_prefixed(factors, n: Optional[int], order: int,
                        step: int = 1) -> PrefixedSeries:
    """q-Pochhammer product as a PrefixedSeries, allowing negative q powers.

    Factors with negative exponent r are rewritten
    ``(1 - c zeta^e q^r) = (-c zeta^e q^r) (1 - c^{-1} zeta^{-e} q^{-r})``
    and the monomial moves into the prefix.  Exponent-zero factors
    ``(1 - c zeta^e)`` are multiplied into the body as constants.
    """
    if step < 1:
        raise ValueError("step must be >= 1")
    fs = _as_factor_list(factors)
    if n is not None and n < 0:
        m = -n
        shifted = [(c, e, t - m * step) for (c, e, t) in fs]
        p = pochhammer_prefixed(shifted, m, order, step)
        try:
            return p.invert()
        except NotInvertibleError as exc:
            raise SingularPochhammerError(
                f"(a;q^{step})_{n} with a = {fs}: {exc}") from exc
    scalar = Fraction(1)
    zh = 0
    q24 = 0
    body = TruncatedSeries.one(ZETA, order)
    for (c, e, t) in fs:
        cf = Fraction(c)
        if n is None:
            if t < 1:
                raise SingularPochhammerError(
                    f"infinite product needs q_exp >= 1, got {t}")
            rng: Iterable[int] = range(0, max(0, (order - t) // step + 1))
        else:
            rng = range(n)
        for i in rng:
            r = t + step * i
            if r > order:
                break
            if r >= 1:
                body = body.mul_binomial(r, ZetaLaurent.monomial(-cf, e))
            elif r == 0:
                body = body.scalar_mul(_Z_ONE - ZetaLaurent.monomial(cf, e))
            else:
                scalar *= -cf
                zh += 2 * e
                q24 += 24 * r
                body = body.mul_binomial(-r, ZetaLaurent.monomial(-1 / cf, -e))
    return PrefixedSeries(scalar, 0, zh, q24, body)


__all__ = [
    "UnirankError", "OrderMismatchError", "NotInvertibleError",
    "CoefficientRangeError", "SingularPochhammerError", "LatticeMismatchError",
    "ZetaLaurent", "TruncatedSeries", "PrefixedSeries", "ComparisonResult",
    "ZZ", "GF2", "QQ", "ZETA", "RINGS",
    "pochhammer", "pochhammer_prefixed",
    "monomial_mul", "monomial_inv", "monomial_neg",
]
