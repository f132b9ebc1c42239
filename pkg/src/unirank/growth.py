"""Exact count sequences, growth checks, and asymptotic probes.

Counts are computed with dense big-integer coefficient lists rather than
the ring-generic series classes; at length 2000 the exact values overflow
machine words but stay cheap for Python integers.  The asymptotic main
terms use only float arithmetic, and the limit probes evaluate convergent
q-sums at q = exp(-w) for small w.
"""

import math

from .series import UnirankError

__all__ = [
    "COUNT_KEYS", "exact_counts", "partial_sum_terms", "group_identities",
    "nonneg_prefix_ok", "monotonicity_check", "asymptotic_main",
    "tauberian_main", "ratio_report", "ratios_strictly_improving",
    "eta_asymptotic_probe", "eta_product_probe", "lambert_limit_probe",
    "lambert_split_check",
]

COUNT_KEYS = ("p", "u", "u2bar", "u2")
_LIMIT_CAP = 5000


def _check_limit(limit: int) -> None:
    if not 0 <= limit <= _LIMIT_CAP:
        raise UnirankError(f"limit must be between 0 and {_LIMIT_CAP}")


def _times_binomial(c, k, sign):
    """In place multiply by 1 + sign q^k."""
    for i in range(len(c) - 1, k - 1, -1):
        c[i] += sign * c[i - k]


def _divide_binomial(c, k, sign):
    """In place multiply by 1/(1 + sign q^k)."""
    for i in range(k, len(c)):
        c[i] -= sign * c[i - k]


def _shift(c, k):
    if k <= 0:
        return c
    return [0] * k + c[:len(c) - k]


def _partition_counts(limit):
    out = [0] * (limit + 1)
    out[0] = 1
    for n in range(1, limit + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * out[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * out[n - g2]
            k += 1
        out[n] = total
    return out


def _strongly_unimodal_counts(limit):
    # sum over k >= 1 of q^k (-q;q)_{k-1}^2
    acc = [0] * (limit + 1)
    term = [0] * (limit + 1)
    if limit >= 1:
        term[1] = 1
    k = 1
    while k <= limit and any(term):
        for i in range(limit + 1):
            acc[i] += term[i]
        term = _shift(term, 1)
        _times_binomial(term, k, 1)
        _times_binomial(term, k, 1)
        k += 1
    return acc


def partial_sum_terms(limit, count=None):
    """The grouped summands F_n of (1 - q) times the even-peak overlined
    series at the flipped sign: F_n = (-q^2;q^2)_{n-1} q^{2n}
    / ((1 + q^{2n}) (q^3;q^2)_{n-1}).

    Returns the list [F_1, F_2, ...] as coefficient lists through q^limit,
    stopping after ``count`` terms or once the terms vanish.
    """
    _check_limit(limit)
    out = []
    term = [0] * (limit + 1)
    if limit >= 2:
        term[2] = 1
        _divide_binomial(term, 2, 1)
    n = 1
    while any(term) and (count is None or len(out) < count):
        out.append(term[:])
        term = _shift(term, 2)
        _times_binomial(term, 2 * n, 1)
        _times_binomial(term, 2 * n, 1)
        _divide_binomial(term, 2 * n + 1, -1)
        _divide_binomial(term, 2 * n + 2, 1)
        n += 1
    return out


def _u2bar_counts(limit):
    acc = [0] * (limit + 1)
    for term in partial_sum_terms(limit):
        for i in range(limit + 1):
            acc[i] += term[i]
    _divide_binomial(acc, 1, -1)
    return acc


def _u2_counts(limit):
    acc = [0] * (limit + 1)
    term = [0] * (limit + 1)
    if limit >= 2:
        term[2] = 1
        _divide_binomial(term, 1, -1)
    n = 1
    while any(term):
        for i in range(limit + 1):
            acc[i] += term[i]
        term = _shift(term, 2)
        _times_binomial(term, 2 * n, 1)
        _times_binomial(term, 2 * n, 1)
        _divide_binomial(term, 2 * n + 1, -1)
        n += 1
    return acc


def exact_counts(key: str, limit: int):
    """Exact count sequence through index ``limit`` for one of the keys
    'p' (partitions), 'u' (strongly unimodal), 'u2bar' (even-peak
    overlined, sign-flipped), 'u2' (even-peak plain, sign-flipped)."""
    _check_limit(limit)
    if key == "p":
        return _partition_counts(limit)
    if key == "u":
        return _strongly_unimodal_counts(limit)
    if key == "u2bar":
        return _u2bar_counts(limit)
    if key == "u2":
        return _u2_counts(limit)
    raise UnirankError(f"unknown count key {key!r}; choices: {COUNT_KEYS}")


def _rational(limit, num_pairs, den_pairs, shift=0, extra=None):
    """Coefficients of q^shift prod(1 + s q^k)[num] / prod(1 + s q^k)[den].

    ``extra`` adds a plain polynomial given as {exponent: coefficient}.
    """
    c = [0] * (limit + 1)
    if shift <= limit:
        c[shift] = 1
    for k, s in num_pairs:
        _times_binomial(c, k, s)
    for k, s in den_pairs:
        _divide_binomial(c, k, s)
    if extra:
        for e, v in extra.items():
            if e <= limit:
                c[e] += v
    return c


def group_identities(limit: int):
    """Exact checks behind the term-grouping monotonicity argument.

    Returns a dict of booleans:
      * ``f13``: F_1 + F_3 equals its closed rational form,
      * ``f24``: F_2 + F_4 equals its closed rational form,
      * ``f24_tail``: the further regrouping of the F_2 + F_4 bound into
        two manifestly nonnegative pieces,
      * ``g_nonneg``: the auxiliary G_n series have nonnegative
        coefficients for n = 3..8,
      * ``f_nonneg``: F_n has nonnegative coefficients for n = 3..8,
      * ``f_head_nonneg``: F_1 + F_2 + F_3 + F_4 has nonnegative
        coefficients.
    """
    _check_limit(limit)
    terms = partial_sum_terms(limit, count=8)
    while len(terms) < 8:
        terms.append([0] * (limit + 1))
    f1, f2, f3, f4 = terms[0], terms[1], terms[2], terms[3]

    lhs13 = [a + b for a, b in zip(f1, f3)]
    # (1 + q^4 + q^9) q^2 / (1 - q^12)
    part_a = _rational(limit, [], [(12, -1)], 2)
    part_a = [x + y + z for x, y, z in zip(
        part_a, _rational(limit, [], [(12, -1)], 6),
        _rational(limit, [], [(12, -1)], 11))]
    # (q^4 + q^7 + 2 q^8 + 2 q^11 + q^15 + q^19) q^2 / ((1-q^5)(1-q^12))
    poly = {4: 1, 7: 1, 8: 2, 11: 2, 15: 1, 19: 1}
    part_b = [0] * (limit + 1)
    for e, v in poly.items():
        base = _rational(limit, [], [(5, -1), (12, -1)], e + 2)
        for i in range(limit + 1):
            part_b[i] += v * base[i]
    rhs13 = [a + b for a, b in zip(part_a, part_b)]
    if limit >= 4:
        rhs13[4] -= 1
    ok13 = lhs13 == rhs13

    lhs24 = [a + b for a, b in zip(f2, f4)]
    part_c = _rational(limit, [(2, 1)], [(3, -1), (4, 1)], 4)
    part_d = _rational(limit, [(2, 1), (4, 1), (6, 1)],
                       [(3, -1), (5, -1), (7, -1), (8, 1)], 8)
    rhs24 = [a + b for a, b in zip(part_c, part_d)]
    ok24 = lhs24 == rhs24

    # dropping the (1 - q^7) denominator keeps the remainder nonnegative,
    # and the result regroups into two nonnegative closed forms
    lhs_tail = [a + b for a, b in zip(
        _rational(limit, [(2, 1)], [(3, -1), (4, 1)], 4),
        _rational(limit, [(2, 1), (4, 1), (6, 1)],
                  [(3, -1), (5, -1), (8, 1)], 8))]
    poly_e = {0: 1, 1: 2, 2: 1, 4: 1, 7: 1, 8: 1, 10: 1}
    poly_f = {0: 1, 2: 1, 8: 2, 10: 1, 13: 2, 19: 1}
    tail = [0] * (limit + 1)
    for e, v in poly_e.items():
        base = _rational(limit, [], [(5, -1), (16, -1)], e + 13)
        for i in range(limit + 1):
            tail[i] += v * base[i]
    for e, v in poly_f.items():
        base = _rational(limit, [], [(3, -1), (16, -1)], e + 4)
        for i in range(limit + 1):
            tail[i] += v * base[i]
    ok_tail = lhs_tail == tail

    g_ok = True
    g3 = _rational(limit, [], [(3, -1), (6, 1)], 6)
    g_ok &= all(x >= 0 for x in g3)
    for n in range(4, 9):
        if 2 * n > limit:
            break
        gn = _rational(limit, [], [(3, -1), (2 * n - 3, -1), (2 * n, 1)],
                       2 * n)
        g_ok &= all(x >= 0 for x in gn)

    f_ok = all(all(x >= 0 for x in terms[n]) for n in range(2, 8))
    head = [a + b + c + d for a, b, c, d in zip(f1, f2, f3, f4)]
    head_ok = all(x >= 0 for x in head)

    return {"f13": ok13, "f24": ok24, "f24_tail": ok_tail,
            "g_nonneg": g_ok, "f_nonneg": f_ok, "f_head_nonneg": head_ok}


def nonneg_prefix_ok(limit: int) -> bool:
    """True when (1 - q) times the sign-flipped even-peak overlined series
    has nonnegative coefficients through q^limit, which forces the count
    sequence to be monotone."""
    _check_limit(limit)
    counts = _u2bar_counts(limit)
    diffs = [counts[0]] + [counts[i] - counts[i - 1]
                           for i in range(1, limit + 1)]
    return all(x >= 0 for x in diffs)


def monotonicity_check(key: str, limit: int):
    """First index n with count(n + 1) < count(n), or None."""
    counts = exact_counts(key, limit)
    for n in range(limit):
        if counts[n + 1] < counts[n]:
            return n
    return None


def asymptotic_main(key: str, n: int) -> float:
    """Leading-order growth prediction for count key at index n."""
    if n < 1:
        raise UnirankError("n must be >= 1")
    if key == "p":
        return math.exp(math.pi * math.sqrt(2 * n / 3)) \
            / (4 * math.sqrt(3) * n)
    if key == "u":
        return math.exp(math.pi * math.sqrt(2 * n / 3)) \
            / (8 * 6 ** 0.25 * n ** 0.75)
    if key == "u2bar":
        return math.exp(math.pi * math.sqrt(n / 2)) \
            / (8 * (2 * n) ** 0.75)
    if key == "u2":
        return math.exp(math.pi * math.sqrt(2 * n / 3)) \
            / (4 * math.sqrt(3) * (6 * n) ** 0.75)
    raise UnirankError(f"unknown count key {key!r}; choices: {COUNT_KEYS}")


def tauberian_main(lam: float, alpha: float, a_const: float,
                   n: int) -> float:
    """Coefficient main term implied by f(e^-t) ~ lam t^alpha e^{A/t}:
    a(n) ~ (lam / (2 sqrt(pi))) A^{alpha/2 + 1/4} n^{-alpha/2 - 3/4}
    e^{2 sqrt(A n)}."""
    if n < 1:
        raise UnirankError("n must be >= 1")
    return (lam / (2 * math.sqrt(math.pi))
            * a_const ** (alpha / 2 + 0.25)
            * n ** (-alpha / 2 - 0.75)
            * math.exp(2 * math.sqrt(a_const * n)))


def ratio_report(key: str, checkpoints=(500, 1000, 2000)):
    """Exact count over predicted main term at each checkpoint."""
    top = max(checkpoints)
    counts = exact_counts(key, top)
    out = []
    for n in checkpoints:
        ratio = counts[n] / asymptotic_main(key, n)
        out.append((n, ratio))
    return out


def ratios_strictly_improving(key: str, checkpoints=(500, 1000, 2000)):
    """True when |ratio - 1| strictly decreases along the checkpoints."""
    gaps = [abs(r - 1.0) for _, r in ratio_report(key, checkpoints)]
    return all(a > b for a, b in zip(gaps, gaps[1:]))


def _qpoch_float(q, step, start):
    """prod_{j >= 0} (1 + start * q^{step j}) cut once factors reach 1."""
    val = 1.0
    factor = start
    while abs(factor) > 1e-17:
        val *= 1.0 + factor
        factor *= q ** step
        if val == 0.0:
            break
    return val


def eta_asymptotic_probe(w_list):
    """Ratio of (e^-w; e^-w)_inf to sqrt(2 pi / w) e^{-pi^2/(6 w)} at each
    probe point; the ratio tends to 1 as w -> 0.

    Products are truncated once the next factor is within 1e-17 of 1,
    which perturbs the log of the product by less than
    2e-17 / (1 - e^-w), far below double-precision roundoff here.
    """
    return [(w, eta_product_probe(w)["dedekind"]) for w in w_list]


def eta_product_probe(w: float):
    """Ratios of three infinite products to their leading asymptotics at
    q = exp(-w); all three tend to 1 as w -> 0.

    The products are (q;q)_inf against sqrt(2 pi / w) e^{-pi^2/(6w)},
    4 (q^4;q^4)_inf^2 / ((q;q)_inf (q^2;q^2)_inf) against
    sqrt(2) e^{pi^2/(6w)}, and (q;q)_inf^5 / (q^2;q^2)_inf^4 against
    4 sqrt(2 pi / w) e^{-pi^2/(2w)}."""
    if w <= 0:
        raise UnirankError("w must be positive")
    q = math.exp(-w)
    e1 = _qpoch_float(q, 1, -q)
    e2 = _qpoch_float(q, 2, -q * q)
    e4 = _qpoch_float(q, 4, -q ** 4)
    pi2 = math.pi * math.pi
    r_dedekind = e1 / (math.sqrt(2 * math.pi / w) * math.exp(-pi2 / (6 * w)))
    r_plus = (4 * e4 * e4 / (e1 * e2)) \
        / (math.sqrt(2) * math.exp(pi2 / (6 * w)))
    r_minus = (e1 ** 5 / e2 ** 4) \
        / (4 * math.sqrt(2 * math.pi / w) * math.exp(-pi2 / (2 * w)))
    return {"dedekind": r_dedekind, "plus": r_plus, "minus": r_minus}


def lambert_limit_probe(w: float, terms: int = 4000):
    """Values at q = exp(-w) of the four convergent sums whose w -> 0
    limits drive the growth constants.

    Returns a dict with keys 'half' (limit 1/2), 'quarter' (limit 1/4),
    'one' (limit 1), and 'four-thirds' (limit 4/3).
    """
    if w <= 0:
        raise UnirankError("w must be positive")
    q = math.exp(-w)

    # sum (q^2;q^2)_n (-1)^n q^n / (-q;q^2)_{n+1}
    total_half = 0.0
    num = 1.0
    den = 1.0 + q
    sign = 1.0
    qn = 1.0
    for n in range(terms):
        total_half += num * sign * qn / den
        num *= 1.0 - q ** (2 * n + 2)
        den *= 1.0 + q ** (2 * n + 3)
        sign = -sign
        qn *= q
        if num * qn / den < 1e-16:
            break

    # sum (q^2;q^4)_n (-1)^n q^{2n} / (-q;q^2)_{n+1}^2
    total_quarter = 0.0
    num = 1.0
    den = (1.0 + q) ** 2
    sign = 1.0
    qn = 1.0
    for n in range(terms):
        total_quarter += num * sign * qn / den
        num *= 1.0 - q ** (4 * n + 2)
        den *= (1.0 + q ** (2 * n + 3)) ** 2
        sign = -sign
        qn *= q * q
        if num * qn / den < 1e-16:
            break

    # sum (q;q^2)_n (-1)^n q^{n^2} / (-q^2;q^2)_n^2
    total_one = 0.0
    num = 1.0
    den = 1.0
    sign = 1.0
    for n in range(terms):
        part = num * sign * q ** (n * n) / den
        total_one += part
        num *= 1.0 - q ** (2 * n + 1)
        den *= (1.0 + q ** (2 * n + 2)) ** 2
        sign = -sign
        if q ** ((n + 1) * (n + 1)) < 1e-18:
            break

    # sum q^{2n^2} / ((-q;q^2)_n (-q^3;q^2)_n)
    total_ft = 0.0
    den = 1.0
    for n in range(terms):
        total_ft += q ** (2 * n * n) / den
        den *= (1.0 + q ** (2 * n + 1)) * (1.0 + q ** (2 * n + 3))
        if q ** (2 * (n + 1) * (n + 1)) < 1e-18:
            break

    return {"half": total_half, "quarter": total_quarter,
            "one": total_one, "four-thirds": total_ft}


def lambert_split_check(order: int = 60) -> bool:
    """Exact check of the two-sum split of the sign-flipped even-peak
    overlined series:
    q (-q^2;q^2)_inf / (q;q^2)_inf * S1 - q * S2 with
    S1 = sum (q^2;q^2)_n (-1)^n q^n / (-q;q^2)_{n+1} and
    S2 = sum (q^2;q^4)_n (-1)^n q^{2n} / (-q;q^2)_{n+1}^2."""
    from .series import ZZ, TruncatedSeries, pochhammer

    _check_limit(order)
    s1 = TruncatedSeries.zero(ZZ, order)
    n = 0
    while n <= order:
        t = pochhammer([(1, 0, 2)], n, order, ring=ZZ, step=2)
        t = t * pochhammer([(-1, 0, 1)], n + 1, order, ring=ZZ,
                           step=2).invert()
        t = t.shift_q(n)
        s1 = s1 + t if n % 2 == 0 else s1 - t
        n += 1
    s2 = TruncatedSeries.zero(ZZ, order)
    n = 0
    while 2 * n <= order:
        t = pochhammer([(1, 0, 2)], n, order, ring=ZZ, step=4)
        d = pochhammer([(-1, 0, 1)], n + 1, order, ring=ZZ, step=2)
        t = t * (d * d).invert()
        t = t.shift_q(2 * n)
        s2 = s2 + t if n % 2 == 0 else s2 - t
        n += 1
    pref = pochhammer([(-1, 0, 2)], None, order, ring=ZZ, step=2) \
        * pochhammer([(1, 0, 1)], None, order, ring=ZZ, step=2).invert()
    rhs = (pref * s1).shift_q(1) - s2.shift_q(1)
    counts = _u2bar_counts(order)
    return rhs.coeffs == counts
