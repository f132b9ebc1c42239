"""Parity of the even-peak left-heavy counts, by three independent routes.

The count sequence u2(n) is the coefficient sequence of the even-peak
series after the sign flip q -> -q; see ``gflib.series_U2_negq``.  Its
parity can be computed from the defining sum reduced mod 2, from a double
indefinite theta sum, or arithmetically from representation counts of the
quadratic form u^2 - 6 v^2.  All three agree, and the odd positions are
characterized by a clean factorization criterion on 8n - 1.

GF(2) series are packed into Python integers, bit n holding the
coefficient of q^n.
"""

from math import isqrt

from .series import UnirankError

__all__ = [
    "count_parity_bits", "theta_parity_bits", "norm_parity_bits",
    "rep_count", "ideal_count", "norm_parity", "odd_criterion",
    "parity_agreement",
]


def _mask(limit: int) -> int:
    return (1 << (limit + 1)) - 1


def _times_binomial(bits: int, k: int, limit: int) -> int:
    """Multiply a packed GF(2) series by 1 + q^k."""
    return (bits ^ (bits << k)) & _mask(limit)


def _divide_binomial(bits: int, k: int, limit: int) -> int:
    """Multiply a packed GF(2) series by 1/(1 - q^k).

    Over GF(2) the inverse is the lacunary geometric series, and
    (1 + q^k)(1 + q^{2k})(1 + q^{4k})... telescopes to it.
    """
    if k < 1:
        raise UnirankError("binomial divisor needs q power >= 1")
    step = k
    while step <= limit:
        bits ^= bits << step
        step <<= 1
    return bits & _mask(limit)


def count_parity_bits(limit: int) -> int:
    """Packed parities of the counts, from the defining sum mod 2.

    Term n of the sum is (-q^2;q^2)_{n-1}^2 q^{2n} / (q;q^2)_n; mod 2 the
    squared factor collapses to 1 + q^{4n} per step.
    """
    if limit < 0:
        raise UnirankError("limit must be >= 0")
    acc = 0
    term = _divide_binomial((1 << 2) & _mask(limit), 1, limit)
    n = 1
    while 2 * n <= limit:
        acc ^= term
        term = _times_binomial(term, 4 * n, limit)
        term = (term << 2) & _mask(limit)
        term = _divide_binomial(term, 2 * n + 1, limit)
        n += 1
    return acc


def theta_parity_bits(limit: int) -> int:
    """Packed parities from the double sum
    sum_{n >= 0} sum_{0 <= j <= n} (1 + q^{2j+1}) q^{3n^2+6n-2j^2-3j+2}."""
    if limit < 0:
        raise UnirankError("limit must be >= 0")
    acc = 0
    n = 0
    while n * n + 3 * n + 2 <= limit:
        base = 3 * n * n + 6 * n + 2
        for j in range(n + 1):
            e = base - 2 * j * j - 3 * j
            if e <= limit:
                acc ^= 1 << e
            if e + 2 * j + 1 <= limit:
                acc ^= 1 << (e + 2 * j + 1)
        n += 1
    return acc


def rep_count(m: int) -> int:
    """Number of (u, v) with u^2 - 6 v^2 = m, u > 0, -u/3 < v <= u/3.

    Each equivalence class of solutions under the unit 5 + 2 sqrt(6)
    contains exactly one such pair, so this counts classes.
    """
    if m < 1:
        raise UnirankError("m must be >= 1")
    cnt = 0
    v_top = isqrt(m // 3) + 1
    for v in range(-v_top, v_top + 1):
        s = m + 6 * v * v
        u = isqrt(s)
        if u * u != s or u == 0:
            continue
        if 3 * v > u or -3 * v >= u:
            continue
        cnt += 1
    return cnt


def _factorize(m: int) -> dict:
    out = {}
    for p in (2, 3):
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
    p = 5
    while p * p <= m:
        for q in (p, p + 2):
            while m % q == 0:
                out[q] = out.get(q, 0) + 1
                m //= q
        p += 6
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def ideal_count(m: int) -> int:
    """Class count of u^2 - 6 v^2 = m by the multiplicative formula.

    Write m = 2^a 3^b prod p^e prod r^f prod s^g with p = +-7, +-11,
    r = 1, 19, and s = 5, 23 mod 24.  The count is 0 when some e is odd
    or a + sum g is odd, and prod (f+1) prod (g+1) otherwise.
    """
    if m < 1:
        raise UnirankError("m must be >= 1")
    factors = _factorize(m)
    two_exp = factors.pop(2, 0)
    factors.pop(3, 0)
    out = 1
    g_sum = 0
    for p, e in factors.items():
        cls = p % 24
        if cls in (1, 19):
            out *= e + 1
        elif cls in (5, 23):
            out *= e + 1
            g_sum += e
        elif e % 2:
            return 0
    if (two_exp + g_sum) % 2:
        return 0
    return out


def norm_parity(n: int) -> int:
    """Parity of count n via half the class count of norm 16 n - 2."""
    if n < 1:
        raise UnirankError("n must be >= 1")
    pairs = ideal_count(16 * n - 2)
    if pairs % 2:
        raise UnirankError(f"odd class count {pairs} at norm {16 * n - 2}")
    return (pairs // 2) & 1


def norm_parity_bits(limit: int) -> int:
    """Packed ``norm_parity`` values for 1 <= n <= limit (bit 0 unused)."""
    acc = 0
    for n in range(1, limit + 1):
        acc |= norm_parity(n) << n
    return acc


def odd_criterion(n: int) -> bool:
    """True when 8n - 1 = 3^b l^2 p^c with p a prime that is 5 or 23
    mod 24, p not dividing l, and c = 1 mod 4."""
    if n < 1:
        raise UnirankError("n must be >= 1")
    factors = _factorize(8 * n - 1)
    factors.pop(3, 0)
    odd_part = [(p, e) for p, e in factors.items() if e % 2]
    if len(odd_part) != 1:
        return False
    p, c = odd_part[0]
    return p % 24 in (5, 23) and c % 4 == 1


def parity_agreement(limit: int) -> dict:
    """Cross-check all parity routes for 1 <= n <= limit.

    Returns a dict with the three packed bit rows and the list of
    positions where any pair of routes disagrees (empty on success).
    """
    rows = {
        "count": count_parity_bits(limit),
        "theta": theta_parity_bits(limit),
        "norm": norm_parity_bits(limit),
    }
    bad = []
    for n in range(1, limit + 1):
        bits = {(rows["count"] >> n) & 1, (rows["theta"] >> n) & 1,
                (rows["norm"] >> n) & 1, int(odd_criterion(n))}
        if len(bits) != 1:
            bad.append(n)
    rows["disagreements"] = bad
    return rows
