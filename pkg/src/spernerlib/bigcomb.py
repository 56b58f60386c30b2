"""Exact big-integer combinatorics and integer Galois adjoints.

Python ints carry everything; no floating point appears anywhere in this
module. The left adjoint of an increasing unbounded f: N0 -> N0 is
f*(k) = min { n : k <= f(n) }, characterized by the equivalence
k <= f(n) <=> f*(k) <= n.

Key choices:
  * binomials via math.comb (exact multiplicative evaluation, no factorial
    tables);
  * left adjoints by exponential galloping plus binary search, so f is
    evaluated O(log f*(k)) times even when f*(k) has thousands of digits'
    worth of inputs;
  * rendering helpers (`sci_approx`, `fixed_ratio`) round half to even on
    exact integer arithmetic.
"""

from __future__ import annotations

import math
from typing import Callable

from .errors import InputError, ResourceLimitError


def binom(n: int, k: int) -> int:
    """C(n, k), defined as 0 unless 0 <= k <= n."""
    if 0 <= k <= n:
        return math.comb(n, k)
    return 0


def central_binom(n: int) -> int:
    """C(n, floor(n/2)): the size of a largest antichain of subsets of [n]."""
    if n < 0:
        raise InputError(f"central_binom needs n >= 0, got {n}")
    return math.comb(n, n // 2)


def left_adjoint(f: Callable[[int], int], k: int, *, max_doublings: int = 64) -> int:
    """Least n >= 0 with f(n) >= k, for f increasing and unbounded on N0.

    Brackets the answer by galloping n = 1, 2, 4, ... then bisects.
    max_doublings bounds the galloping phase; a bounded f (violating the
    precondition) raises ResourceLimitError instead of looping forever.
    """
    if k < 0:
        raise InputError(f"left adjoint is defined for k >= 0, got {k}")
    if f(0) >= k:
        return 0
    lo, hi = 0, 1  # invariant: f(lo) < k
    doublings = 0
    while f(hi) < k:
        lo, hi = hi, hi * 2
        doublings += 1
        if doublings > max_doublings:
            raise ResourceLimitError(
                f"f({hi // 2}) is still below {k} after {max_doublings} "
                "doublings; f does not look unbounded")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if f(mid) < k:
            lo = mid
        else:
            hi = mid
    return hi


def central_binom_adjoint(k: int) -> int:
    """Least n >= 0 whose central binomial coefficient reaches k (k >= 1).

    The value at k = 1 is 0, since C(0, 0) = 1.
    """
    if k < 1:
        raise InputError(f"central_binom_adjoint needs k >= 1, got {k}")
    return left_adjoint(central_binom, k)


# --- exact decimal rendering -------------------------------------------------

def round_div(num: int, den: int) -> int:
    """num/den rounded to the nearest integer, ties to even (num >= 0, den > 0)."""
    if den <= 0 or num < 0:
        raise InputError("round_div needs num >= 0 and den > 0")
    q, r = divmod(num, den)
    if 2 * r > den or (2 * r == den and q & 1):
        q += 1
    return q


def sci_digits(value: int, sig: int) -> tuple[int, int]:
    """Round to `sig` significant digits: (mantissa, exponent) with
    10**(sig-1) <= mantissa < 10**sig and value ~= mantissa * 10**(exponent-sig+1).
    """
    if value <= 0:
        raise InputError("sci_digits needs a positive value")
    if sig < 1:
        raise InputError("sci_digits needs sig >= 1")
    digits = len(str(value))
    if digits > sig:
        m = round_div(value, 10 ** (digits - sig))
    else:
        m = value * 10 ** (sig - digits)
    if m >= 10 ** sig:  # rounding carried into a new digit
        m //= 10
        digits += 1
    return m, digits - 1


def sci_approx(value: int, sig: int = 7) -> str:
    """Positive integer in scientific notation with `sig` significant digits.

    Example: sci_approx(2136950..., 4) == "2.137e606".
    """
    m, exp = sci_digits(value, sig)
    s = str(m)
    mant = s if sig == 1 else s[0] + "." + s[1:]
    return f"{mant}e{exp}"


def fixed_ratio(num: int, den: int, places: int) -> str:
    """num/den as a decimal string with `places` digits after the point.

    Exact integer arithmetic, ties to even.
    """
    if den <= 0:
        raise InputError("fixed_ratio needs den > 0")
    if places < 0:
        raise InputError("fixed_ratio needs places >= 0")
    scaled = round_div(num * 10 ** places, den)
    if places == 0:
        return str(scaled)
    s = str(scaled).rjust(places + 1, "0")
    return s[:-places] + "." + s[-places:]


def parse_count(text: str) -> int:
    """Parse a positive integer given plainly ("2023") or as <mant>e<exp>.

    The scientific form must be exact: "3e606" is 3 * 10**606, "2.5e3" is
    2500, but "2.5e0" is rejected (not an integer).
    """
    text = text.strip()
    if not text:
        raise InputError("empty count")
    neg = text.startswith("-")
    body = text[1:] if neg else text
    if "e" in body or "E" in body:
        mant_s, _, exp_s = body.replace("E", "e").partition("e")
        try:
            exp = int(exp_s)
        except ValueError:
            raise InputError(f"bad exponent in {text!r}") from None
        int_s, _, frac_s = mant_s.partition(".")
        exp -= len(frac_s)
        try:
            mant = int(int_s + frac_s)
        except ValueError:
            raise InputError(f"bad mantissa in {text!r}") from None
        if exp < 0:
            scale = 10 ** (-exp)
            if mant % scale:
                raise InputError(f"{text!r} is not an integer")
            value = mant // scale
        else:
            value = mant * 10 ** exp
    else:
        try:
            value = int(body)
        except ValueError:
            raise InputError(f"cannot parse count {text!r}") from None
    if neg:
        value = -value
    return value
