"""Closed-form lower and upper estimates for the largest pairwise-unrelated
families of V- and W-shaped copies in the subset lattice of [n].

The W pattern is one bottom under three incomparable tops; V has two tops.
Neither pattern is bounded or length-matching, so no exact formula applies;
these estimates bracket the true count and their integer left adjoints
bracket the adjoint quantity.

All functions are exact integer computations. The lower estimates count an
explicit eligible-block construction (reproduced in witness.py, whose
output sizes must agree with these sums); the upper estimates come from
permutation-counting arguments:

  upper_w(n) = floor(n * C(n-1, floor((n-1)/2)) / (3n - 2 - 2*floor(n/2)))
  lower_w(n) = sum over active block i < floor(n/3), j 2-element blocks:
               3^j * C(i, j) * C(n-3i-3, h+j-3i),  h as below
  lower_v(n) = sum over i <= floor(q/2) of C(n-2-2i, q-2i), q = floor((n-1)/2)
  upper_v(n) = floor((4n-4a-2) * C(n-2, floor((n-2)/2)) / (2n-a-1)), a = floor(n/2)

with h = floor((n-3)/2) for n in {3, 5, 7} (a one-lower shift is needed for
those three sizes) and h = floor((n-1)/2) otherwise.

The inner sum of lower_w is evaluated with running one-step binomial
updates so that graphs into the thousands stay around a second.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bigcomb import binom, central_binom, fixed_ratio, left_adjoint
from .errors import InputError


def w_bottom_size(n: int) -> int:
    """Constant bottom-subset size used by the W block construction.

    One lower for n in {3, 5, 7}: at those sizes the default choice starves
    the later active blocks and the smaller layer counts strictly more.
    """
    return (n - 3) // 2 if n in (3, 5, 7) else (n - 1) // 2


@lru_cache(maxsize=None)
def lower_w(n: int) -> int:
    """Lower estimate for the W pattern; counts the block construction."""
    if n < 1:
        raise InputError(f"lower_w needs n >= 1, got {n}")
    h = w_bottom_size(n)
    total = 0
    for i in range(n // 3):
        avail = n - 3 * i - 3   # ground elements past the first i+1 blocks
        pow3 = 1                # 3^j
        cplace = 1              # C(i, j)
        ctail = 0               # C(avail, h + j - 3i), stepped in j
        for j in range(i + 1):
            low = h - 3 * i + j
            if low > avail:
                break
            if low == 0:
                ctail = 1
            elif low > 0:
                if j == 0:
                    ctail = binom(avail, low)
                else:
                    ctail = ctail * (avail - low + 1) // low
            if low >= 0:
                total += pow3 * cplace * ctail
            pow3 *= 3
            cplace = cplace * (i - j) // (j + 1)
    return total


@lru_cache(maxsize=None)
def upper_w(n: int) -> int:
    """Upper estimate for the W pattern (permutation-count quotient)."""
    if n < 1:
        raise InputError(f"upper_w needs n >= 1, got {n}")
    return n * central_binom(n - 1) // (3 * n - 2 - 2 * (n // 2))


@lru_cache(maxsize=None)
def lower_v(n: int) -> int:
    """Lower estimate for the V pattern; counts the two-block construction."""
    if n < 2:
        raise InputError(f"lower_v needs n >= 2, got {n}")
    q = (n - 1) // 2
    return sum(binom(n - 2 - 2 * i, q - 2 * i) for i in range(q // 2 + 1))


@lru_cache(maxsize=None)
def upper_v(n: int) -> int:
    """Upper estimate for the V pattern (permutation-count quotient)."""
    if n < 2:
        raise InputError(f"upper_v needs n >= 2, got {n}")
    a = n // 2
    return (4 * n - 4 * a - 2) * binom(n - 2, (n - 2) // 2) // (2 * n - a - 1)


# --- brackets and adjoints ------------------------------------------------------

@dataclass(frozen=True)
class EstimatePair:
    """A lower/upper estimate pair for one ground size."""

    n: int
    lo: int
    hi: int

    @property
    def exact(self) -> bool:
        return self.lo == self.hi


_PATTERNS = ("v", "w")


def _norm_pattern(pattern: str) -> str:
    key = pattern.strip().lower()
    if key not in _PATTERNS:
        raise InputError(f"unknown estimate pattern {pattern!r}; use 'v' or 'w'")
    return key


def _mono_lower(pattern: str):
    # extended by 0 below the formula domain, where no copy fits anyway
    if pattern == "w":
        return lambda n: lower_w(n) if n >= 1 else 0
    return lambda n: lower_v(n) if n >= 2 else 0


def _mono_upper(pattern: str):
    # the W quotient dips below its n >= 3 regime at n = 1, 2; the count
    # there is 0 (the pattern needs three ground elements), so clamp
    if pattern == "w":
        return lambda n: upper_w(n) if n >= 3 else 0
    return lambda n: upper_v(n) if n >= 2 else 0


def sp_bracket(pattern: str, n: int) -> EstimatePair:
    """Estimate pair for the count question at ground size n."""
    key = _norm_pattern(pattern)
    min_n = 3 if key == "w" else 2
    if n < min_n:
        raise InputError(f"sp_bracket({key!r}) needs n >= {min_n}, got {n}")
    if key == "w":
        return EstimatePair(n, lower_w(n), upper_w(n))
    return EstimatePair(n, lower_v(n), upper_v(n))


def asp_bracket(pattern: str, k: int) -> tuple[int, int]:
    """Bracket (lo, hi) for the least n whose count reaches k.

    The upper estimate bounds the count above, so its adjoint bounds the
    adjoint below; the lower estimate gives the upper end. Over- and
    under-estimates swap roles under adjunction.
    """
    key = _norm_pattern(pattern)
    if k < 1:
        raise InputError(f"asp_bracket needs k >= 1, got {k}")
    lo = left_adjoint(_mono_upper(key), k)
    hi = left_adjoint(_mono_lower(key), k)
    return lo, hi


def ratio_report(pattern: str, n: int, places: int = 3) -> str:
    """upper/lower as a fixed-point decimal string; "undefined" when lower = 0."""
    pair = sp_bracket(pattern, n)
    if pair.lo == 0:
        return "undefined"
    return fixed_ratio(pair.hi, pair.lo, places)
