"""Largest pairwise-unrelated families of order-embedded pattern copies in
subset lattices: exact formulas where they hold, honest brackets elsewhere.

Two copies of a pattern are unrelated when no subset of one is comparable
with any subset of the other. sp_* functions count, for a ground set [n],
the largest pairwise-unrelated family of copies; asp_* functions answer the
adjoint question: the least n whose count reaches k.

Exact routes:
  * any pattern, k = 1: the least embedding ground size p;
  * bounded patterns (single minimum and maximum): count = C(n-p, floor((n-p)/2));
  * length-matching patterns (longest chain length equals p): same formula
    with the length in place of p.

Fallback: the count always sits between the bounded-style lower construction
and the chain coarsening, giving the bracket
[C(n-p, .), C(n-t, .)] with t the pattern length. The sharper V/W estimate
brackets live in sperner_estimates and are wired in by the dispatchers.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import sperner_estimates as est
from .bigcomb import binom, central_binom_adjoint
from .errors import HypothesisError, InputError, ResourceLimitError
from .poset_core import (Poset, SubsetAssignment, are_isomorphic, length,
                         v_poset, w_poset)


@dataclass(frozen=True)
class SpernerResult:
    """Either an exact value (lo == hi) or a bracket lo..hi, with the route
    that produced it. `collapsed` marks brackets that closed to a point."""

    lo: int
    hi: int
    method: str
    collapsed: bool = False

    def __post_init__(self):
        if self.lo > self.hi:
            raise InputError(f"bracket [{self.lo}, {self.hi}] is inverted")

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> int | None:
        return self.lo if self.lo == self.hi else None


def _exact(value: int, method: str) -> SpernerResult:
    return SpernerResult(value, value, method)


def _central(m: int) -> int:
    """C(m, floor(m/2)) extended by 0 to negative m."""
    return binom(m, m // 2)


# --- minimum embedding dimension ----------------------------------------------

def min_embedding(pattern: Poset, *, cap: int = 16) -> tuple[int, SubsetAssignment]:
    """Least n such that the pattern order-embeds into the subsets of [n],
    together with one embedding.

    Iterative deepening from max(length, ceil(log2 size)); each depth runs a
    backtracking search over images in a fixed linear extension order, with
    fresh coordinates forced into a contiguous block (any embedding can be
    coordinate-permuted into that form, so the restriction loses nothing).
    """
    if pattern.size > cap:
        raise ResourceLimitError(
            f"pattern has {pattern.size} elements; embedding solver cap is {cap}")
    start = max(length(pattern), (pattern.size - 1).bit_length())
    for n in range(start, pattern.size + 1):
        images = _search_embedding(pattern, n)
        if images is not None:
            return n, SubsetAssignment(n, images)
    raise AssertionError("down-set embedding guarantees success at n = size")


def min_embedding_dimension(pattern: Poset, *, cap: int = 16) -> int:
    return min_embedding(pattern, cap=cap)[0]


def _search_embedding(pattern: Poset, n: int) -> tuple[int, ...] | None:
    order = pattern.linear_extension
    size = pattern.size
    images = [0] * size

    def place(i: int, used: int) -> bool:
        if i == size:
            return True
        x = order[i]
        earlier = order[:i]
        lower = [y for y in earlier if pattern.leq(y, x)]
        incomp = [y for y in earlier if not pattern.leq(y, x)]
        required = 0
        for y in lower:
            required |= images[y]
        for fresh in range(n - used + 1):
            fresh_bits = ((1 << fresh) - 1) << used
            for s in range(1 << used):
                m = s | fresh_bits
                if required & ~m:
                    continue
                ok = all(images[y] != m for y in lower)
                if ok:
                    for y in incomp:
                        a = images[y]
                        if a & ~m == 0 or m & ~a == 0:
                            ok = False
                            break
                if ok:
                    images[x] = m
                    if place(i + 1, used + fresh):
                        return True
        return False

    if place(0, 0):
        return tuple(images)
    return None


# --- exact formula routes ------------------------------------------------------

def sp_bounded(pattern: Poset, n: int) -> SpernerResult:
    """Exact count for bounded patterns: C(n-p, floor((n-p)/2)); 0 below p."""
    if n < 0:
        raise InputError("ground size must be >= 0")
    if not pattern.is_bounded():
        raise HypothesisError(
            "pattern is not bounded (needs a single minimum and maximum)")
    p = min_embedding_dimension(pattern)
    return _exact(_central(n - p), "bounded-formula")


def asp_bounded(pattern: Poset, k: int) -> SpernerResult:
    if k < 1:
        raise InputError("asp needs k >= 1")
    if not pattern.is_bounded():
        raise HypothesisError(
            "pattern is not bounded (needs a single minimum and maximum)")
    p = min_embedding_dimension(pattern)
    return _exact(p + central_binom_adjoint(k), "bounded-formula")


def sp_length_matching(pattern: Poset, n: int) -> SpernerResult:
    """Exact count when the pattern's length equals its embedding dimension."""
    if n < 0:
        raise InputError("ground size must be >= 0")
    t = length(pattern)
    if t != min_embedding_dimension(pattern):
        raise HypothesisError(
            f"pattern length {t} differs from its embedding dimension")
    return _exact(_central(n - t), "length-matching")


def asp_length_matching(pattern: Poset, k: int) -> SpernerResult:
    if k < 1:
        raise InputError("asp needs k >= 1")
    t = length(pattern)
    if t != min_embedding_dimension(pattern):
        raise HypothesisError(
            f"pattern length {t} differs from its embedding dimension")
    return _exact(t + central_binom_adjoint(k), "length-matching")


# --- fallback brackets ----------------------------------------------------------

def sp_general_bracket(pattern: Poset, n: int) -> SpernerResult:
    """[C(n-p, .), C(n-t, .)]: block construction below, chain coarsening above."""
    if n < 0:
        raise InputError("ground size must be >= 0")
    p = min_embedding_dimension(pattern)
    if n < p:
        return _exact(0, "dimension-bound")
    t = length(pattern)
    return SpernerResult(_central(n - p), _central(n - t), "general-bracket")


def asp_general_bracket(pattern: Poset, k: int) -> SpernerResult:
    if k < 1:
        raise InputError("asp needs k >= 1")
    p = min_embedding_dimension(pattern)
    if k == 1:
        return _exact(p, "min-embedding")
    t = length(pattern)
    a = central_binom_adjoint(k)
    lo, hi = max(p, t + a), p + a
    if lo == hi:
        return SpernerResult(lo, hi, "general-bracket", collapsed=True)
    return SpernerResult(lo, hi, "general-bracket")


# --- dispatchers -----------------------------------------------------------------

def vw_pattern_kind(pattern: Poset) -> str | None:
    """"v"/"w" when the pattern is V, W, or one of their duals, else None.

    Complementation inside the subset lattice is an order anti-automorphism,
    so a pattern and its dual have the same counts; dual patterns reuse the
    same estimate brackets.
    """
    for kind, proto in (("v", v_poset()), ("w", w_poset())):
        if are_isomorphic(pattern, proto)[0]:
            return kind
        if are_isomorphic(pattern, proto.dual())[0]:
            return kind
    return None


def sp_dispatch(pattern: Poset, n: int) -> SpernerResult:
    """Best available answer for a count query: exact routes first, then the
    V/W estimate brackets, then the general bracket."""
    if n < 0:
        raise InputError("ground size must be >= 0")
    p = min_embedding_dimension(pattern)
    if n < p:
        return _exact(0, "dimension-bound")
    if pattern.is_bounded():
        return sp_bounded(pattern, n)
    if length(pattern) == p:
        return sp_length_matching(pattern, n)
    kind = vw_pattern_kind(pattern)
    if kind is not None:
        pair = est.sp_bracket(kind, n)
        method = f"{kind.upper()}-bracket"
        if pair.lo == pair.hi:
            return SpernerResult(pair.lo, pair.hi, method, collapsed=True)
        return SpernerResult(pair.lo, pair.hi, method)
    return sp_general_bracket(pattern, n)


def asp_dispatch(pattern: Poset, k: int) -> SpernerResult:
    """Best available answer for the adjoint query (least n reaching count k)."""
    if k < 1:
        raise InputError("asp needs k >= 1")
    p = min_embedding_dimension(pattern)
    if k == 1:
        return _exact(p, "min-embedding")
    if pattern.is_bounded():
        return asp_bounded(pattern, k)
    if length(pattern) == p:
        return asp_length_matching(pattern, k)
    kind = vw_pattern_kind(pattern)
    if kind is not None:
        lo, hi = est.asp_bracket(kind, k)
        method = f"{kind.upper()}-bracket"
        if lo == hi:
            return SpernerResult(lo, hi, method, collapsed=True)
        return SpernerResult(lo, hi, method)
    return asp_general_bracket(pattern, k)
