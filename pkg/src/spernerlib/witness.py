"""Explicit pairwise-unrelated families of pattern copies, plus an
independent certifier.

The constructions here realize the lower estimates:

  * witness_bounded: embed the pattern once into the top p coordinates and
    tag each copy with a distinct half-size subset of the remaining n - p
    coordinates; distinct equal-size tags make all cross pairs incomparable.
    Works for every pattern; for bounded ones the family size is exactly the
    count formula.
  * witness_w / witness_v: the block constructions behind lower_w / lower_v.
    The ground set is cut into 3-blocks (W) or 2-blocks (V); a copy picks an
    active block index i, full or near-full pieces of the earlier blocks,
    and a tail in the free coordinates, keeping the bottom subset size
    constant so that cross pairs always clash in both directions.

certify() re-checks any family from scratch (order embedding of every copy,
plus pairwise unrelatedness), so construction bugs cannot silently pass: the
certifier shares no code with the generators beyond the mask conventions.
Above `sample_threshold` copies it switches to a seeded random pair sample
and says so in the result; below, the check is exhaustive.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from .bigcomb import central_binom
from .errors import InputError, ResourceLimitError
from .poset_core import (MAX_GROUND, Poset, SubsetAssignment,
                         is_order_embedding, mask_to_set_str, v_poset,
                         w_poset)
from .sperner import min_embedding
from .sperner_estimates import lower_v, lower_w, w_bottom_size


@dataclass(frozen=True)
class UnrelatedFamily:
    """A family of pattern copies in the subset lattice of [ground_size].

    copies[c] lists the image subsets of copy c in pattern-element order.
    """

    ground_size: int
    pattern: Poset
    copies: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.copies)

    def dump(self) -> str:
        """One line per copy; the copy's subsets joined by ';', 1-based."""
        return "".join(
            ";".join(mask_to_set_str(m) for m in copy) + "\n"
            for copy in self.copies)


@dataclass(frozen=True)
class CertifyResult:
    ok: bool
    mode: str          # "full" or "sampled"
    copies: int
    failure: str | None = None

    def __bool__(self) -> bool:
        return self.ok


# --- constructions ------------------------------------------------------------

def witness_bounded(pattern: Poset, n: int, *, cap: int = 1_000_000) -> UnrelatedFamily:
    """The tagged-embedding family of size C(n-p, floor((n-p)/2))."""
    p, emb = min_embedding(pattern)
    if n < p:
        raise InputError(f"pattern needs ground size >= {p}, got {n}")
    if n > MAX_GROUND:
        raise InputError(f"ground size {n} above the {MAX_GROUND} cap")
    base = n - p
    if central_binom(base) > cap:
        raise ResourceLimitError(
            f"family would have {central_binom(base)} copies (cap {cap})")
    shifted = tuple(img << base for img in emb.images)
    tags = sorted(_mask_of(combo) for combo in
                  itertools.combinations(range(base), base // 2))
    copies = tuple(tuple(tag | img for img in shifted) for tag in tags)
    return UnrelatedFamily(n, pattern, copies)


def witness_w(n: int, *, cap: int = 1_000_000) -> UnrelatedFamily:
    """The 3-block family whose size is lower_w(n)."""
    if n < 3:
        raise InputError(f"witness_w needs n >= 3, got {n}")
    if n > MAX_GROUND:
        raise InputError(f"ground size {n} above the {MAX_GROUND} cap")
    if lower_w(n) > cap:
        raise ResourceLimitError(
            f"family would have {lower_w(n)} copies (cap {cap})")
    h = w_bottom_size(n)
    copies = []
    for i in range(n // 3):
        tops = (1 << (3 * i), 1 << (3 * i + 1), 1 << (3 * i + 2))
        free = range(3 * i + 3, n)
        # earlier blocks contribute a 2- or 3-element piece each
        piece_options = [
            tuple(bits << (3 * l) for bits in (0b011, 0b101, 0b110, 0b111))
            for l in range(i)
        ]
        for pieces in itertools.product(*piece_options):
            prefix = 0
            used = 0
            for piece in pieces:
                prefix |= piece
                used += _popcount(piece)
            tail_size = h - used
            if tail_size < 0:
                continue
            for combo in itertools.combinations(free, tail_size):
                z = prefix | _mask_of(combo)
                copies.append((z, z | tops[0], z | tops[1], z | tops[2]))
    return UnrelatedFamily(n, w_poset(), tuple(copies))


def witness_v(n: int, *, cap: int = 1_000_000) -> UnrelatedFamily:
    """The 2-block family whose size is lower_v(n)."""
    if n < 2:
        raise InputError(f"witness_v needs n >= 2, got {n}")
    if n > MAX_GROUND:
        raise InputError(f"ground size {n} above the {MAX_GROUND} cap")
    if lower_v(n) > cap:
        raise ResourceLimitError(
            f"family would have {lower_v(n)} copies (cap {cap})")
    q = (n - 1) // 2
    copies = []
    for i in range(q // 2 + 1):
        tops = (1 << (2 * i), 1 << (2 * i + 1))
        prefix = (1 << (2 * i)) - 1   # earlier 2-blocks taken whole
        free = range(2 * i + 2, n)
        for combo in itertools.combinations(free, q - 2 * i):
            z = prefix | _mask_of(combo)
            copies.append((z, z | tops[0], z | tops[1]))
    return UnrelatedFamily(n, v_poset(), tuple(copies))


def _mask_of(positions) -> int:
    m = 0
    for pos in positions:
        m |= 1 << pos
    return m


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


# --- certification -------------------------------------------------------------

def certify(family: UnrelatedFamily, *,
            sample_threshold: int = 100_000,
            sample_pairs: int = 200_000,
            seed: int = 0,
            numpy_min: int = 300) -> CertifyResult:
    """Re-check a family from scratch.

    Every copy must order-embed the pattern; every cross pair of copies must
    be unrelated (no subset of one comparable with a subset of the other).
    Families above sample_threshold copies get a seeded random pair sample
    instead of the full quadratic sweep, and the result says mode="sampled".
    `numpy_min` tunes when the vectorized pair sweep kicks in; results are
    identical either way.
    """
    copies = family.copies
    count = len(copies)
    pattern = family.pattern
    for idx, copy in enumerate(copies):
        assignment = SubsetAssignment(family.ground_size, copy)
        if not is_order_embedding(assignment, pattern):
            return CertifyResult(False, "full", count,
                                 f"copy {idx} is not an order embedding")
    if count <= 1:
        return CertifyResult(True, "full", count)
    if count > sample_threshold:
        rng = random.Random(seed)
        for _ in range(sample_pairs):
            i = rng.randrange(count)
            j = rng.randrange(count - 1)
            if j >= i:
                j += 1
            if _copies_related(copies[i], copies[j]):
                i, j = min(i, j), max(i, j)
                return CertifyResult(False, "sampled", count,
                                     _violation_text(copies, i, j))
        return CertifyResult(True, "sampled", count)
    pair = _find_related_pair(copies, family.ground_size, numpy_min)
    if pair is not None:
        return CertifyResult(False, "full", count,
                             _violation_text(copies, *pair))
    return CertifyResult(True, "full", count)


def _copies_related(c1, c2) -> bool:
    for x in c1:
        for y in c2:
            m = x & y
            if m == x or m == y:
                return True
    return False


def _violation_text(copies, i: int, j: int) -> str:
    for x in copies[i]:
        for y in copies[j]:
            m = x & y
            if m == x or m == y:
                return (f"copies {i} and {j} are related: "
                        f"{mask_to_set_str(x)} vs {mask_to_set_str(y)}")
    raise AssertionError("violation vanished on recheck")


def _find_related_pair(copies, ground_size: int, numpy_min: int):
    """First related cross pair (i, j), i < j, in lexicographic order; None if
    the family is pairwise unrelated."""
    count = len(copies)
    if count >= numpy_min and ground_size <= 63:
        width = len(copies[0])
        arr = np.array(copies, dtype=np.uint64)
        block = max(1, 20_000_000 // max(1, count))
        for start in range(0, count, block):
            stop = min(start + block, count)
            sub = arr[start:stop]
            bad = np.zeros((stop - start, count), dtype=bool)
            for s in range(width):
                a = sub[:, s][:, None]
                for t in range(width):
                    b = arr[:, t][None, :]
                    meet = a & b
                    bad |= (meet == a) | (meet == b)
            rows = np.arange(start, stop)[:, None]
            bad &= np.arange(count)[None, :] > rows
            if bad.any():
                i, j = np.argwhere(bad)[0]
                return start + int(i), int(j)
        return None
    for i in range(count):
        ci = copies[i]
        for j in range(i + 1, count):
            if _copies_related(ci, copies[j]):
                return i, j
    return None
