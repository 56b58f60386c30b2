"""Independent cross-checks for the counting machinery.

Three unrelated routes live here, none of which shares logic with the
formula modules:

  * sp_exhaustive: enumerate every order-embedded copy of the pattern in
    the subset lattice of [n], build the unrelatedness graph on the copies,
    and solve maximum clique exactly (branch and bound with greedy-coloring
    bounds). Exponential, hence the small-n cap, but formula-free.
  * perms_through: the number of maximal chains of the subset lattice
    passing through a fixed subset X is |X|! * (n-|X|)!; for small n the
    closed form is re-derived on the spot by walking all permutations, under
    both published readings of the membership condition (they coincide).
  * w_copy_perm_load: the chain-counting weight (n + 2x) * x! * (n-1-x)!
    a W copy with bottom size x removes from the n! budget; its minimum
    over x in [1, n-1] sits at floor((n-1)/2), and floor(n!/min) must
    reproduce the closed-form upper estimate.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass

import numpy as np

from .errors import InputError, ResourceLimitError
from .poset_core import Poset
from .witness import UnrelatedFamily

_ENUM_GROUND_CAP = 10
_ENUM_PATTERN_CAP = 8


def enumerate_copies(pattern: Poset, n: int) -> tuple[tuple[int, ...], ...]:
    """All order-embedded copies of the pattern among subsets of [n].

    A copy is a set of image subsets; each is returned once, as the image
    tuple (in pattern-element order) of its first-found assignment, and the
    copies come sorted by their sorted mask tuples. Interchangeable pattern
    elements (same strict up- and down-sets) are forced into increasing
    image order, which kills most duplicate assignments cheaply; a final
    canonical dedupe handles the rest.
    """
    if n < 0:
        raise InputError("ground size must be >= 0")
    if n > _ENUM_GROUND_CAP:
        raise ResourceLimitError(
            f"copy enumeration is capped at n <= {_ENUM_GROUND_CAP}, got {n}")
    if pattern.size > _ENUM_PATTERN_CAP:
        raise ResourceLimitError(
            f"copy enumeration is capped at {_ENUM_PATTERN_CAP} pattern "
            f"elements, got {pattern.size}")
    order = pattern.linear_extension
    size = pattern.size
    signature = [(pattern.up[x] & ~(1 << x), pattern.down[x] & ~(1 << x))
                 for x in range(size)]
    # twin[x]: the latest earlier element interchangeable with x, if any
    twin: list[int | None] = [None] * size
    for i, x in enumerate(order):
        for y in reversed(order[:i]):
            if signature[y] == signature[x]:
                twin[x] = y
                break
    full = (1 << n) - 1
    found: dict[tuple[int, ...], tuple[int, ...]] = {}
    images = [0] * size

    def place(i: int) -> None:
        if i == size:
            found.setdefault(tuple(sorted(images)), tuple(images))
            return
        x = order[i]
        earlier = order[:i]
        lower = [y for y in earlier if pattern.leq(y, x)]
        incomp = [y for y in earlier if not pattern.leq(y, x)]
        required = 0
        for y in lower:
            required |= images[y]
        floor_img = images[twin[x]] + 1 if twin[x] is not None else 0
        rest = full & ~required
        extra = 0
        while True:  # all supersets of `required` within [n]
            m = required | extra
            if m >= floor_img:
                ok = all(images[y] != m for y in lower)
                if ok:
                    for y in incomp:
                        a = images[y]
                        if a & ~m == 0 or m & ~a == 0:
                            ok = False
                            break
                if ok:
                    images[x] = m
                    place(i + 1)
            if extra == rest:
                break
            extra = (extra - rest) & rest
        images[x] = 0

    place(0)
    return tuple(found[key] for key in sorted(found))


@dataclass(frozen=True)
class CopyGraph:
    """Copies as vertices; edges join unrelated copies.

    neighbors[v] is a bit mask over vertex indices.
    """

    ground_size: int
    pattern: Poset
    vertices: tuple[tuple[int, ...], ...]
    neighbors: tuple[int, ...]


def copy_graph(pattern: Poset, n: int) -> CopyGraph:
    vertices = enumerate_copies(pattern, n)
    neighbors = _unrelated_adjacency(vertices)
    return CopyGraph(n, pattern, vertices, neighbors)


def _unrelated_adjacency(vertices) -> tuple[int, ...]:
    count = len(vertices)
    if count == 0:
        return ()
    width = len(vertices[0])
    if count >= 300:
        arr = np.array(vertices, dtype=np.uint64)
        rows = []
        block = max(1, 40_000_000 // max(1, count))
        for start in range(0, count, block):
            stop = min(start + block, count)
            sub = arr[start:stop]
            related = np.zeros((stop - start, count), dtype=bool)
            for s in range(width):
                a = sub[:, s][:, None]
                for t in range(width):
                    b = arr[:, t][None, :]
                    meet = a & b
                    related |= (meet == a) | (meet == b)
            unrelated = ~related
            idx = np.arange(start, stop)
            unrelated[np.arange(stop - start), idx] = False
            packed = np.packbits(unrelated, axis=1, bitorder="little")
            rows.extend(int.from_bytes(row.tobytes(), "little")
                        for row in packed)
        return tuple(rows)
    masks = [0] * count
    for i in range(count):
        for j in range(i + 1, count):
            related = False
            for x in vertices[i]:
                for y in vertices[j]:
                    m = x & y
                    if m == x or m == y:
                        related = True
                        break
                if related:
                    break
            if not related:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return tuple(masks)


def max_clique(neighbors, *, time_budget: float | None = None) -> tuple[int, list[int]]:
    """Exact maximum clique on a bitmask adjacency list.

    Branch and bound in Tomita style: candidates are greedily colored and
    expanded in reverse color order, pruning once depth + color stops
    exceeding the incumbent. Deterministic. A time budget, when given,
    aborts with the incumbent size attached as partial_lower_bound.
    """
    count = len(neighbors)
    best: list[int] = []
    deadline = None if time_budget is None else time.monotonic() + time_budget

    def color_order(cand: int) -> tuple[list[int], list[int]]:
        order: list[int] = []
        bounds: list[int] = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= avail - 1
                avail &= ~neighbors[v]
                rest &= ~(1 << v)
                order.append(v)
                bounds.append(color)
        return order, bounds

    def expand(stack: list[int], cand: int) -> None:
        if deadline is not None and time.monotonic() > deadline:
            raise ResourceLimitError(
                "clique search ran out of time; best family so far has "
                f"{len(best)} copies", partial_lower_bound=len(best))
        order, bounds = color_order(cand)
        for pos in range(len(order) - 1, -1, -1):
            if len(stack) + bounds[pos] <= len(best):
                return
            v = order[pos]
            stack.append(v)
            rest = cand & neighbors[v]
            if rest:
                expand(stack, rest)
            elif len(stack) > len(best):
                best[:] = stack
            stack.pop()
            cand &= ~(1 << v)

    if count:
        expand([], (1 << count) - 1)
    return len(best), sorted(best)


@dataclass(frozen=True)
class OracleResult:
    value: int
    family: UnrelatedFamily
    total_copies: int


def sp_exhaustive(pattern: Poset, n: int, *, cap: int = 5,
                  time_budget: float | None = None) -> OracleResult:
    """Formula-free count of the largest pairwise-unrelated copy family.

    Default cap is n <= 5; n = 6 is tractable for small patterns but slow,
    so callers opt in by raising cap. Copies containing {} or [n] are left
    out of the clique graph: those subsets are comparable with everything,
    so such a copy can never join a family of two or more; they still count
    toward a single-copy answer.
    """
    if n > cap:
        raise ResourceLimitError(
            f"exhaustive search is capped at n <= {cap}; pass cap={n} to force")
    if pattern.size > 6:
        raise ResourceLimitError(
            f"exhaustive search handles patterns of at most 6 elements, "
            f"got {pattern.size}")
    copies = enumerate_copies(pattern, n)
    if not copies:
        return OracleResult(0, UnrelatedFamily(n, pattern, ()), 0)
    full = (1 << n) - 1
    kept = [c for c in copies if 0 not in c and full not in c]
    if not kept:
        return OracleResult(1, UnrelatedFamily(n, pattern, (copies[0],)),
                            len(copies))
    neighbors = _unrelated_adjacency(kept)
    size, members = max_clique(neighbors, time_budget=time_budget)
    if size <= 1:
        return OracleResult(1, UnrelatedFamily(n, pattern, (copies[0],)),
                            len(copies))
    chosen = tuple(kept[v] for v in members)
    return OracleResult(size, UnrelatedFamily(n, pattern, chosen), len(copies))


# --- permutation-counting identities -------------------------------------------

def perms_through(x_mask: int, n: int, variant: str = "subset") -> int:
    """Maximal chains of the subset lattice of [n] through the subset X.

    Closed form |X|! * (n-|X|)!. For n <= 7 the value is re-derived by
    direct enumeration before being returned, so a formula/enumeration
    mismatch cannot pass silently.
    """
    if n < 0 or x_mask >> max(n, 0):
        raise InputError("subset leaves the ground set")
    c = bin(x_mask).count("1")
    closed = math.factorial(c) * math.factorial(n - c)
    if n <= 7:
        enum = perms_through_enum(x_mask, n, variant)
        if enum != closed:
            raise AssertionError(
                f"enumeration gives {enum}, closed form {closed} "
                f"(X={x_mask:#x}, n={n})")
    return closed


def perms_through_enum(x_mask: int, n: int, variant: str = "subset",
                       as_set: bool = False):
    """Count (or collect) the permutations realizing perms_through directly.

    A permutation realizes X when its shortest prefix containing all of X
    consists of elements of X ("subset" reading) or equals X exactly
    ("equals" reading); the two readings agree for every X, and tests pin
    that down.
    """
    if variant not in ("subset", "equals"):
        raise InputError(f"unknown variant {variant!r}")
    if n < 0 or x_mask >> max(n, 0):
        raise InputError("subset leaves the ground set")
    if n > 9:
        raise ResourceLimitError("permutation enumeration is capped at n <= 9")
    hits = [] if as_set else 0
    for perm in itertools.permutations(range(n)):
        last = 0
        for pos, elem in enumerate(perm, start=1):
            if x_mask >> elem & 1:
                last = pos
        prefix = 0
        for elem in perm[:last]:
            prefix |= 1 << elem
        ok = (prefix & ~x_mask == 0) if variant == "subset" else (prefix == x_mask)
        if ok:
            if as_set:
                hits.append(perm)
            else:
                hits += 1
    return frozenset(hits) if as_set else hits


def w_copy_perm_load(n: int, x: int) -> int:
    """(n + 2x) * x! * (n-1-x)!: chains blocked by a W copy with bottom size x."""
    if n < 2:
        raise InputError("w_copy_perm_load needs n >= 2")
    if not 1 <= x <= n - 1:
        raise InputError(f"bottom size must be in 1..{n - 1}, got {x}")
    return (n + 2 * x) * math.factorial(x) * math.factorial(n - 1 - x)


def w_perm_load_min(n: int) -> tuple[int, int]:
    """(argmin, min) of w_copy_perm_load(n, .) over 1..n-1; smallest argmin wins ties."""
    if n < 2:
        raise InputError("w_perm_load_min needs n >= 2")
    best_x, best = 1, w_copy_perm_load(n, 1)
    for x in range(2, n):
        val = w_copy_perm_load(n, x)
        if val < best:
            best_x, best = x, val
    return best_x, best


def w_perm_load_argmin_check(n: int) -> bool:
    """True iff the load minimum is attained at x = floor((n-1)/2)."""
    _, best = w_perm_load_min(n)
    return w_copy_perm_load(n, (n - 1) // 2) == best
