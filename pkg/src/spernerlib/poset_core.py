"""Finite posets, subset-lattice assignments, down-set lattices, and
distributive lattices given by operation tables.

Elements of a poset are the integers 0..size-1. The order is stored as a
tuple of up-masks: bit y of up[x] is set iff x <= y, so comparisons are
single shift-and-mask operations. Subsets of a ground set [n] = {1..n} are
bit masks as well, with bit i encoding membership of the element i+1; that
1-based convention shows up only when subsets are printed.

A distributive lattice is carried as explicit meet/join tables plus,
optionally, the poset whose down-sets realize it (Birkhoff representation).
`down_set_lattice` builds that representation, `join_irreducibles` inverts
it, and `direct_power` forms finite powers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InputError, ResourceLimitError

# ground sets larger than this would make mask-based subset work unwieldy
MAX_GROUND = 128


def mask_to_set_str(mask: int) -> str:
    """Render a subset mask as {1,4,5} with 1-based elements; {} when empty."""
    return "{" + ",".join(str(i + 1) for i in _iter_bits(mask)) + "}"


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


class Poset:
    """Finite partial order on 0..size-1, stored as up-masks.

    The constructor verifies reflexivity, antisymmetry and transitivity, so
    every Poset instance is a genuine partial order. Optional labels are
    carried for display only and never affect comparisons or isomorphism.
    """

    def __init__(self, up: Sequence[int], labels: Sequence[str] | None = None):
        self.up = tuple(up)
        self.size = len(self.up)
        if self.size == 0:
            raise InputError("empty poset")
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != self.size:
            raise InputError("label count differs from poset size")
        for x, row in enumerate(self.up):
            if row >> self.size:
                raise InputError(f"up-set of {x} mentions out-of-range elements")
            if not row >> x & 1:
                raise InputError(f"order is not reflexive at {x}")
        for x in range(self.size):
            row = self.up[x]
            for y in _iter_bits(row & ~(1 << x)):
                if self.up[y] >> x & 1:
                    raise InputError(f"antisymmetry fails between {x} and {y}")
                if self.up[y] & ~row:
                    raise InputError(f"transitivity fails through {x} <= {y}")

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    @cached_property
    def down(self) -> tuple[int, ...]:
        """down[y] = mask of all x with x <= y."""
        rows = [0] * self.size
        for x in range(self.size):
            for y in _iter_bits(self.up[x]):
                rows[y] |= 1 << x
        return tuple(rows)

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """All covering pairs (x, y): x < y with nothing strictly between."""
        out = []
        for x in range(self.size):
            strict_up = self.up[x] & ~(1 << x)
            for y in _iter_bits(strict_up):
                between = strict_up & self.down[y] & ~(1 << y)
                if not between:
                    out.append((x, y))
        return tuple(out)

    def minimal_elements(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.size) if self.down[x] == 1 << x)

    def maximal_elements(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.size) if self.up[x] == 1 << x)

    def is_bounded(self) -> bool:
        """True iff there is a single minimum and a single maximum."""
        return len(self.minimal_elements()) == 1 and len(self.maximal_elements()) == 1

    def dual(self) -> "Poset":
        return Poset(self.down, self.labels)

    @cached_property
    def linear_extension(self) -> tuple[int, ...]:
        """Elements in a fixed linear extension (sorted by down-set size, then index)."""
        return tuple(sorted(range(self.size),
                            key=lambda x: (_popcount(self.down[x]), x)))

    def __eq__(self, other) -> bool:
        return isinstance(other, Poset) and self.up == other.up

    def __hash__(self) -> int:
        return hash(self.up)

    def __repr__(self) -> str:
        return f"Poset(size={self.size}, covers={list(self.covers)})"


def poset_from_covers(size: int, covers: Iterable[tuple[int, int]],
                      labels: Sequence[str] | None = None) -> Poset:
    """Poset whose order is the reflexive-transitive closure of (lower, upper) pairs."""
    if size < 1:
        raise InputError(f"poset size must be >= 1, got {size}")
    if size > MAX_GROUND:
        raise ResourceLimitError(f"poset size {size} above the {MAX_GROUND} cap")
    succ: list[list[int]] = [[] for _ in range(size)]
    indeg = [0] * size
    for lo, hi in covers:
        if not (0 <= lo < size and 0 <= hi < size):
            raise InputError(f"cover ({lo}, {hi}) out of range for size {size}")
        if lo == hi:
            raise InputError(f"cover ({lo}, {hi}) is a self-loop")
        succ[lo].append(hi)
        indeg[hi] += 1
    # Kahn's algorithm; a leftover node means the cover digraph has a cycle
    queue = [x for x in range(size) if indeg[x] == 0]
    topo = []
    while queue:
        x = queue.pop()
        topo.append(x)
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    if len(topo) != size:
        raise InputError("cover relation contains a cycle")
    up = [1 << x for x in range(size)]
    for x in reversed(topo):
        for y in succ[x]:
            up[x] |= up[y]
    return Poset(up, labels)


# --- built-in posets ---------------------------------------------------------

def chain_poset(t: int) -> Poset:
    """The chain 0 < 1 < ... < t (t+1 elements, length t)."""
    if t < 0:
        raise InputError("chain length must be >= 0")
    return poset_from_covers(t + 1, [(i, i + 1) for i in range(t)])


def antichain_poset(m: int) -> Poset:
    if m < 1:
        raise InputError("antichain needs at least one element")
    return poset_from_covers(m, [])


def v_poset() -> Poset:
    """One bottom under two incomparable tops."""
    return poset_from_covers(3, [(0, 1), (0, 2)])


def w_poset() -> Poset:
    """One bottom under three incomparable tops."""
    return poset_from_covers(4, [(0, 1), (0, 2), (0, 3)])


def powerset_poset(p: int) -> Poset:
    """All subsets of [p] ordered by inclusion (2**p elements)."""
    if p < 0:
        raise InputError("powerset exponent must be >= 0")
    if p > 12:
        raise ResourceLimitError(f"powerset:{p} would have {2 ** p} elements")
    size = 1 << p
    up = [0] * size
    for s in range(size):
        rest = ~s & (size - 1)
        # iterate supersets of s inside [p]
        t = 0
        while True:
            up[s] |= 1 << (s | t)
            if t == rest:
                break
            t = (t - rest) & rest
    return Poset(up)


_BUILTIN_SIMPLE = {"v": v_poset, "w": w_poset}


def builtin_poset(name: str) -> Poset:
    """Resolve "chain:<t>", "antichain:<m>", "powerset:<p>", "v", "w"."""
    key = name.strip().lower()
    if key in _BUILTIN_SIMPLE:
        return _BUILTIN_SIMPLE[key]()
    head, sep, arg = key.partition(":")
    if sep:
        try:
            k = int(arg)
        except ValueError:
            raise InputError(f"bad argument in poset name {name!r}") from None
        if head == "chain":
            return chain_poset(k)
        if head == "antichain":
            return antichain_poset(k)
        if head == "powerset":
            return powerset_poset(k)
    raise InputError(f"unknown builtin poset {name!r}")


def parse_poset_text(text: str) -> Poset:
    """Parse the poset file format.

    First significant line: `poset <size>`; each following line:
    `cover <lower> <upper>`. '#' starts a comment; blank lines are skipped.
    """
    size = None
    covers: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if size is None:
            if parts[0] != "poset" or len(parts) != 2:
                raise InputError(f"line {lineno}: expected 'poset <size>'")
            try:
                size = int(parts[1])
            except ValueError:
                raise InputError(f"line {lineno}: bad size {parts[1]!r}") from None
        else:
            if parts[0] != "cover" or len(parts) != 3:
                raise InputError(f"line {lineno}: expected 'cover <i> <j>'")
            try:
                covers.append((int(parts[1]), int(parts[2])))
            except ValueError:
                raise InputError(f"line {lineno}: bad cover indices") from None
    if size is None:
        raise InputError("no 'poset <size>' line found")
    return poset_from_covers(size, covers)


# --- structural measures -----------------------------------------------------

def length(poset: Poset) -> int:
    """Longest chain length (edges, not elements): a chain x0<...<xt has length t."""
    height = [0] * poset.size
    for x in poset.linear_extension:
        below = poset.down[x] & ~(1 << x)
        height[x] = max((height[y] + 1 for y in _iter_bits(below)), default=0)
    return max(height)


def cardinal_sum(poset: Poset, k: int) -> Poset:
    """Disjoint union of k copies; copy j occupies indices [j*size, (j+1)*size)."""
    if k < 1:
        raise InputError("cardinal_sum needs k >= 1")
    s = poset.size
    if k * s > MAX_GROUND:
        raise ResourceLimitError(f"cardinal sum would have {k * s} elements")
    up = []
    for j in range(k):
        up.extend(row << (j * s) for row in poset.up)
    return Poset(up)


def are_isomorphic(p1: Poset, p2: Poset) -> tuple[bool, tuple[int, ...] | None]:
    """Decide order-isomorphism; on success also return the witness bijection.

    The witness maps p1's element x to p2's element witness[x]. Backtracking
    over invariant-compatible images; fine for the intended sizes (<= ~20).
    """
    if p1.size != p2.size:
        return False, None

    def invariants(p: Poset) -> list[tuple]:
        base = [(_popcount(p.down[x]), _popcount(p.up[x])) for x in range(p.size)]
        return [
            (base[x],
             tuple(sorted(base[y] for y in _iter_bits(p.up[x] & ~(1 << x)))),
             tuple(sorted(base[y] for y in _iter_bits(p.down[x] & ~(1 << x)))))
            for x in range(p.size)
        ]

    inv1, inv2 = invariants(p1), invariants(p2)
    if sorted(inv1) != sorted(inv2):
        return False, None
    candidates = [
        [y for y in range(p2.size) if inv2[y] == inv1[x]]
        for x in range(p1.size)
    ]
    order = sorted(range(p1.size), key=lambda x: len(candidates[x]))
    image = [-1] * p1.size
    used = [False] * p2.size

    def place(i: int) -> bool:
        if i == p1.size:
            return True
        x = order[i]
        for y in candidates[x]:
            if used[y]:
                continue
            ok = True
            for j in range(i):
                xj = order[j]
                if (p1.leq(x, xj) != p2.leq(y, image[xj])
                        or p1.leq(xj, x) != p2.leq(image[xj], y)):
                    ok = False
                    break
            if ok:
                image[x] = y
                used[y] = True
                if place(i + 1):
                    return True
                used[y] = False
                image[x] = -1
        return False

    if place(0):
        return True, tuple(image)
    return False, None


# --- assignments into subset lattices ----------------------------------------

@dataclass(frozen=True)
class SubsetAssignment:
    """Images of poset elements inside the subset lattice of [ground_size]."""

    ground_size: int
    images: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.ground_size <= MAX_GROUND:
            raise InputError(f"ground size must be in 0..{MAX_GROUND}")
        full = (1 << self.ground_size) - 1
        for img in self.images:
            if img & ~full:
                raise InputError("image subset leaves the ground set")


def is_order_embedding(assignment: SubsetAssignment, poset: Poset) -> bool:
    """True iff x <= y in the poset exactly when image(x) is a subset of image(y)."""
    if len(assignment.images) != poset.size:
        raise InputError("assignment covers a different number of elements")
    imgs = assignment.images
    for x in range(poset.size):
        for y in range(poset.size):
            if x == y:
                continue
            if (imgs[x] & ~imgs[y] == 0) != poset.leq(x, y):
                return False
    return True


# --- distributive lattices ---------------------------------------------------

class DistLattice:
    """A finite lattice given by meet and join tables.

    ``base_poset``/``downset_masks``, when present, record a Birkhoff
    representation: carrier element i is the down-set downset_masks[i] of
    base_poset. The constructor checks idempotence, commutativity and the
    existence of bounds; `is_distributive_lattice` performs the full law
    check on demand.
    """

    def __init__(self, meet: Sequence[Sequence[int]], join: Sequence[Sequence[int]],
                 base_poset: Poset | None = None,
                 downset_masks: Sequence[int] | None = None):
        self.meet = tuple(tuple(row) for row in meet)
        self.join = tuple(tuple(row) for row in join)
        self.size = len(self.meet)
        if self.size == 0:
            raise InputError("empty lattice")
        self.base_poset = base_poset
        self.downset_masks = tuple(downset_masks) if downset_masks is not None else None
        if (self.downset_masks is None) != (base_poset is None):
            raise InputError("base_poset and downset_masks must come together")
        if self.downset_masks is not None and len(self.downset_masks) != self.size:
            raise InputError("downset_masks length differs from carrier size")
        for table, name in ((self.meet, "meet"), (self.join, "join")):
            if len(table) != self.size or any(len(row) != self.size for row in table):
                raise InputError(f"{name} table is not square")
            for x in range(self.size):
                if table[x][x] != x:
                    raise InputError(f"{name} is not idempotent at {x}")
                for y in range(x):
                    v = table[x][y]
                    if v != table[y][x]:
                        raise InputError(f"{name} is not commutative at ({x}, {y})")
                    if not 0 <= v < self.size:
                        raise InputError(f"{name}[{x}][{y}] out of range")
        self.bottom = self._find_bound(self.meet)
        self.top = self._find_bound(self.join)

    def _find_bound(self, table) -> int:
        for b in range(self.size):
            if all(table[b][x] == b for x in range(self.size)):
                return b
        raise InputError("lattice has no bound element; tables are inconsistent")

    def leq(self, x: int, y: int) -> bool:
        return self.meet[x][y] == x

    def order_poset(self) -> Poset:
        """The carrier as a Poset under the lattice order."""
        up = [0] * self.size
        for x in range(self.size):
            for y in range(self.size):
                if self.meet[x][y] == x:
                    up[x] |= 1 << y
        return Poset(up)

    def lower_covers(self, x: int) -> tuple[int, ...]:
        below = [y for y in range(self.size) if y != x and self.meet[x][y] == y]
        return tuple(y for y in below
                     if not any(self.meet[z][x] == z and self.meet[y][z] == y
                                for z in below if z not in (x, y)))

    def __repr__(self) -> str:
        return f"DistLattice(size={self.size})"


def is_lattice_laws(lat: DistLattice) -> bool:
    """Associativity and absorption on all triples/pairs (O(size^3))."""
    n = lat.size
    meet, join = lat.meet, lat.join
    for x in range(n):
        for y in range(n):
            if join[x][meet[x][y]] != x or meet[x][join[x][y]] != x:
                return False
            for z in range(n):
                if meet[meet[x][y]][z] != meet[x][meet[y][z]]:
                    return False
                if join[join[x][y]][z] != join[x][join[y][z]]:
                    return False
    return True


def is_distributive_lattice(lat: DistLattice, *, triple_cap: int = 200) -> bool:
    """Full distributivity check.

    Sizes up to triple_cap: direct law check on all triples (plus lattice
    laws). Larger: verify that the lattice is isomorphic to the down-set
    lattice of its join-irreducible poset via the canonical Birkhoff map
    x -> {j join-irreducible : j <= x}, which is order-preserving by
    construction; it realizes an isomorphism iff the lattice is distributive.
    """
    n = lat.size
    if n <= triple_cap:
        if not is_lattice_laws(lat):
            return False
        meet, join = lat.meet, lat.join
        for x in range(n):
            for y in range(n):
                my = meet[x][y]
                for z in range(n):
                    if meet[x][join[y][z]] != join[my][meet[x][z]]:
                        return False
        return True
    ji = _join_irreducible_indices(lat)
    down_of = []
    for x in range(n):
        mask = 0
        for pos, j in enumerate(ji):
            if lat.meet[j][x] == j:
                mask |= 1 << pos
        down_of.append(mask)
    if len(set(down_of)) != n:
        return False
    table = {m: i for i, m in enumerate(down_of)}
    for x in range(n):
        for y in range(n):
            if table.get(down_of[x] & down_of[y]) != lat.meet[x][y]:
                return False
            if table.get(down_of[x] | down_of[y]) != lat.join[x][y]:
                return False
    return True


def _join_irreducible_indices(lat: DistLattice) -> tuple[int, ...]:
    """Carrier indices with exactly one lower cover (excludes the bottom)."""
    return tuple(x for x in range(lat.size) if len(lat.lower_covers(x)) == 1)


def _meet_irreducible_indices(lat: DistLattice) -> tuple[int, ...]:
    """Carrier indices with exactly one upper cover (excludes the top)."""
    out = []
    for x in range(lat.size):
        above = [y for y in range(lat.size) if y != x and lat.join[x][y] == y]
        upper_covers = [y for y in above
                        if not any(lat.join[z][y] == y
                                   for z in above if z != y)]
        if len(upper_covers) == 1:
            out.append(x)
    return tuple(out)


def join_irreducibles(lat: DistLattice) -> Poset:
    """The poset induced on the join-irreducible carrier elements.

    Labels carry the original carrier indices. The one-element lattice has
    no join-irreducibles and is rejected; callers handle it separately.
    """
    ji = _join_irreducible_indices(lat)
    if not ji:
        raise InputError("the one-element lattice has no join-irreducibles")
    pos = {j: i for i, j in enumerate(ji)}
    up = [0] * len(ji)
    for j in ji:
        for k in ji:
            if lat.meet[j][k] == j:
                up[pos[j]] |= 1 << pos[k]
    return Poset(up, labels=tuple(str(j) for j in ji))


def down_set_lattice(poset: Poset, *, cap: int = 1 << 20) -> DistLattice:
    """The lattice of down-sets of `poset`, ordered by inclusion.

    Carrier elements are numbered by (size, mask) of their down-set masks, so
    0 is the empty down-set and size-1 the full one. Raises
    ResourceLimitError once more than `cap` down-sets appear.
    """
    order = poset.linear_extension
    below = [poset.down[x] & ~(1 << x) for x in range(poset.size)]
    masks: list[int] = []

    # every down-set is reached exactly once: its elements sorted by position
    # in the linear extension form the unique admissible insertion sequence
    def extend(mask: int, last_pos: int):
        masks.append(mask)
        if len(masks) > cap:
            raise ResourceLimitError(
                f"down-set count exceeds the cap ({cap}); raise cap= to proceed")
        for p in range(last_pos + 1, poset.size):
            x = order[p]
            if below[x] & ~mask == 0:
                extend(mask | (1 << x), p)

    extend(0, -1)
    masks.sort(key=lambda m: (_popcount(m), m))
    index = {m: i for i, m in enumerate(masks)}
    n = len(masks)
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i, mi in enumerate(masks):
        for j in range(i + 1):
            mj = masks[j]
            meet[i][j] = meet[j][i] = index[mi & mj]
            join[i][j] = join[j][i] = index[mi | mj]
    return DistLattice(meet, join, base_poset=poset, downset_masks=masks)


def direct_power(lat: DistLattice, k: int, *, cap: int = 4096) -> DistLattice:
    """The k-fold direct power, carrier indexed in mixed radix (first factor
    most significant).

    When the factor has a Birkhoff representation, the power carries one too,
    over the cardinal sum of k copies of the base poset.
    """
    if k < 1:
        raise InputError("direct_power needs k >= 1")
    s = lat.size
    total = s ** k
    if total > cap:
        raise ResourceLimitError(
            f"direct power would have {total} elements (cap {cap})")

    digits_of = [tuple(_mixed_digits(e, s, k)) for e in range(total)]

    def combine(table, a, b):
        ds = [table[x][y] for x, y in zip(digits_of[a], digits_of[b])]
        e = 0
        for d in ds:
            e = e * s + d
        return e

    meet = [[combine(lat.meet, a, b) for b in range(total)] for a in range(total)]
    join = [[combine(lat.join, a, b) for b in range(total)] for a in range(total)]
    base = None
    masks = None
    if lat.base_poset is not None:
        base = cardinal_sum(lat.base_poset, k)
        w = lat.base_poset.size
        masks = []
        for e in range(total):
            m = 0
            for j, d in enumerate(digits_of[e]):
                m |= lat.downset_masks[d] << (j * w)
            masks.append(m)
    return DistLattice(meet, join, base_poset=base, downset_masks=masks)


def _mixed_digits(e: int, s: int, k: int) -> list[int]:
    out = [0] * k
    for j in range(k - 1, -1, -1):
        e, out[j] = divmod(e, s)
    return out


def chain_lattice(size: int) -> DistLattice:
    """The chain lattice with `size` elements (min/max as meet/join)."""
    if size < 1:
        raise InputError("chain lattice needs size >= 1")
    meet = [[min(x, y) for y in range(size)] for x in range(size)]
    join = [[max(x, y) for y in range(size)] for x in range(size)]
    return DistLattice(meet, join)
