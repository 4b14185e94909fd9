"""Finite bounded lattices.

Elements are positional indices ``0..n-1``; labels are for presentation only.
The order is stored as two lists of bitmasks: ``up[x]`` holds every ``y >= x``
and ``down[x]`` every ``y <= x``.  Meet and join tables are filled eagerly at
construction, so a :class:`Lattice` is immutable and cheap to query.
"""

from __future__ import annotations

from itertools import combinations
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import NotALattice, NotAPartialOrder, SizeLimitExceeded

DIMENSION_SIZE_LIMIT = 12


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Lattice:
    """A finite lattice with precomputed order masks and meet/join tables.

    Build one with :func:`build_lattice` (from labels and any generating set
    of relations) or :meth:`from_up_masks` (from a closed order).
    """

    __slots__ = ("labels", "up", "down", "meet", "join", "bottom", "top", "_index")

    def __init__(self, labels, up, down, meet, join, bottom, top):
        self.labels = tuple(labels)
        self.up = tuple(up)
        self.down = tuple(down)
        self.meet = meet
        self.join = join
        self.bottom = bottom
        self.top = top
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    @classmethod
    def from_up_masks(cls, labels: Sequence[Hashable], up: Sequence[int]) -> "Lattice":
        """Validate a reflexive, transitive order given by up-set masks."""
        n = len(labels)
        if n == 0:
            raise ValueError("a lattice needs at least one element")
        if len(set(labels)) != n:
            raise ValueError("labels must be distinct")
        up = list(up)
        down = [0] * n
        for x in range(n):
            for y in _bits(up[x]):
                down[y] |= 1 << x
        for x in range(n):
            both = up[x] & down[x] & ~(1 << x)
            if both:
                y = (both & -both).bit_length() - 1
                raise NotAPartialOrder((labels[x], labels[y]))
        join = [[0] * n for _ in range(n)]
        meet = [[0] * n for _ in range(n)]
        for x in range(n):
            join[x][x] = meet[x][x] = x
            for y in range(x + 1, n):
                j = _least(up, down, up[x] & up[y])
                if j is None:
                    mins = _minimal(down, up[x] & up[y])
                    raise NotALattice((labels[x], labels[y]), "join",
                                      [labels[z] for z in mins])
                m = _least(down, up, down[x] & down[y])
                if m is None:
                    maxs = _minimal(up, down[x] & down[y])
                    raise NotALattice((labels[x], labels[y]), "meet",
                                      [labels[z] for z in maxs])
                join[x][y] = join[y][x] = j
                meet[x][y] = meet[y][x] = m
        full = (1 << n) - 1
        bottom = next(x for x in range(n) if up[x] == full)
        top = next(x for x in range(n) if down[x] == full)
        return cls(labels, up, down,
                   tuple(map(tuple, meet)), tuple(map(tuple, join)), bottom, top)

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"Lattice({len(self)} elements, {len(covers(self))} covers)"

    def __eq__(self, other) -> bool:
        return (isinstance(other, Lattice) and self.labels == other.labels
                and self.up == other.up)

    def __hash__(self) -> int:
        return hash((self.labels, self.up))

    def index(self, label) -> int:
        return self._index[label]

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def less(self, x: int, y: int) -> bool:
        return x != y and bool(self.up[x] >> y & 1)

    def comparable(self, x: int, y: int) -> bool:
        return bool((self.up[x] | self.down[x]) >> y & 1)

    def leq_matrix(self) -> list[list[bool]]:
        n = len(self)
        return [[self.leq(x, y) for y in range(n)] for x in range(n)]

    def upper_covers(self, x: int) -> list[int]:
        strict = self.up[x] & ~(1 << x)
        return [y for y in _bits(strict) if self.down[y] & strict == 1 << y]

    def lower_covers(self, x: int) -> list[int]:
        strict = self.down[x] & ~(1 << x)
        return [y for y in _bits(strict) if self.up[y] & strict == 1 << y]

    def join_all(self, elements: Iterable[int]) -> int:
        acc = self.bottom
        for x in elements:
            acc = self.join[acc][x]
        return acc

    def meet_all(self, elements: Iterable[int]) -> int:
        acc = self.top
        for x in elements:
            acc = self.meet[acc][x]
        return acc

    def interval(self, a: int, b: int) -> list[int]:
        return list(_bits(self.up[a] & self.down[b]))

    def is_chain(self) -> bool:
        return all(self.comparable(x, y) for x, y in combinations(range(len(self)), 2))

    def heights(self) -> list[int]:
        """Length of the longest chain from the bottom to each element."""
        h = [0] * len(self)
        for x in sorted(range(len(self)), key=lambda v: self.down[v].bit_count()):
            for y in self.lower_covers(x):
                h[x] = max(h[x], h[y] + 1)
        return h

    def induced(self, elements: Iterable[int], labels=None) -> "Lattice":
        """Sub-order on ``elements`` (validated; its meets/joins may differ)."""
        idx = sorted(set(elements))
        pos = {x: i for i, x in enumerate(idx)}
        up = []
        for x in idx:
            m = 0
            for y in _bits(self.up[x]):
                if y in pos:
                    m |= 1 << pos[y]
            up.append(m)
        if labels is None:
            labels = [self.labels[x] for x in idx]
        return Lattice.from_up_masks(labels, up)

    def relabel(self, labels: Sequence[Hashable]) -> "Lattice":
        return Lattice(labels, self.up, self.down, self.meet, self.join,
                       self.bottom, self.top)


def _least(up, down, bounds: int):
    for z in _bits(bounds):
        if bounds & ~up[z] == 0:
            return z
    return None


def _minimal(down, bounds: int) -> list[int]:
    return [z for z in _bits(bounds) if down[z] & bounds == 1 << z]


def build_lattice(labels: Sequence[Hashable], relations: Iterable[tuple]) -> Lattice:
    """Close ``relations`` (pairs ``(x, y)`` meaning ``x <= y``) and validate.

    Raises :class:`NotAPartialOrder` on a cycle and :class:`NotALattice` when
    some pair lacks a unique join or meet.
    """
    labels = list(labels)
    if len(set(labels)) != len(labels):
        raise ValueError("labels must be distinct")
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    up = [1 << i for i in range(n)]
    for a, b in relations:
        try:
            up[index[a]] |= 1 << index[b]
        except KeyError as exc:
            raise ValueError(f"relation references unknown label {exc.args[0]!r}") from None
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if up[i] & bit:
                up[i] |= up[k]
    return Lattice.from_up_masks(labels, up)


def chain(n: int) -> Lattice:
    return build_lattice([str(i) for i in range(n)],
                         [(str(i), str(i + 1)) for i in range(n - 1)])


def boolean_lattice(k: int) -> Lattice:
    """Subsets of a ``k``-set ordered by inclusion; labels list the members."""
    letters = "abcdefghijklmnopqrstuvwxyz"
    labels = ["".join(letters[i] for i in range(k) if s >> i & 1) or "0"
              for s in range(1 << k)]
    up = [sum(1 << t for t in range(1 << k) if t & s == s) for s in range(1 << k)]
    return Lattice.from_up_masks(labels, up)


def diamond() -> Lattice:
    """The lattice M3: three atoms that are also coatoms."""
    return build_lattice(["0", "a", "b", "c", "1"],
                         [("0", x) for x in "abc"] + [(x, "1") for x in "abc"])


def pentagon() -> Lattice:
    """The lattice N5."""
    return build_lattice(["0", "a", "b", "c", "1"],
                         [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])


def covers(L: Lattice) -> list[tuple[int, int]]:
    return [(x, y) for x in range(len(L)) for y in L.upper_covers(x)]


def antichains(L: Lattice, min_size: int = 1) -> Iterator[tuple[int, ...]]:
    """Yield every antichain with at least ``min_size`` elements.

    Depth-first over increasing indices, so the output is duplicate-free and
    sorted lexicographically.
    """
    if min_size < 1:
        raise ValueError("min_size must be at least 1")
    n = len(L)
    comp = [L.up[x] | L.down[x] for x in range(n)]

    def extend(chosen, allowed):
        for x in _bits(allowed):
            rest = allowed & ~comp[x] & ~((1 << (x + 1)) - 1)
            new = chosen + (x,)
            if len(new) >= min_size:
                yield new
            if rest and len(new) + rest.bit_count() >= min_size:
                yield from extend(new, rest)

    yield from extend((), (1 << n) - 1)


def width(L: Lattice) -> int:
    return max(len(a) for a in antichains(L))


def order_dual(L: Lattice) -> Lattice:
    return Lattice(L.labels, L.down, L.up, L.join, L.meet, L.top, L.bottom)


def principal_filter(L: Lattice, y: int) -> frozenset[int]:
    return frozenset(_bits(L.up[y]))


def principal_ideal(L: Lattice, y: int) -> frozenset[int]:
    return frozenset(_bits(L.down[y]))


def is_distributive(L: Lattice) -> bool:
    n = len(L)
    m, j = L.meet, L.join
    return all(m[x][j[y][z]] == j[m[x][y]][m[x][z]]
               for x in range(n) for y in range(n) for z in range(y + 1, n))


def sublattice_closure(L: Lattice, S: Iterable[int]) -> frozenset[int]:
    """Smallest superset of ``S`` closed under meet and join."""
    current = set(S)
    frontier = list(current)
    while frontier:
        fresh = []
        for x in frontier:
            for y in list(current):
                for z in (L.meet[x][y], L.join[x][y]):
                    if z not in current:
                        current.add(z)
                        fresh.append(z)
        frontier = fresh
    return frozenset(current)


def sublattice_generated(L: Lattice, S: Iterable[int]) -> Lattice:
    return L.induced(sublattice_closure(L, S))


def order_dimension_at_most_2(L: Lattice, max_size: int = DIMENSION_SIZE_LIMIT):
    """Decide whether the order is the intersection of two linear extensions.

    Returns ``(True, coords)`` where ``coords[x] = (p1, p2)`` are positions of
    ``x`` in the two extensions (so ``x <= y`` iff both coordinates are
    ``<=``), or ``(False, None)``.  The first extension is searched
    exhaustively; the second is then forced, since it must reverse every
    incomparable pair of the first.
    """
    n = len(L)
    if n > max_size:
        raise SizeLimitExceeded("order dimension search", n, max_size)
    strict_down = [L.down[x] & ~(1 << x) for x in range(n)]
    comp = [L.up[x] | L.down[x] for x in range(n)]

    # score[x] = number of placed y with y before x in the second extension
    order: list[int] = []
    score: dict[int, int] = {}

    def place(placed_mask):
        if len(order) == n:
            return True
        for z in range(n):
            if placed_mask >> z & 1 or strict_down[z] & ~placed_mask:
                continue
            # every placed x is comparable-below z or incomparable (then z goes first)
            new_scores = {}
            z_score = 0
            for x in order:
                if comp[z] >> x & 1:
                    z_score += 1
                    new_scores[x] = score[x]
                else:
                    new_scores[x] = score[x] + 1
            new_scores[z] = z_score
            if len(set(new_scores.values())) != len(new_scores):
                continue
            saved = dict(score)
            score.clear()
            score.update(new_scores)
            order.append(z)
            if place(placed_mask | 1 << z):
                return True
            order.pop()
            score.clear()
            score.update(saved)
        return False

    if not place(0):
        return False, None
    pos1 = {x: i for i, x in enumerate(order)}
    return True, [(pos1[x], score[x]) for x in range(n)]


def _invariants(up, down):
    n = len(up)
    out = []
    for x in range(n):
        strict_up = up[x] & ~(1 << x)
        strict_down = down[x] & ~(1 << x)
        ucov = sum(1 for y in _bits(strict_up) if down[y] & strict_up == 1 << y)
        lcov = sum(1 for y in _bits(strict_down) if up[y] & strict_down == 1 << y)
        out.append((down[x].bit_count(), up[x].bit_count(), lcov, ucov))
    return out


def order_isomorphism(up1, down1, up2, down2, colors1=None, colors2=None):
    """Isomorphism between two orders given by up/down masks, or None.

    Optional ``colors`` (e.g. ranks) must be preserved by the map.
    """
    n = len(up1)
    if n != len(up2):
        return None
    inv1, inv2 = _invariants(up1, down1), _invariants(up2, down2)
    if colors1 is not None:
        inv1 = [i + (c,) for i, c in zip(inv1, colors1)]
        inv2 = [i + (c,) for i, c in zip(inv2, colors2)]
    if sorted(inv1) != sorted(inv2):
        return None
    order = sorted(range(n), key=lambda x: (inv1[x][0], inv1[x]))
    candidates = {x: [y for y in range(n) if inv2[y] == inv1[x]] for x in range(n)}
    phi = [-1] * n
    used = [False] * n

    def search(i):
        if i == n:
            return True
        x = order[i]
        for y in candidates[x]:
            if used[y]:
                continue
            if all((up1[a] >> x & 1) == (up2[phi[a]] >> y & 1)
                   and (up1[x] >> a & 1) == (up2[y] >> phi[a] & 1)
                   for a in order[:i]):
                phi[x] = y
                used[y] = True
                if search(i + 1):
                    return True
                used[y] = False
        phi[x] = -1
        return False

    return tuple(phi) if search(0) else None


def find_isomorphism(L1: Lattice, L2: Lattice, colors1=None, colors2=None):
    """Return an order isomorphism as a tuple ``phi`` (``phi[x]`` in ``L2``) or None.

    When ``colors1``/``colors2`` are given, ``colors2[phi[x]] == colors1[x]``.
    """
    return order_isomorphism(L1.up, L1.down, L2.up, L2.down, colors1, colors2)


def is_isomorphic(L1: Lattice, L2: Lattice) -> bool:
    return find_isomorphism(L1, L2) is not None
