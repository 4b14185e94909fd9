"""Concrete matroids realizing an abstract lattice with prescribed ranks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Mapping, Sequence

from .errors import RankViolation, SizeLimitExceeded
from .lattice import Lattice, _bits
from .matroid import Matroid, matroid_from_cyclic_flats, max_ground, zeta_lattice


def check_rank_assignment(L: Lattice, rho: Sequence[int]):
    """Return ``(True, None)`` or ``(False, (condition, elements))``.

    Conditions: ``"a"`` bottom has rank 0; ``"b"`` strictly order-preserving;
    ``"c"`` ``rho(x v y) + rho(x ^ y) <= rho(x) + rho(y)`` for incomparable pairs.
    """
    if len(rho) != len(L):
        raise ValueError("one rank per lattice element")
    if rho[L.bottom] != 0:
        return False, ("a", (L.bottom,))
    for x in range(len(L)):
        for y in _bits(L.up[x] & ~(1 << x)):
            if rho[x] >= rho[y]:
                return False, ("b", (x, y))
    for x, y in combinations(range(len(L)), 2):
        if not L.comparable(x, y):
            if rho[L.join[x][y]] + rho[L.meet[x][y]] > rho[x] + rho[y]:
                return False, ("c", (x, y))
    return True, None


def validate_rank_assignment(L: Lattice, rho: Sequence[int]) -> None:
    ok, violation = check_rank_assignment(L, rho)
    if not ok:
        cond, elems = violation
        labels = [L.labels[e] for e in elems]
        raise RankViolation(cond, labels, f"rank condition ({cond}) fails at {labels}")


def ranks_from_mapping(L: Lattice, ranks: Mapping) -> list[int]:
    """Accept ranks keyed by label or index."""
    out = []
    for x in range(len(L)):
        out.append(ranks[x] if x in ranks else ranks[L.labels[x]])
    return out


def enumerate_rank_assignments(L: Lattice, max_top: int) -> Iterator[tuple[int, ...]]:
    """Every valid assignment with ``rho(top) <= max_top``.

    Elements are assigned bottom-up; when an element is the join of an
    incomparable pair, the semimodular condition for that pair is checked.
    """
    n = len(L)
    order = sorted(range(n), key=lambda x: (L.down[x].bit_count(), x))
    height_above = [0] * n
    for x in sorted(range(n), key=lambda v: L.up[v].bit_count()):
        for y in L.upper_covers(x):
            height_above[x] = max(height_above[x], height_above[y] + 1)
    pairs_with_join = {z: [] for z in range(n)}
    for x, y in combinations(range(n), 2):
        if not L.comparable(x, y):
            pairs_with_join[L.join[x][y]].append((x, y))
    lower = [L.lower_covers(x) for x in range(n)]
    rho = [0] * n

    def assign(i):
        if i == n:
            yield tuple(rho)
            return
        x = order[i]
        if x == L.bottom:
            lo = hi = 0
        else:
            lo = max(rho[y] for y in lower[x]) + 1
            hi = max_top - height_above[x]
        for v in range(lo, hi + 1):
            rho[x] = v
            if all(v + rho[L.meet[a][b]] <= rho[a] + rho[b] for a, b in pairs_with_join[x]):
                yield from assign(i + 1)
        rho[x] = 0

    yield from assign(0)


@dataclass(frozen=True)
class Realization:
    matroid: Matroid
    phi: tuple[int, ...]        # lattice element -> cyclic flat (bitmask)
    blocks: tuple[int, ...]     # lattice element -> its own block of points

    def flat_index(self) -> tuple[int, ...]:
        """Lattice element -> position of its flat in ``matroid.flats``."""
        where = {f: i for i, f in enumerate(self.matroid.flats)}
        return tuple(where[f] for f in self.phi)


def realization_ground_size(L: Lattice, rho: Sequence[int]) -> int:
    return sum(rho[x] + 1 for x in range(len(L)) if x != L.bottom)


def realize(L: Lattice, rho: Sequence[int], verify: bool = True) -> Realization:
    """Matroid whose cyclic flats are isomorphic to ``L`` with ranks ``rho``.

    Each non-bottom element gets a fresh block of ``rho(x) + 1`` points and
    maps to the union of the blocks below it.  Intersections of these unions
    are again such unions, so the cyclic-flat axioms follow from the rank
    conditions.  With ``verify`` the isomorphism and the ranks are checked
    against the built matroid.
    """
    validate_rank_assignment(L, rho)
    size = realization_ground_size(L, rho)
    if size > max_ground():
        raise SizeLimitExceeded("realization ground set", size, max_ground())
    blocks = [0] * len(L)
    nxt = 0
    for x in range(len(L)):
        if x != L.bottom:
            width = rho[x] + 1
            blocks[x] = ((1 << width) - 1) << nxt
            nxt += width
    phi = []
    for x in range(len(L)):
        m = 0
        for y in _bits(L.down[x]):
            m |= blocks[y]
        phi.append(m)
    M = matroid_from_cyclic_flats(size, zip(phi, rho))
    result = Realization(M, tuple(phi), tuple(blocks))
    if verify:
        _verify(L, rho, result)
    return result


def _verify(L: Lattice, rho, R: Realization) -> None:
    Z, ranks = zeta_lattice(R.matroid)
    idx = R.flat_index()
    if len(Z) != len(L) or len(set(idx)) != len(L):
        raise RuntimeError("realization is not a bijection onto the cyclic flats")
    for x in range(len(L)):
        if R.matroid.rank(R.phi[x]) != rho[x] or ranks[idx[x]] != rho[x]:
            raise RuntimeError(f"rank mismatch at {L.labels[x]!r}")
        for y in range(len(L)):
            if L.leq(x, y) != Z.leq(idx[x], idx[y]):
                raise RuntimeError("realization map is not an order isomorphism")
