"""Exhaustive generation of small lattices and their realized matroids.

Lattices on ``n`` elements are the posets on ``n - 2`` elements with a new
bottom and top attached, kept when meets and joins exist.  Posets are grown
one maximal element at a time (every poset arises by adding a maximal
element above an order ideal of a smaller one) and duplicates are rejected
by isomorphism testing within buckets of equal invariants.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .errors import NotALattice
from .lattice import Lattice, _bits, _invariants, order_isomorphism
from .realization import Realization, enumerate_rank_assignments, realize


def _down_masks(up):
    down = [0] * len(up)
    for x, m in enumerate(up):
        for y in _bits(m):
            down[y] |= 1 << x
    return down


def _signature(up, down):
    return tuple(sorted(_invariants(up, down)))


@lru_cache(maxsize=None)
def posets(k: int) -> tuple[tuple[int, ...], ...]:
    """Isomorphism classes of posets on ``k`` elements, as up-set masks."""
    if k == 0:
        return ((),)
    found: dict[tuple, list] = {}
    out = []
    for up in posets(k - 1):
        down = _down_masks(up)
        new = k - 1
        for ideal in _ideals(up, down):
            grown = [m | (1 << new if ideal >> x & 1 else 0) for x, m in enumerate(up)]
            grown.append(1 << new)
            gdown = _down_masks(grown)
            sig = _signature(grown, gdown)
            bucket = found.setdefault(sig, [])
            if any(order_isomorphism(grown, gdown, u, d) for u, d in bucket):
                continue
            bucket.append((grown, gdown))
            out.append(tuple(grown))
    return tuple(out)


def _ideals(up, down):
    n = len(up)
    for mask in range(1 << n):
        if all(down[x] & ~mask == 0 for x in _bits(mask)):
            yield mask


def _with_bounds(up) -> list[int]:
    k = len(up)
    top = 1 << (k + 1)
    return [(1 << (k + 2)) - 1] + [(m << 1) | top for m in up] + [top]


@lru_cache(maxsize=None)
def lattices(n: int) -> tuple[Lattice, ...]:
    """All lattices with exactly ``n`` elements, one per isomorphism class."""
    if n < 1:
        return ()
    if n == 1:
        return (Lattice.from_up_masks(["0"], [1]),)
    out = []
    for up in posets(n - 2):
        masks = _with_bounds(up)
        labels = ["0"] + [f"p{i}" for i in range(n - 2)] + ["1"]
        try:
            out.append(Lattice.from_up_masks(labels, masks))
        except NotALattice:
            continue
    return tuple(out)


def lattices_up_to(max_size: int) -> Iterator[Lattice]:
    for n in range(1, max_size + 1):
        yield from lattices(n)


def generate_corpus(max_lattice_size: int = 6,
                    max_top_rank: int = 4) -> Iterator[tuple[Lattice, tuple[int, ...], Realization]]:
    """Every lattice up to the size cap with every rank assignment, realized."""
    for L in lattices_up_to(max_lattice_size):
        for rho in enumerate_rank_assignments(L, max_top_rank):
            yield L, rho, realize(L, rho)
