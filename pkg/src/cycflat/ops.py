"""Constructions that build new lattices from old ones.

Each constructor returns a validated :class:`~cycflat.lattice.Lattice`.
Composite labels are strings so that results can be written to lattice files.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .errors import InvalidFamily
from .lattice import Lattice, _bits, build_lattice


def _tag(prefix, label) -> str:
    return f"{prefix}:{label}"


def linear_sum(P: Lattice, Q: Lattice) -> Lattice:
    """Every element of ``P`` below every element of ``Q``."""
    p = len(P)
    full_q = ((1 << len(Q)) - 1) << p
    up = [P.up[x] | full_q for x in range(p)] + [Q.up[y] << p for y in range(len(Q))]
    labels = [_tag(1, a) for a in P.labels] + [_tag(2, b) for b in Q.labels]
    return Lattice.from_up_masks(labels, up)


def identify_sum(P: Lattice, Q: Lattice) -> Lattice:
    """Glue the top of ``P`` to the bottom of ``Q``."""
    keep = [x for x in range(len(P)) if x != P.top]
    pos = {x: i for i, x in enumerate(keep)}
    k = len(keep)
    full_q = ((1 << len(Q)) - 1) << k
    up = []
    for x in keep:
        up.append(sum(1 << pos[y] for y in _bits(P.up[x]) if y in pos) | full_q)
    up += [Q.up[y] << k for y in range(len(Q))]
    labels = [_tag(1, P.labels[x]) for x in keep] + [_tag(2, b) for b in Q.labels]
    return Lattice.from_up_masks(labels, up)


def star(L1: Lattice, L2: Lattice) -> Lattice:
    """New bounds around ``L1`` and ``L2`` with both old tops removed."""
    if len(L1) < 2 or len(L2) < 2:
        raise ValueError("star needs lattices with at least two elements")
    labels = ["bot", "top"]
    relations = []
    parts = []
    for tag, L in ((1, L1), (2, L2)):
        kept = [x for x in range(len(L)) if x != L.top]
        parts.append(kept)
        for x in kept:
            labels.append(_tag(tag, L.labels[x]))
            relations += [("bot", labels[-1]), (labels[-1], "top")]
            relations += [(labels[-1], _tag(tag, L.labels[y]))
                          for y in L.upper_covers(x) if y != L.top]
    return build_lattice(labels, relations)


def lex_sum(L: Lattice, family: Mapping) -> Lattice:
    """Lexicographic sum: ``(x,a) <= (y,b)`` iff ``x < y`` or ``x == y and a <= b``.

    ``family`` maps each element of ``L`` (index or label) to a lattice.
    The result is validated, so a family without unique meets/joins raises
    :class:`~cycflat.errors.NotALattice`.
    """
    fibers = []
    for x in range(len(L)):
        if x in family:
            fibers.append(family[x])
        else:
            fibers.append(family[L.labels[x]])
    offset = []
    total = 0
    for F in fibers:
        offset.append(total)
        total += len(F)
    block = [((1 << len(F)) - 1) << offset[x] for x, F in enumerate(fibers)]
    labels = []
    up = []
    for x, F in enumerate(fibers):
        above = 0
        for y in _bits(L.up[x] & ~(1 << x)):
            above |= block[y]
        for a in range(len(F)):
            labels.append(f"({L.labels[x]},{F.labels[a]})")
            up.append(above | F.up[a] << offset[x])
    return Lattice.from_up_masks(labels, up)


def is_ideal(L: Lattice, I) -> bool:
    members = set(I)
    return all(L.down[x] & ~sum(1 << y for y in members) == 0 for x in members)


def ideal_adjoin_top(L: Lattice, I) -> Lattice:
    """The order induced on ``I`` plus the top of ``L``."""
    members = set(I)
    if L.bottom not in members:
        raise ValueError("ideal must contain the bottom element")
    if not is_ideal(L, members):
        raise ValueError("set is not an order ideal")
    return L.induced(members | {L.top})


def ideals(L: Lattice):
    """Every order ideal containing the bottom, as frozensets (brute force)."""
    n = len(L)
    for mask in range(1 << n):
        if not mask >> L.bottom & 1:
            continue
        if all(L.down[x] & ~mask == 0 for x in _bits(mask)):
            yield frozenset(_bits(mask))


def direct_product(P: Lattice, Q: Lattice) -> Lattice:
    q = len(Q)
    labels = [f"({a},{b})" for a in P.labels for b in Q.labels]
    up = []
    for x in range(len(P)):
        for y in range(q):
            m = 0
            for xx in _bits(P.up[x]):
                m |= Q.up[y] << (xx * q)
            up.append(m)
    return Lattice.from_up_masks(labels, up)


def coatom_chain_lattice(segment_lengths: Sequence[int],
                         intersection_depths: Sequence[int]) -> Lattice:
    """Lattice whose bottom-to-coatom intervals are chains.

    ``segment_lengths[0]`` is the number of spine elements above the bottom
    (the last one is a coatom).  Auxiliary chain ``j`` has
    ``segment_lengths[j]`` new elements and shares the first
    ``intersection_depths[j-1]`` spine elements above the bottom; depths must
    be pairwise distinct and smaller than the spine length.
    """
    if not segment_lengths:
        raise InvalidFamily("need at least the spine length")
    spine, *aux = segment_lengths
    depths = list(intersection_depths)
    if len(depths) != len(aux):
        raise InvalidFamily("one depth per auxiliary chain")
    if spine < 1 or any(a < 1 for a in aux):
        raise InvalidFamily("segment lengths must be positive")
    if len(set(depths)) != len(depths):
        raise InvalidFamily(f"depths {depths} repeat; intersections must differ")
    if any(not 0 <= d < spine for d in depths):
        raise InvalidFamily("each depth must lie below the spine's coatom")
    labels = ["0", "1"] + [f"s{i}" for i in range(1, spine + 1)]
    relations = [("0", "s1"), (f"s{spine}", "1")]
    relations += [(f"s{i}", f"s{i + 1}") for i in range(1, spine)]
    for j, (length, d) in enumerate(zip(aux, depths), start=1):
        names = [f"c{j}_{i}" for i in range(1, length + 1)]
        labels += names
        base = "0" if d == 0 else f"s{d}"
        relations += [(base, names[0]), (names[-1], "1")]
        relations += list(zip(names, names[1:]))
    L = build_lattice(labels, relations)
    _check_coatom_chain_property(L, L.index(f"s{spine}"))
    return L


def _check_coatom_chain_property(L: Lattice, spine_coatom: int) -> None:
    coatoms = L.lower_covers(L.top)
    spine = L.down[spine_coatom]
    seen = set()
    for c in coatoms:
        interval = L.down[c]
        members = list(_bits(interval))
        if any(not L.comparable(a, b) for a in members for b in members):
            raise InvalidFamily("a bottom-to-coatom interval is not a chain")
        if c != spine_coatom:
            shared = interval & spine
            if shared in seen or shared == spine:
                raise InvalidFamily("intersections with the spine must differ")
            seen.add(shared)
