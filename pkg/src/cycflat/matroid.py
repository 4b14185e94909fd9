"""Matroids given by their cyclic flats and the ranks of those flats.

Subsets of the ground set ``{0, ..., n-1}`` are int bitmasks.  The rank of an
arbitrary set is ``min over cyclic flats F of rank(F) + |X - F|``.  Every
minor and dual keeps a rank oracle of that min-plus shape, so cyclic flats
of derived matroids are recomputed from the oracle by the kernels in
:mod:`cycflat._kernels` rather than transformed symbolically.
"""

from __future__ import annotations

import os
from itertools import combinations
from typing import Callable, Iterable, Sequence

from . import _kernels
from .errors import NotALattice, RankViolation, SizeLimitExceeded
from .lattice import Lattice, _bits

MAX_GROUND = 64


def max_ground() -> int:
    """Ground-size cap; ``CYCFLAT_MAX_GROUND`` may lower it."""
    env = os.environ.get("CYCFLAT_MAX_GROUND")
    if env:
        return min(MAX_GROUND, int(env))
    return MAX_GROUND


def as_mask(X) -> int:
    if isinstance(X, int):
        return X
    m = 0
    for e in X:
        m |= 1 << e
    return m


def mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(_bits(mask))


def format_set(mask: int) -> str:
    return "{" + ",".join(map(str, _bits(mask))) + "}"


def _compress(mask: int, keep: Sequence[int]) -> int:
    out = 0
    for i, e in enumerate(keep):
        if mask >> e & 1:
            out |= 1 << i
    return out


def _expand(mask: int, keep: Sequence[int]) -> int:
    out = 0
    for i in _bits(mask):
        out |= 1 << keep[i]
    return out


class Matroid:
    """Ground size plus the cyclic flats (bitmasks) with their ranks.

    Instances come from :func:`matroid_from_cyclic_flats`, which validates
    the family; the constructor itself trusts its arguments.
    """

    __slots__ = ("n", "flats", "ranks")

    def __init__(self, n: int, flats: Sequence[int], ranks: Sequence[int]):
        order = sorted(range(len(flats)), key=lambda i: (flats[i].bit_count(), flats[i]))
        self.n = n
        self.flats = tuple(flats[i] for i in order)
        self.ranks = tuple(ranks[i] for i in order)

    @property
    def ground_size(self) -> int:
        return self.n

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def cyclic_flats(self) -> list[tuple[frozenset[int], int]]:
        return [(mask_to_set(f), r) for f, r in zip(self.flats, self.ranks)]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matroid) and self.n == other.n
                and self.flats == other.flats and self.ranks == other.ranks)

    def __hash__(self) -> int:
        return hash((self.n, self.flats, self.ranks))

    def __repr__(self) -> str:
        body = ", ".join(f"{format_set(f)}:{r}" for f, r in zip(self.flats, self.ranks))
        return f"Matroid(n={self.n}, [{body}])"

    def rank(self, X) -> int:
        x = as_mask(X)
        return min(r + (x & ~f).bit_count() for f, r in zip(self.flats, self.ranks))

    @property
    def full_rank(self) -> int:
        return self.rank(self.full)

    def closure(self, X) -> int:
        x = as_mask(X)
        k = self.rank(x)
        cl = x
        for e in _bits(self.full & ~x):
            if self.rank(x | 1 << e) == k:
                cl |= 1 << e
        return cl

    def is_flat(self, X) -> bool:
        x = as_mask(X)
        return self.closure(x) == x

    def cyclic_part(self, X) -> int:
        """Union of the circuits inside ``X``: drop the isthmuses of ``M|X``."""
        x = as_mask(X)
        k = self.rank(x)
        return sum(1 << e for e in _bits(x) if self.rank(x ^ 1 << e) == k)

    def is_cyclic_flat(self, X) -> bool:
        x = as_mask(X)
        return self.is_flat(x) and self.cyclic_part(x) == x

    def loops(self) -> int:
        return self.flats[0]

    def isthmuses(self) -> int:
        rE = self.full_rank
        return sum(1 << e for e in range(self.n) if self.rank(self.full ^ 1 << e) < rE)


def _inclusion_lattice(flats: Sequence[int]) -> Lattice:
    up = [sum(1 << j for j, g in enumerate(flats) if f & ~g == 0) for f in flats]
    return Lattice.from_up_masks([format_set(f) for f in flats], up)


def validate_cyclic_flats(n: int, family: Sequence[tuple[int, int]]) -> Lattice:
    """Check the cyclic-flat axioms; return the inclusion lattice on success.

    Axioms: the sets form a lattice under inclusion, the least one has rank
    0, ``0 < r(Y) - r(X) < |Y - X|`` for ``X`` strictly inside ``Y``, and
    ``r(X v Y) + r(X ^ Y) + |(X & Y) - (X ^ Y)| <= r(X) + r(Y)`` for
    incomparable ``X, Y``.
    """
    flats = [f for f, _ in family]
    ranks = [r for _, r in family]
    full = (1 << n) - 1
    if not flats:
        raise RankViolation("lattice", (), "a matroid has at least one cyclic flat")
    if any(f & ~full for f in flats):
        raise ValueError("cyclic flat outside the ground set")
    if len(set(flats)) != len(flats):
        raise ValueError("repeated cyclic flat")
    if any(r < 0 for r in ranks):
        raise RankViolation("nonnegative", (), "ranks must be nonnegative")
    L = _inclusion_lattice(flats)
    if ranks[L.bottom] != 0:
        raise RankViolation("least-rank", (format_set(flats[L.bottom]),),
                            f"least cyclic flat {format_set(flats[L.bottom])} "
                            f"has rank {ranks[L.bottom]}, expected 0")
    for i, j in combinations(range(len(flats)), 2):
        X, Y = (i, j) if L.leq(i, j) else (j, i)
        if L.leq(X, Y):
            gap = ranks[Y] - ranks[X]
            size = (flats[Y] & ~flats[X]).bit_count()
            if not 0 < gap < size:
                raise RankViolation(
                    "nested", (format_set(flats[X]), format_set(flats[Y])),
                    f"need 0 < r(Y) - r(X) < |Y - X| for X={format_set(flats[X])} "
                    f"inside Y={format_set(flats[Y])}; got gap {gap}, |Y - X| = {size}")
        else:
            jn, mt = L.join[i][j], L.meet[i][j]
            extra = (flats[i] & flats[j] & ~flats[mt]).bit_count()
            lhs = ranks[jn] + ranks[mt] + extra
            if lhs > ranks[i] + ranks[j]:
                raise RankViolation(
                    "semimodular", (format_set(flats[i]), format_set(flats[j])),
                    f"r(X v Y) + r(X ^ Y) + |(X & Y) - (X ^ Y)| = {lhs} exceeds "
                    f"r(X) + r(Y) = {ranks[i] + ranks[j]} for X={format_set(flats[i])}, "
                    f"Y={format_set(flats[j])}")
    return L


def matroid_from_cyclic_flats(n: int, family: Iterable[tuple]) -> Matroid:
    """Build a validated matroid from ``(set or mask, rank)`` pairs."""
    if n > max_ground():
        raise SizeLimitExceeded("ground set", n, max_ground())
    pairs = [(as_mask(f), int(r)) for f, r in family]
    validate_cyclic_flats(n, pairs)
    return Matroid(n, [f for f, _ in pairs], [r for _, r in pairs])


# --- recomputation from rank oracles -------------------------------------

def _minplus_rank(masks, offsets, x):
    return min(r + (x & ~f).bit_count() for f, r in zip(masks, offsets))


def recompute_cyclic_flats(n: int, masks: Sequence[int], offsets: Sequence[int],
                           method: str = "flats") -> list[tuple[int, int]]:
    """Cyclic flats of the matroid with min-plus rank oracle ``(masks, offsets)``.

    ``method="subsets"`` tests every subset; ``method="flats"`` walks the
    lattice of flats of whichever of the matroid and its dual has smaller
    rank (the dual oracle ``|X| - r(E) + r(E - X)`` is again min-plus).
    """
    masks, offsets = list(masks), list(offsets)
    if method == "subsets":
        if n > 26:
            raise SizeLimitExceeded("subset enumeration", n, 26)
        found = _kernels.cyclic_flats_by_subsets(n, masks, offsets)
    elif method == "flats":
        full = (1 << n) - 1
        rE = _minplus_rank(masks, offsets, full)
        if rE <= n - rE:
            found, _ = _kernels.cyclic_flats_by_flats(n, masks, offsets)
        else:
            dmasks = [full & ~f for f in masks]
            doffs = [r - rE + (full & ~f).bit_count() for f, r in zip(masks, offsets)]
            dual_found, _ = _kernels.cyclic_flats_by_flats(n, dmasks, doffs)
            found = [(full & ~g, _minplus_rank(masks, offsets, full & ~g))
                     for g, _ in dual_found]
    else:
        raise ValueError(f"unknown method {method!r}")
    return sorted(found, key=lambda p: (p[0].bit_count(), p[0]))


def cyclic_flats(M: Matroid, method: str = "flats") -> list[tuple[int, int]]:
    """Cyclic flats of ``M`` recomputed from its rank oracle alone."""
    return recompute_cyclic_flats(M.n, M.flats, M.ranks, method)


def is_self_consistent(M: Matroid, method: str = "flats") -> bool:
    return cyclic_flats(M, method) == list(zip(M.flats, M.ranks))


def matroid_from_rank_function(n: int, rank: Callable[[int], int]) -> Matroid:
    """Extract cyclic flats of an arbitrary rank function by testing all subsets."""
    if n > 20:
        raise SizeLimitExceeded("subset enumeration", n, 20)
    table = [rank(x) for x in range(1 << n)]
    family = []
    for x in range(1 << n):
        k = table[x]
        if all((table[x ^ 1 << e] == k) if x >> e & 1 else (table[x | 1 << e] > k)
               for e in range(n)):
            family.append((x, k))
    return matroid_from_cyclic_flats(n, family)


# --- minors, duals, sums ---------------------------------------------------

def _from_oracle(n, masks, offsets) -> Matroid:
    return matroid_from_cyclic_flats(n, recompute_cyclic_flats(n, masks, offsets))


def restrict(M: Matroid, S) -> Matroid:
    """``M|S``, relabelled so the members of ``S`` become ``0..|S|-1``."""
    keep = list(_bits(as_mask(S) & M.full))
    masks = [_compress(f, keep) for f in M.flats]
    return _from_oracle(len(keep), masks, M.ranks)


def contract_set(M: Matroid, S) -> Matroid:
    """``M/S`` with rank ``r(X | S) - r(S)``, relabelled like :func:`restrict`."""
    s = as_mask(S) & M.full
    keep = [e for e in range(M.n) if not s >> e & 1]
    rs = M.rank(s)
    masks = [_compress(f, keep) for f in M.flats]
    offs = [r + (s & ~f).bit_count() - rs for f, r in zip(M.flats, M.ranks)]
    return _from_oracle(len(keep), masks, offs)


def lemma_closure_holds(M: Matroid, x: int, minor: Matroid) -> bool:
    """Each cyclic flat ``A`` of a single-element minor lifts to ``cl_M(A)``,
    which must be a cyclic flat of ``M`` with ``cl_M(A) - x == A``."""
    keep = [e for e in range(M.n) if e != x]
    flats = set(M.flats)
    for a in minor.flats:
        A = _expand(a, keep)
        lifted = M.closure(A)
        if lifted not in flats or lifted & ~(1 << x) != A:
            return False
    return True


def delete(M: Matroid, x: int, check: bool = True) -> Matroid:
    minor = restrict(M, M.full & ~(1 << x))
    if check and not lemma_closure_holds(M, x, minor):
        raise RuntimeError(f"deletion of {x}: lifted cyclic flat is not cyclic")
    return minor


def contract(M: Matroid, x: int, check: bool = True) -> Matroid:
    minor = contract_set(M, 1 << x)
    if check and not lemma_closure_holds(M, x, minor):
        raise RuntimeError(f"contraction of {x}: lifted cyclic flat is not cyclic")
    return minor


def dual(M: Matroid) -> Matroid:
    """Complements of the cyclic flats, with rank ``|E - F| - r(E) + r(F)``."""
    full, rE = M.full, M.full_rank
    family = [(full & ~f, (full & ~f).bit_count() - rE + r)
              for f, r in zip(M.flats, M.ranks)]
    return matroid_from_cyclic_flats(M.n, family)


def direct_sum(M: Matroid, N: Matroid) -> Matroid:
    """Elements of ``N`` are shifted up by ``M.n``."""
    family = [(f | g << M.n, r + s)
              for f, r in zip(M.flats, M.ranks) for g, s in zip(N.flats, N.ranks)]
    return matroid_from_cyclic_flats(M.n + N.n, family)


def free_matroid(n: int) -> Matroid:
    return Matroid(n, [0], [0])


def uniform_matroid(r: int, n: int) -> Matroid:
    if r == n:
        return free_matroid(n)
    return matroid_from_cyclic_flats(n, [(0, 0), ((1 << n) - 1, r)] if r else [((1 << n) - 1, 0)])


# --- the lattice of cyclic flats ----------------------------------------

def zeta_lattice(M: Matroid, check: bool = True) -> tuple[Lattice, tuple[int, ...]]:
    """Lattice of cyclic flats under inclusion, with the rank of each.

    With ``check`` the lattice join is compared with ``cl(A | B)`` and the
    meet with the union of circuits inside ``A & B``.
    """
    L = _inclusion_lattice(M.flats)
    if check:
        for i, j in combinations(range(len(L)), 2):
            a, b = M.flats[i], M.flats[j]
            if M.flats[L.join[i][j]] != M.closure(a | b):
                raise NotALattice((format_set(a), format_set(b)), "join", [])
            if M.flats[L.meet[i][j]] != M.cyclic_part(a & b):
                raise NotALattice((format_set(a), format_set(b)), "meet", [])
    return L, M.ranks


def is_nested(M: Matroid) -> bool:
    flats = M.flats  # sorted by size, so a chain is nested pairwise in order
    return all(f & ~g == 0 for f, g in zip(flats, flats[1:]))


# --- connectivity ---------------------------------------------------------

def components(M: Matroid) -> list[int]:
    """Connected components via the fundamental circuits of a greedy basis."""
    parent = list(range(M.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    basis = 0
    for e in range(M.n):
        if M.rank(basis | 1 << e) > basis.bit_count():
            basis |= 1 << e
    k = basis.bit_count()
    for e in _bits(M.full & ~basis):
        if M.rank(1 << e) == 0:
            continue
        for b in _bits(basis):
            if M.rank(basis ^ 1 << b | 1 << e) == k:
                parent[find(b)] = find(e)
    groups: dict[int, int] = {}
    for e in range(M.n):
        groups[find(e)] = groups.get(find(e), 0) | 1 << e
    return sorted(groups.values(), key=lambda m: (m & -m))


def is_connected_bruteforce(M: Matroid) -> bool:
    """No proper nonempty ``P`` with ``r(P) + r(E - P) == r(E)``."""
    if M.n > 20:
        raise SizeLimitExceeded("separator search", M.n, 20)
    full, rE = M.full, M.full_rank
    return not any(M.rank(p) + M.rank(full & ~p) == rE for p in range(1, full))


def loop_isthmus_free_part(M: Matroid) -> Matroid:
    return restrict(M, M.full & ~M.loops() & ~M.isthmuses())
