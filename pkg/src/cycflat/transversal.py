"""Transversality via the Mason-Ingleton inequality, plus a presentation search.

The presentation search is an independent check: it looks for an explicit
set system whose transversal matroid equals the input, without consulting
any inequality.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterator, Optional, Sequence

from .errors import SizeLimitExceeded
from .lattice import _bits, antichains
from .matroid import Matroid, format_set, matroid_from_rank_function, zeta_lattice

MAX_ANTICHAIN = 12
ORACLE_MAX_GROUND = 9
ORACLE_MAX_RANK = 4


@dataclass(frozen=True)
class MIReport:
    transversal: bool
    violating_antichain: Optional[tuple[int, ...]] = None
    lhs: Optional[int] = None
    rhs: Optional[int] = None

    def as_dict(self) -> dict:
        anti = self.violating_antichain
        return {
            "transversal": self.transversal,
            "violating_antichain": [format_set(f) for f in anti] if anti else None,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


def mi_inequality(M: Matroid, antichain: Sequence[int]) -> tuple[int, int]:
    """``(r(intersection), alternating sum of ranks of unions)`` for a family."""
    flats = list(antichain)
    t = len(flats)
    if t == 0:
        raise ValueError("the family must be nonempty")
    if t > MAX_ANTICHAIN:
        raise SizeLimitExceeded("antichain", t, MAX_ANTICHAIN)
    inter = M.full
    for f in flats:
        inter &= f
    rhs = 0
    # union over each nonempty subfamily, built incrementally by lowest bit
    unions = [0] * (1 << t)
    for s in range(1, 1 << t):
        low = s & -s
        unions[s] = unions[s ^ low] | flats[low.bit_length() - 1]
        rhs += M.rank(unions[s]) if s.bit_count() % 2 else -M.rank(unions[s])
    return M.rank(inter), rhs


def mi_violations(M: Matroid) -> Iterator[tuple[tuple[int, ...], int, int]]:
    """Every antichain of cyclic flats failing the inequality, least first."""
    Z, _ = zeta_lattice(M, check=False)
    for a in antichains(Z, 2):
        flats = tuple(M.flats[i] for i in a)
        lhs, rhs = mi_inequality(M, flats)
        if lhs > rhs:
            yield flats, lhs, rhs


def is_transversal_mi(M: Matroid) -> MIReport:
    """Check the inequality on all nonempty antichains of cyclic flats.

    Singletons satisfy it with equality and are skipped.
    """
    for flats, lhs, rhs in mi_violations(M):
        return MIReport(False, flats, lhs, rhs)
    return MIReport(True)


def _chain_bound(M: Matroid, ordered: Sequence[int], k: int) -> tuple[int, int]:
    inter = M.full
    for f in ordered[:k]:
        inter &= f
    bound = sum(M.rank(f) for f in ordered[:k])
    bound -= sum(M.rank(a | b) for a, b in zip(ordered[:k - 1], ordered[1:k]))
    return M.rank(inter), bound


def lemma_t_check(M: Matroid, ordered: Sequence[int]) -> bool:
    """Join collapse ``cl(A_i | ... | A_k) == cl(A_i | A_k)`` plus the chain bound
    ``r(A_1 & ... & A_t) <= sum r(A_i) - sum r(A_i | A_{i+1})``."""
    t = len(ordered)
    for i in range(t):
        acc = ordered[i]
        for k in range(i + 1, t):
            acc |= ordered[k]
            if M.closure(acc) != M.closure(ordered[i] | ordered[k]):
                return False
    lhs, bound = _chain_bound(M, ordered, t)
    return lhs <= bound


def lemma_in_check(M: Matroid, ordered: Sequence[int]) -> tuple[bool, bool]:
    """``(hypothesis, conclusion)`` for the prefix bound on an ordered antichain.

    Hypothesis: ``(A_1 ^ ... ^ A_k) v A_{k+1} == A_k v A_{k+1}`` in the lattice
    of cyclic flats for every ``k < t``.  Conclusion: the chain bound holds
    for every prefix length.
    """
    hyp = True
    low = ordered[0]
    for k in range(1, len(ordered)):
        if M.closure(low | ordered[k]) != M.closure(ordered[k - 1] | ordered[k]):
            hyp = False
            break
        low = M.cyclic_part(low & ordered[k])
    concl = all(a <= b for a, b in (_chain_bound(M, ordered, k)
                                    for k in range(1, len(ordered) + 1)))
    return hyp, concl


# --- set systems -----------------------------------------------------------

def matching_size(x: int, sets: Sequence[int]) -> int:
    """Largest matching of elements of ``x`` to distinct sets containing them."""
    owner = [-1] * len(sets)

    def augment(e, seen):
        for i, s in enumerate(sets):
            if s >> e & 1 and not seen >> i & 1:
                seen |= 1 << i
                if owner[i] == -1:
                    owner[i] = e
                    return True, seen
                ok, seen = augment(owner[i], seen)
                if ok:
                    owner[i] = e
                    return True, seen
        return False, seen

    size = 0
    for e in _bits(x):
        ok, _ = augment(e, 0)
        size += ok
    return size


def matroid_from_presentation(n: int, sets: Sequence) -> Matroid:
    """Transversal matroid of a set system (sets given as masks or iterables)."""
    masks = [s if isinstance(s, int) else sum(1 << e for e in s) for s in sets]
    return matroid_from_rank_function(n, lambda x: matching_size(x, masks))


def _flats(M: Matroid) -> list[int]:
    return [x for x in range(1 << M.n) if M.is_flat(x)]


def presentation_search_oracle(M: Matroid, max_ground: int = ORACLE_MAX_GROUND,
                               max_rank: int = ORACLE_MAX_RANK) -> Optional[tuple[int, ...]]:
    """Find ``r(M)`` sets whose transversal matroid is ``M``, or return None.

    In any presentation by exactly ``r(M)`` sets, every set is nonempty and
    its complement is a flat (an independent set avoiding ``A_i`` can always
    be extended by an element of ``A_i`` through the unused set ``A_i``), so
    only complements of proper flats are tried.  Two matroids of the same
    rank are equal when their bases agree.
    """
    if M.n > max_ground:
        raise SizeLimitExceeded("presentation search ground set", M.n, max_ground)
    r = M.full_rank
    if r > max_rank:
        raise SizeLimitExceeded("presentation search rank", r, max_rank)
    if r == 0:
        return ()
    full = M.full
    candidates = [full & ~f for f in _flats(M) if M.rank(f) < r]
    needed = full & ~M.loops()
    subsets = [sum(1 << e for e in c) for c in combinations(range(M.n), r)]
    is_basis = [M.rank(s) == r for s in subsets]
    # test bases first: most wrong systems fail to match one of them
    order = sorted(range(len(subsets)), key=lambda i: not is_basis[i])
    for system in combinations_with_replacement(candidates, r):
        cover = 0
        for s in system:
            cover |= s
        if cover != needed:
            continue
        if all((matching_size(subsets[i], system) == r) == is_basis[i] for i in order):
            return system
    return None
