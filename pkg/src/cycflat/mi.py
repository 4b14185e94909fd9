"""MI-orderings, MI-lattice recognition and transversal-lattice verdicts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import SizeLimitExceeded
from .lattice import (
    DIMENSION_SIZE_LIMIT,
    Lattice,
    antichains,
    is_distributive,
    order_dimension_at_most_2,
    sublattice_generated,
    width,
)

TR = "Tr"
NOT_TR = "NotTr"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class TrVerdict:
    status: str
    reason: Optional[str] = None
    witness: Optional[tuple] = None

    def as_dict(self, L: Lattice | None = None) -> dict:
        witness = self.witness
        if L is not None and witness is not None:
            witness = [L.labels[x] for x in witness]
        return {"status": self.status, "reason": self.reason,
                "witness": list(witness) if witness is not None else None}


def _prefix_ok(L: Lattice, seq: Sequence[int]) -> bool:
    """Check both MI conditions that involve the last element of ``seq``."""
    k = len(seq) - 1
    last = seq[k]
    join, meet = L.join, L.meet
    acc = last
    for i in range(k - 1, -1, -1):
        acc = join[acc][seq[i]]
        if acc != join[seq[i]][last]:
            return False
    if k >= 2:
        low = L.meet_all(seq[:k])
        if join[low][last] != join[seq[k - 1]][last]:
            return False
    return True


def is_mi_ordering(L: Lattice, seq: Sequence[int]) -> bool:
    """Whether ``seq`` satisfies the join-collapse and meet-join conditions.

    Join collapse: ``a_i v ... v a_k == a_i v a_k`` for all ``i < k``.
    Meet-join: ``(a_1 ^ ... ^ a_k) v a_{k+1} == a_k v a_{k+1}`` for ``1 < k < t``.
    """
    return all(_prefix_ok(L, seq[:k]) for k in range(2, len(seq) + 1))


def find_mi_ordering(L: Lattice, antichain: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Search all permutations, pruning as soon as a prefix fails."""
    items = list(antichain)
    if len(items) <= 2:
        return tuple(items)
    seq: list[int] = []
    used = [False] * len(items)

    def extend():
        if len(seq) == len(items):
            return True
        for i, x in enumerate(items):
            if used[i]:
                continue
            seq.append(x)
            if _prefix_ok(L, seq):
                used[i] = True
                if extend():
                    return True
                used[i] = False
            seq.pop()
        return False

    return tuple(seq) if extend() else None


def is_mi_lattice(L: Lattice) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Return ``(True, None)`` or ``(False, least failing antichain)``."""
    for a in antichains(L, 3):
        if find_mi_ordering(L, a) is None:
            return False, a
    return True, None


def elements_with_three_covers(L: Lattice) -> list[int]:
    return [x for x in range(len(L)) if len(L.upper_covers(x)) >= 3]


def satisfies_lemma_o_hypotheses(L: Lattice, max_size: int = DIMENSION_SIZE_LIMIT) -> bool:
    """Dimension at most two and every antichain generates a distributive sublattice."""
    ok, _ = order_dimension_at_most_2(L, max_size)
    if not ok:
        return False
    return all(is_distributive(sublattice_generated(L, a)) for a in antichains(L, 2))


def classify_tr(L: Lattice) -> TrVerdict:
    """Apply the implemented sufficient conditions to ``L``.

    An element with three or more covers rules ``L`` out.  Otherwise the
    cheapest sufficient condition that applies wins: width at most two,
    then planar with distributive antichain sublattices, then MI-orderable.
    """
    branching = elements_with_three_covers(L)
    if branching:
        x = branching[0]
        return TrVerdict(NOT_TR, "three_covers", (x, *L.upper_covers(x)[:3]))
    if width(L) <= 2:
        return TrVerdict(TR, "width_le_2")
    try:
        if satisfies_lemma_o_hypotheses(L):
            return TrVerdict(TR, "dim2_distributive")
    except SizeLimitExceeded:
        pass
    if is_mi_lattice(L)[0]:
        return TrVerdict(TR, "mi_lattice")
    return TrVerdict(UNKNOWN)


def inherited_verdict(construction: str, *verdicts: TrVerdict, index: Lattice | None = None) -> TrVerdict:
    """Verdict for a constructed lattice when its inputs are known Tr-lattices.

    ``construction`` is one of ``star``, ``lex_sum`` (pass the indexing
    lattice as ``index``; it must have width at most two), ``linear_sum`` or
    ``identify_sum``.  Anything else, or any non-Tr input, gives Unknown.
    """
    if not verdicts or any(v.status != TR for v in verdicts):
        return TrVerdict(UNKNOWN)
    if construction in ("star", "linear_sum", "identify_sum"):
        return TrVerdict(TR, "inherited")
    if construction == "lex_sum" and index is not None and width(index) <= 2:
        return TrVerdict(TR, "inherited")
    return TrVerdict(UNKNOWN)
