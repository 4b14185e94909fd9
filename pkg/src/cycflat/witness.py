"""Non-transversal witnesses for lattices with an element of three covers.

Given ``x`` with at least three covers, rank the lattice by filter
complements, lower everything not below ``x`` by ``k + 1`` (``k`` the least
size of ``F_x`` minus a union of three proper principal filters), realize the
result, and read off three cyclic flats violating the Mason-Ingleton
inequality.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import NotEnoughCovers, RankViolation
from .lattice import Lattice, _bits
from .matroid import Matroid
from .realization import Realization, check_rank_assignment, realize


def rho_prime(L: Lattice, y: int) -> int:
    """``|L - F_y|``: the number of elements not above ``y``."""
    return len(L) - L.up[y].bit_count()


def m_value(L: Lattice, x: int, u: int, v: int, w: int) -> int:
    """Size of ``F_x - (F_u | F_v | F_w)``, computed two ways."""
    if len({u, v, w}) != 3 or not all(L.less(x, t) for t in (u, v, w)):
        raise ValueError("u, v, w must be distinct and strictly above x")
    j = L.join
    rp = lambda t: rho_prime(L, t)  # noqa: E731
    by_formula = (rp(u) + rp(v) + rp(w) - rp(j[u][v]) - rp(j[u][w]) - rp(j[v][w])
                  + rp(j[j[u][v]][w]) - rp(x))
    direct = (L.up[x] & ~(L.up[u] | L.up[v] | L.up[w])).bit_count()
    if by_formula != direct:
        raise RuntimeError(f"inclusion-exclusion mismatch: {by_formula} != {direct}")
    return direct


@dataclass(frozen=True)
class WitnessBundle:
    x: int
    k: int
    triple: tuple[int, int, int]
    rho: tuple[int, ...]
    realization: Realization
    violators: tuple[int, int, int]
    alternating_sum: int

    @property
    def matroid(self) -> Matroid:
        return self.realization.matroid


def witness_ranks(L: Lattice, x: int) -> tuple[int, tuple[int, int, int], tuple[int, ...]]:
    """``(k, minimizing triple, rho)`` for the branching element ``x``."""
    if len(L.upper_covers(x)) < 3:
        raise NotEnoughCovers(f"{L.labels[x]!r} has fewer than three covers")
    above = list(_bits(L.up[x] & ~(1 << x)))
    k, triple = min((m_value(L, x, *t), t) for t in combinations(above, 3))
    covers = set(L.upper_covers(x))
    if not set(triple) <= covers:
        raise RuntimeError("minimizing triple is not made of covers")
    rho = tuple(rho_prime(L, y) if L.leq(y, x) else rho_prime(L, y) - k - 1
                for y in range(len(L)))
    _check_gaps(L, x, k)
    return k, triple, rho


def _check_gaps(L: Lattice, x: int, k: int) -> None:
    """The two inequalities the lowered ranks rely on."""
    n = len(L)
    for y in range(n):
        if not L.leq(y, x):
            continue
        for z in _bits(L.up[y]):
            if not L.leq(z, x) and rho_prime(L, z) - rho_prime(L, y) < k + 2:
                raise RuntimeError("monotonicity gap below k + 2")
    for y, z in combinations(range(n), 2):
        if L.leq(y, x) or L.leq(z, x) or not L.leq(L.meet[y][z], x):
            continue
        left = L.up[L.meet[y][z]] & ~(L.up[y] | L.up[z])
        if left.bit_count() < k + 1:
            raise RuntimeError("semimodular repair below k + 1")


def build_witness(L: Lattice, x: int) -> WitnessBundle:
    k, triple, rho = witness_ranks(L, x)
    ok, violation = check_rank_assignment(L, rho)
    if not ok:
        raise RankViolation(violation[0], violation[1], "witness ranks are invalid")
    R = realize(L, rho)
    M = R.matroid
    U, V, W = (R.phi[t] for t in triple)
    alt = (M.rank(U) + M.rank(V) + M.rank(W) - M.rank(U | V) - M.rank(U | W)
           - M.rank(V | W) + M.rank(U | V | W))
    if alt != rho[x] - 1:
        raise RuntimeError(f"alternating sum {alt} != r(X) - 1 = {rho[x] - 1}")
    return WitnessBundle(x, k, triple, rho, R, (U, V, W), alt)


def first_branching_element(L: Lattice):
    for x in range(len(L)):
        if len(L.upper_covers(x)) >= 3:
            return x
    return None
