"""A shared panel of small matroids for the property tests."""

from functools import lru_cache
from itertools import combinations_with_replacement

from cycflat.corpus import generate_corpus
from cycflat.matroid import dual
from cycflat.transversal import matroid_from_presentation


def _key(M):
    return M.n, tuple(zip(M.flats, M.ranks))


@lru_cache(maxsize=None)
def presentation_matroids(max_sets=3, n=5):
    """Transversal matroids of every system of at most ``max_sets`` subsets of range(n)."""
    seen = {}
    for k in range(max_sets + 1):
        for system in combinations_with_replacement(range(1, 1 << n), k):
            M = matroid_from_presentation(n, system)
            seen.setdefault(_key(M), (M, system))
    return tuple(seen.values())


@lru_cache(maxsize=None)
def small_matroids(max_ground=10):
    out = {}
    for _, _, R in generate_corpus(6, 4):
        if R.matroid.n <= max_ground:
            for M in (R.matroid, dual(R.matroid)):
                out.setdefault(_key(M), M)
    for M, _ in presentation_matroids(2, 4):
        out.setdefault(_key(M), M)
    return tuple(out.values())
