import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cycflat import _kernels
from cycflat.corpus import generate_corpus
from cycflat.matroid import dual, recompute_cyclic_flats

from panel import small_matroids

BACKENDS = [_kernels.python] + ([_kernels.compiled] if _kernels.compiled else [])


def oracle_of(M):
    return M.n, list(M.flats), list(M.ranks)


def test_backend_name():
    assert _kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("kernel", BACKENDS, ids=lambda k: k.__name__.rsplit(".", 1)[-1])
def test_rank_table_matches_rank(kernel):
    for M in small_matroids()[:40]:
        n, masks, offs = oracle_of(M)
        table = kernel.rank_table(n, masks, offs)
        assert len(table) == 1 << n
        assert all(table[x] == M.rank(x) == kernel.rank(masks, offs, x) for x in range(1 << n))


@pytest.mark.parametrize("kernel", BACKENDS, ids=lambda k: k.__name__.rsplit(".", 1)[-1])
def test_subsets_and_flats_agree(kernel):
    for M in small_matroids():
        n, masks, offs = oracle_of(M)
        a = sorted(kernel.cyclic_flats_by_subsets(n, masks, offs))
        b, count = kernel.cyclic_flats_by_flats(n, masks, offs)
        assert a == sorted(b) == sorted(zip(masks, offs))
        assert count >= len(b)


@pytest.mark.skipif(_kernels.compiled is None, reason="extension not built")
def test_backends_agree_on_corpus():
    py, cy = _kernels.python, _kernels.compiled
    for _, _, R in generate_corpus(5, 4):
        n, masks, offs = oracle_of(R.matroid)
        assert cy.cyclic_flats_by_flats(n, masks, offs) == py.cyclic_flats_by_flats(n, masks, offs)
        if n <= 14:
            assert cy.rank_table(n, masks, offs) == py.rank_table(n, masks, offs)
            assert (cy.cyclic_flats_by_subsets(n, masks, offs)
                    == py.cyclic_flats_by_subsets(n, masks, offs))


@pytest.mark.parametrize("kernel", BACKENDS, ids=lambda k: k.__name__.rsplit(".", 1)[-1])
def test_flat_cap(kernel):
    with pytest.raises(OverflowError):
        kernel.cyclic_flats_by_flats(8, [0], [0], max_flats=10)


def test_dual_side_walk():
    # rank above half the ground set goes through the dual oracle
    for M in small_matroids():
        D = dual(M)
        got = recompute_cyclic_flats(D.n, D.flats, D.ranks, "flats")
        assert got == list(zip(D.flats, D.ranks))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 30), st.lists(st.tuples(st.integers(0, 255), st.integers(0, 8)),
                                     min_size=1, max_size=5))
def test_backends_agree_on_arbitrary_minplus(x, pairs):
    masks = [m for m, _ in pairs]
    offs = [r for _, r in pairs]
    for kernel in BACKENDS:
        assert kernel.rank(masks, offs, x) == min(r + bin(x & ~m).count("1") for m, r in pairs)
    tables = {k.rank_table(8, masks, offs) for k in BACKENDS}
    assert len(tables) == 1
