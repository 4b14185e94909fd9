import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from cycflat.corpus import generate_corpus
from cycflat.errors import NotALattice, RankViolation, SizeLimitExceeded
from cycflat.lattice import chain, find_isomorphism, is_isomorphic, order_dual
from cycflat.matroid import (components, contract, contract_set, cyclic_flats, delete,
                             direct_sum, dual, free_matroid, is_connected_bruteforce,
                             is_nested, is_self_consistent, lemma_closure_holds,
                             loop_isthmus_free_part, matroid_from_cyclic_flats,
                             matroid_from_rank_function, restrict, uniform_matroid,
                             zeta_lattice)
from cycflat.mi import TR, classify_tr
from cycflat.ops import direct_product

from conftest import b2
from panel import small_matroids

CORPUS = list(generate_corpus(5, 3))
SMALL = small_matroids()


def same(M, N):
    return M.n == N.n and list(zip(M.flats, M.ranks)) == list(zip(N.flats, N.ranks))


class TestConstruction:
    def test_u23_rank_table(self, U23):
        for x in range(8):
            assert U23.rank(x) == min(bin(x).count("1"), 2)

    def test_single_loop(self):
        M = matroid_from_cyclic_flats(1, [({0}, 0)])
        assert M.rank({0}) == 0 and M.loops() == 1

    def test_strict_gap(self):
        with pytest.raises(RankViolation) as info:
            matroid_from_cyclic_flats(3, [(set(), 0), ({0, 1, 2}, 3)])
        assert info.value.condition == "nested"

    def test_least_rank(self):
        with pytest.raises(RankViolation) as info:
            matroid_from_cyclic_flats(3, [({0}, 1), ({0, 1, 2}, 2)])
        assert info.value.condition == "least-rank"

    def test_semimodular(self):
        fam = [(set(), 0), ({0, 1, 2}, 2), ({2, 3, 4}, 2), (set(range(7)), 5)]
        with pytest.raises(RankViolation) as info:
            matroid_from_cyclic_flats(7, fam)
        assert info.value.condition == "semimodular"

    def test_not_a_lattice(self):
        # two incomparable minimal sets: no least cyclic flat
        with pytest.raises(NotALattice):
            matroid_from_cyclic_flats(4, [({0}, 0), ({1}, 0)])

    def test_ground_cap(self, monkeypatch):
        monkeypatch.setenv("CYCFLAT_MAX_GROUND", "4")
        with pytest.raises(SizeLimitExceeded):
            matroid_from_cyclic_flats(5, [(set(), 0)])


class TestRankAndFlats:
    def test_rank_examples(self, U23):
        assert U23.rank(0) == 0
        assert U23.rank({0}) == 1
        assert U23.rank({0, 1, 2}) == 2
        loop = matroid_from_cyclic_flats(1, [({0}, 0)])
        assert loop.rank({0}) == 0

    def test_closure_and_cyclic(self, U23):
        assert U23.closure({0}) == 0b001
        assert U23.is_flat({0})
        assert U23.is_cyclic_flat(U23.full)
        assert not U23.is_cyclic_flat({0})

    def test_cyclic_flat_examples(self, U23):
        assert cyclic_flats(U23) == [(0, 0), (7, 2)]
        loop_coloop = matroid_from_cyclic_flats(2, [({0}, 0)])
        assert cyclic_flats(loop_coloop) == [(1, 0)]
        assert cyclic_flats(free_matroid(3)) == [(0, 0)]

    def test_methods_agree_with_bruteforce(self):
        for M in SMALL:
            ref = oracles.brute_cyclic_flats(M.n, M.rank)
            assert cyclic_flats(M, "flats") == ref
            assert cyclic_flats(M, "subsets") == ref

    def test_rank_axioms(self):
        for M in SMALL:
            assert oracles.rank_axiom_failures(M.n, M.rank) is None


class TestDualMinors:
    def test_dual_u23(self, U23):
        assert same(dual(U23), uniform_matroid(1, 3))
        assert same(dual(dual(U23)), U23)

    def test_dual_free(self):
        D = dual(free_matroid(2))
        assert D.loops() == 0b11

    def test_deletion_contraction(self, U23):
        assert same(delete(U23, 2), free_matroid(2))
        assert same(contract(U23, 2), uniform_matroid(1, 2))

    def test_delete_loop(self):
        M = matroid_from_cyclic_flats(4, [({0}, 0), ({0, 1, 2, 3}, 2)])
        assert same(delete(M, 0), uniform_matroid(2, 3))

    def test_dual_of_self_dual(self):
        # chain with ranks (0, 2) on 4 points: U(2,4) is self-dual
        from cycflat.realization import realize
        M = matroid_from_cyclic_flats(4, [(set(), 0), ({0, 1, 2, 3}, 2)])
        Z, r = zeta_lattice(M)
        Zd, rd = zeta_lattice(dual(M))
        assert find_isomorphism(Z, Zd, r, rd) is not None
        R = realize(b2(), [0, 1, 1, 2])
        assert is_isomorphic(zeta_lattice(dual(R.matroid))[0], order_dual(b2()))

    def test_dual_rank_formula(self):
        for M in SMALL:
            D = dual(M)
            full = M.full
            for x in range(1 << M.n):
                expect = bin(x).count("1") - M.full_rank + M.rank(full & ~x)
                assert D.rank(x) == expect

    def test_minor_rank_formulas(self):
        for M in SMALL[:40]:
            for e in range(M.n):
                keep = [f for f in range(M.n) if f != e]
                dl, ct = delete(M, e), contract(M, e)
                for x in range(1 << (M.n - 1)):
                    big = sum(1 << keep[i] for i in range(M.n - 1) if x >> i & 1)
                    assert dl.rank(x) == M.rank(big)
                    assert ct.rank(x) == M.rank(big | 1 << e) - M.rank(1 << e)


class TestSums:
    def test_u23_squared(self, U23):
        S = direct_sum(U23, U23)
        Z, ranks = zeta_lattice(S)
        assert is_isomorphic(Z, direct_product(chain(2), chain(2)))
        assert sorted(ranks) == [0, 2, 2, 4]

    def test_empty_summand(self, U23):
        empty = free_matroid(0)
        assert same(direct_sum(U23, empty), U23)

    def test_u12_squared(self):
        S = direct_sum(uniform_matroid(1, 2), uniform_matroid(1, 2))
        assert S.n == 4 and S.full_rank == 2 and len(S.flats) == 4


class TestZeta:
    def test_examples(self, U23):
        Z, ranks = zeta_lattice(U23)
        assert is_isomorphic(Z, chain(2)) and ranks == (0, 2)
        assert len(zeta_lattice(free_matroid(3))[0]) == 1

    def test_nested(self, U23):
        assert is_nested(U23)
        assert not is_nested(direct_sum(U23, U23))
        assert is_nested(free_matroid(2))

    def test_meet_is_union_of_circuits(self):
        for M in SMALL[:60]:
            circuits = oracles.brute_circuits(M.n, M.rank)
            Z, _ = zeta_lattice(M, check=False)
            for i in range(len(Z)):
                for j in range(len(Z)):
                    inter = M.flats[i] & M.flats[j]
                    union = 0
                    for c in circuits:
                        if c & ~inter == 0:
                            union |= c
                    assert M.flats[Z.meet[i][j]] == union

    def test_intervals(self):
        for M in SMALL[:60]:
            Z, ranks = zeta_lattice(M)
            S = M.flats[Z.bottom]
            for i, X in enumerate(M.flats):
                below = [k for k in range(len(Z)) if Z.leq(k, i)]
                sub = restrict(M, X)
                keep = [e for e in range(M.n) if X >> e & 1]
                lifted = sorted(sum(1 << keep[t] for t in range(len(keep)) if f >> t & 1)
                                for f in sub.flats)
                assert lifted == sorted(M.flats[k] for k in below)
                assert S & ~X == 0
                above = [k for k in range(len(Z)) if Z.leq(i, k)]
                con = contract_set(M, X)
                Zc, rc = zeta_lattice(con)
                interval = Z.induced(above)
                shifted = [ranks[k] - ranks[i] for k in above]
                assert find_isomorphism(interval, Zc, shifted, list(rc)) is not None


class TestConnectivity:
    def test_components_match_separators(self):
        for M in SMALL:
            comps = components(M)
            assert (len(comps) == 1) == oracles.is_connected_by_separators(M.n, M.rank) or M.n <= 1
            assert is_connected_bruteforce(M) == oracles.is_connected_by_separators(M.n, M.rank)
            for c in comps:
                rest = M.full & ~c
                assert M.rank(c) + M.rank(rest) == M.full_rank

    def test_tr_lattices_have_at_most_two_nested_parts(self):
        for L, rho, R in CORPUS:
            if classify_tr(L).status != TR:
                continue
            core = loop_isthmus_free_part(R.matroid)
            if core.n == 0:
                continue
            comps = components(core)
            assert len(comps) <= 2 or is_connected_bruteforce(core)
            if len(comps) == 2:
                assert all(is_nested(restrict(core, c)) for c in comps)


def test_lemma_closure_on_single_minors():
    for M in SMALL:
        for e in range(M.n):
            assert lemma_closure_holds(M, e, delete(M, e, check=False))
            assert lemma_closure_holds(M, e, contract(M, e, check=False))


def test_rank_function_roundtrip():
    for M in SMALL[:50]:
        assert same(matroid_from_rank_function(M.n, M.rank), M)
        assert is_self_consistent(M)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 5).flatmap(lambda n: st.tuples(st.integers(0, n), st.just(n))))
def test_uniform_matroids(rn):
    r, n = rn
    M = uniform_matroid(r, n)
    for x in range(1 << n):
        assert M.rank(x) == min(bin(x).count("1"), r)
    assert same(dual(M), uniform_matroid(n - r, n))
