from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from cycflat.corpus import lattices, lattices_up_to
from cycflat.errors import RankViolation, SizeLimitExceeded
from cycflat.lattice import chain, find_isomorphism
from cycflat.matroid import cyclic_flats, zeta_lattice
from cycflat.realization import (check_rank_assignment, enumerate_rank_assignments,
                                 ranks_from_mapping, realization_ground_size, realize,
                                 validate_rank_assignment)

B3_WITNESS = (0, 2, 2, 4, 2, 4, 4, 5)  # index order 0,a,b,ab,c,ac,bc,abc


def brute_valid(L, rho):
    n = len(L)
    leq = oracles.leq_pairs(L)
    if rho[L.bottom] != 0:
        return False
    if any(x != y and rho[x] >= rho[y] for x, y in leq):
        return False
    for x in range(n):
        for y in range(n):
            if (x, y) not in leq and (y, x) not in leq:
                j, m = oracles.brute_join(n, leq, x, y), oracles.brute_meet(n, leq, x, y)
                if rho[j] + rho[m] > rho[x] + rho[y]:
                    return False
    return True


class TestCheck:
    def test_chain(self):
        assert check_rank_assignment(chain(2), [0, 2]) == (True, None)

    def test_monotonicity_boundary(self, B2):
        ok, (cond, elems) = check_rank_assignment(B2, [0, 1, 1, 1])
        assert not ok and cond == "b"
        assert elems[1] == B2.top
        with pytest.raises(RankViolation):
            validate_rank_assignment(B2, [0, 1, 1, 1])

    def test_b3_witness_ranks(self, B3):
        assert check_rank_assignment(B3, B3_WITNESS) == (True, None)

    def test_condition_a_and_c(self, B2):
        assert check_rank_assignment(B2, [1, 2, 2, 3])[1][0] == "a"
        assert check_rank_assignment(B2, [0, 1, 1, 3])[1][0] == "c"

    def test_mapping(self, B2):
        assert ranks_from_mapping(B2, {"0": 0, "a": 1, 2: 1, "1": 2}) == [0, 1, 1, 2]


class TestEnumerate:
    def test_examples(self, B2):
        assert list(enumerate_rank_assignments(chain(2), 2)) == [(0, 1), (0, 2)]
        assert list(enumerate_rank_assignments(chain(1), 3)) == [(0,)]
        assert list(enumerate_rank_assignments(B2, 2)) == [(0, 1, 1, 2)]

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_bruteforce(self, n):
        for L in lattices(n):
            top = 4
            expect = {r for r in product(range(top + 1), repeat=n) if brute_valid(L, r)}
            got = list(enumerate_rank_assignments(L, top))
            assert len(got) == len(set(got))
            assert set(got) == expect


class TestRealize:
    def test_u23(self):
        R = realize(chain(2), [0, 2])
        assert R.matroid.n == 3
        assert R.phi == (0, 0b111)
        assert list(zip(R.matroid.flats, R.matroid.ranks)) == [(0, 0), (7, 2)]

    def test_singleton(self):
        R = realize(chain(1), [0])
        assert R.matroid.n == 0 and list(R.matroid.flats) == [0]

    def test_b3_witness_size(self, B3):
        assert realization_ground_size(B3, B3_WITNESS) == 30
        R = realize(B3, B3_WITNESS)
        assert R.matroid.n == 30 and len(R.matroid.flats) == 8

    def test_invalid_ranks(self, B2):
        with pytest.raises(RankViolation):
            realize(B2, [0, 1, 1, 1])

    def test_cap(self, B3, monkeypatch):
        monkeypatch.setenv("CYCFLAT_MAX_GROUND", "20")
        with pytest.raises(SizeLimitExceeded):
            realize(B3, B3_WITNESS)

    def test_recomputed_lattice_matches(self):
        for L in lattices_up_to(5):
            for rho in enumerate_rank_assignments(L, 3):
                R = realize(L, rho)
                found = cyclic_flats(R.matroid)
                assert found == list(zip(R.matroid.flats, R.matroid.ranks))
                Z, ranks = zeta_lattice(R.matroid)
                assert find_isomorphism(L, Z, list(rho), list(ranks)) is not None
                for x in range(len(L)):
                    assert R.matroid.rank(R.phi[x]) == rho[x]


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.sampled_from(lattices(n))), st.data())
def test_random_realizations(L, data):
    options = list(enumerate_rank_assignments(L, len(L)))
    rho = data.draw(st.sampled_from(options))
    R = realize(L, rho)
    Z, ranks = zeta_lattice(R.matroid)
    phi = find_isomorphism(L, Z, list(rho), list(ranks))
    assert phi is not None
