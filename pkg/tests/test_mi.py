from itertools import permutations

import pytest

import oracles
from cycflat.corpus import lattices, lattices_up_to
from cycflat.lattice import antichains, chain, diamond, order_dual, pentagon, width
from cycflat.mi import (NOT_TR, TR, UNKNOWN, TrVerdict, classify_tr, elements_with_three_covers,
                        find_mi_ordering, inherited_verdict, is_mi_lattice, is_mi_ordering,
                        satisfies_lemma_o_hypotheses)
from cycflat.ops import coatom_chain_lattice, direct_product, lex_sum, linear_sum, star


def test_short_sequences_always_order(B2):
    a, b = B2.index("a"), B2.index("b")
    for seq in ([a], [a, b], [b, a]):
        assert is_mi_ordering(B2, seq)


def test_b3_atoms_fail_condition_two(B3):
    atoms = [B3.index(s) for s in "abc"]
    for p in permutations(atoms):
        assert not is_mi_ordering(B3, p)
    a, b, c = atoms
    # (a ^ b) v c == c differs from b v c
    assert B3.join[B3.meet[a][b]][c] == c != B3.join[b][c]
    assert find_mi_ordering(B3, atoms) is None


def test_find_on_b2(B2):
    assert find_mi_ordering(B2, (1, 2)) == (1, 2)


def test_coatom_chain_triple_orders():
    L = coatom_chain_lattice([3, 1, 1], [1, 2])
    for a in antichains(L, 3):
        seq = find_mi_ordering(L, a)
        assert seq is not None and oracles.brute_mi_ordering(L, seq)


def test_is_mi_lattice_examples(B3):
    assert is_mi_lattice(chain(5)) == (True, None)
    ok, bad = is_mi_lattice(B3)
    assert not ok
    assert {B3.labels[x] for x in bad} == {"a", "b", "c"}


@pytest.mark.parametrize("n", range(1, 8))
def test_mi_lattice_matches_bruteforce(n):
    for L in lattices(n):
        assert is_mi_lattice(L)[0] == oracles.brute_is_mi_lattice(L)


@pytest.mark.parametrize("n", range(3, 7))
def test_pruned_search_agrees_with_all_permutations(n):
    for L in lattices(n):
        for a in antichains(L, 3):
            expected = any(oracles.brute_mi_ordering(L, p) for p in permutations(a))
            assert (find_mi_ordering(L, a) is not None) == expected
            for p in permutations(a):
                assert is_mi_ordering(L, p) == oracles.brute_mi_ordering(L, p)


def test_width_two_lattices_are_mi():
    for L in lattices_up_to(8):
        if width(L) <= 2:
            assert is_mi_lattice(L)[0]


def test_sublattices_of_mi_lattices_are_mi():
    from cycflat.lattice import sublattice_generated
    for L in lattices_up_to(7):
        if not is_mi_lattice(L)[0]:
            continue
        for a in antichains(L, 2):
            assert is_mi_lattice(sublattice_generated(L, a))[0]


def test_three_covers(B2, B3):
    assert elements_with_three_covers(chain(4)) == []
    assert elements_with_three_covers(B2) == []
    assert elements_with_three_covers(B3) == [B3.bottom]


def test_lemma_o_hypotheses(B2, B3):
    assert satisfies_lemma_o_hypotheses(chain(4))
    assert satisfies_lemma_o_hypotheses(B2)
    assert not satisfies_lemma_o_hypotheses(B3)
    assert not satisfies_lemma_o_hypotheses(diamond())
    # each antichain of N5 generates a copy of B2
    assert satisfies_lemma_o_hypotheses(pentagon())


class TestClassify:
    def test_chain(self):
        assert classify_tr(chain(4)) == TrVerdict(TR, "width_le_2")

    def test_b3(self, B3):
        v = classify_tr(B3)
        assert v.status == NOT_TR and v.reason == "three_covers"
        assert v.witness[0] == B3.bottom

    def test_width_two_nine_elements(self):
        L = lex_sum(chain(3), {0: chain(2), 1: direct_product(chain(2), chain(2)), 2: chain(3)})
        assert len(L) == 9 and width(L) == 2
        assert classify_tr(L) == TrVerdict(TR, "width_le_2")

    def test_mi_lattice_reason(self):
        L = coatom_chain_lattice([3, 1, 1], [1, 2])
        assert width(L) == 3
        assert classify_tr(L).status == TR

    def test_dim2_distributive_reason(self):
        grid = direct_product(chain(3), chain(3))
        assert classify_tr(grid) == TrVerdict(TR, "dim2_distributive")

    def test_unknown(self, B2):
        S = star(B2, B2)
        assert classify_tr(S).status == UNKNOWN
        assert inherited_verdict("star", classify_tr(B2), classify_tr(B2)) == TrVerdict(TR, "inherited")

    def test_dual_of_coatom_family_is_not_tr(self):
        D = order_dual(coatom_chain_lattice([3, 1, 1], [1, 2]))
        assert classify_tr(D).status == NOT_TR

    def test_as_dict(self, B3):
        d = classify_tr(B3).as_dict(B3)
        assert d == {"status": "NotTr", "reason": "three_covers", "witness": ["0", "a", "b", "c"]}


def test_inherited_rules(B2):
    tr = TrVerdict(TR, "width_le_2")
    assert inherited_verdict("linear_sum", tr, tr).status == TR
    assert inherited_verdict("lex_sum", tr, index=B2).status == TR
    assert inherited_verdict("lex_sum", tr, index=direct_product(chain(3), chain(3))).status == UNKNOWN
    assert inherited_verdict("star", tr, TrVerdict(UNKNOWN)).status == UNKNOWN
    assert inherited_verdict("product", tr, tr).status == UNKNOWN


def test_linear_sum_of_mi_lattices():
    L = coatom_chain_lattice([3, 1, 1], [1, 2])
    assert is_mi_lattice(linear_sum(L, L))[0]
