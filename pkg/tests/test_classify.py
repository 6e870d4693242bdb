"""Structural predicates. Flag tables for the named families are frozen
from first principles; the biconditional claims (plus/minus symmetry on
balanced score lists) run over the full regular corpora."""

from __future__ import annotations

import pytest

from tourney import (
    aat_positive,
    arc_intersections,
    classification_report,
    compose,
    gen_named,
    gen_qr,
    gen_random,
    gen_rlt,
    gen_transitive,
    is_doubly_regular,
    is_locally_regular,
    is_locally_transitive,
    is_near_regular,
    is_nearly_doubly_regular,
    is_regular,
    is_rldr,
    is_rlndr,
    is_transitive,
    landau_feasible,
    scores,
    semi_degree,
)
from tourney.errors import NotRegularError, NotSortedError


class TestBasicPredicates:
    def test_transitive(self):
        assert is_transitive(gen_transitive(6))
        assert not is_transitive(gen_named("delta"))

    def test_regular(self):
        assert is_regular(gen_rlt(9))
        assert not is_regular(gen_transitive(5))
        assert semi_degree(gen_rlt(9)) == 4
        with pytest.raises(NotRegularError):
            semi_degree(gen_transitive(5))

    def test_near_regular(self):
        # two blocks of scores n/2 and n/2 - 1
        t = compose(gen_named("delta"), [gen_transitive(2)] * 3)
        outs, _ = scores(t)
        assert sorted(outs) == [2, 2, 2, 3, 3, 3]
        assert is_near_regular(t)
        assert not is_near_regular(gen_transitive(6))
        assert not is_near_regular(gen_rlt(7))


class TestLocalStructure:
    def test_rlt_is_locally_transitive(self):
        for n in (5, 7, 9, 11):
            t = gen_rlt(n)
            assert is_locally_transitive(t, "plus")
            assert is_locally_transitive(t, "minus")
            assert is_locally_transitive(t)

    def test_rlt9_not_locally_regular(self):
        # out-sets are transitive, hence far from regular at order 4
        assert not is_locally_regular(gen_rlt(9))

    def test_qr7_locally_regular(self):
        assert is_locally_regular(gen_qr(7), "plus")
        assert is_locally_regular(gen_qr(7), "minus")

    def test_delta_delta_flags(self):
        t = gen_named("delta_delta")
        assert is_regular(t)
        assert not is_locally_transitive(t)
        assert not is_locally_regular(t)
        assert aat_positive(t)

    def test_plus_minus_symmetry_on_regular_corpora(self, corpus7, corpus9):
        # balanced score list makes the one-sided predicates agree
        for corpus in (corpus7, corpus9):
            for _, rep in corpus.classes:
                assert (is_locally_transitive(rep, "plus")
                        == is_locally_transitive(rep, "minus"))
                assert (is_locally_regular(rep, "plus")
                        == is_locally_regular(rep, "minus"))


class TestDoublyRegular:
    def test_qr7_and_qr11(self):
        for p in (7, 11):
            t = gen_qr(p)
            assert is_doubly_regular(t)
            # every arc realizes the equality case of the intersection bound
            quarter = (p - 3) // 4
            for i, j in t.arcs():
                x = arc_intersections(t, i, j)
                assert (x.dpp, x.dmm, x.dpm, x.dmp) == \
                    (quarter, quarter, quarter, quarter + 1)

    def test_rlt7_is_not(self):
        assert not is_doubly_regular(gen_rlt(7))

    def test_wrong_residue_class(self):
        # order 9 = 1 mod 4 cannot be doubly regular
        assert not is_doubly_regular(gen_rlt(9))

    def test_ndr_families(self):
        assert is_nearly_doubly_regular(gen_rlt(5))
        assert not is_nearly_doubly_regular(gen_rlt(9))
        assert not is_nearly_doubly_regular(gen_qr(7))  # 3 mod 4 order


class TestRecursiveLocal:
    def test_qr_membership_table(self):
        assert is_rldr(gen_qr(7))
        assert is_rlndr(gen_qr(11))
        assert is_rlndr(gen_qr(19))
        assert not is_rldr(gen_qr(23))
        assert not is_rldr(gen_qr(31))
        assert not is_rldr(gen_qr(47))
        assert not is_rlndr(gen_qr(43))


class TestAat:
    def test_positive_cases(self):
        for name in ("delta_delta", "prop2_a", "prop2_b"):
            assert aat_positive(gen_named(name))
        # RLT_9 has vertex pairs with no common dominating vertex
        assert not aat_positive(gen_rlt(9))


class TestLandau:
    def test_generated_scores_feasible(self):
        for t in (gen_transitive(6), gen_rlt(9), gen_qr(7),
                  gen_random(8, 77)):
            outs, _ = scores(t)
            assert landau_feasible(tuple(sorted(outs)))

    def test_infeasible_cases(self):
        assert not landau_feasible((0, 0, 2, 4, 4))  # prefix 2 < binom(2,2)
        assert not landau_feasible((1, 1, 1, 3, 3))  # total 9 != binom(5,2)

    def test_requires_sorted(self):
        with pytest.raises(NotSortedError):
            landau_feasible((2, 1, 2, 2, 3))


class TestReport:
    def test_flag_order_is_stable(self):
        rep = classification_report(gen_qr(7))
        assert list(rep.flags) == [
            "strong", "transitive", "regular", "near_regular",
            "doubly_regular", "nearly_doubly_regular",
            "locally_transitive_plus", "locally_transitive_minus",
            "locally_transitive", "locally_regular_plus",
            "locally_regular_minus", "locally_regular",
            "rldr", "rlndr", "aat_positive",
        ]
        assert rep.flags["doubly_regular"]
        assert rep.flags["rldr"]
        assert rep.semi_degree == 3

    def test_non_regular_has_no_semi_degree(self):
        rep = classification_report(gen_transitive(5))
        assert rep.semi_degree is None
        assert rep.flags["transitive"]

    def test_implication_chains(self, corpus9):
        # doubly regular forces regular + locally regular; likewise NDR
        for _, rep in corpus9.classes:
            flags = classification_report(rep).flags
            if flags["doubly_regular"]:
                assert flags["regular"] and flags["locally_regular"]
            if flags["nearly_doubly_regular"]:
                assert flags["regular"] and flags["locally_regular"]
            assert flags["locally_transitive"] == (
                flags["locally_transitive_plus"]
                and flags["locally_transitive_minus"])
