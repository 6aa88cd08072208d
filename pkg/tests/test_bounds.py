import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bnspectra import bounds
from bnspectra.bounds import (
    FamilyParams,
    Status,
    ceil_threshold,
    check_conjecture_bn,
    check_conjecture_general,
    check_lemma22,
    check_remark24,
    check_theorem14,
    check_theorem16,
    check_theorem31,
    check_theorem_1_1,
    compute_facts,
    corollary_class,
    judge,
    lemma22_lower_bound,
    parse_family,
    remark24_threshold,
    thm14_bound,
    thm14_threshold,
    thm16_bound,
    thm31_bound,
    turan_bound,
)
from bnspectra.generators import book, complete, cycle, fan, gnp, petersen, stacked_planar
from bnspectra.graph import from_edge_list

from conftest import graphs

HALF = FamilyParams(0.5, 0.5)
ONE = FamilyParams(0.5, 1.0)


class TestVerdict:
    def test_slack(self):
        assert judge("x", 1.0 + 5e-10, 1.0).holds
        assert not judge("x", 1.0 + 2e-9, 1.0).holds
        assert not judge("x", 1.0, 1.0, strict=True).holds
        assert judge("x", 0.5, 1.0, strict=True).holds

    def test_margin(self):
        v = judge("x", 2.0, 3.5)
        assert v.margin == 1.5 and v.as_dict()["status"] == "holds"

    def test_family_params(self):
        with pytest.raises(ValueError):
            FamilyParams(0.0, 1.0)
        with pytest.raises(ValueError):
            FamilyParams(1.6, 1.0)
        with pytest.raises(ValueError):
            FamilyParams(0.5, 0.0)


class TestBoundFunctions:
    def test_turan(self):
        assert turan_bound(2) == 1.0
        assert turan_bound(3) == pytest.approx(4 / 3)
        assert turan_bound(4) == 1.5
        with pytest.raises(ValueError):
            turan_bound(1)

    def test_lemma22_lower_bound(self):
        assert lemma22_lower_bound(4, 3, 1) == pytest.approx(8 - 2**1.5)
        assert lemma22_lower_bound(9, 6, 1) == pytest.approx(27 - 3**1.5)
        assert lemma22_lower_bound(10, 5, 4) == pytest.approx(10**1.5 / 2)
        with pytest.raises(ValueError):
            lemma22_lower_bound(11, 5, 1)
        with pytest.raises(ValueError):
            lemma22_lower_bound(1, 5, 0)

    def test_thm14_bound(self):
        r = 3 ** (1 / 3)
        assert thm14_bound(3, 1) == pytest.approx(2 * (r / (1 + r) + 1 / 3))
        assert thm14_bound(3, 1) == pytest.approx(1.8477, abs=1e-4)
        assert thm14_bound(3, 3) == pytest.approx(1.2552, abs=1e-4)
        with pytest.raises(ValueError):
            thm14_bound(2, 1)

    @settings(max_examples=200)
    @given(st.integers(3, 200), st.integers(1, 8))
    def test_thm14_bound_shape(self, omega, k):
        assert thm14_bound(omega, k + 1) <= thm14_bound(omega, k)
        if omega ** (-k) > 1e-12:
            assert thm14_bound(omega, k + 1) < thm14_bound(omega, k)
        assert thm14_bound(omega, k) < 2

    @pytest.mark.parametrize("omega", range(3, 65))
    def test_k3_beats_turan(self, omega):
        assert thm14_bound(omega, 3) < turan_bound(omega)

    def test_thm14_threshold(self):
        assert thm14_threshold(HALF, 3, 1) == pytest.approx(98.01)
        assert thm14_threshold(ONE, 3, 1) == pytest.approx(392.04)
        assert thm14_threshold(FamilyParams(1.5, 1.0), 3, 1) == pytest.approx(19.8 ** (2 / 3))
        assert thm14_threshold(FamilyParams(1.5, 1.0), 3, 1) == pytest.approx(7.3189, abs=1e-4)

    def test_remark24_threshold(self):
        assert remark24_threshold(ONE, 4) == pytest.approx(404.8144)
        assert ceil_threshold(remark24_threshold(ONE, 4)) == 405
        assert ceil_threshold(remark24_threshold(HALF, 3)) == 76
        assert ceil_threshold(remark24_threshold(FamilyParams(0.5, 1 / 3), 3)) == 34
        with pytest.raises(ValueError):
            remark24_threshold(ONE, 2)

    def test_thm31_bound(self):
        assert thm31_bound(3, 1) == pytest.approx(3 + 3 ** (2 / 3))
        assert thm31_bound(6, 4) == pytest.approx(11.2415, abs=1e-4)
        assert thm31_bound(9, 0) == 9
        with pytest.raises(ValueError):
            thm31_bound(1, 0)

    def test_thm16_bound(self):
        assert thm16_bound(100, ONE) == pytest.approx(1 + 3 ** (2 / 3) / 100 ** (1 / 3))
        assert thm16_bound(100, ONE) == pytest.approx(1.4481, abs=1e-4)
        assert thm16_bound(10**6, ONE) == pytest.approx(1.0208, abs=1e-4)
        with pytest.raises(ValueError):
            thm16_bound(1, ONE)

    @settings(max_examples=100)
    @given(st.integers(2, 10**7), st.floats(0.05, 1.5), st.floats(0.01, 10))
    def test_thm16_decreasing(self, m, eps, c):
        fp = FamilyParams(eps, c)
        assert thm16_bound(m + 1, fp) < thm16_bound(m, fp)

    def test_constants(self):
        assert bounds.thm14_constant() == pytest.approx(2.1213, abs=1e-4)
        assert bounds.thm14_constant() <= bounds.THM14_CONSTANT
        assert bounds.remark24_constant() == pytest.approx(10.0538, abs=1e-4)
        assert bounds.remark24_constant() <= bounds.REMARK24_CONSTANT

    @settings(max_examples=200)
    @given(st.integers(3, 60), st.integers(1, 6))
    def test_thm14_proof_chain(self, omega, k):
        """The bracket in the contradiction step exceeds omega**-(1.5k + 0.5)."""
        r = omega ** (1 / 3)
        d = r / (1 + r) + omega ** (-k)
        bracket = d**1.5 / math.sqrt(omega) - (1 - d) ** 1.5
        assert bracket > omega ** (-(1.5 * k + 0.5)) * (1 - 1e-12)
        # 6c m^{1.5-eps} > (2m)^{1.5} bracket  =>  m^eps < (6 / 2^{1.5}) c / bracket <= 2.2 c omega^{2k}
        assert bounds.thm14_constant() / bracket <= bounds.THM14_CONSTANT * omega ** (2 * k) * (1 + 1e-12)

    @settings(max_examples=100)
    @given(st.integers(3, 10**4))
    def test_remark24_function_increasing(self, omega):
        def h(w):
            return (1 - 1 / w) ** 1.5 - 1 / w

        assert h(omega + 1) > h(omega)
        assert h(omega) >= (2 * math.sqrt(2) - math.sqrt(3)) / (3 * math.sqrt(3)) - 1e-15


class TestCorollaryClasses:
    def test_planar(self):
        cc = corollary_class("planar")
        assert (cc.c, cc.epsilon, cc.omega_cap, cc.edge_threshold) == (1.0, 0.5, 4, 405)

    def test_outerplanar(self):
        cc = corollary_class("outerplanar")
        assert (cc.c, cc.omega_cap, cc.edge_threshold) == (0.5, 3, 76)

    def test_book_free_2(self):
        cc = corollary_class("book_free", 2)
        assert cc.edge_threshold == 34 and cc.omega_cap == 3

    @pytest.mark.parametrize("k", range(2, 12))
    def test_book_free_closed_form(self, k):
        cc = corollary_class("book_free", k)
        assert cc.edge_threshold == math.ceil((10.06 * (k - 1) * math.sqrt(k + 1) / 3) ** 2 - 1e-9)

    def test_cycle_free_4(self):
        cc = corollary_class("cycle_free", 4)
        assert cc.c == pytest.approx(1 / 3) and cc.omega_cap == 4 and cc.edge_threshold == 45

    @pytest.mark.parametrize("k", range(4, 14))
    def test_cycle_free_closed_form(self, k):
        cc = corollary_class("cycle_free", k)
        assert cc.edge_threshold == math.ceil((10.06 * (k - 3) * math.sqrt(k) / 3) ** 2 - 1e-9)

    @pytest.mark.parametrize("tag,k", [("book_free", 1), ("cycle_free", 3), ("planar", 2), ("torus", None)])
    def test_invalid(self, tag, k):
        with pytest.raises(ValueError):
            corollary_class(tag, k)

    def test_parse_family(self):
        assert parse_family("book:3") == corollary_class("book_free", 3)
        assert parse_family("planar").edge_threshold == 405


class TestChecks:
    def test_t11_examples(self):
        v = check_theorem_1_1(complete(3))
        assert v.holds and v.lhs == pytest.approx(4 / 3) and v.rhs == pytest.approx(4 / 3)
        v = check_theorem_1_1(cycle(4))
        assert v.holds and v.lhs == pytest.approx(1.0)
        v = check_theorem_1_1(petersen())
        assert v.holds and v.lhs == pytest.approx(0.6) and v.rhs == 1.0

    def test_t11_edgeless(self):
        assert check_theorem_1_1(from_edge_list(3, [])).status is Status.NOT_APPLICABLE

    @pytest.mark.parametrize("n", range(2, 12))
    def test_t11_tight_on_complete(self, n):
        v = check_theorem_1_1(complete(n))
        assert v.holds and abs(v.margin) <= bounds.slack_for(v.rhs)

    def test_bn_examples(self):
        v = check_conjecture_bn(cycle(4))
        assert v.holds and v.lhs == pytest.approx(1.0) and abs(v.margin) < 1e-9
        v = check_conjecture_bn(petersen())
        assert v.holds and v.lhs == pytest.approx(2 / 3)
        v = check_conjecture_bn(cycle(5))
        # lambda_2(C_5) = 2 cos 72 deg
        assert v.lhs == pytest.approx((4 + (2 * math.cos(2 * math.pi / 5)) ** 2) / 5)
        assert v.lhs == pytest.approx(0.87639, abs=1e-5) and v.holds

    def test_bn_excludes_complete(self):
        v = check_conjecture_bn(complete(5))
        assert v.status is Status.NOT_APPLICABLE and "complete" in v.reason

    def test_general_examples(self):
        v = check_conjecture_general(cycle(4))
        assert v.context["ell"] == 1 and v.lhs == pytest.approx(1.0) and v.holds
        v = check_conjecture_general(complete(4))
        assert v.context["ell"] == 1 and v.lhs == pytest.approx(1.5) and v.holds
        v = check_conjecture_general(petersen())
        assert v.context["ell"] == 2 and v.lhs == pytest.approx(2 / 3) and v.holds

    def test_lemma22_examples(self):
        (v,) = check_lemma22(complete(3))
        assert v.rhs == 6 and v.lhs == pytest.approx(8 - 2**1.5) and v.holds
        (v,) = check_lemma22(complete(4))
        assert v.rhs == 24 and v.lhs == pytest.approx(27 - 3**1.5) and v.holds
        (v,) = check_lemma22(cycle(4))
        assert v.holds and abs(v.margin) < 1e-9
        assert check_lemma22(from_edge_list(2, [])) == []

    def test_lemma22_all_k(self):
        vs = check_lemma22(petersen())
        assert [v.context["k"] for v in vs] == list(range(1, 7))
        assert all(v.holds for v in vs)

    def test_thm14_fan60(self):
        v = check_theorem14(fan(60), HALF, 1)
        assert v.applicable and v.holds
        assert v.context["m"] == 117 and v.context["omega"] == 3
        assert v.rhs == pytest.approx(1.8477, abs=1e-4) and v.lhs < v.rhs

    def test_thm14_not_applicable(self):
        assert not check_theorem14(complete(4), HALF, 1).applicable
        assert "threshold" in check_theorem14(complete(4), ONE, 1).reason
        assert "omega" in check_theorem14(cycle(8), HALF, 1).reason
        # K_n has far too many triangles for a small c
        v = check_theorem14(complete(30), FamilyParams(0.5, 0.01), 1)
        assert v.reason == "triangle budget exceeded"

    def test_remark24(self):
        v = check_remark24(fan(60), HALF)
        assert v.holds and v.rhs == pytest.approx(4 / 3)
        assert not check_remark24(fan(30), HALF).applicable

    def test_thm31_examples(self):
        v = check_theorem31(complete(3))
        assert v.strict and v.holds and v.lhs == pytest.approx(5) and v.rhs == pytest.approx(5.0801, abs=1e-4)
        v = check_theorem31(complete(4))
        assert v.holds and v.lhs == pytest.approx(10) and v.rhs == pytest.approx(11.2415, abs=1e-4)
        v = check_theorem31(cycle(4))
        assert not v.strict and v.holds and abs(v.margin) < 1e-9
        assert not check_theorem31(from_edge_list(3, [(0, 1)])).applicable

    def test_thm16_examples(self):
        v = check_theorem16(cycle(4), ONE)
        assert v.holds and v.lhs == pytest.approx(1.0) and v.rhs == pytest.approx(2.3104, abs=1e-4)
        v = check_theorem16(petersen(), ONE)
        assert v.holds and v.rhs == pytest.approx(1 + 3 ** (2 / 3) / 15 ** (1 / 3))
        assert check_theorem16(fan(100), ONE).holds
        assert check_theorem16(complete(20), FamilyParams(0.5, 0.1)).reason == "triangle budget exceeded"

    def test_budget_exhausted_skips(self):
        g = gnp(40, 0.7, 2)
        f = compute_facts(g, clique_budget=3)
        v = check_conjecture_general(f)
        assert v.status is Status.NOT_APPLICABLE and "omega is lower bound" in v.warnings

    def test_planar_class_members(self):
        cc = corollary_class("planar")
        g = stacked_planar(40, 9)
        f = compute_facts(g)
        assert f.omega <= cc.omega_cap and f.t <= cc.family.budget(g.m)
        assert check_theorem16(f, cc.family).holds

    def test_book_free_member(self):
        cc = corollary_class("book_free", 2)
        g = book(1)
        assert compute_facts(g).omega <= cc.omega_cap

    @settings(max_examples=150, deadline=None)
    @given(graphs(min_n=2, max_n=9))
    def test_suite_holds_on_random_graphs(self, g):
        f = compute_facts(g)
        if g.m == 0:
            return
        assert check_theorem_1_1(f).holds
        assert check_conjecture_general(f).holds
        assert all(v.holds for v in check_lemma22(f))
        if not g.is_complete():
            assert check_conjecture_bn(f).holds
        if g.m >= 2:
            assert check_theorem31(f).holds
