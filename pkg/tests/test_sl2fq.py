"""Finite fields and exhaustive SL2/PSL2 checks at small q."""

import random

import pytest

from margulis.sl2fq import (
    BudgetError,
    FieldError,
    SL2Matrix,
    cayley_hamilton_violations,
    element_order,
    field_for_order,
    find_sum_squares_pair,
    gl_order,
    group_summary,
    make_field,
    order_prediction_from_trace,
    order_two_elements,
    sl2_elements,
    verify_trace_order_lemma,
)


class TestFields:
    def test_f4(self):
        F = make_field(2, 2)
        assert F.q == 4
        assert F.modulus == [1, 1, 1]  # t^2 + t + 1, low degree first

    def test_f7(self):
        F = make_field(7, 1)
        assert F.q == 7
        assert F.mul(3, 5) == 1
        assert F.inv(3) == 5

    def test_f9_modulus(self):
        F = make_field(3, 2)
        assert F.modulus == [1, 0, 1]  # t^2 + 1 has no root mod 3

    def test_composite_p_rejected(self):
        with pytest.raises(FieldError):
            make_field(6, 1)

    def test_oversize_rejected(self):
        with pytest.raises(FieldError):
            make_field(7, 3)  # 343 > 81

    def test_field_for_order(self):
        assert field_for_order(27).p == 3
        with pytest.raises(FieldError):
            field_for_order(6)

    @pytest.mark.parametrize("pq", [(2, 3), (3, 2), (3, 3), (5, 2)])
    def test_sampled_axioms(self, pq):
        p, n = pq
        F = make_field(p, n)
        rng = random.Random(p * 100 + n)
        for _ in range(200):
            a, b, c = (rng.randrange(F.q) for _ in range(3))
            assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
            assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
            assert F.add(a, F.neg(a)) == F.zero
            if a != 0:
                assert F.mul(a, F.inv(a)) == F.one


class TestSL2:
    def test_element_count(self):
        for q in (2, 3, 4, 5, 7, 9):
            F = field_for_order(q)
            assert sum(1 for _ in sl2_elements(F)) == q**3 - q

    def test_identity_order(self):
        F = make_field(5)
        assert element_order(SL2Matrix.identity(F)) == 1
        assert element_order(SL2Matrix.minus_identity(F)) == 2

    def test_rotation_order_four(self):
        F = make_field(5)
        m = SL2Matrix(F, 0, F.one, F.neg(F.one), 0)
        assert m.trace() == F.zero
        assert element_order(m) == 4

    def test_orders_divide_group_order(self):
        F = make_field(7)
        for m in sl2_elements(F):
            assert (7**3 - 7) % element_order(m) == 0

    def test_det_enforced(self):
        F = make_field(5)
        with pytest.raises(ValueError):
            SL2Matrix(F, 1, 0, 0, 2)


class TestOrderPrediction:
    def test_trace_zero_odd(self):
        F = make_field(7)
        assert order_prediction_from_trace(F, F.zero) == frozenset({4})

    def test_trace_one_char2(self):
        F = make_field(2)
        assert order_prediction_from_trace(F, F.one) == frozenset({3})

    def test_trace_two_unconstrained(self):
        F = make_field(7)
        assert order_prediction_from_trace(F, F.from_int(2)) is None

    def test_trace_sq_two(self):
        F = make_field(7)
        # 3^2 = 2 mod 7
        assert order_prediction_from_trace(F, F.from_int(3)) == frozenset({8})

    def test_char3_trace_one(self):
        F = make_field(3)
        assert order_prediction_from_trace(F, F.one) == frozenset({2, 6})
        assert order_prediction_from_trace(F, F.from_int(-1)) == frozenset({1, 3})


class TestTraceOrderLemma:
    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
    def test_small_q(self, q):
        report = verify_trace_order_lemma(q)
        assert report.passed
        assert report.elements_checked == q**3 - q
        assert report.constrained > 0


class TestSumSquares:
    def test_q7(self):
        w = find_sum_squares_pair(7)
        assert (w.a, w.b) == (3, 2)
        assert w.all_checks

    def test_q5(self):
        w = find_sum_squares_pair(5)
        assert (w.a, w.b) == (0, 2)
        assert w.all_checks

    def test_q3(self):
        w = find_sum_squares_pair(3)
        assert (w.a, w.b) == (1, 1)
        assert w.all_checks

    @pytest.mark.parametrize("q", [9, 11, 13, 25, 27])
    def test_larger_odd_q(self, q):
        F = field_for_order(q)
        w = find_sum_squares_pair(q)
        assert F.add(F.mul(w.a, w.a), F.mul(w.b, w.b)) == F.neg(F.one)
        assert w.all_checks

    def test_char2_rejected(self):
        with pytest.raises(FieldError):
            find_sum_squares_pair(4)


class TestGroupSummary:
    def test_q5(self):
        s = group_summary(5)
        assert s.psl2_order == 60
        assert s.simple is True
        assert s.sylow2_rank == 2
        assert s.center_order == 2
        assert s.div6

    def test_q4_a5_profile(self):
        s = group_summary(4)
        assert s.sl2_order == 60 and s.psl2_order == 60
        assert s.center_order == 1
        assert s.simple is True
        assert s.sylow2_rank == 2

    def test_q2_not_simple(self):
        s = group_summary(2)
        assert s.psl2_order == 6
        assert s.simple is False
        assert s.h1_z2_rank == 1
        assert s.sylow2_rank == 1

    def test_q3_alternating_profile(self):
        s = group_summary(3)
        assert s.psl2_order == 12
        assert s.simple is False
        assert s.sylow2_rank == 2
        assert s.h1_z2_rank == 0

    @pytest.mark.parametrize("q,rank", [(7, 2), (8, 3), (9, 2)])
    def test_sylow_ranks(self, q, rank):
        s = group_summary(q)
        assert s.simple is True
        assert s.sylow2_rank == rank
        assert s.div6

    def test_light_summary(self):
        s = group_summary(27)
        assert s.sl2_order == 27**3 - 27
        assert s.psl2_order == (27**3 - 27) // 2
        assert s.simple is None and s.sylow2_rank is None
        assert s.div6

    def test_budget_error(self):
        with pytest.raises(BudgetError):
            group_summary(25, full=True)

    def test_json_keys(self):
        data = group_summary(5).to_json()
        assert set(data) == {
            "q",
            "sl2_order",
            "psl2_order",
            "center_order",
            "simple",
            "sylow2_rank",
            "div6",
        }


class TestMiscFacts:
    def test_gl_orders(self):
        assert gl_order(2, 2) == 6
        assert gl_order(3, 2) == 168
        assert gl_order(1, 5) == 4

    def test_cayley_hamilton(self):
        for q in (2, 3, 4, 5):
            assert cayley_hamilton_violations(q) == 0

    @pytest.mark.parametrize("q", [3, 5, 7, 9])
    def test_unique_involution_is_minus_id(self, q):
        elems = order_two_elements(q)
        F = field_for_order(q)
        assert len(elems) == 1
        assert elems[0].entries() == SL2Matrix.minus_identity(F).entries()
