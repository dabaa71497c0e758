import numpy as np
import pytest

import cpgroups as cg
from cpgroups import CapExceededError
from cpgroups.metric import (
    check_metric_axioms,
    classify,
    distance,
    distance_csv_text,
    distance_matrix,
    involution_product_witness,
    is_cp,
    is_cp2,
    is_cp3,
    layer_check,
    render_witness,
    scan_pair_order_condition,
    triangle_audit,
)

from oracles import slow_triangle_holds, slow_ultrametric_holds


class TestDistance:
    def test_zero_iff_equal(self, s3):
        for x in range(s3.order):
            assert distance(s3, x, x) == 0
        assert distance(s3, 1, 2) > 0

    def test_transposition_to_identity(self, s3):
        transposition = int(np.flatnonzero(s3.order_table().orders == 2)[0])
        assert distance(s3, transposition, 0) == 1

    def test_z6_generator_to_identity(self, z6):
        assert distance(z6, 1, 0) == 5


class TestDistanceMatrix:
    def test_trivial(self):
        assert distance_matrix(cg.cyclic(1)).tolist() == [[0]]

    def test_z2(self):
        assert distance_matrix(cg.cyclic(2)).tolist() == [[0, 1], [1, 0]]

    def test_s3_rows_are_order_multiset(self, s3):
        d = distance_matrix(s3)
        for row in d:
            assert sorted(row.tolist()) == [0, 1, 1, 1, 2, 2]

    def test_symmetric_zero_diagonal(self, s4):
        d = distance_matrix(s4)
        assert np.array_equal(d, d.T)
        assert (np.diag(d) == 0).all()

    def test_cap(self):
        big = cg.cyclic(5000)
        with pytest.raises(CapExceededError):
            distance_matrix(big)


class TestCpPredicates:
    def test_z6_fails_cp(self, z6):
        ok, wit = is_cp(z6)
        assert not ok
        assert wit.a_order == 6
        (p, ai), (q, bi) = wit.parts
        assert {p, q} == {2, 3}
        orders = z6.order_table().orders
        assert int(orders[ai]) == p and int(orders[bi]) == q
        assert int(orders[z6.mul(ai, bi)]) == p * q

    def test_s4_is_cp(self, s4):
        assert is_cp(s4) == (True, None)

    def test_p_groups_are_cp(self, q8):
        assert is_cp(q8)[0]

    def test_s3_fails_cp2_with_transposition_pair(self, s3):
        ok, wit = is_cp2(s3)
        assert not ok
        assert (wit.a_order, wit.b_order, wit.ab_order) == (2, 2, 3)

    def test_q8_in_cp2(self, q8):
        assert is_cp2(q8)[0]

    def test_z4_in_cp2(self):
        assert is_cp2(cg.cyclic(4))[0]

    def test_s4_fails_cp3_with_involution_pair(self, s4):
        ok, wit = is_cp3(s4)
        assert not ok
        assert wit.a_order == 2 and wit.b_order == 2 and wit.ab_order == 4

    def test_a4_in_cp3(self, a4):
        assert is_cp3(a4)[0]

    def test_d8_fails_cp3(self, d8):
        assert not is_cp3(d8)[0]

    def test_trivial_group_in_all_classes(self):
        t = cg.cyclic(1)
        assert is_cp(t)[0] and is_cp2(t)[0] and is_cp3(t)[0]

    def test_witness_is_lexicographically_smallest(self, z6):
        _, wit = is_cp3(z6)
        orders = z6.order_table().orders
        found = None
        for a in range(6):
            for b in range(6):
                if orders[z6.mul(a, b)] >= orders[a] + orders[b]:
                    found = (a, b)
                    break
            if found:
                break
        assert (wit.a_index, wit.b_index) == found

    def test_witness_deterministic_across_runs(self, s4):
        first = is_cp3(s4)[1]
        second = is_cp3(s4)[1]
        assert (first.a_index, first.b_index) == (second.a_index, second.b_index)


class TestWitnessInvariants:
    @pytest.mark.parametrize(
        "spec", ["cyclic:6", "dihedral:8", "symmetric:4", "dicyclic:16", "product:cyclic:2,cyclic:5"]
    )
    def test_cp3_witness_inequality(self, spec):
        g = cg.group_from_spec(spec)
        ok, wit = is_cp3(g)
        if not ok:
            assert wit.ab_order >= wit.a_order + wit.b_order

    @pytest.mark.parametrize("spec", ["symmetric:3", "dihedral:12", "alternating:4"])
    def test_cp2_witness_inequality(self, spec):
        g = cg.group_from_spec(spec)
        ok, wit = is_cp2(g)
        if not ok:
            assert wit.ab_order > max(wit.a_order, wit.b_order)

    def test_cp_witness_has_two_prime_factors(self, z6):
        _, wit = is_cp(z6)
        assert wit.a_index == wit.b_index
        from cpgroups.core import distinct_primes

        assert len(distinct_primes(wit.a_order)) >= 2


class TestCustomScanHook:
    def test_reimplements_cp2(self, s3):
        ok, wit = scan_pair_order_condition(
            s3, lambda oa, ob, oab: oab <= np.maximum(oa, ob), tag="mine"
        )
        builtin_ok, builtin_wit = is_cp2(s3)
        assert ok == builtin_ok
        assert (wit.a_index, wit.b_index) == (builtin_wit.a_index, builtin_wit.b_index)
        assert wit.violated == "mine"

    def test_always_true_condition(self, z6):
        ok, wit = scan_pair_order_condition(z6, lambda oa, ob, oab: oab <= oab)
        assert ok and wit is None


class TestMetricAxioms:
    def test_s3_all_axioms_hold(self, s3):
        ax = check_metric_axioms(s3)
        assert ax.identity and ax.symmetry and ax.triangle
        assert not ax.ultrametric

    def test_z6_triangle_fails(self, z6):
        ax = check_metric_axioms(z6)
        assert ax.identity and ax.symmetry
        assert not ax.triangle
        x, y, z = ax.violating_triple
        d = distance_matrix(z6)
        assert d[x, z] > d[x, y] + d[y, z]

    def test_q8_all_axioms_hold(self, q8):
        ax = check_metric_axioms(q8)
        assert ax.identity and ax.symmetry and ax.triangle and ax.ultrametric

    def test_audit_agrees_with_reduction(self, s3, z6, q8, d8):
        for g in (s3, z6, q8, d8):
            ax = check_metric_axioms(g, audit=True)
            assert ax.audited
            assert triangle_audit(g) == ax.triangle

    def test_audit_matches_pure_python_oracle(self):
        for g in (cg.symmetric(3), cg.cyclic(6), cg.dicyclic(2), cg.dihedral(4), cg.cyclic(8)):
            assert triangle_audit(g) == slow_triangle_holds(g)
            assert is_cp2(g)[0] == slow_ultrametric_holds(g)

    def test_audit_cap(self):
        with pytest.raises(CapExceededError):
            triangle_audit(cg.cyclic(100))


class TestLayerCheck:
    def test_q8_layers(self, q8):
        report = layer_check(q8)
        assert report.p == 2
        assert [(r.size, r.is_normal) for r in report.rows] == [
            (1, True),
            (2, True),
            (8, True),
            (8, True),
        ]
        assert report.all_normal

    def test_z4_layers(self):
        report = layer_check(cg.cyclic(4))
        assert [r.size for r in report.rows] == [1, 2, 4]
        assert report.all_normal

    def test_d8_layer_fails_to_be_subgroup(self, d8):
        report = layer_check(d8)
        bad = [r for r in report.rows if not r.is_subgroup]
        assert bad and bad[0].size == 6
        assert not report.all_normal

    def test_rejects_non_p_group(self, z6):
        with pytest.raises(ValueError):
            layer_check(z6)

    def test_trivial_group(self):
        report = layer_check(cg.cyclic(1))
        assert report.p == "trivial"
        assert report.all_normal


class TestInvolutionWitness:
    def test_s4_has_involution_pair_of_product_order_four(self, s4):
        wit = involution_product_witness(s4)
        assert wit is not None
        assert wit.a_order == wit.b_order == 2
        assert wit.ab_order == 4

    def test_a4_has_none(self, a4):
        assert involution_product_witness(a4) is None


class TestClassify:
    def test_s3(self, s3):
        r = classify(s3)
        assert r.in_cp3 and not r.in_cp2 and r.in_cp
        assert r.metric.triangle == r.in_cp3
        assert r.metric.ultrametric == r.in_cp2

    def test_z6(self, z6):
        r = classify(z6)
        assert not r.in_cp3 and not r.in_cp
        assert r.solvable

    def test_a4(self, a4):
        r = classify(a4)
        assert r.in_cp3

    def test_hierarchy_on_sample(self):
        for spec in ("cyclic:12", "dihedral:10", "dicyclic:12", "elemab:3^2", "symmetric:4"):
            r = classify(cg.group_from_spec(spec))
            assert (not r.in_cp2) or r.in_cp3
            assert (not r.in_cp3) or r.in_cp

    def test_relabeling_by_conjugation_preserves_flags(self, s4):
        # relabel elements through conjugation by a fixed t: phi(x) = t^-1 x t
        t = 5
        n = s4.order
        phi = np.array([s4.mul(s4.mul(int(s4.inv[t]), x), t) for x in range(n)])
        inv_phi = np.empty(n, dtype=int)
        inv_phi[phi] = np.arange(n)
        table = np.array(
            [[phi[s4.mul(int(inv_phi[i]), int(inv_phi[j]))] for j in range(n)] for i in range(n)]
        )
        relabeled = cg.from_cayley(table, name="s4-relabeled")
        a, b = classify(s4), classify(relabeled)
        assert (a.in_cp, a.in_cp2, a.in_cp3) == (b.in_cp, b.in_cp2, b.in_cp3)
        assert a.order_multiset == b.order_multiset


class TestSerialization:
    def test_text_report_mentions_flags(self, s3):
        text = cg.metric.report_text(s3, classify(s3))
        assert "cp3: true" in text
        assert "cp2: false" in text
        assert "ultrametric: false" in text

    def test_records_are_key_value_lines(self, z6):
        records = cg.metric.report_records(z6, classify(z6))
        for line in records.splitlines():
            assert "=" in line
        assert "cp3=false" in records
        assert "cp3_witness_orders=3,2,6" in records

    def test_witness_rendering_uses_labels(self, s3):
        _, wit = is_cp2(s3)
        rendered = render_witness(s3, wit)
        assert "(" in rendered and "order 2" in rendered

    def test_csv_matrix(self):
        text = distance_csv_text(cg.cyclic(2))
        assert text.splitlines() == [",e,a", "e,0,1", "a,1,0"]

    def test_csv_symmetric_entries_bounded(self, s3):
        text = distance_csv_text(s3)
        rows = text.splitlines()
        assert len(rows) == 7
        for row in rows[1:]:
            for tok in row.split(",")[1:]:
                assert tok in {"0", "1", "2"}
