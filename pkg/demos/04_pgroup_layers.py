#!/usr/bin/env python3
"""p-group structure under the order metric: layers, heredity, quotients.

For a p-group of order p^n, collect the layers G_i = {x : o(x) <= p^i}.
When the strict order inequality holds, each layer is forced to be a
normal subgroup (orders below the threshold cannot combine past it, and
the order map is constant on conjugacy classes).  The quaternion group
passes; the dihedral group of order 8 already fails at i = 1, where the
five involutions and the identity form a six-element non-subgroup.
"""

import cpgroups as cg
from cpgroups.metric import is_cp2, is_cp3, layer_check
from cpgroups.subgroups import abelian_subgroup_scan, hereditary_check, quotient_scan


def show_layers(group):
    report = layer_check(group)
    print(f"{group.name}: p = {report.p}, cp3 = {is_cp3(group)[0]}")
    for row in report.rows:
        status = "normal subgroup" if row.is_normal else (
            "subgroup, not normal" if row.is_subgroup else "NOT a subgroup"
        )
        print(f"  orders <= {row.threshold:>3}: {row.size:>3} elements  ({status})")
    print()


def main():
    for spec in ("dicyclic:8", "cyclic:8", "dihedral:8", "elemab:3^2"):
        show_layers(cg.group_from_spec(spec))

    print("on p-groups the metric and ultrametric conditions coincide:")
    for name, g in cg.catalog_iter(64):
        if g.is_p_group() in (None, "trivial"):
            continue
        assert is_cp3(g)[0] == is_cp2(g)[0], name
    print("  checked every catalog p-group of order <= 64")
    print()

    a4 = cg.alternating(4)
    hered = hereditary_check(a4, is_cp3)
    print(f"alternating:4 subgroup scan: {hered.subgroups_checked} subgroups,"
          f" {len(hered.violations)} leave the metric class")

    scan = abelian_subgroup_scan(a4)
    print("its abelian subgroups all have prime-power order:", scan.verdict)

    quotients = quotient_scan(a4, is_cp3)
    print("quotient survey (observational only):")
    for row in quotients.rows:
        print(f"  |N| = {row.normal.size:>2} -> quotient order {row.quotient_order:>2}, "
              f"metric survives: {row.holds}")


if __name__ == "__main__":
    main()
