#!/usr/bin/env python3
"""Survey the built-in catalog and tabulate CP / CP2 / CP3 membership.

CP: every element order is a prime power.  CP2: o(ab) <= max(o(a), o(b))
for all pairs (the distance is an ultrametric).  CP3: o(ab) < o(a) + o(b)
for all pairs (the distance is a metric).  The inclusions CP2 < CP3 < CP
are strict, and the table makes the separating examples easy to spot:
S3 is CP3 but not CP2, S4 is CP but not CP3.
"""

import cpgroups as cg
from cpgroups.metric import classify


def main():
    max_order = 24
    rows = []
    for name, group in cg.catalog_iter(max_order):
        r = classify(group, name=name)
        rows.append((name, r.order, r.in_cp, r.in_cp2, r.in_cp3, r.solvable))

    print(f"{'group':<28}{'order':>6}{'cp':>6}{'cp2':>6}{'cp3':>6}{'solvable':>10}")
    for name, order, cp, cp2, cp3, solvable in rows:
        flags = ["y" if value else "." for value in (cp, cp2, cp3, solvable)]
        print(f"{name:<28}{order:>6}{flags[0]:>6}{flags[1]:>6}{flags[2]:>6}{flags[3]:>10}")

    print()
    print("counts:", len(rows), "groups;",
          sum(1 for r in rows if r[4]), "in cp3;",
          sum(1 for r in rows if r[3]), "in cp2")
    print()
    print("the two order-8 2-groups split: the quaternion group keeps the")
    print("strict inequality (one involution), the dihedral group loses it")
    print("(reflections multiply to a rotation of order 4).")


if __name__ == "__main__":
    main()
