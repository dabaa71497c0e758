#!/usr/bin/env python3
"""Build PSL(2,q) from scratch and watch simplicity clash with the metric.

The construction enumerates all determinant-1 matrices over a lookup-table
GF(q), maps each to its Mobius permutation of the q+1 projective points,
and deduplicates.  In any group where d is a metric, two involutions can
only multiply to an element of order at most 3; every PSL(2,q) with q >= 4
has an involution pair breaking that bound, so none of them (and in fact
no nonabelian simple group in the catalog) admits the metric.
"""

import math

import cpgroups as cg
from cpgroups.metric import involution_product_witness, is_cp3, render_witness


def main():
    print("q   order   formula   cp3    simple   involution pair")
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13):
        g = cg.psl2(q)
        expected = q * (q * q - 1) // math.gcd(2, q - 1)
        assert g.order == expected
        cp3 = is_cp3(g)[0]
        simple = g.is_simple()
        wit = involution_product_witness(g)
        pair = f"product order {wit.ab_order}" if wit else "none exceeds 3"
        print(f"{q:<4}{g.order:<8}{expected:<10}{str(cp3).lower():<7}{str(simple).lower():<9}{pair}")

    print()
    g = cg.psl2(4)
    wit = involution_product_witness(g)
    print("PSL(2,4) acts on 5 projective points; a witness pair:")
    print(" ", render_witness(g, wit))
    print("its normal-subgroup scan:", [s.size for s in g.normal_subgroups()])

    print()
    a5 = cg.alternating(5)
    print(
        "alternating:5 has the same order multiset as psl2:4:",
        sorted(a5.order_table().orders.tolist()) == sorted(g.order_table().orders.tolist()),
    )
    print("and the smallest cp3 failures agree in shape (2, 2 -> 5):")
    print(" ", render_witness(a5, is_cp3(a5)[1]))


if __name__ == "__main__":
    main()
