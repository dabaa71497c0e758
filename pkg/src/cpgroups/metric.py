"""The order distance d(x,y) = o(x y^-1) - 1 and the CP class predicates.

d is a metric on G exactly when every pair satisfies the strict order
inequality o(ab) < o(a) + o(b) (class CP3), and an ultrametric exactly when
o(ab) <= max(o(a), o(b)) (class CP2).  CP is the class where every element
order is a prime power.  All pair scans are exhaustive, vectorized one row
at a time, and report the lexicographically smallest violating pair.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from .core import CapExceededError, FiniteGroup, distinct_primes

MATRIX_CAP = 4096
AUDIT_CAP = 60


@dataclass(frozen=True)
class Witness:
    """A pair (a, b) certifying that a class condition fails.

    For CP the witness is a single element of non-prime-power order (the b
    fields repeat the a fields) and ``parts`` carries two commuting powers
    whose orders are distinct primes p and q with product order p*q.
    """

    a_index: int
    b_index: int
    a_order: int
    b_order: int
    ab_order: int
    violated: str
    parts: Optional[tuple[tuple[int, int], tuple[int, int]]] = None


def render_witness(g: FiniteGroup, w: Witness) -> str:
    if w.violated == "CP":
        text = f"element {g.label(w.a_index)} has order {w.a_order}"
        if w.parts:
            (p, ai), (q, bi) = w.parts
            text += (
                f"; commuting powers {g.label(ai)} (order {p}) and {g.label(bi)}"
                f" (order {q}) multiply to order {p * q}"
            )
        return text
    rel = ">=" if w.violated == "CP3" else ">"
    bound = "o(a)+o(b)" if w.violated == "CP3" else "max(o(a),o(b))"
    return (
        f"a={g.label(w.a_index)} (order {w.a_order}), b={g.label(w.b_index)}"
        f" (order {w.b_order}): o(ab)={w.ab_order} {rel} {bound}"
    )


# -- distance ------------------------------------------------------------


def distance(g: FiniteGroup, x: int, y: int) -> int:
    """o(x y^-1) - 1; zero exactly when x == y."""
    orders = g.order_table().orders
    return int(orders[g.mul(x, int(g.inv[y]))]) - 1


def distance_matrix(g: FiniteGroup) -> np.ndarray:
    """Full n x n distance matrix (symmetric, zero diagonal)."""
    if g.order > MATRIX_CAP:
        raise CapExceededError(f"order {g.order} exceeds the distance-matrix cap {MATRIX_CAP}")
    orders = g.order_table().orders
    rows = np.empty((g.order, g.order), dtype=np.int64)
    for x in range(g.order):
        rows[x] = orders[g.mul_row(x)[g.inv]]
    return rows - 1


# -- pair scans ----------------------------------------------------------

PairCondition = Callable[[int, np.ndarray, np.ndarray], np.ndarray]


def scan_pair_order_condition(
    g: FiniteGroup, satisfies: PairCondition, tag: str = "custom"
) -> tuple[bool, Optional[Witness]]:
    """Exhaustive pair scan against a pluggable order condition.

    ``satisfies(o_a, o_b_vector, o_ab_vector)`` must return a boolean vector;
    the scan reports the lexicographically smallest failing pair.  This is
    the hook for user-supplied classes beyond CP2/CP3.
    """
    orders = g.order_table().orders
    for a in range(g.order):
        oab = orders[g.mul_row(a)]
        ok = np.asarray(satisfies(int(orders[a]), orders, oab))
        if not ok.all():
            b = int(np.argmax(~ok))
            return False, Witness(
                a_index=a,
                b_index=b,
                a_order=int(orders[a]),
                b_order=int(orders[b]),
                ab_order=int(oab[b]),
                violated=tag,
            )
    return True, None


def is_cp3(g: FiniteGroup) -> tuple[bool, Optional[Witness]]:
    """Strict triangle condition o(ab) < o(a) + o(b) for all pairs."""
    return scan_pair_order_condition(g, lambda oa, ob, oab: oab < oa + ob, tag="CP3")


def is_cp2(g: FiniteGroup) -> tuple[bool, Optional[Witness]]:
    """Ultrametric condition o(ab) <= max(o(a), o(b)) for all pairs."""
    return scan_pair_order_condition(
        g, lambda oa, ob, oab: oab <= np.maximum(oa, ob), tag="CP2"
    )


def is_cp(g: FiniteGroup) -> tuple[bool, Optional[Witness]]:
    """Every element order is 1 or a prime power.

    The witness element x of order m = p^a * q^b * ... comes with the
    commuting powers x^(m/p) and x^(m/q), whose product has order p*q; that
    product certifies the CP3 failure this implies.
    """
    orders = g.order_table().orders
    bad_orders = {int(m) for m in np.unique(orders) if len(distinct_primes(int(m))) >= 2}
    if not bad_orders:
        return True, None
    bad = np.isin(orders, sorted(bad_orders))
    x = int(np.argmax(bad))
    m = int(orders[x])
    p, q = distinct_primes(m)[:2]
    a = g.power(x, m // p)
    b = g.power(x, m // q)
    ab = g.mul(a, b)
    if int(orders[a]) != p or int(orders[b]) != q or int(orders[ab]) != p * q:
        raise RuntimeError("CP witness construction failed its self-check")
    return False, Witness(
        a_index=x,
        b_index=x,
        a_order=m,
        b_order=m,
        ab_order=m,
        violated="CP",
        parts=((p, a), (q, b)),
    )


def involution_product_witness(g: FiniteGroup, threshold: int = 3) -> Optional[Witness]:
    """Smallest pair of order-2 elements whose product order exceeds threshold."""
    orders = g.order_table().orders
    invol = np.flatnonzero(orders == 2)
    for a in invol:
        oab = orders[g.mul_row(int(a))[invol]]
        hit = oab > threshold
        if hit.any():
            b = int(invol[np.argmax(hit)])
            return Witness(
                a_index=int(a),
                b_index=b,
                a_order=2,
                b_order=2,
                ab_order=int(oab[np.argmax(hit)]),
                violated="CP3",
            )
    return None


# -- metric axioms ---------------------------------------------------------


@dataclass(frozen=True)
class MetricAxioms:
    """Exhaustive axiom check results for the order distance."""

    identity: bool
    symmetry: bool
    triangle: bool
    ultrametric: bool
    triangle_witness: Optional[Witness]
    ultrametric_witness: Optional[Witness]
    violating_triple: Optional[tuple[int, int, int]]
    audited: bool


def triangle_audit(g: FiniteGroup) -> bool:
    """Raw O(n^3) check of d(x,z) <= d(x,y) + d(y,z) over all triples."""
    if g.order > AUDIT_CAP:
        raise CapExceededError(f"triangle audit is restricted to order <= {AUDIT_CAP}")
    d = distance_matrix(g)
    return bool((d[:, None, :] <= d[:, :, None] + d[None, :, :]).all())


def check_metric_axioms(g: FiniteGroup, audit: bool = False) -> MetricAxioms:
    """Verify identity, symmetry and the triangle inequality exhaustively.

    The triangle axiom is decided through the pair reduction (a = x y^-1,
    b = y z^-1 turns the triple inequality into o(ab) < o(a) + o(b)); with
    ``audit`` the raw all-triples check is run as well (order <= 60) and
    cross-checked against the reduction.
    """
    d = distance_matrix(g)
    identity_ok = bool((np.diag(d) == 0).all() and (d + np.eye(g.order, dtype=np.int64) > 0).all())
    symmetry_ok = bool(np.array_equal(d, d.T))
    cp3_ok, cp3_wit = is_cp3(g)
    cp2_ok, cp2_wit = is_cp2(g)
    triple = None
    if cp3_wit is not None:
        triple = (cp3_wit.a_index, 0, int(g.inv[cp3_wit.b_index]))
    audited = False
    if audit:
        raw = triangle_audit(g)
        if raw != cp3_ok:
            raise RuntimeError("raw triangle audit disagrees with the pair reduction")
        audited = True
    return MetricAxioms(
        identity=identity_ok,
        symmetry=symmetry_ok,
        triangle=cp3_ok,
        ultrametric=cp2_ok,
        triangle_witness=cp3_wit,
        ultrametric_witness=cp2_wit,
        violating_triple=triple,
        audited=audited,
    )


# -- p-group layers ----------------------------------------------------------


@dataclass(frozen=True)
class LayerRow:
    i: int
    threshold: int
    size: int
    is_subgroup: bool
    is_normal: bool


@dataclass(frozen=True)
class LayerReport:
    p: Union[int, str]
    rows: tuple[LayerRow, ...]
    all_normal: bool


def layer_check(g: FiniteGroup) -> LayerReport:
    """For a p-group of order p^n, test each order layer {x : o(x) <= p^i}.

    Every layer of a CP3 p-group must be a normal subgroup; the report says
    which layers are subgroups and which are normal.
    """
    p = g.is_p_group()
    if p is None:
        raise ValueError(f"{g.name} is not a p-group")
    if p == "trivial":
        row = LayerRow(i=0, threshold=1, size=1, is_subgroup=True, is_normal=True)
        return LayerReport(p=p, rows=(row,), all_normal=True)
    orders = g.order_table().orders
    k = 0
    while p**k < g.order:
        k += 1
    rows = []
    for i in range(k + 1):
        members = np.flatnonzero(orders <= p**i)
        is_sub = g.is_closed_subset(members)
        is_norm = bool(is_sub and g._is_normal_members(members))
        rows.append(LayerRow(i=i, threshold=p**i, size=len(members), is_subgroup=is_sub, is_normal=is_norm))
    return LayerReport(p=p, rows=tuple(rows), all_normal=all(r.is_normal for r in rows))


# -- aggregated classification ------------------------------------------------


@dataclass(frozen=True)
class ClassReport:
    name: str
    order: int
    in_cp: bool
    in_cp2: bool
    in_cp3: bool
    cp_witness: Optional[Witness]
    cp2_witness: Optional[Witness]
    cp3_witness: Optional[Witness]
    metric: MetricAxioms
    solvable: bool
    derived_length: int
    p_group: Union[int, str, None]
    order_multiset: tuple[tuple[int, int], ...]


def classify(g: FiniteGroup, name: Optional[str] = None, audit: bool = False) -> ClassReport:
    """Run every class predicate and the metric axioms on one group."""
    ot = g.order_table()
    cp_ok, cp_wit = is_cp(g)
    axioms = check_metric_axioms(g, audit=audit)
    cp3_ok, cp3_wit = axioms.triangle, axioms.triangle_witness
    cp2_ok, cp2_wit = axioms.ultrametric, axioms.ultrametric_witness
    if cp2_ok and not cp3_ok:
        raise RuntimeError(f"{g.name}: hierarchy violated (CP2 without CP3)")
    if cp3_ok and not cp_ok:
        raise RuntimeError(f"{g.name}: hierarchy violated (CP3 without CP)")
    series = g.derived_series()
    values, counts = np.unique(ot.orders, return_counts=True)
    multiset = tuple((int(v), int(c)) for v, c in zip(values, counts))
    return ClassReport(
        name=name or g.name,
        order=g.order,
        in_cp=cp_ok,
        in_cp2=cp2_ok,
        in_cp3=cp3_ok,
        cp_witness=cp_wit,
        cp2_witness=cp2_wit,
        cp3_witness=cp3_wit,
        metric=axioms,
        solvable=series[-1].size == 1,
        derived_length=len(series),
        p_group=g.is_p_group(),
        order_multiset=multiset,
    )


# -- serialization -----------------------------------------------------------


def _flag(value: bool) -> str:
    return "true" if value else "false"


def report_text(g: FiniteGroup, r: ClassReport) -> str:
    lines = [
        f"group: {r.name}",
        f"order: {r.order}",
        "element orders: " + " ".join(f"{v}^{c}" for v, c in r.order_multiset),
        f"cp: {_flag(r.in_cp)}" + (f"  [{render_witness(g, r.cp_witness)}]" if r.cp_witness else ""),
        f"cp2: {_flag(r.in_cp2)}" + (f"  [{render_witness(g, r.cp2_witness)}]" if r.cp2_witness else ""),
        f"cp3: {_flag(r.in_cp3)}" + (f"  [{render_witness(g, r.cp3_witness)}]" if r.cp3_witness else ""),
        (
            "metric axioms: identity="
            + _flag(r.metric.identity)
            + " symmetry="
            + _flag(r.metric.symmetry)
            + " triangle="
            + _flag(r.metric.triangle)
            + (" (audited)" if r.metric.audited else "")
        ),
        f"ultrametric: {_flag(r.metric.ultrametric)}",
        f"solvable: {_flag(r.solvable)} (derived series length {r.derived_length})",
        "p-group: " + (str(r.p_group) if r.p_group is not None else "no"),
    ]
    return "\n".join(lines)


def report_records(g: FiniteGroup, r: ClassReport) -> str:
    rows = [
        ("name", r.name),
        ("order", r.order),
        ("cp", _flag(r.in_cp)),
        ("cp2", _flag(r.in_cp2)),
        ("cp3", _flag(r.in_cp3)),
        ("metric_identity", _flag(r.metric.identity)),
        ("metric_symmetry", _flag(r.metric.symmetry)),
        ("metric_triangle", _flag(r.metric.triangle)),
        ("ultrametric", _flag(r.metric.ultrametric)),
        ("solvable", _flag(r.solvable)),
        ("derived_length", r.derived_length),
        ("p_group", r.p_group if r.p_group is not None else "-"),
    ]
    for tag, wit in (("cp", r.cp_witness), ("cp2", r.cp2_witness), ("cp3", r.cp3_witness)):
        if wit is not None:
            rows.append((f"{tag}_witness_a", g.label(wit.a_index)))
            rows.append((f"{tag}_witness_b", g.label(wit.b_index)))
            rows.append((f"{tag}_witness_orders", f"{wit.a_order},{wit.b_order},{wit.ab_order}"))
    return "\n".join(f"{k}={v}" for k, v in rows)


def write_distance_csv(g: FiniteGroup, stream) -> None:
    """Distance matrix as CSV: header row of element labels, one row per element."""
    d = distance_matrix(g)
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow([""] + list(g.labels))
    for i in range(g.order):
        writer.writerow([g.labels[i]] + [int(x) for x in d[i]])


def distance_csv_text(g: FiniteGroup) -> str:
    buf = io.StringIO()
    write_distance_csv(g, buf)
    return buf.getvalue()
