"""Complete subgroup enumeration and the scans built on top of it.

Enumeration seeds with all cyclic subgroups and closes the set under joins
with those cyclic atoms until nothing new appears; every subgroup is a join
of its cyclic subgroups, so the fixed point is the full lattice.  Exceeding
the enumeration cap raises instead of truncating: a partial list would
break every closure claim downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np

from .core import (
    SUBGROUP_CAP,
    CapExceededError,
    FiniteGroup,
    SubgroupSet,
    distinct_primes,
)

GroupPredicate = Callable[[FiniteGroup], Union[bool, tuple]]


def _mask_of(members: np.ndarray) -> int:
    raw = np.packbits(members.astype(np.uint8), bitorder="little").tobytes()
    return int.from_bytes(raw, "little")


def all_subgroups(g: FiniteGroup, cap: int = SUBGROUP_CAP) -> list[SubgroupSet]:
    """Every subgroup of g, sorted by (size, bitset), duplicates impossible.

    Joins against the cyclic atoms are batched over whole BFS frontiers, so
    for abelian groups each (frontier, atom) pair costs a handful of
    vectorized passes over an (m, n) membership matrix.  Results are cached
    on the group instance.
    """
    n = g.order
    if n > cap:
        raise CapExceededError(f"order {n} exceeds the subgroup-enumeration cap {cap}")
    cached = g._cache.get("subgroups")
    if cached is not None:
        return list(cached)
    atoms: list[tuple[int, np.ndarray]] = []
    seen_atoms: set[int] = set()
    for x in range(1, n):
        members = np.zeros(n, dtype=bool)
        members[0] = True
        cur = x
        while not members[cur]:
            members[cur] = True
            cur = g.mul(cur, x)
        key = _mask_of(members)
        if key not in seen_atoms:
            seen_atoms.add(key)
            atoms.append((x, members))
    trivial = np.zeros(n, dtype=bool)
    trivial[0] = True
    abelian = g.is_abelian
    shift_maps = {x: g.mul_col(int(g.inv[x])) for x, _ in atoms} if abelian else {}
    known: dict[bytes, np.ndarray] = {}
    frontier: list[np.ndarray] = []
    for members in [trivial] + [m for _, m in atoms]:
        key = np.packbits(members, bitorder="little").tobytes()
        if key not in known:
            known[key] = members
            frontier.append(members)
    while frontier:
        base = np.stack(frontier)
        next_frontier: list[np.ndarray] = []
        for x, atom_members in atoms:
            sel = ~base[:, x]
            if not sel.any():
                continue
            joined = base[sel]
            if abelian:
                # H<x> is already a subgroup here: union of cosets H, Hx, Hx^2, ...
                shift = shift_maps[x]
                while True:
                    grown = joined | joined[:, shift]
                    if np.array_equal(grown, joined):
                        break
                    joined = grown
            else:
                rows = []
                for row in joined:
                    span = np.zeros(n, dtype=bool)
                    span[g.span(np.flatnonzero(row | atom_members))] = True
                    rows.append(span)
                joined = np.stack(rows)
            packed = np.packbits(joined, axis=1, bitorder="little")
            uniq, first = np.unique(packed, axis=0, return_index=True)
            for row_bytes, j in zip(uniq, first):
                key = row_bytes.tobytes()
                if key not in known:
                    members = joined[j]
                    known[key] = members
                    next_frontier.append(members)
        frontier = next_frontier
    out = []
    for members in known.values():
        idx = np.flatnonzero(members)
        if not g.is_closed_subset(idx):
            raise RuntimeError("enumerated subgroup failed closure validation")
        out.append(SubgroupSet.from_bool(members))
    out.sort(key=lambda s: (s.size, s.mask))
    g._cache["subgroups"] = tuple(out)
    return out


def write_subgroup_list(subs: list[SubgroupSet], stream) -> None:
    """One subgroup bitset per line, hex-encoded."""
    for s in subs:
        stream.write(s.hex() + "\n")


def _predicate_holds(predicate: GroupPredicate, grp: FiniteGroup) -> bool:
    result = predicate(grp)
    if isinstance(result, tuple):
        return bool(result[0])
    return bool(result)


@dataclass(frozen=True)
class HereditaryReport:
    """Outcome of checking a predicate on every subgroup of one group."""

    applicable: bool
    subgroups_checked: int
    violations: tuple[SubgroupSet, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def hereditary_check(
    g: FiniteGroup, predicate: GroupPredicate, cap: int = SUBGROUP_CAP
) -> HereditaryReport:
    """Find subgroups violating a predicate that the parent satisfies.

    Inapplicable (parent fails the predicate) yields an empty, vacuous
    report.  Each subgroup is realized as a standalone group by index
    re-compaction before the predicate runs.
    """
    if not _predicate_holds(predicate, g):
        return HereditaryReport(applicable=False, subgroups_checked=0, violations=())
    violations = []
    subs = all_subgroups(g, cap=cap)
    for s in subs:
        sub_group = g.subgroup(s)
        if not _predicate_holds(predicate, sub_group):
            violations.append(s)
    return HereditaryReport(
        applicable=True, subgroups_checked=len(subs), violations=tuple(violations)
    )


@dataclass(frozen=True)
class AbelianScanReport:
    """Every abelian subgroup with its p-group status."""

    total_subgroups: int
    abelian_subgroups: tuple[tuple[SubgroupSet, Union[int, str, None]], ...]

    @property
    def verdict(self) -> bool:
        return all(flag is not None for _, flag in self.abelian_subgroups)


def abelian_subgroup_scan(g: FiniteGroup, cap: int = SUBGROUP_CAP) -> AbelianScanReport:
    """List abelian subgroups and check each has prime-power order."""
    subs = all_subgroups(g, cap=cap)
    table = g.table
    parent_abelian = g.is_abelian
    entries = []
    for s in subs:
        idx = s.indices()
        if parent_abelian:
            commutes = True
        else:
            block = table[np.ix_(idx, idx)]
            commutes = bool(np.array_equal(block, block.T))
        if not commutes:
            continue
        if s.size == 1:
            flag: Union[int, str, None] = "trivial"
        else:
            primes = distinct_primes(s.size)
            flag = primes[0] if len(primes) == 1 else None
        entries.append((s, flag))
    return AbelianScanReport(total_subgroups=len(subs), abelian_subgroups=tuple(entries))


@dataclass(frozen=True)
class QuotientScanRow:
    normal: SubgroupSet
    quotient_order: int
    holds: bool


@dataclass(frozen=True)
class QuotientScanReport:
    """Predicate verdicts over all quotients; observational data only.

    Whether the surveyed class is closed under homomorphic images is an
    open question; this scan makes no claim beyond the rows it lists.
    """

    parent_holds: bool
    rows: tuple[QuotientScanRow, ...]
    conclusive: bool = field(default=False)

    @property
    def counterexamples(self) -> tuple[QuotientScanRow, ...]:
        if not self.parent_holds:
            return ()
        return tuple(r for r in self.rows if not r.holds)


def quotient_scan(
    g: FiniteGroup, predicate: GroupPredicate, cap: int = SUBGROUP_CAP
) -> QuotientScanReport:
    """Evaluate a predicate on g/N for every normal subgroup N."""
    rows = []
    for normal in g.normal_subgroups(cap=cap):
        quotient = g.quotient(normal)
        rows.append(
            QuotientScanRow(
                normal=normal,
                quotient_order=quotient.order,
                holds=_predicate_holds(predicate, quotient),
            )
        )
    return QuotientScanReport(parent_holds=_predicate_holds(predicate, g), rows=tuple(rows))
