"""Finite groups on indexed elements, identity at index 0.

A group is a total multiplication over indices 0..n-1.  Groups with at most
TABLE_LIMIT elements materialize the full Cayley table; larger permutation
groups compose image arrays on demand, one row of products at a time, so
pair scans stay vectorized without an n x n table in memory.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .perm import Permutation

TABLE_LIMIT = 4096
ELEMENT_CAP = 10000
ASSOC_CAP = 512
SUBGROUP_CAP = 400

_ASSOC_SAMPLES = 512


class CapExceededError(RuntimeError):
    """A desk-scale cap (element count, table size, enumeration bound) was exceeded."""


def distinct_primes(n: int) -> tuple[int, ...]:
    """Distinct prime factors of n, ascending (empty for n = 1)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def is_prime(n: int) -> bool:
    return n > 1 and distinct_primes(n) == (n,)


@dataclass(frozen=True)
class SubgroupSet:
    """Subgroup of an ambient group, stored as a bitset over element indices."""

    mask: int
    size: int

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "SubgroupSet":
        mask = 0
        count = 0
        for i in indices:
            bit = 1 << int(i)
            if not mask & bit:
                count += 1
            mask |= bit
        return cls(mask=mask, size=count)

    @classmethod
    def from_bool(cls, members: np.ndarray) -> "SubgroupSet":
        raw = np.packbits(members.astype(np.uint8), bitorder="little").tobytes()
        return cls(mask=int.from_bytes(raw, "little"), size=int(members.sum()))

    def indices(self) -> np.ndarray:
        nbytes = (max(self.mask.bit_length(), 1) + 7) // 8
        raw = self.mask.to_bytes(nbytes, "little")
        bits = np.unpackbits(np.frombuffer(raw, np.uint8), bitorder="little")
        return np.flatnonzero(bits)

    def contains(self, i: int) -> bool:
        return bool((self.mask >> int(i)) & 1)

    def hex(self) -> str:
        return format(self.mask, "x")


@dataclass(frozen=True, eq=False)
class OrderTable:
    """Element orders of a group: orders[i] = least k >= 1 with i^k = identity."""

    orders: np.ndarray
    max_order: int
    primes: tuple[int, ...]


def _perm_dtype(degree: int):
    return np.uint8 if degree <= 255 else np.uint16


class _PermIndex:
    """Maps permutation image arrays back to element indices.

    Uses a mixed-radix key over the shortest point prefix that separates all
    elements (3 points suffice for sharply 3-transitive actions); falls back
    to whole-row byte keys when no prefix is injective within int64 range.
    """

    def __init__(self, perms: np.ndarray):
        n, deg = perms.shape
        self._perms = perms
        self._bykey = None
        self._bybytes = None
        limit = 1 << 62
        max_k, radix = 1, deg
        while max_k < deg and radix <= limit // deg:
            radix *= deg
            max_k += 1
        for k in sorted({min(3, max_k), min(6, max_k), max_k}):
            weights = deg ** np.arange(k, dtype=np.int64)
            keys = perms[:, :k].astype(np.int64) @ weights
            if len(np.unique(keys)) == n:
                order = np.argsort(keys, kind="stable")
                self._bykey = (k, weights, keys[order], order.astype(np.int64))
                break
        if self._bykey is None:
            self._bybytes = {perms[i].tobytes(): i for i in range(n)}

    def lookup(self, rows: np.ndarray) -> np.ndarray:
        """Indices of the given image arrays; raises if any row is unknown."""
        if self._bykey is not None:
            k, weights, sorted_keys, order = self._bykey
            kk = rows[:, :k].astype(np.int64) @ weights
            pos = np.searchsorted(sorted_keys, kk)
            if (pos >= len(sorted_keys)).any() or (sorted_keys[np.minimum(pos, len(sorted_keys) - 1)] != kk).any():
                raise RuntimeError("product fell outside the element set")
            idx = order[pos]
        else:
            try:
                idx = np.fromiter(
                    (self._bybytes[row.tobytes()] for row in rows), np.int64, len(rows)
                )
            except KeyError:
                raise RuntimeError("product fell outside the element set") from None
        if not np.array_equal(self._perms[idx], rows):
            raise RuntimeError("element index lookup mismatch")
        return idx


class FiniteGroup:
    """Indexed finite group with total multiplication and identity at index 0.

    Construct through the factory functions (:func:`generate_group`,
    :func:`from_cayley`, :func:`direct_product`, the catalog constructors)
    rather than directly.  Instances are immutable after construction and
    safe to share across threads.
    """

    def __init__(
        self,
        *,
        labels: Sequence[str],
        name: str,
        source: str,
        table: Optional[np.ndarray] = None,
        perms: Optional[np.ndarray] = None,
        rigor: str = "sampled",
    ):
        if table is None and perms is None:
            raise ValueError("a Cayley table or a permutation array is required")
        self.name = name
        self.source = source
        self.labels = list(labels)
        self.order = len(self.labels)
        n = self.order
        self._perms = None
        self._index = None
        if perms is not None:
            perms = np.ascontiguousarray(perms, dtype=_perm_dtype(perms.shape[1]))
            if perms.shape[0] != n:
                raise ValueError("permutation array does not match label count")
            self._perms = perms
            self._perms.setflags(write=False)
            self._index = _PermIndex(perms)
        if table is None and n <= TABLE_LIMIT:
            table = self._build_table_from_perms()
        self._table = None
        if table is not None:
            table = np.ascontiguousarray(table, dtype=np.int32)
            if table.shape != (n, n):
                raise ValueError(f"table shape {table.shape} does not match order {n}")
            if table.min() < 0 or table.max() >= n:
                raise ValueError("table entry out of range")
            self._table = table
            self._table.setflags(write=False)
        self.assoc_checked = "structural"
        self._cache: dict = {}
        self._validate(rigor)

    # -- construction-time validation ------------------------------------

    def _build_table_from_perms(self) -> np.ndarray:
        P = self._perms
        n = self.order
        table = np.empty((n, n), dtype=np.int32)
        for i in range(n):
            table[i] = self._index.lookup(P[:, P[i]])
        return table

    def _validate(self, rigor: str) -> None:
        n = self.order
        ar = np.arange(n)
        if self._perms is not None:
            degree = self._perms.shape[1]
            if not np.array_equal(self._perms[0], np.arange(degree, dtype=self._perms.dtype)):
                raise ValueError("identity permutation is not at index 0")
        if self._table is not None:
            T = self._table
            if not np.array_equal(T[0], ar) or not np.array_equal(T[:, 0], ar):
                raise ValueError("identity is not at index 0")
            inv = np.argmax(T == 0, axis=1).astype(np.int32)
            if (T[ar, inv] != 0).any() or (T[inv, ar] != 0).any():
                raise ValueError("some element has no two-sided inverse")
            if rigor == "full" and not ((T == 0).sum(axis=1) == 1).all():
                raise ValueError("some element has more than one right inverse")
            if np.bincount(inv, minlength=n).max() != 1:
                raise ValueError("inverse map is not a bijection")
            self.inv = inv
        else:
            P = self._perms
            invp = np.empty_like(P)
            cols = np.arange(P.shape[1])
            for i in range(n):
                invp[i, P[i]] = cols
            self.inv = self._index.lookup(invp).astype(np.int32)
        self.inv.setflags(write=False)
        if self._table is not None:
            self._check_associativity(rigor)

    def _check_associativity(self, rigor: str) -> None:
        n = self.order
        T = self._table
        if rigor == "full" or n**3 <= _ASSOC_SAMPLES:
            for i in range(n):
                if not np.array_equal(T[T[i], :], T[i][T]):
                    j, k = np.argwhere(T[T[i], :] != T[i][T])[0]
                    raise ValueError(f"multiplication is not associative at triple ({i},{j},{k})")
            self.assoc_checked = "full"
        else:
            rng = np.random.default_rng(0)
            i, j, k = rng.integers(0, n, size=(3, _ASSOC_SAMPLES))
            if not np.array_equal(T[T[i, j], k], T[i, T[j, k]]):
                raise ValueError("multiplication is not associative (sampled triple failed)")
            self.assoc_checked = "sampled"

    # -- multiplication primitives ----------------------------------------

    def mul(self, i: int, j: int) -> int:
        if self._table is not None:
            return int(self._table[i, j])
        return int(self._index.lookup(self._perms[j][self._perms[i]][None, :])[0])

    def mul_row(self, i: int) -> np.ndarray:
        """Products i*y for every y, as an index vector."""
        if self._table is not None:
            return self._table[i]
        P = self._perms
        return self._index.lookup(P[:, P[i]])

    def mul_col(self, j: int) -> np.ndarray:
        """Products x*j for every x."""
        if self._table is not None:
            return self._table[:, j]
        P = self._perms
        return self._index.lookup(P[j][P])

    def mul_pairs(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise products of two equal-length index vectors."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._table is not None:
            return self._table[a, b].astype(np.int64)
        P = self._perms
        rows = np.take_along_axis(P[b], P[a], axis=1)
        return self._index.lookup(rows)

    def power(self, i: int, k: int) -> int:
        """i^k for k >= 0 by repeated squaring."""
        if k < 0:
            raise ValueError("negative powers: use inv[] first")
        acc, base = 0, int(i)
        while k:
            if k & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            k >>= 1
        return acc

    def label(self, i: int) -> str:
        return self.labels[i]

    @property
    def table(self) -> Optional[np.ndarray]:
        return self._table

    @property
    def perms(self) -> Optional[np.ndarray]:
        return self._perms

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    # -- structural data ---------------------------------------------------

    def order_table(self) -> OrderTable:
        """Orders of all elements; cached after the first call."""
        cached = self._cache.get("orders")
        if cached is not None:
            return cached
        n = self.order
        if self._perms is not None:
            orders = np.empty(n, dtype=np.int64)
            for i in range(n):
                orders[i] = Permutation(self._perms[i]).order()
        else:
            orders = np.zeros(n, dtype=np.int64)
            cur = np.arange(n)
            ar = np.arange(n)
            k = 1
            while (orders == 0).any():
                if k > n:
                    raise RuntimeError("element order exceeded group order")
                hit = (cur == 0) & (orders == 0)
                orders[hit] = k
                k += 1
                cur = self._table[cur, ar]
        if orders[0] != 1 or (orders == 1).sum() != 1:
            raise RuntimeError("identity order table invariant violated")
        if (n % orders != 0).any():
            raise RuntimeError("element order does not divide group order")
        if not np.array_equal(orders, orders[self.inv]):
            raise RuntimeError("order of inverse differs from order of element")
        primes: set[int] = set()
        for m in np.unique(orders):
            primes.update(distinct_primes(int(m)))
        result = OrderTable(orders=orders, max_order=int(orders.max()), primes=tuple(sorted(primes)))
        result.orders.setflags(write=False)
        self._cache["orders"] = result
        return result

    def conjugacy_classes(self) -> list[np.ndarray]:
        """Conjugation-orbit partition, classes listed by smallest member."""
        cached = self._cache.get("classes")
        if cached is not None:
            return cached
        n = self.order
        ar = np.arange(n)
        assigned = np.zeros(n, dtype=bool)
        classes = []
        for i in range(n):
            if assigned[i]:
                continue
            t = self.mul_pairs(self.inv.astype(np.int64), np.full(n, i))
            orbit = np.unique(self.mul_pairs(t, ar))
            assigned[orbit] = True
            classes.append(orbit)
        self._cache["classes"] = classes
        return classes

    def center(self) -> np.ndarray:
        """Indices of elements commuting with everything."""
        if self._table is not None:
            return np.flatnonzero((self._table == self._table.T).all(axis=1))
        return np.array(
            [i for i in range(self.order) if np.array_equal(self.mul_row(i), self.mul_col(i))]
        )

    @property
    def is_abelian(self) -> bool:
        cached = self._cache.get("abelian")
        if cached is None:
            if self._table is not None:
                cached = bool(np.array_equal(self._table, self._table.T))
            else:
                cached = all(
                    np.array_equal(self.mul_row(i), self.mul_col(i)) for i in range(self.order)
                )
            self._cache["abelian"] = cached
        return cached

    def is_p_group(self) -> Union[int, str, None]:
        """The prime p when |G| = p^k, the flag "trivial" for |G| = 1, else None."""
        if self.order == 1:
            return "trivial"
        primes = distinct_primes(self.order)
        return primes[0] if len(primes) == 1 else None

    # -- generated subsets ---------------------------------------------------

    def span(self, generators: Iterable[int]) -> np.ndarray:
        """Sorted indices of the subgroup generated by the given elements."""
        n = self.order
        members = np.zeros(n, dtype=bool)
        members[0] = True
        gen_list = np.unique(np.array([int(g) for g in generators], dtype=np.int64))
        if gen_list.size:
            members[gen_list] = True
        while True:
            cur = np.flatnonzero(members)
            m = len(cur)
            grew = False
            if self._table is not None:
                prods = self._table[np.ix_(cur, cur)]
                fresh = np.unique(prods[~members[prods]])
                if fresh.size:
                    members[fresh] = True
                    grew = True
            else:
                chunk = max(1, (1 << 20) // max(m, 1))
                for lo in range(0, m, chunk):
                    block = cur[lo : lo + chunk]
                    a = np.repeat(block, m)
                    b = np.tile(cur, len(block))
                    prods = self.mul_pairs(a, b)
                    fresh = np.unique(prods[~members[prods]])
                    if fresh.size:
                        members[fresh] = True
                        grew = True
            if not grew:
                return cur

    def is_closed_subset(self, indices: np.ndarray) -> bool:
        """Whether the index set is closed under multiplication (hence a subgroup)."""
        members = np.zeros(self.order, dtype=bool)
        members[indices] = True
        if self._table is not None:
            return bool(members[self._table[np.ix_(indices, indices)]].all())
        m = len(indices)
        chunk = max(1, (1 << 20) // max(m, 1))
        for lo in range(0, m, chunk):
            block = indices[lo : lo + chunk]
            a = np.repeat(block, m)
            b = np.tile(indices, len(block))
            if not members[self.mul_pairs(a, b)].all():
                return False
        return True

    def _commutator_set(self, indices: np.ndarray) -> np.ndarray:
        """Unique commutators a^-1 b^-1 a b over pairs from the index set."""
        m = len(indices)
        inv_members = self.inv[indices].astype(np.int64)
        found: set[int] = set()
        chunk = max(1, (1 << 19) // max(m, 1))
        for lo in range(0, m, chunk):
            block = indices[lo : lo + chunk]
            a = np.repeat(block, m)
            b = np.tile(indices, len(block))
            ia = np.repeat(self.inv[block].astype(np.int64), m)
            ib = np.tile(inv_members, len(block))
            comm = self.mul_pairs(self.mul_pairs(ia, ib), self.mul_pairs(a, b))
            found.update(np.unique(comm).tolist())
        return np.array(sorted(found), dtype=np.int64)

    def derived_series(self) -> list[SubgroupSet]:
        """G >= G' >= G'' ... down to stabilization (trivial iff solvable)."""
        cached = self._cache.get("derived")
        if cached is not None:
            return cached
        cur = np.arange(self.order)
        series = [_subgroup_from_indices(cur)]
        while len(cur) > 1:
            nxt = self.span(self._commutator_set(cur))
            if len(nxt) == len(cur):
                break
            series.append(_subgroup_from_indices(nxt))
            cur = nxt
        self._cache["derived"] = series
        return series

    def is_solvable(self) -> bool:
        return self.derived_series()[-1].size == 1

    def normal_subgroups(
        self, *, class_union_limit: int = 20, cap: int = SUBGROUP_CAP
    ) -> list[SubgroupSet]:
        """All normal subgroups, from class unions or the full subgroup list.

        Candidate unions of conjugacy classes (identity included, total size
        dividing |G|) are closure-tested when the nontrivial class count is
        small; otherwise the full subgroup enumeration is filtered by
        normality, subject to its cap.
        """
        classes = self.conjugacy_classes()
        nontrivial = classes[1:]
        n = self.order
        out: list[SubgroupSet] = []
        if len(nontrivial) <= class_union_limit:
            sizes = np.array([len(c) for c in nontrivial], dtype=np.int64)
            for pick in range(1 << len(nontrivial)):
                total = 1
                for t in range(len(nontrivial)):
                    if pick >> t & 1:
                        total += sizes[t]
                if n % total:
                    continue
                members = [np.array([0])]
                for t in range(len(nontrivial)):
                    if pick >> t & 1:
                        members.append(nontrivial[t])
                idx = np.concatenate(members)
                idx.sort()
                if self.is_closed_subset(idx):
                    out.append(_subgroup_from_indices(idx))
        else:
            from .subgroups import all_subgroups

            for sub in all_subgroups(self, cap=cap):
                if self._is_normal_members(sub.indices()):
                    out.append(sub)
        out.sort(key=lambda s: (s.size, s.mask))
        return out

    def _is_normal_members(self, indices: np.ndarray) -> bool:
        members = np.zeros(self.order, dtype=bool)
        members[indices] = True
        ar = np.arange(self.order)
        for m in indices:
            t = self.mul_pairs(self.inv.astype(np.int64), np.full(self.order, m))
            if not members[self.mul_pairs(t, ar)].all():
                return False
        return True

    def is_simple(self) -> bool:
        """Exactly two normal subgroups (equivalently order > 1 and every
        nontrivial conjugacy class generates the whole group).

        The subgroup generated by a conjugacy class is normal (conjugation
        permutes its generators), so the first proper class closure settles
        non-simplicity without enumerating anything else.
        """
        if self.order == 1:
            return False
        if self.is_abelian:
            return is_prime(self.order)
        n = self.order
        ar = np.arange(n)
        covered = np.zeros(n, dtype=bool)
        covered[0] = True
        for x in range(1, n):
            if covered[x]:
                continue
            t = self.mul_pairs(self.inv.astype(np.int64), np.full(n, x))
            cls = np.unique(self.mul_pairs(t, ar))
            covered[cls] = True
            if len(self.span(cls)) < n:
                return False
        return True

    # -- derived groups ------------------------------------------------------

    def subgroup(self, sub: Union[SubgroupSet, np.ndarray]) -> "FiniteGroup":
        """Realize a subgroup as a standalone group by index re-compaction."""
        idx = sub.indices() if isinstance(sub, SubgroupSet) else np.asarray(sub, dtype=np.int64)
        idx = np.unique(idx)
        if idx[0] != 0:
            raise ValueError("subgroup must contain the identity (index 0)")
        m = len(idx)
        remap = np.full(self.order, -1, dtype=np.int64)
        remap[idx] = np.arange(m)
        a = np.repeat(idx, m)
        b = np.tile(idx, m)
        prods = remap[self.mul_pairs(a, b)].reshape(m, m)
        if (prods < 0).any():
            raise ValueError("index set is not closed under multiplication")
        labels = [self.labels[i] for i in idx]
        perms = self._perms[idx] if self._perms is not None else None
        return FiniteGroup(
            table=prods,
            perms=perms,
            labels=labels,
            name=f"{self.name}[sub:{m}]",
            source="cayley-table",
        )

    def quotient(self, sub: SubgroupSet) -> "FiniteGroup":
        """Quotient by a normal subgroup; identity coset lands at index 0."""
        idx = sub.indices()
        if idx.size == 0 or idx[0] != 0:
            raise ValueError("normal subgroup must contain the identity")
        if not self.is_closed_subset(idx):
            raise ValueError("index set is not a subgroup")
        if not self._is_normal_members(idx):
            raise ValueError("subgroup is not normal")
        n = self.order
        rep = np.full(n, n, dtype=np.int64)
        for m in idx:
            rep = np.minimum(rep, self.mul_row(int(m)).astype(np.int64))
        reps = np.unique(rep)
        qn = n // sub.size
        if len(reps) != qn:
            raise RuntimeError("coset count mismatch")
        coset_of = np.searchsorted(reps, rep)
        a = np.repeat(reps, qn)
        b = np.tile(reps, qn)
        qtable = coset_of[self.mul_pairs(a, b)].reshape(qn, qn)
        # well-definedness: the product coset cannot depend on representatives
        for lo in range(0, n, max(1, (1 << 20) // n)):
            hi = min(n, lo + max(1, (1 << 20) // n))
            rows = np.stack([self.mul_row(i) for i in range(lo, hi)])
            if not np.array_equal(coset_of[rows], qtable[coset_of[lo:hi]][:, coset_of]):
                raise RuntimeError("coset multiplication is not well defined")
        labels = []
        for r in reps:
            members = np.flatnonzero(rep == r)
            labels.append("{" + ",".join(self.labels[i] for i in members) + "}")
        q = FiniteGroup(
            table=qtable,
            labels=labels,
            name=f"{self.name}/N{sub.size}",
            source="quotient",
        )
        if q.order * sub.size != self.order:
            raise RuntimeError("quotient order invariant violated")
        return q


def _subgroup_from_indices(indices: np.ndarray) -> SubgroupSet:
    mask = 0
    for i in indices.tolist():
        mask |= 1 << i
    return SubgroupSet(mask=mask, size=len(indices))


# -- factory functions ---------------------------------------------------


def from_cayley(
    table: Sequence[Sequence[int]],
    *,
    labels: Optional[Sequence[str]] = None,
    name: str = "cayley-table",
    assoc_cap: int = ASSOC_CAP,
) -> FiniteGroup:
    """Build a fully validated group from an n x n index matrix.

    Row/column 0 must behave as the identity.  Associativity is checked on
    all triples, which bounds n by ``assoc_cap``.
    """
    arr = np.asarray(table, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("Cayley table must be square")
    n = arr.shape[0]
    if n > assoc_cap:
        raise CapExceededError(f"order {n} exceeds the associativity-check cap {assoc_cap}")
    if arr.min() < 0 or arr.max() >= n:
        raise ValueError("table entry out of range")
    if labels is None:
        labels = ["e"] + [f"g{i}" for i in range(1, n)]
    return FiniteGroup(table=arr, labels=labels, name=name, source="cayley-table", rigor="full")


def generate_group(
    generators: Sequence[Permutation],
    *,
    cap: int = ELEMENT_CAP,
    name: str = "generated",
) -> FiniteGroup:
    """Breadth-first closure of the given permutations under composition.

    The identity gets index 0; within each BFS level elements are ordered
    lexicographically by image array, so indexing is deterministic.
    """
    if not generators:
        raise ValueError("at least one generator is required")
    degree = generators[0].degree
    if any(g.degree != degree for g in generators):
        raise ValueError("generators must share one degree")
    dtype = _perm_dtype(degree)
    gen_arr = np.array([g.images for g in generators], dtype=dtype)
    identity = np.arange(degree, dtype=dtype)
    elements = [identity]
    seen = {identity.tobytes()}
    level = identity[None, :]
    while len(level):
        candidates = np.concatenate([g[level] for g in gen_arr], axis=0)
        candidates = np.unique(candidates, axis=0)
        fresh = [row for row in candidates if row.tobytes() not in seen]
        for row in fresh:
            seen.add(row.tobytes())
            elements.append(row)
        if len(elements) > cap:
            raise CapExceededError(f"closure exceeded the element cap {cap}")
        level = np.array(fresh, dtype=dtype) if fresh else np.empty((0, degree), dtype=dtype)
    perms = np.stack(elements)
    labels = [Permutation(row).cycle_string() for row in perms]
    return FiniteGroup(perms=perms, labels=labels, name=name, source="generated-permutation")


def from_permutation_set(perms: np.ndarray, *, name: str) -> FiniteGroup:
    """Group from an explicit, already-closed set of permutations.

    Elements are deduplicated, the identity moved to index 0 and the rest
    kept in lexicographic image order.
    """
    perms = np.unique(np.asarray(perms), axis=0)
    degree = perms.shape[1]
    perms = perms.astype(_perm_dtype(degree))
    identity = np.arange(degree, dtype=perms.dtype)
    pos = np.flatnonzero((perms == identity).all(axis=1))
    if len(pos) != 1:
        raise ValueError("element set must contain the identity")
    rest = np.delete(perms, pos[0], axis=0)
    perms = np.concatenate([identity[None, :], rest], axis=0)
    labels = [Permutation(row).cycle_string() for row in perms]
    return FiniteGroup(perms=perms, labels=labels, name=name, source="generated-permutation")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Componentwise product group with index (a, b) -> a*|H| + b."""
    n = g.order * h.order
    if g.table is None or h.table is None or n > TABLE_LIMIT:
        raise CapExceededError(f"direct product of order {n} exceeds the table limit {TABLE_LIMIT}")
    tg = g.table.astype(np.int64)
    th = h.table.astype(np.int64)
    table = (
        tg[:, None, :, None] * h.order + th[None, :, None, :]
    ).reshape(n, n)
    labels = [f"({la},{lb})" for la in g.labels for lb in h.labels]
    prod = FiniteGroup(
        table=table,
        labels=labels,
        name=f"product:{g.name},{h.name}",
        source="product",
    )
    prod._cache["abelian"] = g.is_abelian and h.is_abelian
    return prod
