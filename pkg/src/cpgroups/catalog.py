"""Constructors for the concrete groups the toolkit ships with.

Cyclic, dihedral and dicyclic groups are built from normal-form Cayley
tables (a^i b^j with b a = a^-1 b), symmetric and alternating groups from
standard permutation generators, and PSL(2,q) by exhausting SL(2,q) over a
lookup-table finite field and deduplicating the induced projective-line
permutations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

import numpy as np

from .core import (
    CapExceededError,
    ELEMENT_CAP,
    FiniteGroup,
    direct_product,
    distinct_primes,
    from_permutation_set,
    generate_group,
    is_prime,
)
from .perm import Permutation, parse_cycles

SUPPORTED_PSL_Q = (2, 3, 4, 5, 7, 8, 9, 11, 13, 17)

# reduction polynomials as ascending coefficient tuples, constant term first
_REDUCTION_POLYS = {
    (2, 2): (1, 1, 1),          # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),       # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),    # x^4 + x + 1
    (2, 5): (1, 0, 1, 0, 0, 1), # x^5 + x^2 + 1
    (3, 2): (1, 0, 1),          # x^2 + 1
    (3, 3): (1, 2, 0, 1),       # x^3 + 2x + 1
    (5, 2): (1, 1, 1),          # x^2 + x + 1
}

_FIELD_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)


@dataclass(frozen=True, eq=False)
class FieldTable:
    """GF(p^k) as q x q addition and multiplication lookup tables.

    Element i encodes the polynomial with base-p digits of i as coefficients
    (constant term first), so 0 is the additive and 1 the multiplicative
    identity.
    """

    q: int
    p: int
    k: int
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray
    reduction: tuple[int, ...]

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1


def _poly_mul_mod(a: list[int], b: list[int], red: tuple[int, ...], p: int) -> list[int]:
    k = len(red) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                prod[i + j] = (prod[i + j] + ca * cb) % p
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for j in range(k):
                prod[d - k + j] = (prod[d - k + j] - c * red[j]) % p
    out = prod[:k]
    out += [0] * (k - len(out))
    return out


def _check_field(f: FieldTable) -> None:
    q = f.q
    ar = np.arange(q)
    for table, unit in ((f.add, 0), (f.mul, 1)):
        if not np.array_equal(table, table.T):
            raise ValueError("field table is not commutative")
        if not np.array_equal(table[unit], ar):
            raise ValueError("field identity row is wrong")
    add, mul = f.add.astype(np.int64), f.mul.astype(np.int64)
    for i in range(q):
        if not np.array_equal(add[add[i], :], add[i][add]):
            raise ValueError("field addition is not associative")
        if not np.array_equal(mul[mul[i], :], mul[i][mul]):
            raise ValueError("field multiplication is not associative")
        if not np.array_equal(mul[i][add], add[np.ix_(mul[i], mul[i])]):
            raise ValueError("distributivity fails")
    if not (add[ar, f.neg] == 0).all():
        raise ValueError("additive inverse table is wrong")
    nz = ar[1:]
    if not (mul[nz, f.inv[nz]] == 1).all():
        raise ValueError(
            "some nonzero element has no multiplicative inverse (reducible polynomial?)"
        )
    acc = 0
    for _ in range(f.p):
        acc = int(add[acc, 1])
    if acc != 0:
        raise ValueError("characteristic check failed")


def make_field(p: int, k: int) -> FieldTable:
    """GF(p^k) lookup tables for p in the small-prime list and p^k <= 32."""
    if p not in _FIELD_PRIMES or k < 1 or p**k > 32:
        raise ValueError(f"unsupported field GF({p}^{k})")
    q = p**k
    if k == 1:
        ar = np.arange(q, dtype=np.int64)
        add = (ar[:, None] + ar[None, :]) % q
        mul = (ar[:, None] * ar[None, :]) % q
        reduction = (0, 1)
    else:
        reduction = _REDUCTION_POLYS.get((p, k))
        if reduction is None:
            raise ValueError(f"no reduction polynomial configured for GF({p}^{k})")
        digits = [[(i // p**d) % p for d in range(k)] for i in range(q)]
        add = np.empty((q, q), dtype=np.int64)
        mul = np.empty((q, q), dtype=np.int64)
        weights = [p**d for d in range(k)]
        for i in range(q):
            for j in range(q):
                s = [(digits[i][d] + digits[j][d]) % p for d in range(k)]
                add[i, j] = sum(c * w for c, w in zip(s, weights))
                m = _poly_mul_mod(digits[i], digits[j], reduction, p)
                mul[i, j] = sum(c * w for c, w in zip(m, weights))
    neg = np.argmax(add == 0, axis=1)
    inv = np.argmax(mul == 1, axis=1)
    inv[0] = 0
    field = FieldTable(q=q, p=p, k=k, add=add, mul=mul, neg=neg, inv=inv, reduction=reduction)
    _check_field(field)
    return field


@dataclass(frozen=True)
class ProjectivePoint:
    """Point of the projective line over GF(q): a field element or infinity."""

    value: Optional[int]

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    @classmethod
    def infinity(cls) -> "ProjectivePoint":
        return cls(value=None)

    def index(self, q: int) -> int:
        return q if self.value is None else self.value


# -- table-built families --------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    """Cyclic group of order n."""
    if n < 1:
        raise ValueError("order must be positive")
    if n > ELEMENT_CAP:
        raise CapExceededError(f"order {n} exceeds the element cap")
    ar = np.arange(n, dtype=np.int64)
    table = (ar[:, None] + ar[None, :]) % n
    labels = _power_labels(n)
    return FiniteGroup(table=table, labels=labels, name=f"cyclic:{n}", source="cayley-table")


def _power_labels(n: int, suffix: str = "") -> list[str]:
    out = []
    for i in range(n):
        if i == 0:
            out.append("e" if not suffix else suffix)
        elif i == 1:
            out.append("a" + ("*" + suffix if suffix else ""))
        else:
            out.append(f"a^{i}" + ("*" + suffix if suffix else ""))
    return out


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n (n rotations, n reflections)."""
    if n < 1:
        raise ValueError("n must be positive")
    order = 2 * n
    if order > ELEMENT_CAP:
        raise CapExceededError(f"order {order} exceeds the element cap")
    ar = np.arange(n, dtype=np.int32)
    plus = (ar[:, None] + ar[None, :]) % n
    minus = (ar[:, None] - ar[None, :]) % n
    table = np.block([[plus, plus + n], [minus + n, minus]])
    labels = _power_labels(n) + _power_labels(n, suffix="b")
    grp = FiniteGroup(table=table, labels=labels, name=f"dihedral:{order}", source="cayley-table")
    if grp.order != order:
        raise RuntimeError("dihedral order formula violated")
    return grp


def dicyclic(n: int) -> FiniteGroup:
    """Dicyclic group of order 4n: <a,b | a^(2n)=1, b^2=a^n, b^-1 a b = a^-1>.

    For n a power of 2 this is the generalized quaternion group Q_{4n}
    (Q8 = dicyclic(2)).
    """
    if n < 1:
        raise ValueError("n must be positive")
    order = 4 * n
    if order > ELEMENT_CAP:
        raise CapExceededError(f"order {order} exceeds the element cap")
    m = 2 * n
    ar = np.arange(m, dtype=np.int32)
    plus = (ar[:, None] + ar[None, :]) % m
    minus = (ar[:, None] - ar[None, :]) % m
    table = np.block([[plus, plus + m], [minus + m, (minus + n) % m]])
    labels = _power_labels(m) + _power_labels(m, suffix="b")
    grp = FiniteGroup(table=table, labels=labels, name=f"dicyclic:{order}", source="cayley-table")
    if grp.order != order:
        raise RuntimeError("dicyclic order formula violated")
    return grp


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    """(Z_p)^k with digitwise addition."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("k must be positive")
    n = p**k
    if n > ELEMENT_CAP:
        raise CapExceededError(f"order {n} exceeds the element cap")
    ar = np.arange(n, dtype=np.int64)
    digits = np.stack([(ar // p**d) % p for d in range(k)], axis=1)
    weights = np.array([p**d for d in range(k)], dtype=np.int64)
    table = (((digits[:, None, :] + digits[None, :, :]) % p) * weights).sum(axis=2)
    labels = ["(" + ",".join(str(d) for d in row) + ")" for row in digits]
    labels[0] = "e"
    return FiniteGroup(table=table, labels=labels, name=f"elemab:{p}^{k}", source="cayley-table")


# -- permutation families ----------------------------------------------------


def symmetric(n: int) -> FiniteGroup:
    """Symmetric group on n points from the standard two generators."""
    if n < 1:
        raise ValueError("n must be positive")
    if math.factorial(n) > ELEMENT_CAP:
        raise CapExceededError(f"order {math.factorial(n)} exceeds the element cap")
    if n == 1:
        gens = [Permutation.identity(1)]
    elif n == 2:
        gens = [parse_cycles("(1 2)", 2)]
    else:
        gens = [parse_cycles("(1 2)", n), parse_cycles("(" + " ".join(str(i) for i in range(1, n + 1)) + ")", n)]
    grp = generate_group(gens, name=f"symmetric:{n}")
    if grp.order != math.factorial(n):
        raise RuntimeError("symmetric group order formula violated")
    return grp


def alternating(n: int) -> FiniteGroup:
    """Alternating group on n points (even permutations)."""
    if n < 1:
        raise ValueError("n must be positive")
    order = math.factorial(n) // 2 if n >= 2 else 1
    if order > ELEMENT_CAP:
        raise CapExceededError(f"order {order} exceeds the element cap")
    if n <= 2:
        gens = [Permutation.identity(max(n, 1))]
    elif n == 3:
        gens = [parse_cycles("(1 2 3)", 3)]
    else:
        long_cycle = range(1, n + 1) if n % 2 == 1 else range(2, n + 1)
        gens = [
            parse_cycles("(1 2 3)", n),
            parse_cycles("(" + " ".join(str(i) for i in long_cycle) + ")", n),
        ]
    grp = generate_group(gens, name=f"alternating:{n}")
    if grp.order != order:
        raise RuntimeError("alternating group order formula violated")
    return grp


def psl2(q: int) -> FiniteGroup:
    """PSL(2,q) acting on the q+1 points of the projective line.

    All determinant-1 matrices over GF(q) are enumerated, each mapped to its
    Mobius permutation z -> (az+b)/(cz+d); the distinct permutations form
    the group.  Point i < q is the field element i, point q is infinity.
    """
    if q not in SUPPORTED_PSL_Q:
        raise ValueError(f"unsupported q={q}; supported: {SUPPORTED_PSL_Q}")
    p = distinct_primes(q)[0]
    k = round(math.log(q, p))
    field = make_field(p, k)
    add, mul, neg, finv = field.add, field.mul, field.neg, field.inv
    grids = np.meshgrid(*([np.arange(q)] * 4), indexing="ij")
    a, b, c, d = (g.ravel() for g in grids)
    det = add[mul[a, d], neg[mul[b, c]]]
    keep = det == 1
    a, b, c, d = a[keep], b[keep], c[keep], d[keep]
    if len(a) != q**3 - q:
        raise RuntimeError("SL(2,q) enumeration size mismatch")
    npts = q + 1
    images = np.empty((len(a), npts), dtype=np.int64)
    for z in range(q):
        num = add[mul[a, z], b]
        den = add[mul[c, z], d]
        finite = mul[num, finv[den]]
        images[:, z] = np.where(den != 0, finite, q)
    images[:, q] = np.where(c != 0, mul[a, finv[c]], q)
    expected = q * (q * q - 1) // math.gcd(2, q - 1)
    grp = from_permutation_set(images, name=f"psl2:{q}")
    if grp.order != expected:
        raise RuntimeError(
            f"PSL(2,{q}) order mismatch: got {grp.order}, expected {expected}"
        )
    return grp


# -- the catalog ---------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    """Lazy catalog row: stable name, known order, and a builder."""

    name: str
    order: int
    family: str
    abelian: bool
    build: Callable[[], FiniteGroup]


def _psl2_order(q: int) -> int:
    return q * (q * q - 1) // math.gcd(2, q - 1)


def catalog_entries(max_order: int) -> list[CatalogEntry]:
    """Deterministic catalog of named groups with order <= max_order.

    Sorted by (order, name); names double as CLI group identifiers.  The
    ``abelian`` flag is structural (known from the family), letting sweeps
    skip construction when only nonabelian groups matter.
    """
    if max_order > ELEMENT_CAP:
        raise CapExceededError(f"max_order {max_order} exceeds the element cap")
    entries: list[CatalogEntry] = []

    def add(name, order, family, abelian, build):
        entries.append(CatalogEntry(name, order, family, abelian, build))

    for n in range(1, max_order + 1):
        add(f"cyclic:{n}", n, "cyclic", True, lambda n=n: cyclic(n))
    for n in range(2, max_order // 2 + 1):
        add(f"dihedral:{2*n}", 2 * n, "dihedral", n <= 2, lambda n=n: dihedral(n))
    for n in range(2, max_order // 4 + 1):
        add(f"dicyclic:{4*n}", 4 * n, "dicyclic", False, lambda n=n: dicyclic(n))
    n = 3
    while math.factorial(n) <= max_order:
        add(f"symmetric:{n}", math.factorial(n), "symmetric", False, lambda n=n: symmetric(n))
        n += 1
    n = 4
    while math.factorial(n) // 2 <= max_order:
        add(f"alternating:{n}", math.factorial(n) // 2, "alternating", False, lambda n=n: alternating(n))
        n += 1
    p = 2
    while p * p <= max_order:
        if is_prime(p):
            k = 2
            while p**k <= max_order:
                add(f"elemab:{p}^{k}", p**k, "elemab", True, lambda p=p, k=k: elementary_abelian(p, k))
                k += 1
        p += 1
    for a in range(2, max_order + 1):
        if a * a > max_order:
            break
        for b in range(a, max_order // a + 1):
            add(
                f"product:cyclic:{a},cyclic:{b}",
                a * b,
                "product",
                True,
                lambda a=a, b=b: direct_product(cyclic(a), cyclic(b)),
            )
    for q in SUPPORTED_PSL_Q:
        if _psl2_order(q) <= max_order:
            add(f"psl2:{q}", _psl2_order(q), "psl2", False, lambda q=q: psl2(q))
    entries.sort(key=lambda e: (e.order, e.name))
    return entries


def catalog_iter(max_order: int) -> Iterator[tuple[str, FiniteGroup]]:
    """Stream of (name, group) over the catalog, in deterministic order."""
    for entry in catalog_entries(max_order):
        yield entry.name, entry.build()


# -- identifier resolution --------------------------------------------------


def group_from_spec(spec: str) -> FiniteGroup:
    """Resolve a CLI identifier like ``cyclic:6`` or ``psl2:7`` to a group.

    Dihedral and dicyclic identifiers carry the group order, symmetric and
    alternating the degree, elemab a ``p^k`` pair, and product exactly two
    comma-separated cyclic/elemab components.
    """
    spec = spec.strip()
    if spec.startswith("product:"):
        body = spec[len("product:"):]
        parts = body.split(",")
        if len(parts) != 2:
            raise ValueError(f"product spec needs exactly two components: {spec!r}")
        return direct_product(group_from_spec(parts[0]), group_from_spec(parts[1]))
    if ":" not in spec:
        raise ValueError(f"unrecognized group spec {spec!r}")
    family, _, arg = spec.partition(":")
    if family == "cyclic":
        return cyclic(_positive_int(arg, spec))
    if family == "dihedral":
        order = _positive_int(arg, spec)
        if order % 2 or order < 2:
            raise ValueError(f"dihedral order must be even and >= 2: {spec!r}")
        return dihedral(order // 2)
    if family == "dicyclic":
        order = _positive_int(arg, spec)
        if order % 4 or order < 4:
            raise ValueError(f"dicyclic order must be a positive multiple of 4: {spec!r}")
        return dicyclic(order // 4)
    if family == "symmetric":
        return symmetric(_positive_int(arg, spec))
    if family == "alternating":
        return alternating(_positive_int(arg, spec))
    if family == "elemab":
        if "^" not in arg:
            raise ValueError(f"elemab spec must look like elemab:p^k: {spec!r}")
        p_s, _, k_s = arg.partition("^")
        return elementary_abelian(_positive_int(p_s, spec), _positive_int(k_s, spec))
    if family == "psl2":
        return psl2(_positive_int(arg, spec))
    raise ValueError(f"unknown group family {family!r}")


def _positive_int(text: str, spec: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ValueError(f"bad integer in group spec {spec!r}") from None
    if value < 1:
        raise ValueError(f"value must be positive in group spec {spec!r}")
    return value
