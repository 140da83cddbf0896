"""Finite groups as Cayley tables, their constructors and element-level data.

Every group keeps its identity at element 0.  Elements are plain ints in
``range(order)``; ``table[a, b]`` is the index of ``a * b``.
"""

from __future__ import annotations

import itertools
import math
import threading
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from ._kernels import search_homs

DEFAULT_CAP = 128
VALIDATION_CAP = 64


class GroupSizeError(ValueError):
    """A construction would exceed the configured order cap."""


class UnsupportedError(ValueError):
    """Request outside the supported range (e.g. catalog beyond order 15)."""


# -- arithmetic ---------------------------------------------------------------


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result -= result // p
    return result


@dataclass(frozen=True)
class DivisorProfile:
    n: int
    divisors: tuple[int, ...]
    phi_values: tuple[int, ...]


def divisor_profile(n: int) -> DivisorProfile:
    """Divisors of ``n`` strictly between 1 and ``n``, with their totients."""
    if n < 1:
        raise ValueError("n must be >= 1")
    divs = tuple(d for d in range(2, n) if n % d == 0)
    return DivisorProfile(n, divs, tuple(euler_phi(d) for d in divs))


# -- descriptors and abelian shapes ------------------------------------------


@dataclass(frozen=True)
class Descriptor:
    name: str
    family: str
    params: dict = field(default_factory=dict, compare=False, hash=False)

    def to_json(self, order: int) -> dict:
        return {"name": self.name, "order": order, "family": self.family,
                "params": dict(self.params)}


@dataclass(frozen=True)
class AbelianShape:
    """Primary decomposition as ``(prime, exponent, multiplicity)`` triples.

    Canonical order: primes ascending, exponents descending within a prime,
    so ``[(2, 3, 1), (2, 1, 1)]`` is Z8 x Z2.
    """

    factors: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        merged: dict[tuple[int, int], int] = {}
        for p, a, m in self.factors:
            if a < 1 or m < 1 or not is_prime(p):
                raise ValueError(f"bad factor {(p, a, m)}")
            merged[(p, a)] = merged.get((p, a), 0) + m
        canon = tuple(sorted(((p, a, m) for (p, a), m in merged.items()),
                             key=lambda f: (f[0], -f[1])))
        object.__setattr__(self, "factors", canon)

    @classmethod
    def of(cls, factors: Iterable[Sequence[int]]) -> "AbelianShape":
        return cls(tuple(tuple(int(v) for v in f) for f in factors))

    @classmethod
    def from_moduli(cls, moduli: Iterable[int]) -> "AbelianShape":
        """Shape of Z_{d1} x ... x Z_{dk}, splitting each modulus by CRT."""
        out = []
        for d in moduli:
            for p, e in factorize(d).items():
                out.append((p, e, 1))
        return cls(tuple(out))

    @property
    def order(self) -> int:
        return math.prod(p ** (a * m) for p, a, m in self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(sorted({p for p, _, _ in self.factors}))

    def cyclic_factors(self) -> list[int]:
        return [p ** a for p, a, m in self.factors for _ in range(m)]

    def __str__(self) -> str:
        if not self.factors:
            return "Z1"
        return "x".join(f"Z{d}" for d in self.cyclic_factors())

    def to_json(self) -> list[list[int]]:
        return [list(f) for f in self.factors]


# -- the group type -----------------------------------------------------------


class Group:
    """Immutable finite group given by its Cayley table.

    ``factors``/``coords`` are present for groups built as products of cyclic
    groups: element ``x`` is the vector ``coords[x]`` of Z_{factors[0]} x ...
    """

    def __init__(self, table, descriptor: Descriptor, *, factors=None,
                 coords=None, shape: AbelianShape | None = None):
        t = np.array(table, dtype=np.int32)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise ValueError("Cayley table must be a non-empty square array")
        n = t.shape[0]
        ar = np.arange(n, dtype=np.int32)
        if not (np.array_equal(t[0], ar) and np.array_equal(t[:, 0], ar)):
            raise ValueError("element 0 must be the identity")
        t.setflags(write=False)
        self.table = t
        self.order = n
        self.descriptor = descriptor
        self.factors = tuple(factors) if factors is not None else None
        self.coords = tuple(tuple(c) for c in coords) if coords is not None else None
        self._shape = shape
        self.rows: list[list[int]] = t.tolist()
        self.inverse: tuple[int, ...] = tuple(int(v) for v in np.argmax(t == 0, axis=1))
        self.elem_order: tuple[int, ...] = tuple(self._orders())
        self._cache: dict = {}
        self._lock = threading.RLock()

    def _orders(self) -> list[int]:
        rows = self.rows
        out = []
        for a in range(self.order):
            x, k = a, 1
            while x != 0:
                x = rows[x][a]
                k += 1
                if k > self.order:
                    raise ValueError(f"element {a} has no finite order in this table")
            out.append(k if a else 1)
        return out

    def __repr__(self) -> str:
        return f"<Group {self.descriptor.name} order={self.order}>"

    @property
    def name(self) -> str:
        return self.descriptor.name

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def power(self, a: int, m: int) -> int:
        x = 0
        for _ in range(m % self.elem_order[a]):
            x = self.rows[x][a]
        return x

    def order_census(self) -> Counter:
        return Counter(self.elem_order)

    def descriptor_json(self) -> dict:
        return self.descriptor.to_json(self.order)

    def cached(self, key, compute):
        """Memoize a derived value on this (immutable) group."""
        with self._lock:
            if key not in self._cache:
                self._cache[key] = compute()
            return self._cache[key]

    def validate(self, cap: int = VALIDATION_CAP) -> None:
        """Full group-axiom scan (associativity by triple scan); raises on failure."""
        n = self.order
        if n > cap:
            raise GroupSizeError(f"validation scan capped at order {cap}")
        t = self.table.astype(np.int64)
        ar = np.arange(n)
        for row in t:
            if not np.array_equal(np.sort(row), ar):
                raise ValueError("table row is not a permutation")
        for col in t.T:
            if not np.array_equal(np.sort(col), ar):
                raise ValueError("table column is not a permutation")
        if not np.array_equal(t[t], t[:, t]):
            raise ValueError("operation is not associative")
        inv = np.asarray(self.inverse)
        if not (np.all(t[ar, inv] == 0) and np.all(t[inv, ar] == 0)):
            raise ValueError("inverse table is inconsistent")


# -- constructors -------------------------------------------------------------


def make_cyclic(n: int) -> Group:
    if n < 1:
        raise ValueError("n must be >= 1")
    ar = np.arange(n)
    table = (ar[:, None] + ar[None, :]) % n
    return Group(table, Descriptor(f"Z{n}", "cyclic", {"n": n}),
                 factors=(n,), coords=[(i,) for i in range(n)],
                 shape=AbelianShape.from_moduli([n]) if n > 1 else AbelianShape(()))


def _product_table(moduli: Sequence[int]) -> tuple[np.ndarray, list[tuple[int, ...]]]:
    coords = list(itertools.product(*(range(d) for d in moduli)))
    if not moduli:
        return np.zeros((1, 1), dtype=np.int64), [()]
    c = np.array(coords, dtype=np.int64)
    mods = np.array(moduli, dtype=np.int64)
    strides = np.array([math.prod(moduli[j + 1:]) for j in range(len(moduli))], dtype=np.int64)
    sums = (c[:, None, :] + c[None, :, :]) % mods
    return sums @ strides, coords


def make_abelian(shape: AbelianShape | Iterable[Sequence[int]], cap: int = DEFAULT_CAP) -> Group:
    """Direct product of cyclic prime-power groups in canonical factor order."""
    if not isinstance(shape, AbelianShape):
        shape = AbelianShape.of(shape)
    if shape.order > cap:
        raise GroupSizeError(f"order {shape.order} exceeds cap {cap}")
    moduli = shape.cyclic_factors()
    table, coords = _product_table(moduli)
    return Group(table, Descriptor(str(shape), "abelian", {"shape": shape.to_json()}),
                 factors=moduli, coords=coords, shape=shape)


def make_direct_product(g1: Group, g2: Group, cap: int = DEFAULT_CAP) -> Group:
    n1, n2 = g1.order, g2.order
    if n1 * n2 > cap:
        raise GroupSizeError(f"order {n1 * n2} exceeds cap {cap}")
    t1 = g1.table.astype(np.int64)
    t2 = g2.table.astype(np.int64)
    table = (t1[:, None, :, None] * n2 + t2[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    factors = coords = shape = None
    if g1.coords is not None and g2.coords is not None:
        factors = g1.factors + g2.factors
        coords = [c1 + c2 for c1 in g1.coords for c2 in g2.coords]
    s1, s2 = g1._shape, g2._shape
    if s1 is not None and s2 is not None:
        shape = AbelianShape(s1.factors + s2.factors)
    name = f"{g1.name}x{g2.name}"
    return Group(table, Descriptor(name, "product", {"left": g1.name, "right": g2.name}),
                 factors=factors, coords=coords, shape=shape)


def cycles_to_perm(degree: int, cycles: Iterable[Sequence[int]]) -> tuple[int, ...]:
    """Image array of a permutation given in disjoint-cycle notation."""
    perm = list(range(degree))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            perm[x] = cyc[(i + 1) % len(cyc)]
    if sorted(perm) != list(range(degree)):
        raise ValueError(f"cycles {cycles} are not disjoint")
    return tuple(perm)


def make_from_permutation_generators(degree: int, gens: Iterable[Sequence[int]],
                                     cap: int = DEFAULT_CAP,
                                     descriptor: Descriptor | None = None) -> Group:
    """Closure of permutation generators (image arrays).

    Products compose left to right: ``x^(pq) = (x^p)^q``.  Elements are
    labelled in breadth-first order from the identity.
    """
    ident = tuple(range(degree))
    perms = []
    for g in gens:
        g = tuple(int(v) for v in g)
        if sorted(g) != list(ident):
            raise ValueError(f"{g} is not a permutation of {degree} points")
        perms.append(g)
    elems = [ident]
    index = {ident: 0}
    i = 0
    while i < len(elems):
        x = elems[i]
        for g in perms:
            y = tuple(g[v] for v in x)
            if y not in index:
                if len(elems) >= cap:
                    raise GroupSizeError(f"closure exceeds cap {cap}")
                index[y] = len(elems)
                elems.append(y)
        i += 1
    n = len(elems)
    table = [[index[tuple(q[v] for v in p)] for q in elems] for p in elems]
    if descriptor is None:
        descriptor = Descriptor(f"Perm{degree}[{n}]", "permutation",
                                {"degree": degree, "gens": [list(g) for g in perms]})
    return Group(table, descriptor)


def make_quaternion() -> Group:
    """Standard quaternion group of order 8 (regular permutation representation)."""
    i = cycles_to_perm(8, [(0, 1, 3, 6), (2, 5, 7, 4)])
    j = cycles_to_perm(8, [(0, 2, 3, 7), (1, 4, 6, 5)])
    return make_from_permutation_generators(8, [i, j], descriptor=Descriptor("Q8", "quaternion", {}))


def make_dihedral(n: int) -> Group:
    """Symmetries of the regular n-gon, order 2n (named D{n})."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n <= 2:
        # D1 = Z2, D2 = Klein four; realize on 2n points
        gens = [cycles_to_perm(2, [(0, 1)])] if n == 1 else [
            cycles_to_perm(4, [(0, 1), (2, 3)]), cycles_to_perm(4, [(0, 2), (1, 3)])]
        deg = 2 if n == 1 else 4
    else:
        deg = n
        gens = [tuple((i + 1) % n for i in range(n)), tuple((-i) % n for i in range(n))]
    return make_from_permutation_generators(deg, gens,
                                            descriptor=Descriptor(f"D{n}", "dihedral", {"n": n}))


def make_symmetric(n: int, cap: int = DEFAULT_CAP) -> Group:
    if n < 1:
        raise ValueError("n must be >= 1")
    gens = []
    if n >= 2:
        gens = [tuple((i + 1) % n for i in range(n)), cycles_to_perm(n, [(0, 1)])]
    return make_from_permutation_generators(n, gens, cap=cap,
                                            descriptor=Descriptor(f"S{n}", "symmetric", {"n": n}))


def make_alternating(n: int, cap: int = DEFAULT_CAP) -> Group:
    if n < 1:
        raise ValueError("n must be >= 1")
    gens = [cycles_to_perm(n, [(0, 1, k)]) for k in range(2, n)]
    return make_from_permutation_generators(n, gens, cap=cap,
                                            descriptor=Descriptor(f"A{n}", "alternating", {"n": n}))


def relabel(g: Group, perm: Sequence[int]) -> Group:
    """Isomorphic copy with element ``x`` renamed ``perm[x]`` (``perm[0]`` must be 0)."""
    perm = np.asarray(perm, dtype=np.int64)
    if perm[0] != 0 or sorted(perm.tolist()) != list(range(g.order)):
        raise ValueError("relabelling must be a permutation fixing 0")
    inv = np.argsort(perm)
    table = perm[g.table.astype(np.int64)[np.ix_(inv, inv)]]
    return Group(table, Descriptor(f"{g.name}'", "relabeled", {"of": g.name}))


# -- element-level data -------------------------------------------------------


def centralizer(g: Group, a: int) -> frozenset[int]:
    col = g.table[:, a]
    row = g.table[a]
    return frozenset(int(x) for x in np.nonzero(col == row)[0])


def center(g: Group) -> frozenset[int]:
    t = g.table
    commute = (t == t.T).all(axis=0)
    return frozenset(int(x) for x in np.nonzero(commute)[0])


def is_abelian(g: Group) -> bool:
    return bool(np.array_equal(g.table, g.table.T))


def abelian_shape(g: Group) -> AbelianShape | None:
    """Primary decomposition, or ``None`` for non-abelian groups.

    Uses constructor metadata when present, otherwise the element-order
    census: for each prime p, ``log_p #{x : x^(p^k) = e}`` counts factor
    exponents capped at k.
    """
    if not is_abelian(g):
        return None
    if g._shape is not None:
        return g._shape
    orders = g.elem_order
    factors = []
    for p, e in factorize(g.order).items():
        capped = []
        for k in range(e + 1):
            count = sum(1 for o in orders if (p ** k) % o == 0)
            capped.append(round(math.log(count, p)))
        at_least = [capped[k] - capped[k - 1] for k in range(1, e + 1)] + [0]
        for k in range(1, e + 1):
            mult = at_least[k - 1] - at_least[k]
            if mult:
                factors.append((p, k, mult))
    return AbelianShape(tuple(factors))


def generated_subgroup(g: Group, gens: Iterable[int]) -> list[int]:
    gens = list(gens)
    rows = g.rows
    seen = [False] * g.order
    seen[0] = True
    out = [0]
    i = 0
    while i < len(out):
        x = out[i]
        for s in gens:
            y = rows[x][s]
            if not seen[y]:
                seen[y] = True
                out.append(y)
        i += 1
    return out


def minimal_generating_set(g: Group, start: Sequence[int] = ()) -> tuple[int, ...]:
    """Greedy generating set: repeatedly add the element enlarging the subgroup most.

    Ties go to the lowest element id.  Elements of ``start`` come first.
    """
    def compute():
        gens = [s for s in start]
        size = len(generated_subgroup(g, gens))
        while size < g.order:
            inside = set(generated_subgroup(g, gens))
            best, best_size = -1, size
            for x in range(1, g.order):
                if x in inside:
                    continue
                s = len(generated_subgroup(g, gens + [x]))
                if s > best_size:
                    best, best_size = x, s
            gens.append(best)
            size = best_size
        return tuple(gens)

    return g.cached(("mingens", tuple(start)), compute)


@dataclass(frozen=True)
class HomPlan:
    """Generation order used to extend generator images to a whole map.

    ``seq[:level_end[i]]`` is the subgroup generated by ``gens[:i + 1]`` and
    ``seq[t] = parent[t] * gens[pgen[t]]`` for ``t > 0``.
    """

    gens: tuple[int, ...]
    seq: tuple[int, ...]
    parent: tuple[int, ...]
    pgen: tuple[int, ...]
    level_end: tuple[int, ...]


def hom_plan(g: Group, gens: Sequence[int]) -> HomPlan:
    rows = g.rows
    seq = [0]
    parent = [-1]
    pgen = [-1]
    seen = [False] * g.order
    seen[0] = True
    level_end = []
    for i, s in enumerate(gens):
        old = len(seq)
        t = 0
        while t < len(seq):
            x = seq[t]
            ks = [i] if t < old else range(i + 1)
            for k in ks:
                y = rows[x][gens[k]]
                if not seen[y]:
                    seen[y] = True
                    seq.append(y)
                    parent.append(x)
                    pgen.append(k)
            t += 1
        level_end.append(len(seq))
    return HomPlan(tuple(gens), tuple(seq), tuple(parent), tuple(pgen), tuple(level_end))


def run_hom_search(src: Group, dst: Group, plan: HomPlan, candidates, *,
                   injective: bool = False, limit: int = 0) -> np.ndarray:
    """Thin wrapper over the search kernel; returns an (r, |src|) image array."""
    return search_homs(src.table, dst.table, plan.seq, plan.parent, plan.pgen,
                       plan.level_end, plan.gens, [list(c) for c in candidates],
                       injective, limit)


def find_isomorphism(g1: Group, g2: Group) -> tuple[int, ...] | None:
    """An isomorphism g1 -> g2 as an image array, or ``None``."""
    if g1.order != g2.order or g1.order_census() != g2.order_census():
        return None
    gens = minimal_generating_set(g1)
    by_order: dict[int, list[int]] = {}
    for y, o in enumerate(g2.elem_order):
        by_order.setdefault(o, []).append(y)
    cands = [by_order.get(g1.elem_order[s], []) for s in gens]
    found = run_hom_search(g1, g2, hom_plan(g1, gens), cands, injective=True, limit=1)
    if len(found) == 0:
        return None
    return tuple(int(v) for v in found[0])


def are_isomorphic_groups(g1: Group, g2: Group) -> bool:
    return find_isomorphism(g1, g2) is not None
