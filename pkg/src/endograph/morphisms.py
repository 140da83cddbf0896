"""Endomorphisms and automorphisms of a finite group, and endomorphism arc queries.

Three exact routes answer "does some endomorphism map a to b":

* full enumeration of End(G), when the generator-image search space fits the
  budget;
* a constrained search that pins the image of ``a`` and stops at the first hit;
* for abelian groups, a closed-form test on cyclic-factor coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Sequence

import numpy as np

from .groups import (AbelianShape, Group, abelian_shape, find_isomorphism,
                     hom_plan, is_abelian, make_abelian, minimal_generating_set,
                     run_hom_search)

DEFAULT_ENUM_BUDGET = 10 ** 6


class BudgetExceeded(RuntimeError):
    """The exhaustive oracle is unavailable within the enumeration budget."""


@dataclass(frozen=True)
class Morphism:
    image: tuple[int, ...]
    group: Group | None = field(default=None, compare=False, repr=False)

    @property
    def is_bijective(self) -> bool:
        return len(set(self.image)) == len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __len__(self) -> int:
        return len(self.image)


def is_homomorphism(g: Group, image: Sequence[int]) -> bool:
    img = np.asarray(image, dtype=np.int64)
    if img.shape != (g.order,):
        raise ValueError(f"image has length {len(image)}, group has order {g.order}")
    if img.min() < 0 or img.max() >= g.order:
        return False
    t = g.table.astype(np.int64)
    return bool(np.array_equal(img[t], t[img[:, None], img[None, :]]))


def compose(f: Morphism, h: Morphism) -> Morphism:
    """``f o h`` (apply ``h`` first)."""
    if len(f) != len(h) or (f.group is not None and h.group is not None and f.group is not h.group):
        raise ValueError("morphisms belong to different groups")
    return Morphism(tuple(f.image[x] for x in h.image), f.group or h.group)


@dataclass(frozen=True, eq=False)
class EndoMonoid:
    """All endomorphisms of one group, lexicographically sorted by image."""

    group: Group
    images: np.ndarray
    arc_matrix: np.ndarray

    def __len__(self) -> int:
        return len(self.images)

    @property
    def morphisms(self) -> list[Morphism]:
        return [Morphism(tuple(int(v) for v in row), self.group) for row in self.images]

    def __contains__(self, m) -> bool:
        image = m.image if isinstance(m, Morphism) else tuple(m)
        return image in self._index

    @property
    def _index(self) -> set:
        return self.group.cached("endo-index", lambda: {tuple(r) for r in self.images.tolist()})


def _sorted_rows(images: np.ndarray) -> np.ndarray:
    if len(images) == 0:
        return images
    return images[np.lexsort(images.T[::-1])]


def _arcs_from_images(n: int, images: np.ndarray) -> np.ndarray:
    arcs = np.zeros((n, n), dtype=bool)
    if len(images):
        arcs[np.broadcast_to(np.arange(n), images.shape), images] = True
    np.fill_diagonal(arcs, False)
    return arcs


def _dividing_candidates(g: Group, x: int) -> list[int]:
    o = g.elem_order[x]
    return [y for y, oy in enumerate(g.elem_order) if o % oy == 0]


def _equal_order_candidates(g: Group, x: int) -> list[int]:
    o = g.elem_order[x]
    return [y for y, oy in enumerate(g.elem_order) if oy == o]


def search_space(g: Group, automorphisms: bool = False) -> int:
    """Number of generator-image combinations the exhaustive search would consider."""
    pick = _equal_order_candidates if automorphisms else _dividing_candidates
    return math.prod(len(pick(g, s)) for s in minimal_generating_set(g))


def enumerate_endomorphisms(g: Group, budget: int = DEFAULT_ENUM_BUDGET) -> EndoMonoid:
    """Every endomorphism of ``g``; raises ``BudgetExceeded`` past the budget."""
    size = search_space(g)
    if size > budget:
        raise BudgetExceeded(f"{g.name}: {size} generator-image combinations exceed budget {budget}")

    def compute():
        gens = minimal_generating_set(g)
        cands = [_dividing_candidates(g, s) for s in gens]
        images = _sorted_rows(run_hom_search(g, g, hom_plan(g, gens), cands))
        images.setflags(write=False)
        arcs = _arcs_from_images(g.order, images)
        arcs.setflags(write=False)
        return EndoMonoid(g, images, arcs)

    return g.cached("endo", compute)


def _automorphism_images(g: Group, budget: int) -> np.ndarray:
    if "endo" in g._cache:
        images = g._cache["endo"].images
        keep = (np.sort(images, axis=1) == np.arange(g.order)).all(axis=1)
        return images[keep]
    size = search_space(g, automorphisms=True)
    if size > budget:
        raise BudgetExceeded(f"{g.name}: {size} automorphism candidates exceed budget {budget}")

    def compute():
        gens = minimal_generating_set(g)
        cands = [_equal_order_candidates(g, s) for s in gens]
        return _sorted_rows(run_hom_search(g, g, hom_plan(g, gens), cands, injective=True))

    return g.cached("auto", compute)


def enumerate_automorphisms(g: Group, budget: int = DEFAULT_ENUM_BUDGET) -> list[Morphism]:
    return [Morphism(tuple(int(v) for v in row), g) for row in _automorphism_images(g, budget)]


def automorphism_orbits(g: Group, budget: int = DEFAULT_ENUM_BUDGET) -> list[frozenset[int]]:
    """Orbits of Aut(G) on the elements, sorted by smallest member."""
    images = _automorphism_images(g, budget)
    seen: set[int] = set()
    orbits = []
    for x in range(g.order):
        if x in seen:
            continue
        orb = frozenset(int(v) for v in images[:, x]) | {x}
        seen |= orb
        orbits.append(orb)
    return orbits


def _pinned_search(g: Group, a: int, b: int, budget: int) -> bool:
    gens = minimal_generating_set(g, start=(a,))
    cands = [[b]] + [_dividing_candidates(g, s) for s in gens[1:]]
    size = math.prod(len(c) for c in cands)
    if size > budget:
        raise BudgetExceeded(f"{g.name}: pinned search {a}->{b} has {size} combinations")
    return len(run_hom_search(g, g, hom_plan(g, gens), cands, limit=1)) > 0


def exists_endo_arc(g: Group, a: int, b: int, budget: int = DEFAULT_ENUM_BUDGET) -> bool:
    """True iff some endomorphism of ``g`` sends ``a`` to ``b``."""
    if a == b or b == 0:
        return True
    if g.elem_order[a] % g.elem_order[b]:
        return False
    try:
        return bool(enumerate_endomorphisms(g, budget).arc_matrix[a, b])
    except BudgetExceeded:
        pass
    return g.cached(("arc", a, b), lambda: _pinned_search(g, a, b, budget))


# -- abelian closed form ------------------------------------------------------


def _moduli(shape) -> list[int]:
    if isinstance(shape, AbelianShape):
        return shape.cyclic_factors()
    return [int(d) for d in shape]


def abelian_arc_fast(shape, a: Sequence[int], b: Sequence[int]) -> bool:
    """Arc test in Z_{d1} x ... x Z_{dk} from coordinate vectors.

    A map Z_{di} -> Z_{dj} is multiplication by a multiple of
    ``dj / gcd(di, dj)``, and the coordinate maps are chosen independently, so
    the achievable j-th coordinates of f(a) form the subgroup generated by
    ``(dj / gcd(di, dj)) * a_i`` over i.
    """
    d = _moduli(shape)
    if len(a) != len(d) or len(b) != len(d):
        raise ValueError("coordinate vectors do not match the factor list")
    for j, dj in enumerate(d):
        step = reduce(math.gcd, ((dj // math.gcd(di, dj)) * a[i] for i, di in enumerate(d)), dj)
        if b[j] % step:
            return False
    return True


def abelian_presentation(g: Group) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Cyclic factors and per-element coordinates for an abelian group."""
    if not is_abelian(g):
        raise ValueError(f"{g.name} is not abelian")
    if g.coords is not None:
        return g.factors, g.coords

    def compute():
        model = make_abelian(abelian_shape(g), cap=max(g.order, 1))
        iso = find_isomorphism(g, model)
        return tuple(model.factors), tuple(model.coords[iso[x]] for x in range(g.order))

    return g.cached("presentation", compute)


def abelian_arc_matrix(g: Group) -> np.ndarray:
    """Vectorized ``abelian_arc_fast`` over all ordered pairs (diagonal cleared)."""
    def compute():
        factors, coords = abelian_presentation(g)
        n = g.order
        if not factors:
            return np.zeros((n, n), dtype=bool)
        d = np.array(factors, dtype=np.int64)
        c = np.array(coords, dtype=np.int64).reshape(n, len(d))
        step = d[None, :] // np.gcd(d[:, None], d[None, :])  # step[i, j]
        vals = (c[:, :, None] * step[None, :, :]) % d[None, None, :]
        gens = np.gcd(np.gcd.reduce(vals, axis=1), d[None, :])
        arcs = (c[None, :, :] % gens[:, None, :] == 0).all(axis=2)
        np.fill_diagonal(arcs, False)
        arcs.setflags(write=False)
        return arcs

    return g.cached("abelian-arcs", compute)


def endo_arc_matrix(g: Group, budget: int = DEFAULT_ENUM_BUDGET) -> tuple[np.ndarray, str]:
    """Arc relation of the directed endomorphism graph and the route that produced it."""
    try:
        return enumerate_endomorphisms(g, budget).arc_matrix, "enumeration"
    except BudgetExceeded:
        pass
    if is_abelian(g):
        return abelian_arc_matrix(g), "abelian-fast-path"

    def compute():
        n = g.order
        arcs = np.zeros((n, n), dtype=bool)
        for a in range(n):
            for b in range(n):
                if a != b:
                    arcs[a, b] = exists_endo_arc(g, a, b, budget)
        arcs.setflags(write=False)
        return arcs

    return g.cached(("pair-arcs", budget), compute), "pair-search"
