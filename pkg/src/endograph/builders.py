"""Graphs on a group: endomorphism, automorphism and power graphs.

Also the closed-form counts for cyclic groups and the abelian shape
predicates used to classify results.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .graphs import Digraph, SimpleGraph, delete_vertex, underlying_simple_graph
from .groups import AbelianShape, Group, divisor_profile, factorize
from .morphisms import DEFAULT_ENUM_BUDGET, _automorphism_images, endo_arc_matrix


class GraphKind(str, enum.Enum):
    ENDO_DIRECTED = "endo-directed"
    ENDO = "endo"
    AUTO = "auto"
    POWER_DIRECTED = "power-directed"
    POWER = "power"

    @property
    def directed(self) -> bool:
        return self in (GraphKind.ENDO_DIRECTED, GraphKind.POWER_DIRECTED)


@dataclass(frozen=True)
class BuildInfo:
    kind: GraphKind
    delete_identity: bool
    strategy: str


def power_arc_matrix(g: Group) -> np.ndarray:
    """``arcs[x, y]`` iff ``y = x^m`` for some m >= 1 and ``y != x``."""
    def compute():
        n = g.order
        arcs = np.zeros((n, n), dtype=bool)
        rows = g.rows
        for x in range(n):
            y = x
            while True:
                y = rows[y][x]
                if y == x:
                    break
                arcs[x, y] = True
        arcs.setflags(write=False)
        return arcs

    return g.cached("power-arcs", compute)


def auto_matrix(g: Group, budget: int = DEFAULT_ENUM_BUDGET) -> np.ndarray:
    def compute():
        images = _automorphism_images(g, budget)
        n = g.order
        m = np.zeros((n, n), dtype=bool)
        m[np.broadcast_to(np.arange(n), images.shape), images] = True
        m |= m.T
        np.fill_diagonal(m, False)
        m.setflags(write=False)
        return m

    return g.cached(("auto-matrix", budget), compute)


def build_with_info(g: Group, kind: GraphKind | str, delete_identity: bool = False,
                    budget: int = DEFAULT_ENUM_BUDGET):
    kind = GraphKind(kind)
    strategy = "direct"
    if kind in (GraphKind.ENDO_DIRECTED, GraphKind.ENDO):
        arcs, strategy = endo_arc_matrix(g, budget)
        graph = Digraph.from_matrix(arcs)
        if kind is GraphKind.ENDO:
            graph = underlying_simple_graph(graph)
    elif kind is GraphKind.AUTO:
        strategy = "automorphism-enumeration"
        graph = SimpleGraph.from_matrix(auto_matrix(g, budget))
    else:
        graph = Digraph.from_matrix(power_arc_matrix(g))
        if kind is GraphKind.POWER:
            graph = underlying_simple_graph(graph)
    if delete_identity:
        graph = delete_vertex(graph, 0)
    return graph, BuildInfo(kind, delete_identity, strategy)


def build(g: Group, kind: GraphKind | str, delete_identity: bool = False,
          budget: int = DEFAULT_ENUM_BUDGET) -> Digraph | SimpleGraph:
    """Graph of the given kind on the elements of ``g``.

    Vertex ``v`` is element ``v``; with ``delete_identity`` the vertices are
    renumbered from 0 but ``labels`` keep the element ids.
    """
    return build_with_info(g, kind, delete_identity, budget)[0]


# -- closed forms -------------------------------------------------------------


def edge_count_formula(n: int) -> int:
    """Edges of Endo(Z_n): all pairs minus pairs whose orders are incomparable."""
    if n < 1:
        raise ValueError("n must be >= 1")
    prof = divisor_profile(n)
    d, phi = prof.divisors, prof.phi_values
    missing = sum(phi[i] * phi[j]
                  for i in range(len(d)) for j in range(i + 1, len(d))
                  if d[j] % d[i])
    return math.comb(n, 2) - missing


def clique_count_formula(n: int) -> int:
    """Multinomial coefficient of the prime-exponent vector of ``n``."""
    if n < 2:
        raise ValueError("n must be >= 2")
    exps = list(factorize(n).values())
    out = math.factorial(sum(exps))
    for e in exps:
        out //= math.factorial(e)
    return out


def is_completeness_shape(s: AbelianShape) -> bool:
    """One prime, and at most two exponents which are consecutive."""
    if len(s.primes) > 1:
        return False
    exps = sorted({a for _, a, _ in s.factors})
    return len(exps) <= 1 or (len(exps) == 2 and exps[1] == exps[0] + 1)


def is_per_prime_homocyclic(s: AbelianShape) -> bool:
    """Every prime appears with a single exponent."""
    return all(sum(1 for q, _, _ in s.factors if q == p) == 1 for p in s.primes)


def is_elementary_abelian_shape(s: AbelianShape) -> bool:
    return len(s.factors) == 1 and s.factors[0][1] == 1
