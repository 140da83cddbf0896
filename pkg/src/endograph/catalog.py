"""Hard-coded representatives of every isomorphism class of order <= 15.

Each entry is realized as the closure of permutation generators given in
cycle notation, so the catalog groups carry no abelian-shape metadata.
"""

from __future__ import annotations

import functools

from .groups import (Descriptor, Group, UnsupportedError, cycles_to_perm,
                     make_from_permutation_generators)

MAX_CATALOG_ORDER = 15
CLASS_COUNTS = (1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1)

# (name, family, params, degree, generators as cycle lists)
_ENTRIES = [
    ("Z1", "cyclic", {"n": 1}, 1, []),
    ("Z2", "cyclic", {"n": 2}, 2, [[(0, 1)]]),
    ("Z3", "cyclic", {"n": 3}, 3, [[(0, 1, 2)]]),
    ("Z4", "cyclic", {"n": 4}, 4, [[(0, 1, 2, 3)]]),
    ("Z2xZ2", "abelian", {"shape": [[2, 1, 2]]}, 4, [[(0, 1)], [(2, 3)]]),
    ("Z5", "cyclic", {"n": 5}, 5, [[(0, 1, 2, 3, 4)]]),
    ("Z6", "cyclic", {"n": 6}, 6, [[(0, 1, 2, 3, 4, 5)]]),
    ("S3", "symmetric", {"n": 3}, 3, [[(0, 1, 2)], [(0, 1)]]),
    ("Z7", "cyclic", {"n": 7}, 7, [[(0, 1, 2, 3, 4, 5, 6)]]),
    ("Z8", "cyclic", {"n": 8}, 8, [[(0, 1, 2, 3, 4, 5, 6, 7)]]),
    ("Z4xZ2", "abelian", {"shape": [[2, 2, 1], [2, 1, 1]]}, 6, [[(0, 1, 2, 3)], [(4, 5)]]),
    ("Z2xZ2xZ2", "abelian", {"shape": [[2, 1, 3]]}, 6, [[(0, 1)], [(2, 3)], [(4, 5)]]),
    ("D4", "dihedral", {"n": 4}, 4, [[(0, 1, 2, 3)], [(1, 3)]]),
    ("Q8", "quaternion", {}, 8, [[(0, 1, 3, 6), (2, 5, 7, 4)], [(0, 2, 3, 7), (1, 4, 6, 5)]]),
    ("Z9", "cyclic", {"n": 9}, 9, [[tuple(range(9))]]),
    ("Z3xZ3", "abelian", {"shape": [[3, 1, 2]]}, 6, [[(0, 1, 2)], [(3, 4, 5)]]),
    ("Z10", "cyclic", {"n": 10}, 10, [[tuple(range(10))]]),
    ("D5", "dihedral", {"n": 5}, 5, [[(0, 1, 2, 3, 4)], [(1, 4), (2, 3)]]),
    ("Z11", "cyclic", {"n": 11}, 11, [[tuple(range(11))]]),
    ("Z12", "cyclic", {"n": 12}, 12, [[tuple(range(12))]]),
    ("Z6xZ2", "abelian", {"shape": [[2, 1, 2], [3, 1, 1]]}, 8, [[(0, 1, 2, 3, 4, 5)], [(6, 7)]]),
    ("A4", "alternating", {"n": 4}, 4, [[(0, 1, 2)], [(0, 1), (2, 3)]]),
    ("D6", "dihedral", {"n": 6}, 6, [[(0, 1, 2, 3, 4, 5)], [(1, 5), (2, 4)]]),
    ("Dic3", "dicyclic", {"n": 3}, 7, [[(0, 1, 2)], [(1, 2), (3, 4, 5, 6)]]),
    ("Z13", "cyclic", {"n": 13}, 13, [[tuple(range(13))]]),
    ("Z14", "cyclic", {"n": 14}, 14, [[tuple(range(14))]]),
    ("D7", "dihedral", {"n": 7}, 7, [[(0, 1, 2, 3, 4, 5, 6)], [(1, 6), (2, 5), (3, 4)]]),
    ("Z15", "cyclic", {"n": 15}, 15, [[tuple(range(15))]]),
]


def _build(entry) -> Group:
    name, family, params, degree, gens = entry
    perms = [cycles_to_perm(degree, cyc) for cyc in gens]
    desc = Descriptor(name, family, dict(params))
    return make_from_permutation_generators(degree, perms, descriptor=desc)


@functools.lru_cache(maxsize=None)
def _all_groups() -> tuple[Group, ...]:
    # groups are immutable, so one shared instance keeps per-group memo caches warm
    return tuple(_build(e) for e in _ENTRIES)


def catalog_groups_up_to(max_order: int) -> list[Group]:
    """One representative per isomorphism class of each order up to ``max_order``."""
    if max_order > MAX_CATALOG_ORDER:
        raise UnsupportedError(f"catalog stops at order {MAX_CATALOG_ORDER}")
    return [g for g in _all_groups() if g.order <= max_order]


def catalog_group(name: str) -> Group:
    for g in _all_groups():
        if g.name == name:
            return g
    raise KeyError(name)
