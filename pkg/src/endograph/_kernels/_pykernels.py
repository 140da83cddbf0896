"""Pure-Python homomorphism search, used when the compiled kernel is unavailable.

Mirrors ``_ckernels.pyx`` line for line; both are exercised by the test suite.
"""

from __future__ import annotations

import numpy as np


def search_homs(src_table, dst_table, seq, parent, pgen, level_end, gens,
                candidates, injective=False, limit=0):
    """Enumerate homomorphisms src -> dst by backtracking over generator images.

    ``seq`` lists the elements of the source group so that
    ``seq[:level_end[i]]`` is the subgroup generated by ``gens[:i + 1]``; every
    ``seq[t]`` (t > 0) equals ``parent[t] * gens[pgen[t]]``.  A partial
    assignment is kept only if it is a homomorphism on the current subgroup,
    so pruning is exact.  ``candidates[i]`` lists allowed images of
    ``gens[i]``.  With ``injective`` the map must be one-to-one.  ``limit`` > 0
    stops after that many results.

    Returns an (r, n) int32 array of image arrays indexed by source element.
    """
    src = src_table.tolist() if hasattr(src_table, "tolist") else src_table
    dst = dst_table.tolist() if hasattr(dst_table, "tolist") else dst_table
    seq = list(seq)
    parent = list(parent)
    pgen = list(pgen)
    level_end = list(level_end)
    gens = list(gens)
    cands = [list(c) for c in candidates]
    n = len(src)
    m = len(dst)
    levels = len(gens)

    img = [-1] * n
    img[seq[0]] = 0
    used = [False] * m
    used[0] = True
    gen_img = [0] * levels
    out: list[list[int]] = []

    def extend(level: int) -> bool:
        start = level_end[level - 1] if level else 1
        stop = level_end[level]
        # the first new element is gens[level] itself, parented by e
        for t in range(start, stop):
            y = dst[img[parent[t]]][gen_img[pgen[t]]]
            if injective:
                if used[y]:
                    for s in range(start, t):
                        used[img[seq[s]]] = False
                    return False
                used[y] = True
            img[seq[t]] = y
        ok = True
        # new elements against all earlier generators, then everything against the new one
        for t in range(start, stop):
            x = seq[t]
            fx = img[x]
            row = src[x]
            for k in range(level):
                if img[row[gens[k]]] != dst[fx][gen_img[k]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            g = gens[level]
            fg = gen_img[level]
            for t in range(stop):
                x = seq[t]
                if img[src[x][g]] != dst[img[x]][fg]:
                    ok = False
                    break
        if not ok and injective:
            for t in range(start, stop):
                used[img[seq[t]]] = False
        return ok

    def retract(level: int) -> None:
        if injective:
            start = level_end[level - 1] if level else 1
            for t in range(start, level_end[level]):
                used[img[seq[t]]] = False

    def rec(level: int) -> bool:
        if level == levels:
            out.append(img[:])
            return limit > 0 and len(out) >= limit
        for c in cands[level]:
            if injective and used[c]:
                continue
            gen_img[level] = c
            if extend(level):
                stop = rec(level + 1)
                retract(level)
                if stop:
                    return True
        return False

    if levels == 0:
        out.append(img[:])
    else:
        rec(0)
    if not out:
        return np.zeros((0, n), dtype=np.int32)
    return np.asarray(out, dtype=np.int32)
