# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled homomorphism search; same contract as ``_pykernels.search_homs``."""

import numpy as np
cimport cython


cdef class _Search:
    cdef const int[:, ::1] src
    cdef const int[:, ::1] dst
    cdef int[::1] seq
    cdef int[::1] parent
    cdef int[::1] pgen
    cdef int[::1] level_end
    cdef int[::1] gens
    cdef int[::1] cand_flat
    cdef int[::1] cand_start
    cdef int[::1] img
    cdef int[::1] gen_img
    cdef signed char[::1] used
    cdef bint injective
    cdef Py_ssize_t limit
    cdef int levels
    cdef int n
    cdef object buf
    cdef int[:, ::1] bufv
    cdef Py_ssize_t count

    cdef bint extend(self, int level):
        cdef int start = self.level_end[level - 1] if level else 1
        cdef int stop = self.level_end[level]
        cdef int t, s, k, x, y, fx, g, fg
        for t in range(start, stop):
            y = self.dst[self.img[self.parent[t]], self.gen_img[self.pgen[t]]]
            if self.injective:
                if self.used[y]:
                    for s in range(start, t):
                        self.used[self.img[self.seq[s]]] = 0
                    return False
                self.used[y] = 1
            self.img[self.seq[t]] = y
        for t in range(start, stop):
            x = self.seq[t]
            fx = self.img[x]
            for k in range(level):
                if self.img[self.src[x, self.gens[k]]] != self.dst[fx, self.gen_img[k]]:
                    self.unmark(start, stop)
                    return False
        g = self.gens[level]
        fg = self.gen_img[level]
        for t in range(stop):
            x = self.seq[t]
            if self.img[self.src[x, g]] != self.dst[self.img[x], fg]:
                self.unmark(start, stop)
                return False
        return True

    cdef void unmark(self, int start, int stop):
        cdef int t
        if self.injective:
            for t in range(start, stop):
                self.used[self.img[self.seq[t]]] = 0

    cdef void emit(self):
        cdef int x
        if self.count == self.bufv.shape[0]:
            self.buf = np.concatenate([self.buf, np.empty_like(self.buf)])
            self.bufv = self.buf
        for x in range(self.n):
            self.bufv[self.count, x] = self.img[x]
        self.count += 1

    cdef bint rec(self, int level):
        cdef int i, c, start
        if level == self.levels:
            self.emit()
            return self.limit > 0 and self.count >= self.limit
        for i in range(self.cand_start[level], self.cand_start[level + 1]):
            c = self.cand_flat[i]
            if self.injective and self.used[c]:
                continue
            self.gen_img[level] = c
            if self.extend(level):
                if self.rec(level + 1):
                    return True
                start = self.level_end[level - 1] if level else 1
                self.unmark(start, self.level_end[level])
        return False


def search_homs(src_table, dst_table, seq, parent, pgen, level_end, gens,
                candidates, injective=False, limit=0):
    cdef _Search s = _Search()
    s.src = np.ascontiguousarray(src_table, dtype=np.int32)
    s.dst = np.ascontiguousarray(dst_table, dtype=np.int32)
    s.seq = np.ascontiguousarray(seq, dtype=np.int32)
    s.parent = np.ascontiguousarray(parent, dtype=np.int32)
    s.pgen = np.ascontiguousarray(pgen, dtype=np.int32)
    s.level_end = np.ascontiguousarray(level_end, dtype=np.int32)
    s.gens = np.ascontiguousarray(gens, dtype=np.int32)
    sizes = [len(c) for c in candidates]
    s.cand_start = np.ascontiguousarray(np.concatenate([[0], np.cumsum(sizes)]), dtype=np.int32)
    flat = [int(v) for c in candidates for v in c]
    s.cand_flat = np.ascontiguousarray(flat if flat else [0], dtype=np.int32)
    n = s.src.shape[0]
    s.n = n
    s.img = np.full(n, -1, dtype=np.int32)
    s.img[0] = 0
    s.used = np.zeros(s.dst.shape[0], dtype=np.int8)
    s.used[0] = 1
    s.levels = len(s.gens)
    s.gen_img = np.zeros(max(s.levels, 1), dtype=np.int32)
    s.injective = bool(injective)
    s.limit = limit
    s.buf = np.empty((64, n), dtype=np.int32)
    s.bufv = s.buf
    s.count = 0
    if s.levels == 0:
        s.emit()
    else:
        s.rec(0)
    return s.buf[:s.count].copy()
