# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled implementations of the hot kernels.

Must stay semantically identical to ``_py.py`` (same candidates, scores and
tie-breaking); the backend-agreement tests hold both to that.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt
from libc.stdlib cimport free, malloc, qsort

cnp.import_array()

BACKEND = "compiled"


cdef struct Pair:
    double v
    double y


cdef int _cmp_pair(const void* a, const void* b) noexcept nogil:
    cdef double av = (<const Pair*> a).v
    cdef double bv = (<const Pair*> b).v
    if av < bv:
        return -1
    if av > bv:
        return 1
    return 0


def best_split(double[:, ::1] X, double[::1] y, int criterion, int min_leaf=1):
    """See ``_py.best_split``; identical contract."""
    cdef Py_ssize_t n = X.shape[0]
    cdef Py_ssize_t n_cols = X.shape[1]
    cdef int best_col = -1
    cdef double best_thr = 0.0
    cdef double best_score = 0.0
    cdef Py_ssize_t best_nl = 0

    if n < 2:
        return best_col, best_thr, best_score, 0

    cdef Pair* pairs = <Pair*> malloc(n * sizeof(Pair))
    if pairs == NULL:
        raise MemoryError()

    cdef Py_ssize_t i, col, nl
    cdef double mean_y = 0.0
    cdef double s_all, q_all, var_all, spread_all
    cdef double s_l, q_l, nl_f, nr_f, var_l, var_r, score
    cdef double col_score, col_thr
    cdef Py_ssize_t col_nl
    cdef bint col_found

    with nogil:
        for i in range(n):
            mean_y += y[i]
        mean_y /= n

        for col in range(n_cols):
            for i in range(n):
                pairs[i].v = X[i, col]
                pairs[i].y = y[i] - mean_y
            qsort(pairs, n, sizeof(Pair), _cmp_pair)

            s_all = 0.0
            q_all = 0.0
            for i in range(n):
                s_all += pairs[i].y
                q_all += pairs[i].y * pairs[i].y
            var_all = q_all / n - (s_all / n) * (s_all / n)
            if var_all < 0.0:
                var_all = 0.0
            spread_all = sqrt(var_all) if criterion == 0 else var_all

            col_found = False
            col_score = 0.0
            col_thr = 0.0
            col_nl = 0
            s_l = 0.0
            q_l = 0.0
            for nl in range(1, n):
                s_l += pairs[nl - 1].y
                q_l += pairs[nl - 1].y * pairs[nl - 1].y
                if pairs[nl].v <= pairs[nl - 1].v:
                    continue
                if min_leaf > 1 and (nl < min_leaf or n - nl < min_leaf):
                    continue
                nl_f = <double> nl
                nr_f = <double> (n - nl)
                var_l = q_l / nl_f - (s_l / nl_f) * (s_l / nl_f)
                if var_l < 0.0:
                    var_l = 0.0
                var_r = (q_all - q_l) / nr_f - ((s_all - s_l) / nr_f) * ((s_all - s_l) / nr_f)
                if var_r < 0.0:
                    var_r = 0.0
                if criterion == 0:
                    score = spread_all - (nl_f / n) * sqrt(var_l) - (nr_f / n) * sqrt(var_r)
                else:
                    score = spread_all - (nl_f / n) * var_l - (nr_f / n) * var_r
                if not col_found or score > col_score:
                    col_found = True
                    col_score = score
                    col_thr = (pairs[nl - 1].v + pairs[nl].v) / 2.0
                    col_nl = nl

            if col_found and col_score > best_score:
                best_col = <int> col
                best_thr = col_thr
                best_score = col_score
                best_nl = col_nl

    free(pairs)
    return best_col, best_thr, best_score, <int> best_nl


def manhattan_distances(double[:, ::1] queries, double[:, ::1] train):
    """Dense Manhattan distance matrix, shape (n_queries, n_train)."""
    cdef Py_ssize_t nq = queries.shape[0]
    cdef Py_ssize_t nt = train.shape[0]
    cdef Py_ssize_t n_cols = queries.shape[1]
    if train.shape[1] != n_cols:
        raise ValueError("query and training widths differ")

    out = np.empty((nq, nt), dtype=np.float64)
    cdef double[:, ::1] dist = out
    cdef Py_ssize_t i, j, f
    cdef double acc

    with nogil:
        for i in range(nq):
            for j in range(nt):
                acc = 0.0
                for f in range(n_cols):
                    acc += fabs(queries[i, f] - train[j, f])
                dist[i, j] = acc
    return out
