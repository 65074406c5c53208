"""Pure-NumPy implementations of the hot kernels.

Shares exact semantics with the compiled backend in ``_cy.pyx``: same split
candidates, same scores, same tie-breaking. The compiled module is preferred
at import time when present; this module is always available.
"""

import numpy as np

BACKEND = "python"

SPLIT_SD = 0
SPLIT_VARIANCE = 1


def best_split(X, y, criterion, min_leaf=1):
    """Best axis-aligned split of the rows of ``X`` against targets ``y``.

    Candidate thresholds sit at midpoints between consecutive distinct sorted
    values of each column. The score of a candidate is the reduction in target
    spread: standard deviation based for ``SPLIT_SD``, variance based for
    ``SPLIT_VARIANCE`` (both size-weighted, population denominators). Ties are
    broken toward the lower column index, then the lower threshold.

    Returns ``(column, threshold, score, n_left)``; ``column`` is -1 when no
    candidate scores above zero.
    """
    n, n_cols = X.shape
    best_col, best_thr, best_score, best_nl = -1, 0.0, 0.0, 0
    if n < 2:
        return best_col, best_thr, best_score, best_nl

    yc = y - y.mean()
    boundary = np.arange(1, n)
    nl_f = boundary.astype(np.float64)
    nr_f = n - nl_f
    wl = nl_f / n
    wr = nr_f / n

    for col in range(n_cols):
        v = X[:, col]
        order = np.argsort(v, kind="stable")
        vs = v[order]
        ys = yc[order]
        cs = np.cumsum(ys)
        cq = np.cumsum(ys * ys)

        valid = vs[1:] > vs[:-1]
        if min_leaf > 1:
            valid &= (boundary >= min_leaf) & (boundary <= n - min_leaf)
        if not valid.any():
            continue

        s_all = cs[-1]
        q_all = cq[-1]
        var_all = max(q_all / n - (s_all / n) ** 2, 0.0)

        sl = cs[:-1]
        ql = cq[:-1]
        var_l = np.maximum(ql / nl_f - (sl / nl_f) ** 2, 0.0)
        var_r = np.maximum((q_all - ql) / nr_f - ((s_all - sl) / nr_f) ** 2, 0.0)

        if criterion == SPLIT_SD:
            score = np.sqrt(var_all) - wl * np.sqrt(var_l) - wr * np.sqrt(var_r)
        else:
            score = var_all - wl * var_l - wr * var_r
        score = np.where(valid, score, -np.inf)

        k = int(np.argmax(score))
        if score[k] > best_score:
            best_col = col
            best_thr = (vs[k] + vs[k + 1]) / 2.0
            best_score = float(score[k])
            best_nl = k + 1

    return best_col, best_thr, best_score, best_nl


def manhattan_distances(queries, train):
    """Dense Manhattan distance matrix, shape (n_queries, n_train)."""
    nq = queries.shape[0]
    nt = train.shape[0]
    dist = np.zeros((nq, nt))
    scratch = np.empty((nq, nt))
    for col in range(queries.shape[1]):
        np.subtract(queries[:, col, None], train[None, :, col], out=scratch)
        np.abs(scratch, out=scratch)
        dist += scratch
    return dist
