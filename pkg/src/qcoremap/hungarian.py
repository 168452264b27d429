"""Exact rectangular minimum-cost assignment (Kuhn-Munkres family).

Cost matrices are float64 arrays; entries of +inf (FORBIDDEN) can never be
selected and are handled natively rather than through a large finite constant,
so dual potentials stay clean. Rows must not outnumber columns; rectangular
inputs are padded internally with zero-cost dummy rows.

Determinism contract: among all minimum-cost matchings, the one whose column
sequence (col_of_row) is lexicographically smallest is returned. This is
achieved by extracting the matching greedily over the tight subgraph of the
optimal dual potentials, checking completability with augmenting paths.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._jit import jit

FORBIDDEN = float("inf")
TOL = 1e-9  # absolute tolerance for real-valued cost comparisons


class InfeasibleMatrixError(ValueError):
    """No full matching avoids the forbidden entries."""


@dataclass(frozen=True)
class AssignmentSolution:
    """Injective row -> column matching and its total cost."""

    col_of_row: tuple[int, ...]
    total_cost: float


def _jv_square(cost):
    """Shortest-augmenting-path assignment on a square matrix.

    Returns (status, col_of_row, u, v); status 1 means no perfect matching
    avoids the +inf entries. Column index n is a virtual start column.
    """
    n = cost.shape[0]
    inf = np.inf
    u = np.zeros(n + 1)
    v = np.zeros(n + 1)
    p = np.full(n + 1, -1, dtype=np.int64)  # p[j] = row matched to column j
    way = np.zeros(n + 1, dtype=np.int64)
    col_of_row = np.full(n, -1, dtype=np.int64)
    for i in range(n):
        p[n] = i
        j0 = n
        minv = np.full(n + 1, inf)
        used = np.zeros(n + 1, dtype=np.bool_)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = inf
            j1 = -1
            for j in range(n):
                if not used[j]:
                    cur = cost[i0, j] - u[i0] - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
            if j1 < 0:
                return 1, col_of_row, u[:n], v[:n]
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] < 0:
                break
        while j0 != n:  # augment along the alternating path
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    for j in range(n):
        col_of_row[p[j]] = j
    return 0, col_of_row, u[:n], v[:n]


def _lex_canonical(cost, u, v, col_of_row, r, tol):
    """Rewrite the matching into the lexicographically smallest optimal one.

    Optimal matchings are exactly the perfect matchings of the tight subgraph
    (reduced cost <= tol) of the optimal duals. Rows 0..r-1 are fixed in
    ascending order to the smallest tight column that still leaves the rest
    completable, checked by BFS augmentation.
    """
    n = cost.shape[0]
    row_of_col = np.full(n, -1, dtype=np.int64)
    for i in range(n):
        row_of_col[col_of_row[i]] = i
    locked = np.zeros(n, dtype=np.bool_)
    from_row = np.empty(n, dtype=np.int64)
    visited = np.zeros(n, dtype=np.bool_)
    queue = np.empty(n, dtype=np.int64)
    for i in range(r):
        cur = col_of_row[i]
        for j in range(n):
            if j == cur:
                break  # nothing smaller is completable; keep the current column
            if locked[j]:
                continue
            if not cost[i, j] - u[i] - v[j] <= tol:
                continue
            k = row_of_col[j]
            col_of_row[i] = j
            row_of_col[j] = i
            row_of_col[cur] = -1
            if k < 0:
                cur = j
                break
            # Row k lost column j; seek an alternating path k -> ... -> cur.
            visited[:] = False
            visited[j] = True
            head = 0
            tail = 0
            queue[tail] = k
            tail += 1
            found = False
            while head < tail and not found:
                x = queue[head]
                head += 1
                for c in range(n):
                    if visited[c] or locked[c]:
                        continue
                    if not cost[x, c] - u[x] - v[c] <= tol:
                        continue
                    visited[c] = True
                    from_row[c] = x
                    if row_of_col[c] < 0:
                        cc = c
                        while True:
                            x2 = from_row[cc]
                            nxt = col_of_row[x2]
                            col_of_row[x2] = cc
                            row_of_col[cc] = x2
                            if x2 == k:
                                break
                            cc = nxt
                        found = True
                        break
                    queue[tail] = row_of_col[c]
                    tail += 1
            if found:
                cur = j
                break
            col_of_row[i] = cur  # rollback
            row_of_col[cur] = i
            col_of_row[k] = j
            row_of_col[j] = k
        locked[cur] = True
    return col_of_row


_jv_square = jit(_jv_square)
_lex_canonical = jit(_lex_canonical)


def _validated(costs) -> np.ndarray:
    m = np.ascontiguousarray(costs, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError(f"cost matrix must be 2-D and non-empty, got shape {m.shape}")
    if np.isnan(m).any() or np.isneginf(m).any():
        raise ValueError("cost matrix entries must be finite or +inf")
    return m


def shift_to_nonnegative(costs) -> np.ndarray:
    """Subtract the global minimum finite entry; forbidden entries stay +inf.

    The argmin matching is invariant under this shift.
    """
    m = _validated(costs)
    finite = np.isfinite(m)
    if not finite.any():
        raise ValueError("cost matrix has no finite entry")
    return m - m[finite].min()


def solve(costs) -> AssignmentSolution:
    """Minimum-cost injective row -> column matching.

    Requires rows <= columns and at least one full matching that avoids
    forbidden (+inf) entries; otherwise InfeasibleMatrixError.
    """
    m = _validated(costs)
    r, k = m.shape
    if r > k:
        raise ValueError(f"rows must not outnumber columns, got {r}x{k}")
    square = m
    if r < k:
        square = np.zeros((k, k), dtype=np.float64)
        square[:r] = m
    status, col_of_row, u, v = _jv_square(square)
    if status != 0:
        raise InfeasibleMatrixError(
            "no full matching avoids the forbidden entries"
        )
    col_of_row = _lex_canonical(square, u, v, col_of_row, r, TOL)
    cols = tuple(int(c) for c in col_of_row[:r])
    total = float(sum(m[i, c] for i, c in enumerate(cols)))
    return AssignmentSolution(cols, total)
