"""Pure-Python kernels. Reference semantics for the compiled ``_ckernels``.

Both modules expose the same three functions with identical results,
including node counts, so either can back the public API.
"""
import sys
import time

import numpy as np

MODE_FIRST = 0
MODE_MAX = 1

_CHECK_EVERY = 1024


def _row_ints(words):
    """Reassemble each row of a (r, W) uint64 word array into one Python int."""
    rows = []
    for row in words:
        value = 0
        for w, word in enumerate(row.tolist()):
            value |= int(word) << (64 * w)
        rows.append(value)
    return rows


def gram(words, n):
    """Gram matrix of packed sign rows: entry (i, j) is n - 2 popcount(row_i ^ row_j)."""
    rows = _row_ints(words)
    r = len(rows)
    out = np.empty((r, r), dtype=np.int64)
    for i in range(r):
        a = rows[i]
        out[i, i] = n
        for j in range(i + 1, r):
            g = n - 2 * (a ^ rows[j]).bit_count()
            out[i, j] = g
            out[j, i] = g
    return out


def pair_histogram(values, n):
    """Count ordered pairs of single-word rows by disagreement count.

    Returns an int64 array ``h`` of length n + 1 where ``h[d]`` is the number
    of ordered pairs (u, v), u == v included, differing in exactly d places.
    """
    vals = [int(v) for v in values.tolist()]
    hist = [0] * (n + 1)
    for a in vals:
        for b in vals:
            hist[(a ^ b).bit_count()] += 1
    return np.asarray(hist, dtype=np.int64)


class _Budget(Exception):
    pass


class _Done(Exception):
    pass


def clique_search(values, half, target, mode, root_lo=0, root_hi=-1,
                  max_nodes=0, max_seconds=0.0):
    """Depth-first search for cliques of pairwise-orthogonal candidate rows.

    Two candidates are compatible when they disagree in exactly ``half``
    positions. Chosen indices are strictly increasing. ``MODE_FIRST`` stops at
    the first clique of size ``target``; ``MODE_MAX`` searches for a maximum
    clique, stopping early if one of size ``target`` appears. ``root_lo`` and
    ``root_hi`` restrict the first choice (``root_hi < 0`` means no limit).

    Returns ``(complete, best, nodes)``: ``complete`` is False only when a
    budget cut the search short; ``best`` holds the deepest (FIRST) or largest
    (MAX) index chain seen.
    """
    vals = [int(v) for v in values.tolist()]
    size0 = len(vals)
    if root_hi < 0 or root_hi > size0:
        root_hi = size0
    deadline = time.monotonic() + max_seconds if max_seconds > 0 else 0.0
    chosen = []
    best = []
    nodes = 0

    def tick():
        nonlocal nodes
        if max_nodes and nodes >= max_nodes:
            raise _Budget
        if deadline and nodes % _CHECK_EVERY == 0 and time.monotonic() > deadline:
            raise _Budget
        nodes += 1

    def expand(pool, pos):
        c = pool[pos]
        vc = vals[c]
        child = [d for d in pool[pos + 1:] if (vc ^ vals[d]).bit_count() == half]
        chosen.append(c)
        return child

    def first(pool, depth, lo, hi):
        nonlocal best
        need = target - depth
        size = len(pool)
        for pos in range(lo, hi):
            if size - pos < need:
                break
            tick()
            child = expand(pool, pos)
            if len(chosen) > len(best):
                best = chosen[:]
            if depth + 1 == target:
                raise _Done
            first(child, depth + 1, 0, len(child))
            chosen.pop()

    def maximum(pool, depth, lo, hi):
        nonlocal best
        size = len(pool)
        for pos in range(lo, hi):
            if depth + size - pos <= len(best):
                break
            tick()
            child = expand(pool, pos)
            if len(chosen) > len(best):
                best = chosen[:]
                if len(best) == target:
                    raise _Done
            maximum(child, depth + 1, 0, len(child))
            chosen.pop()

    if target == 0:
        return True, [], 0
    limit = sys.getrecursionlimit()
    if target + 50 > limit:
        sys.setrecursionlimit(target + 50)
    root = list(range(size0))
    try:
        if mode == MODE_FIRST:
            first(root, 0, root_lo, root_hi)
        elif mode == MODE_MAX:
            maximum(root, 0, root_lo, root_hi)
        else:
            raise ValueError(f"unknown search mode {mode}")
    except _Done:
        pass
    except _Budget:
        return False, best, nodes
    return True, best, nodes
