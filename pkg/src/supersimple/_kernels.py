"""Hot search kernels: canonical-form minimization and orderly generation.

Both kernels are written as plain Python over numpy arrays and compiled
with numba's @njit when available.  The environment variable
SUPERSIMPLE_BACKEND selects the path at import time:

    SUPERSIMPLE_BACKEND=numba   require numba (error if missing)
    SUPERSIMPLE_BACKEND=python  force the pure-Python path
    unset                       numba if importable, else pure Python

Lines are encoded as rows of int64 arrays and, for comparisons, packed
into single integers with 5 bits per point (valid for n <= 31, far
above the enumeration cap), so lexicographic order on packed codes
equals lexicographic order on sorted 4-tuples.
"""

from __future__ import annotations

import os

import numpy as np

_ENV_VAR = "SUPERSIMPLE_BACKEND"


def _resolve_backend() -> str:
    requested = os.environ.get(_ENV_VAR, "").strip().lower()
    if requested not in ("", "numba", "python"):
        raise ValueError("%s must be 'numba' or 'python', got %r" % (_ENV_VAR, requested))
    if requested == "python":
        return "python"
    try:
        import numba  # noqa: F401
        return "numba"
    except ImportError:
        if requested == "numba":
            raise RuntimeError("%s=numba but numba is not importable" % _ENV_VAR)
        return "python"


BACKEND = _resolve_backend()

if BACKEND == "numba":
    from numba import njit as _jit_decorator

    def _maybe_jit(fn):
        return _jit_decorator(cache=True)(fn)
else:
    def _maybe_jit(fn):
        return fn


def active_backend() -> str:
    """Which kernel path this process is running ('numba' or 'python')."""
    return BACKEND


# -- canonical form ----------------------------------------------------------
#
# The canonical form of a line set is the lexicographically least sorted
# line list over all relabelings of the points.  The search assigns new
# labels 0, 1, ... to old points depth-first; at each node every line
# gets a lower-bound code (assigned labels sorted, unassigned slots
# filled with the smallest labels still available), and the sorted list
# of bounds is compared against the current best.  Only points that
# actually occur in some line need labels: wasting a small label on an
# unused point can never shrink any line code.


@_maybe_jit
def _min_search(lines, n, stop_on_smaller, best):
    """Core branch-and-bound. Returns True iff some relabeling beats ``best``.

    ``best`` holds packed codes of the reference list (sorted ascending)
    and is updated in place to the minimum found unless stop_on_smaller
    requests a bare existence test.
    """
    k = lines.shape[0]
    if k == 0:
        return False
    used = np.zeros(n, np.bool_)
    for i in range(k):
        for j in range(4):
            used[lines[i, j]] = True
    u = 0
    for p in range(n):
        if used[p]:
            u += 1
    fwd = np.full(n, -1, np.int64)
    chosen = np.full(u, -1, np.int64)
    cand = np.zeros(u, np.int64)
    lb = np.empty(k, np.int64)
    row = np.empty(4, np.int64)
    found = False
    depth = 0
    cand[0] = 0
    while depth >= 0:
        p = cand[depth]
        while p < n and (not used[p] or fwd[p] >= 0):
            p += 1
        if p >= n:
            depth -= 1
            if depth >= 0:
                q = chosen[depth]
                fwd[q] = -1
                chosen[depth] = -1
                cand[depth] += 1
            continue
        cand[depth] = p
        fwd[p] = depth
        chosen[depth] = p
        # Lower-bound code per line: sorted assigned labels, then fills
        # depth+1, depth+2, ... for the unassigned slots.
        for i in range(k):
            t = 0
            for j in range(4):
                lab = fwd[lines[i, j]]
                if lab >= 0:
                    row[t] = lab
                    t += 1
            # insertion sort of up to 4 values
            for a in range(1, t):
                v = row[a]
                c = a
                while c > 0 and row[c - 1] > v:
                    row[c] = row[c - 1]
                    c -= 1
                row[c] = v
            fill = depth + 1
            for a in range(t, 4):
                row[a] = fill
                fill += 1
            lb[i] = ((row[0] * 32 + row[1]) * 32 + row[2]) * 32 + row[3]
        lb_sorted = np.sort(lb)
        cmp = 0
        for i in range(k):
            if lb_sorted[i] < best[i]:
                cmp = -1
                break
            if lb_sorted[i] > best[i]:
                cmp = 1
                break
        if cmp < 0:
            if depth == u - 1:
                found = True
                if stop_on_smaller:
                    return True
                for i in range(k):
                    best[i] = lb_sorted[i]
                # complete assignment: retreat to try siblings
                fwd[p] = -1
                chosen[depth] = -1
                cand[depth] = p + 1
            else:
                depth += 1
                cand[depth] = 0
        else:
            # bound cannot beat best: try next sibling
            fwd[p] = -1
            chosen[depth] = -1
            cand[depth] = p + 1
    return found


@_maybe_jit
def _pack_codes(lines):
    k = lines.shape[0]
    codes = np.empty(k, np.int64)
    for i in range(k):
        codes[i] = ((lines[i, 0] * 32 + lines[i, 1]) * 32 + lines[i, 2]) * 32 + lines[i, 3]
    return codes


@_maybe_jit
def is_lex_minimal(lines, n):
    """True iff no relabeling yields a strictly smaller sorted line list."""
    best = _pack_codes(lines)
    return not _min_search(lines, n, True, best)


@_maybe_jit
def minimize_codes(lines, n):
    """Packed codes of the lexicographically least relabeled line list."""
    best = _pack_codes(lines)
    _min_search(lines, n, False, best)
    return best


def unpack_codes(codes) -> np.ndarray:
    out = np.empty((len(codes), 4), np.int64)
    c = np.asarray(codes, np.int64)
    out[:, 3] = c & 31
    out[:, 2] = (c >> 5) & 31
    out[:, 1] = (c >> 10) & 31
    out[:, 0] = (c >> 15) & 31
    return out


# -- orderly generation ------------------------------------------------------
#
# Depth-first search over sorted line lists.  The next line must cover
# the lexicographically least pair with remaining capacity (every line
# not yet placed would otherwise consume a smaller pair first), which
# both prunes and guarantees each design is produced exactly once, in
# sorted order.  Reaching b lines with no capacity ever driven negative
# forces every pair to exact lambda coverage, so leaves are valid
# designs by construction; the triple table enforces supersimplicity.
# In canonical mode each placement must keep the prefix lexicographically
# minimal (prefixes of a minimal list are minimal), and the check at the
# final placement is precisely full-design canonicity.


@_maybe_jit
def search_designs(n, lam, b, prefix, target_depth, canonical, count_only):
    """Enumerate completions of ``prefix`` up to ``target_depth`` lines.

    Returns (count, flat) where flat has count*target_depth rows of 4
    points (empty when count_only).  With canonical set, only prefixes
    that stay lexicographically minimal are explored; the caller must
    pass a prefix that is itself minimal.
    """
    plen = prefix.shape[0]
    cap = np.zeros((n, n), np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            cap[i, j] = lam
    triple = np.zeros((n, n, n), np.bool_)
    lines = np.zeros((b, 4), np.int64)
    for i in range(plen):
        a0, a1, a2, a3 = prefix[i, 0], prefix[i, 1], prefix[i, 2], prefix[i, 3]
        lines[i, 0], lines[i, 1], lines[i, 2], lines[i, 3] = a0, a1, a2, a3
        cap[a0, a1] -= 1
        cap[a0, a2] -= 1
        cap[a0, a3] -= 1
        cap[a1, a2] -= 1
        cap[a1, a3] -= 1
        cap[a2, a3] -= 1
        triple[a0, a1, a2] = True
        triple[a0, a1, a3] = True
        triple[a0, a2, a3] = True
        triple[a1, a2, a3] = True

    pair_a = np.zeros(b, np.int64)
    pair_b = np.zeros(b, np.int64)
    scan = np.zeros(b, np.int64)

    out = np.empty((64 * target_depth, 4), np.int64)
    count = 0

    depth = plen
    fresh = True
    while depth >= plen:
        if depth == target_depth:
            if not count_only:
                needed = (count + 1) * target_depth
                if needed > out.shape[0]:
                    grown = np.empty((out.shape[0] * 2, 4), np.int64)
                    grown[:out.shape[0]] = out
                    out = grown
                base = count * target_depth
                for i in range(target_depth):
                    for j in range(4):
                        out[base + i, j] = lines[i, j]
            count += 1
            depth -= 1
            fresh = False
            continue

        if fresh:
            fa = -1
            fb = -1
            for i in range(n):
                for j in range(i + 1, n):
                    if cap[i, j] > 0:
                        fa = i
                        fb = j
                        break
                if fa >= 0:
                    break
            if fa < 0:
                # no capacity left before target depth: dead branch
                depth -= 1
                fresh = False
                continue
            pair_a[depth] = fa
            pair_b[depth] = fb
            cd = -1
        else:
            fa = pair_a[depth]
            fb = pair_b[depth]
            # undo the line previously placed at this depth
            a0, a1, a2, a3 = lines[depth, 0], lines[depth, 1], lines[depth, 2], lines[depth, 3]
            cap[a0, a1] += 1
            cap[a0, a2] += 1
            cap[a0, a3] += 1
            cap[a1, a2] += 1
            cap[a1, a3] += 1
            cap[a2, a3] += 1
            triple[a0, a1, a2] = False
            triple[a0, a1, a3] = False
            triple[a0, a2, a3] = False
            triple[a1, a2, a3] = False
            cd = scan[depth]

        descended = False
        cd += 1
        while cd < n * n:
            c = cd // n
            d = cd % n
            cd += 1
            if c <= fb or d <= c:
                continue
            if cap[fa, c] < 1 or cap[fa, d] < 1 or cap[fb, c] < 1 \
                    or cap[fb, d] < 1 or cap[c, d] < 1:
                continue
            if triple[fa, fb, c] or triple[fa, fb, d] or triple[fa, c, d] or triple[fb, c, d]:
                continue
            if depth > 0:
                # sorted line list: strictly increase on the previous line
                code = ((fa * 32 + fb) * 32 + c) * 32 + d
                prev = ((lines[depth - 1, 0] * 32 + lines[depth - 1, 1]) * 32
                        + lines[depth - 1, 2]) * 32 + lines[depth - 1, 3]
                if code <= prev:
                    continue
            lines[depth, 0] = fa
            lines[depth, 1] = fb
            lines[depth, 2] = c
            lines[depth, 3] = d
            if canonical and not is_lex_minimal(lines[:depth + 1], n):
                continue
            cap[fa, fb] -= 1
            cap[fa, c] -= 1
            cap[fa, d] -= 1
            cap[fb, c] -= 1
            cap[fb, d] -= 1
            cap[c, d] -= 1
            triple[fa, fb, c] = True
            triple[fa, fb, d] = True
            triple[fa, c, d] = True
            triple[fb, c, d] = True
            scan[depth] = cd - 1
            depth += 1
            fresh = True
            descended = True
            break
        if not descended:
            depth -= 1
            fresh = False

    return count, out[:count * target_depth].copy()


def warm_up() -> None:
    """Trigger JIT compilation on a tiny instance so timed runs measure search."""
    tiny = np.array([[0, 1, 2, 3]], np.int64)
    is_lex_minimal(tiny, 4)
    minimize_codes(tiny, 4)
    search_designs(4, 1, 1, np.empty((0, 4), np.int64), 1, True, False)
