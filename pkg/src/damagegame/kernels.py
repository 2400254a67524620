"""Hot kernels for the exact search, shared by the jit and pure paths.

Every function here is written against plain int64 scalars and numpy arrays
so that numba's @njit can compile it.  When the environment variable
DAMAGEGAME_DISABLE_JIT is set (or numba is unavailable) the very same
functions run as ordinary interpreted Python over numpy -- slower, but
bit-identical.  benchmarks/bench_jit.py compares the two paths.

State layout constants come from packing.py.  The kernels cover:

* successor generation for both phases (including the capture-then-assess
  damage rule), with robber joint moves deduplicated to destination
  multisets;
* built-in cop decision rules (stationary / guard / patrol / greedy) so
  best-response searches against those cops stay in compiled code;
* frontier expansion of the reachable state space;
* the class-layered least-fixpoint iteration that produces exact values.
"""

from __future__ import annotations

import os

import numpy as np

from .packing import COP_SHIFT, MODE_SHIFT, ROB_SHIFT, SLOT_CAUGHT, VBITS

_flag = os.environ.get("DAMAGEGAME_DISABLE_JIT", "").strip().lower()
_DISABLED = _flag in ("1", "true", "yes", "on")

try:
    import numba as _numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    _numba = None

JIT_ENABLED = (_numba is not None) and not _DISABLED

if JIT_ENABLED:
    from numba import njit as _njit
    from numba import types as _types
    from numba.typed import Dict as _TypedDict

    def _jit(fn):
        return _njit(cache=True)(fn)

    def make_index_dict():
        return _TypedDict.empty(key_type=_types.int64, value_type=_types.int64)

else:

    def _jit(fn):
        return fn

    def make_index_dict():
        return {}


# cop decision rules understood by the kernels
KP_MINIMAX = -1
KP_STATIONARY = 0
KP_GUARD = 1
KP_PATROL = 2
KP_GREEDY = 3

GUARD_WAITING = 0
GUARD_RETURNING = 1

_NO_EXIT_MIN = np.int64(1) << 40
_NO_EXIT_MAX = np.int64(-1)

STATUS_OK = 0
STATUS_INTERNAL = 2


@_jit
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@_jit
def _pack(phase, cop, mode, slots, s, damage, dmg_shift):
    x = phase | (cop << COP_SHIFT) | (mode << MODE_SHIFT)
    for i in range(s):
        x |= slots[i] << (ROB_SHIFT + VBITS * i)
    return x | (damage << dmg_shift)


@_jit
def _sort_slots(slots, s):
    # insertion sort; s is tiny and SLOT_CAUGHT sorts last
    for i in range(1, s):
        key = slots[i]
        j = i - 1
        while j >= 0 and slots[j] > key:
            slots[j + 1] = slots[j]
            j -= 1
        slots[j + 1] = key


@_jit
def _unpack_slots(st, s, slots):
    for i in range(s):
        slots[i] = (st >> (ROB_SHIFT + VBITS * i)) & 31


@_jit
def _policy_cop_dest(cop, mode, slots, s, policy_id, p0, p1, dmat, n, indptr, indices):
    """Destination and new memory for the built-in cop rules."""
    if policy_id == KP_STATIONARY:
        return cop, 0
    if policy_id == KP_GUARD:
        home = p0
        if cop != home:
            # just captured off home; move straight back, whatever is nearby
            return home, GUARD_WAITING
        for k in range(indptr[home], indptr[home + 1]):
            x = indices[k]
            for i in range(s):
                if slots[i] == x:
                    return x, GUARD_RETURNING  # lowest occupied neighbor
        return home, GUARD_WAITING
    if policy_id == KP_PATROL:
        if cop == p0:
            return p1, 0
        if cop == p1:
            return p0, 0
        # off the edge (perturbed start): walk toward p0
        best = cop
        bestd = dmat[cop * n + p0]
        for k in range(indptr[cop], indptr[cop + 1]):
            x = indices[k]
            if dmat[x * n + p0] < bestd:
                bestd = dmat[x * n + p0]
                best = x
        return best, 0
    # KP_GREEDY: step along a shortest path to the nearest live robber
    target = -1
    bestd = _NO_EXIT_MIN
    for i in range(s):
        if slots[i] != SLOT_CAUGHT:
            d = dmat[cop * n + slots[i]]
            if d < bestd or (d == bestd and slots[i] < target):
                bestd = d
                target = slots[i]
    if target < 0:
        return cop, 0
    best = cop
    bestd = dmat[cop * n + target]
    for k in range(indptr[cop], indptr[cop + 1]):
        x = indices[k]
        if dmat[x * n + target] < bestd:
            bestd = dmat[x * n + target]
            best = x
    return best, 0


@_jit
def cop_successors(st, n, s, dmg_shift, indptr, indices, policy_id, p0, p1, dmat, out):
    """Successors of a cop-to-move state: capture on arrival, then assess.

    With policy_id == KP_MINIMAX all closed-neighborhood moves are produced;
    otherwise the single move the policy dictates.  Returns the count.
    """
    cop = (st >> COP_SHIFT) & 31
    mode = (st >> MODE_SHIFT) & 7
    damage = st >> dmg_shift
    slots = np.empty(s, dtype=np.int64)
    _unpack_slots(st, s, slots)
    newslots = np.empty(s, dtype=np.int64)

    deg = indptr[cop + 1] - indptr[cop]
    if policy_id == KP_MINIMAX:
        nmoves = deg + 1
    else:
        nmoves = 1
    cnt = 0
    for k in range(nmoves):
        if policy_id == KP_MINIMAX:
            dest = cop if k == deg else indices[indptr[cop] + k]
            newmode = 0
        else:
            dest, newmode = _policy_cop_dest(
                cop, mode, slots, s, policy_id, p0, p1, dmat, n, indptr, indices
            )
        newdmg = damage
        for i in range(s):
            v = slots[i]
            if v == SLOT_CAUGHT:
                newslots[i] = SLOT_CAUGHT
            elif v == dest:
                newslots[i] = SLOT_CAUGHT
            else:
                newslots[i] = v
                newdmg |= np.int64(1) << v
        _sort_slots(newslots, s)
        out[cnt] = _pack(1, dest, newmode, newslots, s, newdmg, dmg_shift)
        cnt += 1
    return cnt


@_jit
def robber_successors(st, n, s, dmg_shift, indptr, indices, out_cap):
    """Canonical successors of a robbers-to-move state, deduplicated.

    Enumerates the product of per-robber closed neighborhoods; a robber
    stepping onto the cop is caught immediately.  Results are sorted and
    unique -- one representative per destination multiset.
    """
    cop = (st >> COP_SHIFT) & 31
    mode = (st >> MODE_SHIFT) & 7
    damage = st >> dmg_shift
    slots = np.empty(s, dtype=np.int64)
    _unpack_slots(st, s, slots)

    live = 0
    for i in range(s):
        if slots[i] != SLOT_CAUGHT:
            live += 1
    # slots are sorted so live robbers occupy the prefix [0, live)
    total = 1
    for i in range(live):
        total *= indptr[slots[i] + 1] - indptr[slots[i]] + 1

    buf = np.empty(total, dtype=np.int64)
    newslots = np.empty(s, dtype=np.int64)
    for idx in range(total):
        rem = idx
        for i in range(s):
            newslots[i] = SLOT_CAUGHT
        for i in range(live):
            p = slots[i]
            opts = indptr[p + 1] - indptr[p] + 1
            choice = rem % opts
            rem //= opts
            dest = p if choice == opts - 1 else indices[indptr[p] + choice]
            newslots[i] = SLOT_CAUGHT if dest == cop else dest
        _sort_slots(newslots, s)
        buf[idx] = _pack(0, cop, mode, newslots, s, damage, dmg_shift)
    buf.sort()
    cnt = 0
    prev = np.int64(-1)
    for idx in range(total):
        if buf[idx] != prev:
            out_cap[cnt] = buf[idx]
            prev = buf[idx]
            cnt += 1
    return cnt


@_jit
def _successors(st, n, s, dmg_shift, indptr, indices, policy_id, p0, p1, dmat, out):
    if st & 1 == 0:
        return cop_successors(
            st, n, s, dmg_shift, indptr, indices, policy_id, p0, p1, dmat, out
        )
    return robber_successors(st, n, s, dmg_shift, indptr, indices, out)


@_jit
def max_branching(n, s, indptr):
    """Upper bound on successors of any state, for buffer sizing."""
    maxdeg = 0
    for v in range(n):
        d = indptr[v + 1] - indptr[v]
        if d > maxdeg:
            maxdeg = d
    b = 1
    for _ in range(s):
        b *= maxdeg + 1
    cop_b = maxdeg + 1
    return b if b > cop_b else cop_b


@_jit
def expand_chunk(
    frontier,
    index,
    next_id,
    n,
    s,
    dmg_shift,
    indptr,
    indices,
    policy_id,
    p0,
    p1,
    dmat,
    branch_cap,
):
    """One BFS layer: register unseen successors, return them and the new id."""
    out = np.empty(branch_cap, dtype=np.int64)
    cap = 1024
    new_states = np.empty(cap, dtype=np.int64)
    found = 0
    for fi in range(frontier.shape[0]):
        st = frontier[fi]
        cnt = _successors(
            st, n, s, dmg_shift, indptr, indices, policy_id, p0, p1, dmat, out
        )
        for k in range(cnt):
            t = out[k]
            if t not in index:
                index[t] = next_id
                next_id += 1
                if found == cap:
                    cap *= 2
                    bigger = np.empty(cap, dtype=np.int64)
                    bigger[:found] = new_states[:found]
                    new_states = bigger
                new_states[found] = t
                found += 1
    return new_states[:found], next_id


@_jit
def solve_classes_chunk(
    states,
    order,
    order_pos,
    bounds,
    c_from,
    c_to,
    index,
    finals,
    ranks,
    n,
    s,
    dmg_shift,
    indptr,
    indices,
    policy_id,
    p0,
    p1,
    dmat,
    branch_cap,
):
    """Least-fixpoint values for classes [c_from, c_to).

    Classes are contiguous runs of `order`; all their exits (strictly smaller
    classes in the well-founded order) must already be finalized.  Inside a
    class the loopy min/max game is solved by monotone Jacobi sweeps from
    the |damaged| lower bound; ranks record the sweep at which each state
    reached its final value (strategy extraction uses them).
    """
    out = np.empty(branch_cap, dtype=np.int64)
    for c in range(c_from, c_to):
        a = bounds[c]
        b = bounds[c + 1]
        m = b - a
        dmg_count = np.int64(popcount(states[order[a]] >> dmg_shift))

        # pass 1: count in-class edges, collect exit bounds
        counts = np.zeros(m + 1, dtype=np.int64)
        exit_lo = np.full(m, _NO_EXIT_MIN, dtype=np.int64)
        exit_hi = np.full(m, _NO_EXIT_MAX, dtype=np.int64)
        for i in range(m):
            st = states[order[a + i]]
            cnt = _successors(
                st, n, s, dmg_shift, indptr, indices, policy_id, p0, p1, dmat, out
            )
            for k in range(cnt):
                t = out[k]
                if t not in index:
                    return STATUS_INTERNAL
                j = index[t]
                pos = order_pos[j]
                if a <= pos < b:
                    counts[i + 1] += 1
                else:
                    ev = finals[j]
                    if ev < 0:
                        return STATUS_INTERNAL
                    if ev < exit_lo[i]:
                        exit_lo[i] = ev
                    if ev > exit_hi[i]:
                        exit_hi[i] = ev
        for i in range(m):
            counts[i + 1] += counts[i]
        edges = np.empty(counts[m], dtype=np.int64)
        fill = counts.copy()

        # pass 2: fill in-class adjacency (local indices)
        for i in range(m):
            st = states[order[a + i]]
            cnt = _successors(
                st, n, s, dmg_shift, indptr, indices, policy_id, p0, p1, dmat, out
            )
            for k in range(cnt):
                j = index[out[k]]
                pos = order_pos[j]
                if a <= pos < b:
                    edges[fill[i]] = pos - a
                    fill[i] += 1

        # monotone Jacobi iteration from the class lower bound
        v = np.full(m, dmg_count, dtype=np.int64)
        v_new = np.empty(m, dtype=np.int64)
        rank = np.zeros(m, dtype=np.int64)
        sweep = 0
        changed = True
        while changed:
            changed = False
            sweep += 1
            for i in range(m):
                st = states[order[a + i]]
                if st & 1 == 0:  # cop to move: minimize
                    best = exit_lo[i]
                    for e in range(counts[i], counts[i + 1]):
                        w = v[edges[e]]
                        if w < best:
                            best = w
                else:  # robbers to move: maximize
                    best = exit_hi[i]
                    for e in range(counts[i], counts[i + 1]):
                        w = v[edges[e]]
                        if w > best:
                            best = w
                    if best < dmg_count:
                        # no successors below the bound can exist, but exits
                        # may sit at the bound itself
                        best = dmg_count
                if best != v[i]:
                    changed = True
                    rank[i] = sweep
                v_new[i] = best
            tmp = v
            v = v_new
            v_new = tmp

        for i in range(m):
            g = order[a + i]
            finals[g] = v[i]
            ranks[g] = rank[i]
    return STATUS_OK


def popcount_array(a):
    """Vectorized popcount for int64 numpy arrays (python-side helper)."""
    x = a.astype(np.uint64)
    m1 = np.uint64(0x5555555555555555)
    m2 = np.uint64(0x3333333333333333)
    m4 = np.uint64(0x0F0F0F0F0F0F0F0F)
    h01 = np.uint64(0x0101010101010101)
    x = x - ((x >> np.uint64(1)) & m1)
    x = (x & m2) + ((x >> np.uint64(2)) & m2)
    x = (x + (x >> np.uint64(4))) & m4
    return ((x * h01) >> np.uint64(56)).astype(np.int64)
