"""Numba-compiled kernel implementations (default backend when importable).

Same contracts as `numpy_backend`; the test suite checks both backends in
lockstep.  Rows are evaluated by scalar functions compiled with @njit, which
makes the per-pair brute-force oracle cheap enough for exhaustive sweeps.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .codes import (
    AFTER,
    BEFORE,
    CONTAINS,
    DURING,
    EQUALS,
    FINISHED_BY,
    FINISHES,
    MEETS,
    MET_BY,
    N_RELATIONS,
    OVERLAPPED_BY,
    OVERLAPS,
    STARTED_BY,
    STARTS,
)

_GRID_BUF = 24  # 8 boundary values + 2 points per gap + 2 exterior
_MEMBER_BUF = _GRID_BUF * _GRID_BUF  # members of one operand on the grid


@njit(cache=True, inline="always")
def _relation_code(b1, e1, b2, e2):
    # Duration-0 members are instants; boundary coincidences collapse.
    a_pt = b1 == e1
    b_pt = b2 == e2
    if a_pt and b_pt:
        if b1 < b2:
            return BEFORE
        if b1 == b2:
            return EQUALS
        return AFTER
    if a_pt:
        if b1 < b2:
            return BEFORE
        if b1 == b2:
            return STARTS
        if b1 < e2:
            return DURING
        if b1 == e2:
            return FINISHES
        return AFTER
    if b_pt:
        if e1 < b2:
            return BEFORE
        if b1 == b2:
            return STARTED_BY
        if b2 < b1:
            return AFTER
        if b2 < e1:
            return CONTAINS
        return FINISHED_BY
    if e1 < b2:
        return BEFORE
    if e1 == b2:
        return MEETS
    if b1 > e2:
        return AFTER
    if b1 == e2:
        return MET_BY
    if b1 == b2:
        if e1 == e2:
            return EQUALS
        if e1 < e2:
            return STARTS
        return STARTED_BY
    if e1 == e2:
        if b1 > b2:
            return FINISHES
        return FINISHED_BY
    if b1 > b2:
        if e1 < e2:
            return DURING
        return OVERLAPPED_BY
    if e1 > e2:
        return CONTAINS
    return OVERLAPS


@njit(cache=True, inline="always")
def _table_row(apb, arb, are, ape, bpb, brb, bre, bpe, pos, rel):
    a_prop = apb < ape
    b_prop = bpb < bpe

    pos[BEFORE] = are < brb
    pos[AFTER] = arb > bre
    pos[DURING] = arb > bpb and are < bpe and b_prop
    pos[CONTAINS] = apb < brb and ape > bre and a_prop
    pos[OVERLAPS] = apb < brb and ape > bpb and are < bpe and a_prop and b_prop
    pos[OVERLAPPED_BY] = arb > bpb and apb < bpe and ape > bre and a_prop and b_prop
    pos[MEETS] = (
        are <= brb and ape >= bpb and apb < brb and are < bpe and a_prop and b_prop
    )
    pos[MET_BY] = (
        apb <= bpe and arb >= bre and arb > bpb and ape > bre and a_prop and b_prop
    )
    pos[STARTS] = apb <= brb and arb >= bpb and are < bpe and b_prop
    pos[STARTED_BY] = apb <= brb and arb >= bpb and ape > bre and a_prop
    pos[FINISHES] = arb > bpb and are <= bpe and ape >= bre and b_prop
    pos[FINISHED_BY] = apb < brb and are <= bpe and ape >= bre and a_prop
    pos[EQUALS] = apb <= brb and arb >= bpb and are <= bpe and ape >= bre

    beg_equal = apb == arb and arb == bpb and bpb == brb
    end_equal = are == ape and ape == bre and bre == bpe

    rel[BEFORE] = ape < bpb
    rel[AFTER] = apb > bpe
    rel[DURING] = apb > brb and ape < bre
    rel[CONTAINS] = arb < bpb and are > bpe
    rel[OVERLAPS] = arb < bpb and are > brb and ape < bre
    rel[OVERLAPPED_BY] = apb > brb and arb < bre and are > bpe
    rel[MEETS] = (
        are == ape and ape == bpb and bpb == brb and arb < bpb and ape < bre
    )
    rel[MET_BY] = (
        apb == arb and arb == bre and bre == bpe and apb > brb and are > bpe
    )
    rel[STARTS] = beg_equal and ape < bre
    rel[STARTED_BY] = beg_equal and are > bpe
    rel[FINISHES] = end_equal and apb > brb
    rel[FINISHED_BY] = end_equal and arb < bpb
    rel[EQUALS] = beg_equal and end_equal


@njit(cache=True, inline="always")
def _instant_instant_row(t0, t1, u0, u1, pos, rel):
    pos[BEFORE] = t0 < u1
    pos[EQUALS] = t0 <= u1 and t1 >= u0
    pos[AFTER] = t1 > u0
    rel[BEFORE] = t1 < u0
    rel[EQUALS] = t0 == t1 and t1 == u0 and u0 == u1
    rel[AFTER] = t0 > u1


@njit(cache=True, inline="always")
def _instant_interval_row(t0, t1, wpb, wrb, wre, wpe, pos, rel):
    # Instant operand first; interval operand restricted to proper members.
    pos[BEFORE] = t0 < wrb
    pos[STARTS] = t0 <= wrb and t1 >= wpb and t0 < wpe
    pos[DURING] = t1 > wpb and t0 < wpe
    pos[FINISHES] = t1 >= wre and t0 <= wpe and t1 > wpb
    pos[AFTER] = t1 > wre
    rel[BEFORE] = t1 < wpb
    rel[STARTS] = t0 == t1 and t1 == wpb and wpb == wrb
    rel[DURING] = t0 > wrb and t1 < wre
    rel[FINISHES] = t0 == t1 and t1 == wre and wre == wpe
    rel[AFTER] = t0 > wpe


@njit(cache=True, inline="always")
def _interval_instant_row(t0, t1, wpb, wrb, wre, wpe, pos, rel):
    # Mirror of _instant_interval_row with the interval as operand A.
    pos[AFTER] = t0 < wrb
    pos[STARTED_BY] = t0 <= wrb and t1 >= wpb and t0 < wpe
    pos[CONTAINS] = t1 > wpb and t0 < wpe
    pos[FINISHED_BY] = t1 >= wre and t0 <= wpe and t1 > wpb
    pos[BEFORE] = t1 > wre
    rel[AFTER] = t1 < wpb
    rel[STARTED_BY] = t0 == t1 and t1 == wpb and wpb == wrb
    rel[CONTAINS] = t0 > wrb and t1 < wre
    rel[FINISHED_BY] = t0 == t1 and t1 == wre and wre == wpe
    rel[BEFORE] = t0 > wpe


@njit(cache=True)
def pair_states(a, b, a_instant, b_instant):
    n = a.shape[0]
    pos = np.zeros((n, N_RELATIONS), dtype=np.bool_)
    rel = np.zeros((n, N_RELATIONS), dtype=np.bool_)
    for r in range(n):
        apb = a[r, 0]
        arb = a[r, 1]
        are = a[r, 2]
        ape = a[r, 3]
        bpb = b[r, 0]
        brb = b[r, 1]
        bre = b[r, 2]
        bpe = b[r, 3]
        if not a_instant and not b_instant:
            _table_row(apb, arb, are, ape, bpb, brb, bre, bpe, pos[r], rel[r])
        elif a_instant and b_instant:
            _instant_instant_row(apb, ape, bpb, bpe, pos[r], rel[r])
        elif a_instant:
            if bpb == bpe:
                _instant_instant_row(apb, ape, bpb, bpe, pos[r], rel[r])
            else:
                _instant_interval_row(apb, ape, bpb, brb, bre, bpe, pos[r], rel[r])
        else:
            if apb == ape:
                _instant_instant_row(apb, ape, bpb, bpe, pos[r], rel[r])
            else:
                _interval_instant_row(bpb, bpe, apb, arb, are, ape, pos[r], rel[r])
    return pos, rel


@njit(cache=True, inline="always")
def _collect_members(grid, g, pb, rb, re, pe, self_instant, other_instant, mb, me):
    k = 0
    if self_instant:
        for i in range(g):
            if pb <= grid[i] <= rb:
                mb[k] = i
                me[k] = i
                k += 1
    elif other_instant and pb == pe:
        for i in range(g):
            if grid[i] == pb:
                mb[k] = i
                me[k] = i
                k += 1
                break
    elif other_instant:
        for i in range(g):
            if pb <= grid[i] <= rb:
                for j in range(i + 1, g):
                    if re <= grid[j] <= pe:
                        mb[k] = i
                        me[k] = j
                        k += 1
    else:
        for i in range(g):
            if pb <= grid[i] <= rb:
                for j in range(i, g):
                    if re <= grid[j] <= pe:
                        mb[k] = i
                        me[k] = j
                        k += 1
    return k


@njit(cache=True)
def oracle_states(a, b, a_instant, b_instant):
    n = a.shape[0]
    pos = np.zeros((n, N_RELATIONS), dtype=np.bool_)
    rel = np.zeros((n, N_RELATIONS), dtype=np.bool_)
    sv = np.empty(8, dtype=np.float64)
    du = np.empty(8, dtype=np.float64)
    grid = np.empty(_GRID_BUF, dtype=np.float64)
    amb = np.empty(_MEMBER_BUF, dtype=np.int64)
    ame = np.empty(_MEMBER_BUF, dtype=np.int64)
    bmb = np.empty(_MEMBER_BUF, dtype=np.int64)
    bme = np.empty(_MEMBER_BUF, dtype=np.int64)
    for r in range(n):
        for c in range(4):
            sv[c] = a[r, c]
            sv[4 + c] = b[r, c]
        for i in range(1, 8):  # insertion sort
            v = sv[i]
            j = i - 1
            while j >= 0 and sv[j] > v:
                sv[j + 1] = sv[j]
                j -= 1
            sv[j + 1] = v
        nd = 0
        for i in range(8):
            if i == 0 or sv[i] != sv[i - 1]:
                du[nd] = sv[i]
                nd += 1
        # Grid: one point below, the distinct boundary values with two
        # points strictly inside each gap, one point beyond.  An order
        # pattern of the four member endpoints can force at most two of
        # them between consecutive boundary values (the chain extremes can
        # always sit on the gap edges), so two interior points decide every
        # pattern exactly.
        g = 0
        grid[g] = du[0] - 1.0
        g += 1
        for i in range(nd):
            if i > 0:
                step = (du[i] - du[i - 1]) / 3.0
                grid[g] = du[i - 1] + step
                grid[g + 1] = du[i - 1] + 2.0 * step
                g += 2
            grid[g] = du[i]
            g += 1
        grid[g] = du[nd - 1] + 1.0
        g += 1

        na = _collect_members(
            grid, g, a[r, 0], a[r, 1], a[r, 2], a[r, 3],
            a_instant, b_instant, amb, ame,
        )
        nb = _collect_members(
            grid, g, b[r, 0], b[r, 1], b[r, 2], b[r, 3],
            b_instant, a_instant, bmb, bme,
        )
        first = -1
        uniform = True
        for i in range(na):
            ab_ = grid[amb[i]]
            ae_ = grid[ame[i]]
            for j in range(nb):
                c = _relation_code(ab_, ae_, grid[bmb[j]], grid[bme[j]])
                pos[r, c] = True
                if first == -1:
                    first = c
                elif c != first:
                    uniform = False
        if uniform and first >= 0:
            rel[r, first] = True
    return pos, rel
