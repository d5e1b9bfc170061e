"""Pure-NumPy kernel implementations (fallback backend).

Interval batches are float64 arrays of shape (n, 4) holding the boundary
columns (pb, rb, re, pe).  `pair_states` evaluates the closed-form
reliable/possible conditions; `oracle_states` answers the same question by
brute force, enumerating representative members of each operand on a grid
that covers every order type of the eight boundary values.  The two must
agree; the test suite holds them to that.
"""

from __future__ import annotations

import numpy as np

from .codes import (
    AFTER,
    BEFORE,
    CONTAINS,
    DURING,
    EQUALS,
    FINISHED_BY,
    FINISHES,
    INVERSE,
    MEETS,
    MET_BY,
    N_RELATIONS,
    OVERLAPPED_BY,
    OVERLAPS,
    STARTED_BY,
    STARTS,
)


def _table_states(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form conditions for interval-kind operands, all 13 relations."""
    apb, arb, are, ape = a[:, 0], a[:, 1], a[:, 2], a[:, 3]
    bpb, brb, bre, bpe = b[:, 0], b[:, 1], b[:, 2], b[:, 3]
    n = a.shape[0]
    pos = np.empty((n, N_RELATIONS), dtype=bool)
    rel = np.empty((n, N_RELATIONS), dtype=bool)

    a_prop = apb < ape  # operand can be a proper interval
    b_prop = bpb < bpe
    a_beg_pinned = (apb == arb)
    b_beg_pinned = (bpb == brb)
    beg_equal = a_beg_pinned & b_beg_pinned & (arb == bpb)
    a_end_pinned = (are == ape)
    b_end_pinned = (bre == bpe)
    end_equal = a_end_pinned & b_end_pinned & (ape == bre)

    pos[:, BEFORE] = are < brb
    pos[:, AFTER] = arb > bre
    pos[:, DURING] = (arb > bpb) & (are < bpe) & b_prop
    pos[:, CONTAINS] = (apb < brb) & (ape > bre) & a_prop
    pos[:, OVERLAPS] = (apb < brb) & (ape > bpb) & (are < bpe) & a_prop & b_prop
    pos[:, OVERLAPPED_BY] = (arb > bpb) & (apb < bpe) & (ape > bre) & a_prop & b_prop
    pos[:, MEETS] = (
        (are <= brb) & (ape >= bpb) & (apb < brb) & (are < bpe) & a_prop & b_prop
    )
    pos[:, MET_BY] = (
        (apb <= bpe) & (arb >= bre) & (arb > bpb) & (ape > bre) & a_prop & b_prop
    )
    pos[:, STARTS] = (apb <= brb) & (arb >= bpb) & (are < bpe) & b_prop
    pos[:, STARTED_BY] = (apb <= brb) & (arb >= bpb) & (ape > bre) & a_prop
    pos[:, FINISHES] = (arb > bpb) & (are <= bpe) & (ape >= bre) & b_prop
    pos[:, FINISHED_BY] = (apb < brb) & (are <= bpe) & (ape >= bre) & a_prop
    pos[:, EQUALS] = (apb <= brb) & (arb >= bpb) & (are <= bpe) & (ape >= bre)

    rel[:, BEFORE] = ape < bpb
    rel[:, AFTER] = apb > bpe
    rel[:, DURING] = (apb > brb) & (ape < bre)
    rel[:, CONTAINS] = (arb < bpb) & (are > bpe)
    rel[:, OVERLAPS] = (arb < bpb) & (are > brb) & (ape < bre)
    rel[:, OVERLAPPED_BY] = (apb > brb) & (arb < bre) & (are > bpe)
    rel[:, MEETS] = (
        a_end_pinned & b_beg_pinned & (ape == bpb) & (arb < bpb) & (ape < bre)
    )
    rel[:, MET_BY] = (
        a_beg_pinned & b_end_pinned & (apb == bpe) & (apb > brb) & (are > bpe)
    )
    rel[:, STARTS] = beg_equal & (ape < bre)
    rel[:, STARTED_BY] = beg_equal & (are > bpe)
    rel[:, FINISHES] = end_equal & (apb > brb)
    rel[:, FINISHED_BY] = end_equal & (arb < bpb)
    rel[:, EQUALS] = beg_equal & end_equal
    return pos, rel


def _instant_instant_states(
    t0: np.ndarray, t1: np.ndarray, u0: np.ndarray, u1: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Instant against instant: only before / equals / after can occur."""
    n = t0.shape[0]
    pos = np.zeros((n, N_RELATIONS), dtype=bool)
    rel = np.zeros((n, N_RELATIONS), dtype=bool)
    pos[:, BEFORE] = t0 < u1
    pos[:, EQUALS] = (t0 <= u1) & (t1 >= u0)
    pos[:, AFTER] = t1 > u0
    rel[:, BEFORE] = t1 < u0
    rel[:, EQUALS] = (t0 == t1) & (t1 == u0) & (u0 == u1)
    rel[:, AFTER] = t0 > u1
    return pos, rel


def _instant_interval_states(
    t0: np.ndarray, t1: np.ndarray, w: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Instant [t0, t1] against an interval operand restricted to proper members.

    Only before / starts / during / finishes / after can occur; a point that
    coincides with a member's begin counts as starts, with its end as
    finishes.  Rows where the interval operand admits no proper member
    (wpb == wpe) are not meaningful here and are replaced by the caller.
    """
    wpb, wrb, wre, wpe = w[:, 0], w[:, 1], w[:, 2], w[:, 3]
    n = t0.shape[0]
    pos = np.zeros((n, N_RELATIONS), dtype=bool)
    rel = np.zeros((n, N_RELATIONS), dtype=bool)
    point_pinned = t0 == t1
    pos[:, BEFORE] = t0 < wrb
    pos[:, STARTS] = (t0 <= wrb) & (t1 >= wpb) & (t0 < wpe)
    pos[:, DURING] = (t1 > wpb) & (t0 < wpe)
    pos[:, FINISHES] = (t1 >= wre) & (t0 <= wpe) & (t1 > wpb)
    pos[:, AFTER] = t1 > wre
    rel[:, BEFORE] = t1 < wpb
    rel[:, STARTS] = point_pinned & (t1 == wpb) & (wpb == wrb)
    rel[:, DURING] = (t0 > wrb) & (t1 < wre)
    rel[:, FINISHES] = point_pinned & (t1 == wre) & (wre == wpe)
    rel[:, AFTER] = t0 > wpe
    return pos, rel


def _mixed_states(
    t: np.ndarray, w: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Instant-kind operand t against interval-kind operand w (that order)."""
    t0, t1 = t[:, 0], t[:, 3]
    pos, rel = _instant_interval_states(t0, t1, w)
    degenerate = w[:, 0] == w[:, 3]
    if degenerate.any():
        # A duration-0 interval operand stands in for an instant.
        pos_ii, rel_ii = _instant_instant_states(t0, t1, w[:, 0], w[:, 3])
        pos = np.where(degenerate[:, None], pos_ii, pos)
        rel = np.where(degenerate[:, None], rel_ii, rel)
    return pos, rel


def pair_states(
    a: np.ndarray, b: np.ndarray, a_instant: bool, b_instant: bool
) -> tuple[np.ndarray, np.ndarray]:
    """Possible/reliable masks, shape (n, 13) each, for row-wise operand pairs."""
    a = np.ascontiguousarray(a, dtype=np.float64)
    b = np.ascontiguousarray(b, dtype=np.float64)
    if not a_instant and not b_instant:
        return _table_states(a, b)
    if a_instant and b_instant:
        return _instant_instant_states(a[:, 0], a[:, 3], b[:, 0], b[:, 3])
    if a_instant:
        return _mixed_states(a, b)
    pos, rel = _mixed_states(b, a)
    return pos[:, INVERSE], rel[:, INVERSE]


def relation_codes(
    b1: np.ndarray, e1: np.ndarray, b2: np.ndarray, e2: np.ndarray
) -> np.ndarray:
    """Relation code of member pairs ([b1, e1], [b2, e2]); requires b <= e.

    Duration-0 members are read as instants, so boundary coincidences
    collapse (instant at a begin point -> starts, at an end point ->
    finishes, and the inverses for the mirrored case).  Exactly one code is
    produced per pair.
    """
    b1, e1, b2, e2 = np.broadcast_arrays(b1, e1, b2, e2)
    a_pt = b1 == e1
    b_pt = b2 == e2
    ii = np.where(b1 < b2, BEFORE, np.where(b1 == b2, EQUALS, AFTER))
    iw = np.select(
        [b1 < b2, b1 == b2, b1 < e2, b1 == e2],
        [BEFORE, STARTS, DURING, FINISHES],
        AFTER,
    )
    wi = np.select(
        [e1 < b2, b1 == b2, b2 < b1, b2 < e1],
        [BEFORE, STARTED_BY, AFTER, CONTAINS],
        FINISHED_BY,
    )
    ww = np.select(
        [
            e1 < b2,
            e1 == b2,
            b1 > e2,
            b1 == e2,
            (b1 == b2) & (e1 == e2),
            (b1 == b2) & (e1 < e2),
            b1 == b2,
            (e1 == e2) & (b1 > b2),
            e1 == e2,
            (b1 > b2) & (e1 < e2),
            b1 > b2,
            e1 > e2,
        ],
        [
            BEFORE,
            MEETS,
            AFTER,
            MET_BY,
            EQUALS,
            STARTS,
            STARTED_BY,
            FINISHES,
            FINISHED_BY,
            DURING,
            OVERLAPPED_BY,
            CONTAINS,
        ],
        OVERLAPS,
    )
    out = np.where(a_pt & b_pt, ii, np.where(a_pt, iw, np.where(b_pt, wi, ww)))
    return out.astype(np.int64)


def _member_grid(grid: np.ndarray, w: np.ndarray, self_instant: bool,
                 other_instant: bool) -> tuple[np.ndarray, np.ndarray]:
    """Begin/end value arrays of one operand's representative members."""
    pb, rb, re, pe = w
    if self_instant:
        pts = grid[(grid >= pb) & (grid <= rb)]
        return pts, pts
    if other_instant and pb == pe:
        # Fully degenerate interval operand: its only members are instants.
        pt = np.array([pb])
        return pt, pt
    begins = grid[(grid >= pb) & (grid <= rb)]
    ends = grid[(grid >= re) & (grid <= pe)]
    bb, ee = np.meshgrid(begins, ends, indexing="ij")
    # Paired with an instant operand only proper members count.
    keep = (bb < ee) if other_instant else (bb <= ee)
    return bb[keep], ee[keep]


def _oracle_pair(a4: np.ndarray, b4: np.ndarray, a_instant: bool,
                 b_instant: bool) -> tuple[np.ndarray, np.ndarray]:
    vals = np.unique(np.concatenate((a4, b4)))
    gaps = vals[1:] - vals[:-1]
    grid = np.concatenate(
        (
            [vals[0] - 1.0],
            vals,
            # Two points strictly inside each gap: an order pattern of the
            # four member endpoints can force at most two of them between
            # consecutive boundary values (chain extremes sit on the edges).
            vals[:-1] + gaps / 3.0,
            vals[:-1] + 2.0 * gaps / 3.0,
            [vals[-1] + 1.0],
        )
    )
    grid.sort()
    ab, ae = _member_grid(grid, a4, a_instant, b_instant)
    bb, be = _member_grid(grid, b4, b_instant, a_instant)
    codes = relation_codes(ab[:, None], ae[:, None], bb[None, :], be[None, :])
    seen = np.unique(codes)
    pos = np.zeros(N_RELATIONS, dtype=bool)
    rel = np.zeros(N_RELATIONS, dtype=bool)
    pos[seen] = True
    if seen.size == 1:
        rel[seen[0]] = True
    return pos, rel


def oracle_states(
    a: np.ndarray, b: np.ndarray, a_instant: bool, b_instant: bool
) -> tuple[np.ndarray, np.ndarray]:
    """Brute-force possible/reliable masks via member enumeration.

    The grid holds every boundary value, two points strictly inside each
    gap between consecutive distinct values, and one point beyond each
    extreme.  Which relation a member pair satisfies depends only on the
    order pattern of its four endpoints relative to the boundary values,
    and every realizable pattern has a witness on this grid, so the
    enumeration decides both quantifiers exactly.
    """
    a = np.ascontiguousarray(a, dtype=np.float64)
    b = np.ascontiguousarray(b, dtype=np.float64)
    n = a.shape[0]
    pos = np.zeros((n, N_RELATIONS), dtype=bool)
    rel = np.zeros((n, N_RELATIONS), dtype=bool)
    for r in range(n):
        pos[r], rel[r] = _oracle_pair(a[r], b[r], a_instant, b_instant)
    return pos, rel
