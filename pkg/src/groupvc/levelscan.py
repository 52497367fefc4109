"""Exact VC-dimension search over a family's shattered-set lattice.

The search works in two spaces at once.  Witnesses are family members
(translates tA, or explicit member sets); candidates are ground-set elements.
For a probe set U the witnesses partition into 2^|U| cells, one per
intersection pattern, and U is shattered iff every cell is nonempty.

Key facts the engine uses:

* Extension sets come for free: x extends a shattered U iff x splits every
  cell of U, and the witnesses t whose cell side contains x are exactly those
  with x in member(t).  So the set of all valid extensions is an intersection
  of unions of member rows, computed with word-parallel segmented reductions.

* Reachability pruning: if U is a subset of a shattered set W with |W| = T,
  every cell of U holds at least 2^(T - |U|) witnesses (each cell refines
  into that many nonempty subcells).  A frontier set whose smallest cell is
  below the threshold for beating the best known size can be dropped without
  affecting the maximum.

* Translation canonicalization: for left-translate families, U is shattered
  iff gU is, so the maximum is attained by a set containing the identity and
  the search fixes it as the seed.

The exact phase enumerates canonical shattered sets level by level (each set
extended only past its largest element), keeps the frontier filtered by the
reachability threshold, and aborts with FrontierCapError when a level would
exceed the frontier cap.  A beam probe runs first to establish a strong lower
bound, which makes the threshold bite; the answer is exact whenever the
search terminates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import FrontierCapError
from .setsystem import KIND_TRANSLATES, TranslateFamily

# Row-gather working-set budget (bytes) per expansion chunk.
_CHUNK_BYTES = 64 << 20
# Beam width for the lower-bound probe and its per-level candidate budget.
_BEAM_WIDTH = 96
_BEAM_PAIR_CAP = 50_000


@dataclass
class _Problem:
    rows: np.ndarray       # (M, W) uint64, member bit-rows over the ground set
    sig: np.ndarray        # (N, M) uint8, sig[x, t] = 1 iff x in member t
    sigw: np.ndarray       # (N, Wm) uint64, sig packed over the witness axis
    ground_mask: np.ndarray  # (W,) uint64 masking the valid ground bits
    gt_masks: np.ndarray   # (N + 1, W) uint64, gt_masks[j] = {x : x >= j}
    n_ground: int
    n_members: int
    forced: int            # ground element forced into every set, or -1


def _pack_rows(rows_bool: np.ndarray) -> np.ndarray:
    m, n = rows_bool.shape
    w = (n + 63) // 64
    packed = np.packbits(rows_bool, axis=1, bitorder="little")
    if packed.shape[1] < 8 * w:
        pad = np.zeros((m, 8 * w - packed.shape[1]), dtype=np.uint8)
        packed = np.concatenate([packed, pad], axis=1)
    return np.ascontiguousarray(packed).view(np.uint64)


def _build_problem(f: TranslateFamily) -> _Problem:
    n = f.ground_size
    if f.kind == KIND_TRANSLATES:
        g = f.group
        a_bool = np.zeros(n, dtype=np.uint8)
        for x in f.base:
            a_bool[x] = 1
        rows_bool = a_bool[g.mul_perm_table()]
        forced = g.identity
    else:
        member_bits = f.member_bits()
        rows_bool = np.zeros((len(member_bits), n), dtype=np.uint8)
        for j, bits in enumerate(member_bits):
            while bits:
                low = bits & -bits
                rows_bool[j, low.bit_length() - 1] = 1
                bits ^= low
        forced = -1
    rows = _pack_rows(rows_bool)
    sig = np.ascontiguousarray(rows_bool.T)
    sigw = _pack_rows(sig)
    ground_mask = _pack_rows(np.ones((1, n), dtype=np.uint8))[0]
    # gt_masks[j] holds {x : x >= j}, so gt_masks[m + 1] is "strictly past m".
    lt_bool = np.tri(n + 1, n, k=-1, dtype=bool)
    gt_masks = _pack_rows((~lt_bool[:, :n]).astype(np.uint8))
    return _Problem(rows, sig, sigw, ground_mask, gt_masks, n, rows_bool.shape[0], forced)


def _labels_for(p: _Problem, elems: np.ndarray) -> np.ndarray:
    """Cell label of every witness under each node's probe set: (n, M) uint32."""
    n_nodes, k = elems.shape
    labels = np.zeros((n_nodes, p.n_members), dtype=np.uint32)
    for i in range(k):
        labels |= p.sig[elems[:, i]].astype(np.uint32) << np.uint32(i)
    return labels


def _extension_masks(
    p: _Problem, elems: np.ndarray, labels: np.ndarray, ascending: bool
) -> np.ndarray:
    """Word mask of valid extension elements for each node: (n, W) uint64.

    Bit x is set iff x splits every witness cell of the node, i.e. the node's
    set extended by x is again shattered.
    """
    n_nodes, k = elems.shape
    n_cells = 1 << k
    w = p.rows.shape[1]
    perm = np.argsort(labels, axis=1, kind="stable")
    sorted_labels = np.take_along_axis(labels, perm, axis=1)
    starts = np.ones_like(sorted_labels, dtype=bool)
    starts[:, 1:] = sorted_labels[:, 1:] != sorted_labels[:, :-1]
    segs = starts.sum(axis=1)
    assert (segs == n_cells).all(), "frontier node is not shattered"
    flat_starts = np.flatnonzero(starts.ravel())
    rows = p.rows[perm.ravel()]
    pos = np.bitwise_or.reduceat(rows, flat_starts, axis=0)
    # union of complements = complement of the intersection
    neg = ~np.bitwise_and.reduceat(rows, flat_starts, axis=0) & p.ground_mask
    both = np.concatenate(
        [pos.reshape(n_nodes, n_cells, w), neg.reshape(n_nodes, n_cells, w)], axis=1
    ).reshape(n_nodes * 2 * n_cells, w)
    ext = np.bitwise_and.reduceat(both, np.arange(n_nodes) * 2 * n_cells, axis=0)
    if n_nodes == 1:
        ext = ext.reshape(1, w)
    if ascending:
        ext &= p.gt_masks[_chain_max(elems, p.forced) + 1]
    else:
        for i in range(k):
            cols = elems[:, i] >> 6
            ext[np.arange(n_nodes), cols] &= ~(np.uint64(1) << (elems[:, i] & 63).astype(np.uint64))
    if p.forced >= 0:
        ext[:, p.forced >> 6] &= ~(np.uint64(1) << np.uint64(p.forced & 63))
    return ext


def _chain_max(elems: np.ndarray, forced: int) -> np.ndarray:
    """Largest chain element per node, ignoring the forced seed element."""
    if forced < 0:
        return elems.max(axis=1)
    masked = np.where(elems == forced, -1, elems)
    return masked.max(axis=1)


def _children_of(p: _Problem, ext: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Decode extension masks into (node_index, element) pairs."""
    n_nodes = ext.shape[0]
    bits = np.unpackbits(ext.view(np.uint8), axis=1, bitorder="little")
    node_idx, xs = np.nonzero(bits[:, : p.n_ground])
    return node_idx, xs.astype(np.int64)


def _pack_cells(p: _Problem, labels: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-node witness-cell bit masks (n, 2^k, Wm) and cell sizes (n, 2^k)."""
    n_nodes = labels.shape[0]
    n_cells = 1 << k
    wm = p.sigw.shape[1]
    cells = np.empty((n_nodes, n_cells, wm), dtype=np.uint64)
    for c in range(n_cells):
        cells[:, c, :] = _pack_rows((labels == c).view(np.uint8))
    sizes = np.bitwise_count(cells).sum(axis=2, dtype=np.int32)
    return cells, sizes


def _child_min_cells(
    p: _Problem,
    cells: np.ndarray,
    sizes: np.ndarray,
    node_idx: np.ndarray,
    xs: np.ndarray,
) -> np.ndarray:
    """Smallest witness-cell size of each child set, batched.

    A child's cells are its parent's cells split by the new element's
    signature, so the minimum is min(cnt, size - cnt) over parent cells.
    """
    n_pairs = node_idx.shape[0]
    out = np.empty(n_pairs, dtype=np.int32)
    n_cells, wm = cells.shape[1], cells.shape[2]
    chunk = max(256, (32 << 20) // (n_cells * wm * 8))
    for lo in range(0, n_pairs, chunk):
        hi = min(lo + chunk, n_pairs)
        pc = cells[node_idx[lo:hi]]
        sw = p.sigw[xs[lo:hi]][:, None, :]
        cnt = np.bitwise_count(pc & sw).sum(axis=2, dtype=np.int32)
        sz = sizes[node_idx[lo:hi]]
        out[lo:hi] = np.minimum(cnt, sz - cnt).min(axis=1)
    return out


def _seed_frontier(p: _Problem) -> tuple[np.ndarray, np.ndarray]:
    """Viable level-1 sets with their smallest cell size."""
    col_pop = p.sig.sum(axis=1, dtype=np.int64)
    if p.forced >= 0:
        cand = np.array([p.forced], dtype=np.int64)
    else:
        cand = np.arange(p.n_ground, dtype=np.int64)
    mins = np.minimum(col_pop[cand], p.n_members - col_pop[cand])
    keep = mins > 0
    return cand[keep][:, None], mins[keep]


def _beam_probe(p: _Problem, width: int) -> int:
    """Greedy beam over shattered sets; returns a certified lower bound."""
    elems, mins = _seed_frontier(p)
    if elems.shape[0] == 0:
        return 0
    order = np.lexsort((elems[:, 0], -mins))
    elems = elems[order[:width]]
    best = 1
    while (2 << elems.shape[1]) <= p.n_members:
        labels = _labels_for(p, elems)
        ext = _extension_masks(p, elems, labels, ascending=False)
        node_idx, xs = _children_of(p, ext)
        if node_idx.size == 0:
            break
        if node_idx.size > _BEAM_PAIR_CAP:
            stride = node_idx.size // _BEAM_PAIR_CAP + 1
            node_idx, xs = node_idx[::stride], xs[::stride]
        k = elems.shape[1]
        cells, sizes = _pack_cells(p, labels, k)
        mins = _child_min_cells(p, cells, sizes, node_idx, xs)
        children = np.sort(
            np.concatenate([elems[node_idx], xs[:, None]], axis=1), axis=1
        )
        children, uniq_idx = np.unique(children, axis=0, return_index=True)
        mins = mins[uniq_idx]
        order = np.lexsort(tuple(children.T[::-1]) + (-mins,))
        elems = children[order[:width]]
        best = k + 1
    return best


def _expand_exact(
    p: _Problem,
    elems: np.ndarray,
    best: int,
    frontier_cap: int,
) -> tuple[np.ndarray, int]:
    """One exact level: returns the filtered next frontier and updated best."""
    k = elems.shape[1]
    n_nodes = elems.shape[0]
    row_bytes = p.n_members * p.rows.shape[1] * 8
    chunk = max(64, _CHUNK_BYTES // max(row_bytes, 1))
    kept_elems = []
    found_any = False
    kept_total = 0
    for lo in range(0, n_nodes, chunk):
        hi = min(lo + chunk, n_nodes)
        batch = elems[lo:hi]
        labels = _labels_for(p, batch)
        ext = _extension_masks(p, batch, labels, ascending=True)
        node_idx, xs = _children_of(p, ext)
        if node_idx.size == 0:
            continue
        found_any = True
        # Any child proves vc >= k + 1, so the storage threshold may assume it.
        tau = 1 << (max(best, k + 1) - k)
        cells, sizes = _pack_cells(p, labels, k)
        # Filter in sub-batches so a doomed level aborts after ~cap pairs.
        sub = max(4096, (4 << 20) // (2 << k))
        for plo in range(0, node_idx.size, sub):
            phi = min(plo + sub, node_idx.size)
            mins = _child_min_cells(p, cells, sizes, node_idx[plo:phi], xs[plo:phi])
            keep = mins >= tau
            if keep.any():
                kept = np.concatenate(
                    [batch[node_idx[plo:phi][keep]], xs[plo:phi][keep][:, None]],
                    axis=1,
                )
                kept_total += kept.shape[0]
                if kept_total > frontier_cap:
                    raise FrontierCapError(k + 1, frontier_cap)
                kept_elems.append(kept)
    if found_any:
        best = max(best, k + 1)
    if kept_elems:
        nxt = np.concatenate(kept_elems, axis=0)
    else:
        nxt = np.empty((0, k + 1), dtype=elems.dtype)
    return nxt, best


def exact_vc_dim(f: TranslateFamily, frontier_cap: int = 1_000_000) -> int:
    """Exact VC-dimension; raises FrontierCapError instead of approximating."""
    if f.ground_size == 0:
        return 0
    p = _build_problem(f)
    seeds, seed_mins = _seed_frontier(p)
    if seeds.shape[0] == 0:
        return 0
    best = _beam_probe(p, _BEAM_WIDTH)
    # Level 1 storage threshold: a set of size best+1 forces every seed cell
    # to hold at least 2^best witnesses.
    keep = seed_mins >= (1 << best)
    frontier = seeds[keep]
    if frontier.shape[0] > frontier_cap:
        raise FrontierCapError(1, frontier_cap)
    while frontier.shape[0] and (2 << frontier.shape[1]) <= p.n_members:
        frontier, best = _expand_exact(p, frontier, best, frontier_cap)
    return best
