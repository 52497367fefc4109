"""Greedy translate packings and coverings with certified bounds.

``greedy_disjoint_translates`` builds a maximal family of pairwise disjoint
left translates s_i U and certifies l >= N/k^2 (via |U U^-1| <= k^2).
``greedy_cover`` covers G by right translates S t_i and certifies
m <= (N/l)(ln l + 1), the Bollobas-Janson-Riordan bound with the natural
logarithm.  Scan order and tie-breaking are fixed (ascending index, smallest
index wins) so outputs are reproducible test vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .groups import FiniteGroup
from .setsystem import Subset


@dataclass(frozen=True)
class Packing:
    """Representatives s_1..s_l with pairwise disjoint translates s_i U."""

    reps: tuple[int, ...]
    probe: Subset


@dataclass(frozen=True)
class Cover:
    """Representatives t_1..t_m with union of S t_i covering the group."""

    reps: tuple[int, ...]
    base: Subset


def _bool_vec(a: Subset) -> np.ndarray:
    out = np.zeros(a.size, dtype=np.uint8)
    for x in a:
        out[x] = 1
    return out


def _pack(rows_bool: np.ndarray) -> np.ndarray:
    n = rows_bool.shape[-1]
    w = (n + 63) // 64
    packed = np.packbits(rows_bool, axis=-1, bitorder="little")
    pad = 8 * w - packed.shape[-1]
    if pad:
        packed = np.concatenate(
            [packed, np.zeros(packed.shape[:-1] + (pad,), dtype=np.uint8)], axis=-1
        )
    return np.ascontiguousarray(packed).view(np.uint64)


def product_set(g: FiniteGroup, a: Subset, b: Subset) -> Subset:
    """The product set {xy : x in a, y in b}; |ab| <= |a||b| always."""
    bits = 0
    for x in a:
        for y in b:
            bits |= 1 << g.mul(x, y)
    return Subset(bits, g.order)


def inverse_set(g: FiniteGroup, a: Subset) -> Subset:
    """The set {inv(x) : x in a}."""
    bits = 0
    for x in a:
        bits |= 1 << g.inv(x)
    return Subset(bits, g.order)


def greedy_disjoint_translates(g: FiniteGroup, u: Subset) -> Packing:
    """Lemma-style greedy packing: maximal, pairwise disjoint, l >= N/k^2.

    Scans candidates in ascending index order and keeps s whenever sU avoids
    every previously kept translate.
    """
    if not u.bits:
        raise ValueError("cannot pack translates of the empty set")
    n = g.order
    k = len(u)
    rows = _pack(_bool_vec(u)[g.mul_perm_table()])
    reps = []
    union = np.zeros(rows.shape[1], dtype=np.uint64)
    for s in range(n):
        if not (rows[s] & union).any():
            reps.append(s)
            union |= rows[s]
    ell = len(reps)
    assert ell * k * k >= n, f"packing bound failed: {ell} < {n}/{k}^2"
    packing = Packing(tuple(reps), u)
    return packing


def packing_is_valid(g: FiniteGroup, packing: Packing) -> bool:
    """Exact check: pairwise disjoint translates and maximality."""
    rows = _pack(_bool_vec(packing.probe)[g.mul_perm_table()])
    union = np.zeros(rows.shape[1], dtype=np.uint64)
    for s in packing.reps:
        if (rows[s] & union).any():
            return False
        union |= rows[s]
    in_packing = np.zeros(g.order, dtype=bool)
    in_packing[list(packing.reps)] = True
    blocked = (rows & union).any(axis=1)
    return bool((blocked | in_packing).all())


def greedy_cover(g: FiniteGroup, s: Subset) -> Cover:
    """BJR-style greedy cover of G by right translates S t.

    Each round keeps the t covering the most uncovered elements (smallest
    index on ties); asserts full coverage and m <= (N/l)(ln l + 1).
    """
    if not s.bits:
        raise ValueError("cannot cover with the empty set")
    n = g.order
    ell = len(s)
    rows = _pack(_bool_vec(s)[g.right_perm_table()])
    uncovered = _pack(np.ones((1, n), dtype=np.uint8))[0]
    reps = []
    while uncovered.any():
        gains = np.bitwise_count(rows & uncovered).sum(axis=1)
        t = int(np.argmax(gains))
        assert gains[t] > 0, "greedy step covered nothing"
        reps.append(t)
        uncovered &= ~rows[t]
    m = len(reps)
    bound = (n / ell) * (math.log(ell) + 1.0)
    assert m <= bound, f"cover bound failed: {m} > {bound}"
    return Cover(tuple(reps), s)


def cover_is_valid(g: FiniteGroup, cover: Cover) -> bool:
    """Exact check: the translates S t_i cover every group element."""
    rows = _pack(_bool_vec(cover.base)[g.right_perm_table()])
    union = np.zeros(rows.shape[1], dtype=np.uint64)
    for t in cover.reps:
        union |= rows[t]
    full = _pack(np.ones((1, g.order), dtype=np.uint8))[0]
    return bool((union == full).all())


def abelian_cover_shortcut(g: FiniteGroup, u: Subset) -> Cover:
    """On abelian groups, T = (U U^-1)^-1 covers G with the packing reps S.

    Returns the cover of G by right translates S t for t in T, where S comes
    from greedy_disjoint_translates(g, u); asserts S T = G and |T| <= k^2.
    """
    if not g.is_abelian():
        raise ValueError(f"abelian shortcut needs an abelian group, got {g.descriptor}")
    if not u.bits:
        raise ValueError("cannot cover with translates of the empty set")
    packing = greedy_disjoint_translates(g, u)
    s = Subset.from_elements(g.order, packing.reps)
    v = product_set(g, u, inverse_set(g, u))
    t = inverse_set(g, v)
    k = len(u)
    assert len(t) <= k * k, f"|T| = {len(t)} exceeds k^2 = {k * k}"
    covered = product_set(g, s, t)
    assert covered.bits == Subset.full(g.order).bits, "S T did not cover G"
    return Cover(tuple(sorted(t)), s)
