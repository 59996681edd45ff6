"""Compiled inner loops for subset enumeration, sampling, and max-cut.

A graph is passed as parallel int64 arrays ``eu``/``ev`` of 0-indexed
endpoints (``eu[i] == ev[i]`` marks a loop), and an edge subset as the
bitmask over array positions. The per-subset decodability test is the
structural criterion, tracked with a parity union-find: a component is
good when it has a loop (even characteristic) or any odd closed walk
(odd characteristic).
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _mask_decodable(eu, ev, n, mask, even, parent, par, has_loop, has_odd):
    for v in range(n):
        parent[v] = v
        par[v] = 0
        has_loop[v] = False
        has_odd[v] = False
    for i in range(eu.shape[0]):
        if not (mask >> i) & 1:
            continue
        a = eu[i]
        b = ev[i]
        ra = a
        pa = 0
        while parent[ra] != ra:
            pa ^= par[ra]
            ra = parent[ra]
        if a == b:
            has_loop[ra] = True
            has_odd[ra] = True
            continue
        rb = b
        pb = 0
        while parent[rb] != rb:
            pb ^= par[rb]
            rb = parent[rb]
        if ra == rb:
            if pa == pb:
                has_odd[ra] = True
        else:
            parent[rb] = ra
            par[rb] = pa ^ pb ^ 1
            if has_loop[rb]:
                has_loop[ra] = True
            if has_odd[rb]:
                has_odd[ra] = True
    for v in range(n):
        if parent[v] == v:
            if even:
                if not has_loop[v]:
                    return False
            else:
                if not has_odd[v]:
                    return False
    return True


@njit(cache=True, nogil=True)
def decodable_mask(eu, ev, n, mask, even):
    """Structural decodability of the surviving-edge bitmask."""
    parent = np.empty(n, dtype=np.int64)
    par = np.empty(n, dtype=np.int64)
    has_loop = np.empty(n, dtype=np.bool_)
    has_odd = np.empty(n, dtype=np.bool_)
    return _mask_decodable(eu, ev, n, mask, even, parent, par, has_loop, has_odd)


@njit(cache=True, nogil=True)
def spectrum_counts(eu, ev, n, even, start, stop):
    """Count decodable subsets by deletion size over masks [start, stop)."""
    m = eu.shape[0]
    counts = np.zeros(m + 1, dtype=np.int64)
    parent = np.empty(n, dtype=np.int64)
    par = np.empty(n, dtype=np.int64)
    has_loop = np.empty(n, dtype=np.bool_)
    has_odd = np.empty(n, dtype=np.bool_)
    for mask in range(start, stop):
        if _mask_decodable(eu, ev, n, mask, even, parent, par, has_loop, has_odd):
            deleted = m
            mm = mask
            while mm:
                mm &= mm - 1
                deleted -= 1
            counts[deleted] += 1
    return counts


@njit(cache=True, nogil=True)
def count_decodable_masks(eu, ev, n, masks, even):
    """Number of decodable masks in a sampled batch."""
    parent = np.empty(n, dtype=np.int64)
    par = np.empty(n, dtype=np.int64)
    has_loop = np.empty(n, dtype=np.bool_)
    has_odd = np.empty(n, dtype=np.bool_)
    hits = 0
    for k in range(masks.shape[0]):
        if _mask_decodable(eu, ev, n, masks[k], even, parent, par, has_loop, has_odd):
            hits += 1
    return hits


@njit(cache=True, nogil=True)
def max_cut_scan(eu, ev, n):
    """Exact max-cut over all bipartitions with vertex 1 fixed on side 0.

    Returns (cut size, side bitmask) where bit v-1 set means vertex v is
    on side 1; the first maximum in ascending mask order wins. Loops never
    cross a cut.
    """
    m = eu.shape[0]
    best = -1
    best_side = 0
    for mask in range(1 << (n - 1) if n > 1 else 1):
        side = mask << 1
        crossing = 0
        for i in range(m):
            if eu[i] != ev[i] and ((side >> eu[i]) ^ (side >> ev[i])) & 1:
                crossing += 1
        if crossing > best:
            best = crossing
            best_side = side
    return best, best_side
