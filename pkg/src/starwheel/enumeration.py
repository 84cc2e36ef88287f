"""Isomorph-free generation of degree-bounded graphs (orderly algorithm).

Canonical form. A labeling of a graph is scored by the tuple
(w_1, ..., w_{n-1}) where w_j encodes the adjacency of vertex j to
vertices 0..j-1 (bit p set iff j ~ p). The canonical labeling maximizes
this tuple lexicographically. Because all of column j's bits depend only
on the first j+1 vertices, the first k words of a canonical labeling are
canonical for the induced prefix graph; deleting the last vertex of a
canonical graph yields a canonical graph, and generation can proceed by
extending canonical graphs one vertex at a time, keeping exactly the
children that are themselves canonical. Each isomorphism class therefore
appears exactly once, with no cross-level bookkeeping.

The canonicity test is backtracking over orderings that tie the target
word-for-word, aborting as soon as any ordering beats it; interchangeable
vertices (equal rows ignoring their mutual bits, so swapping them is an
automorphism) are pruned to one representative per node.
"""

from __future__ import annotations

from .core import Graph

__all__ = ["is_canonical", "canonical_form", "is_isomorphic", "enumerate_degree_bounded"]


def is_canonical(rows, n: int) -> bool:
    """True iff this labeling lex-maximizes the column-word tuple."""
    if n <= 1:
        return True
    pos = [-1] * n

    def attempt(depth, placed_mask, unplaced):
        # True = no ordering in this subtree beats the target labeling
        target = rows[depth] & ((1 << depth) - 1)
        ties = []
        m = unplaced
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            w = 0
            nb = rows[u] & placed_mask
            while nb:
                nlow = nb & -nb
                w |= 1 << pos[nlow.bit_length() - 1]
                nb ^= nlow
            if w > target:
                return False
            if w == target:
                ties.append(u)
        if depth == n - 1:
            return True
        for i, u in enumerate(ties):
            bu = 1 << u
            skip = False
            for prev in ties[:i]:
                both = bu | (1 << prev)
                if (rows[u] | both) == (rows[prev] | both):
                    skip = True
                    break
            if skip:
                continue
            pos[u] = depth
            ok = attempt(depth + 1, placed_mask | bu, unplaced ^ bu)
            pos[u] = -1
            if not ok:
                return False
        return True

    # position 0 carries no word: every vertex starts a candidate ordering
    full = (1 << n) - 1
    for v in range(n):
        bv = 1 << v
        skip = False
        for prev in range(v):
            both = bv | (1 << prev)
            if (rows[v] | both) == (rows[prev] | both):
                skip = True
                break
        if skip:
            continue
        pos[v] = 0
        ok = attempt(1, bv, full ^ bv)
        pos[v] = -1
        if not ok:
            return False
    return True


def _canonical_order(rows, n: int) -> list:
    """An ordering of the vertices achieving the lex-max word tuple."""
    if n == 0:
        return []
    best_words = None
    best_order = None
    pos = [-1] * n
    placed = []

    def search(depth, placed_mask, unplaced, words, tight):
        nonlocal best_words, best_order
        if depth == n:
            if best_words is None or words > best_words:
                best_words = words[:]
                best_order = placed[:]
            return
        scored = []
        m = unplaced
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            w = 0
            nb = rows[u] & placed_mask
            while nb:
                nlow = nb & -nb
                w |= 1 << pos[nlow.bit_length() - 1]
                nb ^= nlow
            scored.append((w, u))
        wmax = max(w for w, _ in scored)
        if tight and best_words is not None:
            ref = best_words[depth]
            if wmax < ref:
                return
            if wmax > ref:
                tight = False
        ties = [u for w, u in scored if w == wmax]
        words.append(wmax)
        for i, u in enumerate(ties):
            bu = 1 << u
            skip = False
            for prev in ties[:i]:
                both = bu | (1 << prev)
                if (rows[u] | both) == (rows[prev] | both):
                    skip = True
                    break
            if skip:
                continue
            pos[u] = depth
            placed.append(u)
            search(depth + 1, placed_mask | bu, unplaced ^ bu, words, tight)
            placed.pop()
            pos[u] = -1
        words.pop()

    search(0, 0, (1 << n) - 1, [], True)
    return best_order


def canonical_form(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    order = _canonical_order(g.rows, g.n)
    perm = [0] * g.n
    for position, v in enumerate(order):
        perm[v] = position
    return g.relabel(perm)


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    return canonical_form(a) == canonical_form(b)


def _extensions(rows, k: int, order: int, dmax: int, prune):
    """Canonical children of a canonical k-vertex prefix, descending by
    neighborhood bitmask; recurses depth-first up to ``order`` vertices."""
    saturated = 0
    for v in range(k):
        if rows[v].bit_count() >= dmax:
            saturated |= 1 << v
    bit_k = 1 << k
    for subset in range((1 << k) - 1, -1, -1):
        if subset & saturated or subset.bit_count() > dmax:
            continue
        child = list(rows)
        child.append(subset)
        m = subset
        while m:
            low = m & -m
            child[low.bit_length() - 1] |= bit_k
            m ^= low
        child = tuple(child)
        if not is_canonical(child, k + 1):
            continue
        g = Graph(k + 1, child)
        if prune is not None and prune(g):
            continue
        if k + 1 == order:
            yield g
        else:
            yield from _extensions(child, k + 1, order, dmax, prune)


def enumerate_degree_bounded(order: int, dmax: int, prune=None, progress=None, progress_interval=10000):
    """One representative per isomorphism class of graphs with the given
    order and maximum degree <= dmax, in a fixed deterministic order.

    ``prune``, when given, is called with each intermediate (and final)
    canonical graph; returning True discards that graph and its entire
    extension subtree. ``progress`` is called with the running count every
    ``progress_interval`` emitted graphs.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    if dmax < 0:
        raise ValueError(f"degree bound must be >= 0, got {dmax}")
    if order == 0:
        yield Graph(0, ())
        return
    root = Graph(1, (0,))
    if prune is not None and prune(root):
        return
    if order == 1:
        yield root
        return
    count = 0
    for g in _extensions((0,), 1, order, dmax, prune):
        yield g
        count += 1
        if progress is not None and count % progress_interval == 0:
            progress(count)
