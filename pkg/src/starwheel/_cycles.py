"""Exact search for cycles of a prescribed length.

The search walks a twin-compressed quotient of the input graph: vertices
with identical open neighborhoods (necessarily nonadjacent) or identical
closed neighborhoods (necessarily adjacent) are interchangeable on any
cycle, so they collapse into one class carried with a multiplicity budget.
Between two classes adjacency is all-or-nothing, which makes the quotient
walk equivalent to the vertex search while collapsing the huge symmetric
branching that dense join-like graphs otherwise produce.

Within the quotient the search is plain backtracking: anchor at the
smallest usable class, extend by ascending class index, prune on the BFS
distance back to the anchor, on exhausted budgets, and on a static
capacity bound (an independent class can occupy at most floor(L/2)
positions of a cycle of length L).
"""

from __future__ import annotations

DEFAULT_NODE_BUDGET = 10**8

_INF = float("inf")


class SearchBudgetExceeded(RuntimeError):
    """The backtracking node budget ran out; the answer is unknown, not 'absent'."""


class Budget:
    """Mutable node counter shared by all searches of one logical call."""

    __slots__ = ("remaining",)

    def __init__(self, nodes=None):
        self.remaining = DEFAULT_NODE_BUDGET if nodes is None else nodes


def twin_classes(rows, n: int) -> list:
    """Partition vertices into twin classes (each a sorted vertex list).

    Vertices with equal rows are false twins (an independent class);
    remaining vertices with equal closed rows are true twins (a clique
    class). Mixed classes cannot arise. Classes are ordered by smallest
    member.
    """
    by_row = {}
    for v in range(n):
        by_row.setdefault(rows[v], []).append(v)
    classes = []
    leftover = []
    for members in by_row.values():
        if len(members) >= 2:
            classes.append(members)
        else:
            leftover.append(members[0])
    by_closed = {}
    for v in leftover:
        by_closed.setdefault(rows[v] | (1 << v), []).append(v)
    classes.extend(by_closed.values())
    classes.sort(key=lambda ms: ms[0])
    return classes


def _quotient(rows, classes):
    k = len(classes)
    reps = [ms[0] for ms in classes]
    qadj = [0] * k
    selfloop = [False] * k
    for i in range(k):
        members = classes[i]
        if len(members) >= 2 and (rows[members[0]] >> members[1]) & 1:
            selfloop[i] = True
        row = rows[reps[i]]
        for j in range(i + 1, k):
            if (row >> reps[j]) & 1:
                qadj[i] |= 1 << j
                qadj[j] |= 1 << i
    return qadj, selfloop


def find_cycle_of_length(rows, n: int, length: int, budget: Budget | None = None):
    """First cycle on exactly ``length`` distinct vertices, or None.

    Deterministic: anchors ascend, extensions ascend by class index, and
    witnesses assign each class's vertices in increasing order.
    """
    if length < 3:
        raise ValueError(f"cycle length must be >= 3, got {length}")
    if length > n:
        return None
    if budget is None:
        budget = Budget()

    classes = twin_classes(rows, n)
    qadj, selfloop = _quotient(rows, classes)
    k = len(classes)
    sizes = [len(ms) for ms in classes]
    half = length // 2

    for anchor in range(k):
        geq = ~((1 << anchor) - 1)
        # component of the anchor among classes >= anchor, with BFS distances
        dist = [_INF] * k
        dist[anchor] = 0
        frontier = [anchor]
        allowed = 1 << anchor
        d = 0
        while frontier:
            d += 1
            nxt = []
            for c in frontier:
                reach = qadj[c] & geq & ~allowed
                allowed |= reach
                m = reach
                while m:
                    low = m & -m
                    c2 = low.bit_length() - 1
                    dist[c2] = d
                    nxt.append(c2)
                    m ^= low
            frontier = nxt

        capacity = 0
        total = 0
        m = allowed
        while m:
            low = m & -m
            c = low.bit_length() - 1
            m ^= low
            capacity += sizes[c] if selfloop[c] else min(sizes[c], half)
            total += sizes[c]
        if capacity < length:
            continue

        budgets = sizes[:]
        budgets[anchor] -= 1
        path = [anchor]
        total -= 1

        def dfs(c, t, total):
            budget.remaining -= 1
            if budget.remaining < 0:
                raise SearchBudgetExceeded(
                    f"cycle search exceeded its node budget (length {length})"
                )
            if t == length:
                return bool((qadj[c] >> anchor) & 1) or (c == anchor and selfloop[c])
            remaining = length - t
            if total < remaining:
                return False
            cand = qadj[c] & allowed
            if selfloop[c]:
                cand |= 1 << c
            m = cand
            while m:
                low = m & -m
                nxt = low.bit_length() - 1
                m ^= low
                if budgets[nxt] == 0 or dist[nxt] > remaining:
                    continue
                budgets[nxt] -= 1
                path.append(nxt)
                if dfs(nxt, t + 1, total - 1):
                    return True
                path.pop()
                budgets[nxt] += 1
            return False

        if dfs(anchor, 1, total):
            used = {}
            cycle = []
            for c in path:
                i = used.get(c, 0)
                cycle.append(classes[c][i])
                used[c] = i + 1
            return tuple(cycle)
    return None
