"""Detectors for the two Ramsey targets and cycle-spectrum queries.

"Contains" always means subgraph containment, not induced: a star K_{1,n}
is present iff some vertex has degree >= n, and a wheel W_m is present iff
some hub vertex has a cycle C_m inside the subgraph induced on its
neighborhood. Witness selection is deterministic (smallest indices first)
so fixtures are stable.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._cycles import Budget, SearchBudgetExceeded, find_cycle_of_length
from .core import Graph, girth

__all__ = [
    "StarWitness",
    "WheelWitness",
    "SearchBudgetExceeded",
    "contains_star",
    "contains_wheel",
    "has_cycle_of_length",
    "cycle_spectrum",
    "is_pancyclic",
    "is_weakly_pancyclic",
]


@dataclass(frozen=True)
class StarWitness:
    """A K_{1,n} subgraph: center joined to n distinct leaves."""

    center: int
    leaves: tuple

    def validate(self, g: Graph, n: int) -> bool:
        leaves = set(self.leaves)
        return (
            len(self.leaves) == n
            and len(leaves) == n
            and self.center not in leaves
            and all(g.has_edge(self.center, v) for v in leaves)
        )

    def __str__(self):
        return f"star center={self.center} leaves={','.join(map(str, self.leaves))}"


@dataclass(frozen=True)
class WheelWitness:
    """A W_m subgraph: hub joined to every vertex of an m-cycle rim."""

    hub: int
    rim: tuple

    def validate(self, g: Graph, m: int) -> bool:
        rim = self.rim
        if len(rim) != m or len(set(rim)) != m or self.hub in rim:
            return False
        if not all(g.has_edge(self.hub, v) for v in rim):
            return False
        return all(g.has_edge(rim[i], rim[(i + 1) % m]) for i in range(m))

    def __str__(self):
        return f"wheel hub={self.hub} rim={','.join(map(str, self.rim))}"


def contains_star(g: Graph, n: int):
    """A StarWitness iff max degree >= n, else None.

    The center is the smallest-index vertex of maximum degree; the leaves
    are its n smallest-index neighbors.
    """
    if n < 1:
        raise ValueError(f"star leaf count must be >= 1, got {n}")
    best = -1
    center = -1
    for v in range(g.n):
        d = g.rows[v].bit_count()
        if d > best:
            best = d
            center = v
    if best < n:
        return None
    return StarWitness(center, g.neighbors(center)[:n])


def has_cycle_of_length(g: Graph, length: int, node_budget=None):
    """A cycle on exactly ``length`` distinct vertices, or None.

    Exhaustive backtracking (see _cycles); raises SearchBudgetExceeded
    rather than ever returning a wrong answer.
    """
    return find_cycle_of_length(g.rows, g.n, length, Budget(node_budget))


def contains_wheel(g: Graph, m: int, node_budget=None):
    """A WheelWitness for W_m, or None.

    Hubs are tried in increasing index (degree >= m is a mandatory
    pre-filter); the rim is the first cycle found by the deterministic
    search on the hub's neighborhood, relabeled back to g's indices.
    """
    if m < 3:
        raise ValueError(f"wheel rim length must be >= 3, got {m}")
    budget = Budget(node_budget)
    for hub in range(g.n):
        if g.rows[hub].bit_count() < m:
            continue
        nbrs = g.neighbors(hub)
        sub = g.induced_subgraph(nbrs)
        found = find_cycle_of_length(sub.rows, sub.n, m, budget)
        if found is not None:
            return WheelWitness(hub, tuple(nbrs[i] for i in found))
    return None


def cycle_spectrum(g: Graph, node_budget=None) -> set:
    """The set of cycle lengths present in g (empty for forests)."""
    budget = Budget(node_budget)
    return {
        length
        for length in range(3, g.n + 1)
        if find_cycle_of_length(g.rows, g.n, length, budget) is not None
    }


def is_pancyclic(g: Graph, node_budget=None) -> bool:
    """Cycles of every length from 3 through the order."""
    return cycle_spectrum(g, node_budget) == set(range(3, g.n + 1))


def is_weakly_pancyclic(g: Graph, node_budget=None) -> bool:
    """Cycles of every length from girth through circumference; forests vacuously."""
    low = girth(g)
    if low is None:
        return True
    spectrum = cycle_spectrum(g, node_budget)
    return spectrum == set(range(low, max(spectrum) + 1))
