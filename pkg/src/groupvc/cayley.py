"""Cayley digraphs, neighborhood families, and Cayley sum graphs.

The open-neighborhood family of Cay(G, A) equals the translate family
{tA : t in G} as a set of member sets, which is what ties the graph view to
the set-system view.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import FiniteGroup
from .setsystem import (
    KIND_NEIGHBORHOODS,
    Subset,
    TranslateFamily,
)


@dataclass
class Digraph:
    """Directed graph on vertices 0..N-1; loops allowed, no multi-edges."""

    vertex_count: int
    adjacency: list[Subset]

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.vertex_count:
            raise ValueError("adjacency list length must equal vertex count")
        for nb in self.adjacency:
            if nb.size != self.vertex_count:
                raise ValueError("neighborhood ground size must equal vertex count")

    def out_neighborhood(self, v: int) -> Subset:
        return self.adjacency[v]

    def to_adjacency_text(self) -> str:
        """One line per vertex: 'v: w1 w2 ...'."""
        lines = []
        for v in range(self.vertex_count):
            nbrs = " ".join(str(w) for w in self.adjacency[v])
            lines.append(f"{v}: {nbrs}".rstrip())
        return "\n".join(lines) + "\n"


def cayley_digraph(g: FiniteGroup, a: Subset) -> Digraph:
    """Cay(G, A): edge u -> v iff v = u*x for some x in A."""
    if a.size != g.order:
        raise ValueError(f"generating set sized {a.size}, group order {g.order}")
    adjacency = []
    for u in g.elements():
        bits = 0
        for x in a:
            bits |= 1 << g.mul(u, x)
        adjacency.append(Subset(bits, g.order))
    return Digraph(g.order, adjacency)


def neighborhood_family(d: Digraph) -> TranslateFamily:
    """The family of open out-neighborhoods {N(v) : v}."""
    return TranslateFamily(
        d.vertex_count, KIND_NEIGHBORHOODS, members=list(d.adjacency)
    )


def closed_neighborhood_family(d: Digraph) -> TranslateFamily:
    """The family {N(v) union {v} : v}; no theorem-level claim is attached."""
    members = [
        Subset(nb.bits | (1 << v), d.vertex_count)
        for v, nb in enumerate(d.adjacency)
    ]
    return TranslateFamily(d.vertex_count, KIND_NEIGHBORHOODS, members=members)


def cayley_sum_graph(g: FiniteGroup, a: Subset) -> Digraph:
    """Sum graph on an abelian group: x ~ y iff x + y in A, stored symmetric."""
    if a.size != g.order:
        raise ValueError(f"generating set sized {a.size}, group order {g.order}")
    if not g.is_abelian():
        raise ValueError(f"Cayley sum graph needs an abelian group, got {g.descriptor}")
    n = g.order
    rows = [0] * n
    for x in range(n):
        for y in range(x, n):
            if g.mul(x, y) in a:
                rows[x] |= 1 << y
                rows[y] |= 1 << x
    return Digraph(n, [Subset(bits, n) for bits in rows])
