"""Undirected graph derived from a matrix pattern, plus rooted BFS
level structures with their depth (eccentricity) and width.

All level-internal orderings are ascending node id so that every
traversal downstream is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrix_io import SparseSymMatrix


@dataclass
class AdjacencyGraph:
    """Adjacency lists of the off-diagonal pattern; no self-loops."""

    n: int
    neighbors: list[list[int]]
    degree: list[int]


@dataclass
class LevelStructure:
    """BFS partition of the root's component into distance classes.

    depth is the index of the last level (the root's eccentricity);
    width is the maximum level size.
    """

    root: int
    levels: list[list[int]]
    depth: int
    width: int


@dataclass
class ComponentSet:
    """Connected components, each sorted ascending, ordered by smallest
    contained id."""

    components: list[list[int]]


def build_graph(m: SparseSymMatrix) -> AdjacencyGraph:
    """One node per row; edge (i, j) iff i != j and entry (i, j) is stored.

    Diagonal entries never create edges.  Neighbor lists come out
    ascending because CSR rows are ascending.
    """
    neighbors = []
    for i in range(m.n):
        neighbors.append([int(j) for j in m.row(i) if j != i])
    degree = [len(nb) for nb in neighbors]
    return AdjacencyGraph(n=m.n, neighbors=neighbors, degree=degree)


def bfs_level_structure(g: AdjacencyGraph, root: int) -> LevelStructure:
    """Rooted level structure: level k holds the nodes at distance k
    from root, ascending ids within each level.
    """
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} out of range for graph with {g.n} nodes")
    seen = bytearray(g.n)
    seen[root] = 1
    levels = [[root]]
    frontier = [root]
    width = 1
    while True:
        nxt = []
        for v in frontier:
            for w in g.neighbors[v]:
                if not seen[w]:
                    seen[w] = 1
                    nxt.append(w)
        if not nxt:
            break
        nxt.sort()
        levels.append(nxt)
        width = max(width, len(nxt))
        frontier = nxt
    return LevelStructure(root=root, levels=levels,
                          depth=len(levels) - 1, width=width)


def connected_components(g: AdjacencyGraph) -> ComponentSet:
    """Partition the nodes into maximal connected components."""
    seen = bytearray(g.n)
    components = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.neighbors[v]:
                if not seen[w]:
                    seen[w] = 1
                    comp.append(w)
                    stack.append(w)
        comp.sort()
        components.append(comp)
    return ComponentSet(components=components)
