"""Starting-node heuristics for RCM over a single connected component.

Three finders are provided:

* ``mind_find`` — the minimum-degree node (MIND).
* ``gl_find``   — the George-Liu iteration: rebuild the level structure
  from the minimum-degree node of the deepest level until the
  eccentricity stops increasing, then return the last node visited.
* ``bnf_find``  — the bi-criteria finder: the identical traversal, but
  the width of every visited node is recorded and the minimum-width
  node wins (later trace nodes win width ties, so when all widths tie
  the result degenerates to the GL answer).

All ties inside the traversal break toward the smallest node id, so a
given policy always reproduces the same trace.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .graph import AdjacencyGraph, bfs_level_structure

MIN_DEGREE_DETERMINISTIC = "min_degree_deterministic"
EXPLICIT_NODE = "explicit_node"
SEEDED_RANDOM = "seeded_random"


@dataclass(frozen=True)
class StartPolicy:
    """How the traversal picks its first BFS root.

    node must be present iff mode is explicit_node; seed must be present
    iff mode is seeded_random.
    """

    mode: str = MIN_DEGREE_DETERMINISTIC
    node: int | None = None
    seed: int | None = None

    def __post_init__(self):
        if self.mode not in (MIN_DEGREE_DETERMINISTIC, EXPLICIT_NODE, SEEDED_RANDOM):
            raise ValueError(f"unknown start policy mode {self.mode!r}")
        if (self.node is not None) != (self.mode == EXPLICIT_NODE):
            raise ValueError("node must be given exactly when mode is explicit_node")
        if (self.seed is not None) != (self.mode == SEEDED_RANDOM):
            raise ValueError("seed must be given exactly when mode is seeded_random")

    @classmethod
    def min_degree(cls) -> "StartPolicy":
        return cls()

    @classmethod
    def explicit(cls, node: int) -> "StartPolicy":
        return cls(mode=EXPLICIT_NODE, node=node)

    @classmethod
    def seeded(cls, seed: int) -> "StartPolicy":
        return cls(mode=SEEDED_RANDOM, seed=seed)


@dataclass
class FinderTrace:
    """Ordered record of the traversal: one (node, eccentricity, width)
    triple per level structure built, plus the chosen result."""

    visited: list[tuple[int, int, int]]
    result: int
    bfs_count: int


def resolve_start(g: AdjacencyGraph, component: Sequence[int],
                  policy: StartPolicy) -> int:
    """First BFS root of a traversal over the given component."""
    if not component:
        raise ValueError("empty component")
    if policy.mode == EXPLICIT_NODE:
        if policy.node not in set(component):
            raise ValueError(f"node {policy.node} is not in the component")
        return policy.node
    if policy.mode == SEEDED_RANDOM:
        return component[random.Random(policy.seed).randrange(len(component))]
    return min(component, key=lambda v: (g.degree[v], v))


def mind_find(g: AdjacencyGraph, component: Sequence[int]) -> int:
    """Smallest-id node among those of minimum degree in the component."""
    if not component:
        raise ValueError("empty component")
    return min(component, key=lambda v: (g.degree[v], v))


def _min_degree_node(g: AdjacencyGraph, nodes: Sequence[int]) -> int:
    best = nodes[0]
    best_deg = g.degree[best]
    for v in nodes[1:]:
        d = g.degree[v]
        if d < best_deg or (d == best_deg and v < best):
            best, best_deg = v, d
    return best


def _traverse(g: AdjacencyGraph, component: Sequence[int],
              policy: StartPolicy) -> list[tuple[int, int, int]]:
    """Run the George-Liu iteration, recording every node whose level
    structure is built.

    The candidate drawn from the deepest level always has eccentricity
    >= the current root's (it lies at distance depth from the root), so
    the stop case is exactly an eccentricity tie: the final two trace
    entries share their eccentricity whenever the trace has length >= 2.
    """
    start = resolve_start(g, component, policy)
    ls = bfs_level_structure(g, start)
    visited = [(start, ls.depth, ls.width)]
    while ls.depth > 0:
        u = _min_degree_node(g, ls.levels[-1])
        ls_u = bfs_level_structure(g, u)
        visited.append((u, ls_u.depth, ls_u.width))
        if ls_u.depth > ls.depth:
            ls = ls_u
        else:
            break
    return visited


def gl_find(g: AdjacencyGraph, component: Sequence[int],
            policy: StartPolicy = StartPolicy()) -> FinderTrace:
    """George-Liu finder: result is the last node traversed."""
    visited = _traverse(g, component, policy)
    return FinderTrace(visited=visited, result=visited[-1][0],
                       bfs_count=len(visited))


def bnf_find(g: AdjacencyGraph, component: Sequence[int],
             policy: StartPolicy = StartPolicy()) -> FinderTrace:
    """Bi-criteria finder: the GL traversal with width recording.

    The recorded node is updated whenever a new width is <= the current
    record (so later nodes win ties, preserving the eccentricity
    preference), starting with the initial level structure.
    """
    visited = _traverse(g, component, policy)
    record_node = visited[0][0]
    record_width = visited[0][2]
    for node, _, width in visited[1:]:
        if width <= record_width:
            record_node, record_width = node, width
    return FinderTrace(visited=visited, result=record_node,
                       bfs_count=len(visited))
