import random

import pytest

from oracles import (adjacency_dict, bfs_distances, coord_entries,
                     matrix_from_edges, random_connected_edges)
from rcmkit.graph import bfs_level_structure, build_graph, connected_components


def path_matrix(n):
    return matrix_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def test_build_graph_tridiagonal_drops_diagonal():
    g = build_graph(path_matrix(3))
    assert g.neighbors == [[1], [0, 2], [1]]
    assert g.degree == [1, 2, 1]


def test_build_graph_identity_isolated():
    g = build_graph(matrix_from_edges(4, []))
    assert g.degree == [0, 0, 0, 0]
    assert all(nb == [] for nb in g.neighbors)


def test_build_graph_arrow_star():
    m = matrix_from_edges(5, [(0, j) for j in range(1, 5)])
    g = build_graph(m)
    assert g.degree == [4, 1, 1, 1, 1]
    assert g.neighbors[0] == [1, 2, 3, 4]


def test_bfs_path_from_end():
    g = build_graph(path_matrix(5))
    ls = bfs_level_structure(g, 0)
    assert ls.levels == [[0], [1], [2], [3], [4]]
    assert (ls.depth, ls.width) == (4, 1)


def test_bfs_path_from_middle():
    g = build_graph(path_matrix(5))
    ls = bfs_level_structure(g, 2)
    assert ls.levels == [[2], [1, 3], [0, 4]]
    assert (ls.depth, ls.width) == (2, 2)


def test_bfs_star_from_leaf():
    g = build_graph(matrix_from_edges(5, [(0, j) for j in range(1, 5)]))
    ls = bfs_level_structure(g, 1)
    assert ls.levels == [[1], [0], [2, 3, 4]]
    assert (ls.depth, ls.width) == (2, 3)


def test_bfs_root_out_of_range():
    g = build_graph(path_matrix(3))
    with pytest.raises(ValueError, match="out of range"):
        bfs_level_structure(g, 3)


def test_components_singletons():
    g = build_graph(matrix_from_edges(3, []))
    assert connected_components(g).components == [[0], [1], [2]]


def test_components_path_single():
    g = build_graph(path_matrix(5))
    assert connected_components(g).components == [[0, 1, 2, 3, 4]]


def test_components_two_triangles():
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    g = build_graph(matrix_from_edges(6, edges))
    assert connected_components(g).components == [[0, 1, 2], [3, 4, 5]]


def _check_levels_against_distances(g, m, root):
    ls = bfs_level_structure(g, root)
    dist = bfs_distances(adjacency_dict(m.n, coord_entries(m)), root)
    for level, nodes in enumerate(ls.levels):
        for v in nodes:
            assert dist[v] == level
    assert set(dist) == {v for level in ls.levels for v in level}
    assert ls.depth == max(dist.values())
    assert ls.width == max(len(level) for level in ls.levels)
    assert ls.levels[0] == [root]


def test_level_index_is_bfs_distance_random_graphs():
    rng = random.Random(4821)
    for _ in range(100):
        n = rng.randint(2, 500)
        m = matrix_from_edges(n, random_connected_edges(rng, n, rng.randint(0, n)))
        g = build_graph(m)
        _check_levels_against_distances(g, m, rng.randrange(n))


def test_level_structures_on_corpus(corpus):
    rng = random.Random(99)
    for name, m in corpus:
        g = build_graph(m)
        for root in rng.sample(range(m.n), min(5, m.n)):
            _check_levels_against_distances(g, m, root)


def test_adjacency_symmetry_on_corpus(corpus):
    for name, m in corpus:
        g = build_graph(m)
        for v in range(g.n):
            assert g.degree[v] == len(g.neighbors[v])
            for w in g.neighbors[v]:
                assert v in g.neighbors[w], (name, v, w)
