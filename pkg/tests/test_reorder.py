import random

import numpy as np
import pytest

from oracles import (brute_bandwidth, brute_profile, coord_entries,
                     matrix_from_edges, random_connected_edges)
from rcmkit.finders import StartPolicy
from rcmkit.graph import build_graph, connected_components
from rcmkit.matrix_io import from_coordinates
from rcmkit.metrics import bandwidth, bandwidth_under, profile, profile_under
from rcmkit.reorder import (Permutation, apply_permutation, cuthill_mckee,
                            rcm_pipeline, reverse)


def path_matrix(n):
    return matrix_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_matrix(n):
    return matrix_from_edges(n, [(0, j) for j in range(1, n)])


class TestCuthillMcKee:
    def test_path_from_first_endpoint_is_identity(self):
        g = build_graph(path_matrix(5))
        p = cuthill_mckee(g, [0])
        assert list(p.new_of_old) == [0, 1, 2, 3, 4]

    def test_path_from_last_endpoint_is_reversal(self):
        g = build_graph(path_matrix(5))
        p = cuthill_mckee(g, [4])
        assert list(p.new_of_old) == [4, 3, 2, 1, 0]

    def test_star_from_leaf(self):
        g = build_graph(star_matrix(5))
        p = cuthill_mckee(g, [1])
        order = list(np.argsort(p.new_of_old))
        assert order == [1, 0, 2, 3, 4]

    def test_start_count_mismatch(self):
        g = build_graph(path_matrix(4))
        with pytest.raises(ValueError, match="start nodes"):
            cuthill_mckee(g, [0, 1])

    def test_misplaced_start(self):
        m = matrix_from_edges(4, [(0, 1), (2, 3)])
        g = build_graph(m)
        with pytest.raises(ValueError, match="not in its component"):
            cuthill_mckee(g, [0, 1])

    def test_neighbor_order_degree_then_id(self):
        # node 0 adjacent to 1 (deg 3), 2 (deg 1), 3 (deg 3): CM must
        # visit 2 before 1 and 3; ids break the 1-vs-3 tie
        edges = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (3, 6), (3, 7)]
        g = build_graph(matrix_from_edges(8, edges))
        p = cuthill_mckee(g, [0])
        order = list(np.argsort(p.new_of_old))
        assert order[:4] == [0, 2, 1, 3]


class TestReverse:
    def test_identity_n3(self):
        assert list(reverse(Permutation.identity(3)).new_of_old) == [2, 1, 0]

    def test_involution(self):
        rng = random.Random(8)
        for _ in range(20):
            n = rng.randint(1, 40)
            arr = np.array(rng.sample(range(n), n), dtype=np.int64)
            p = Permutation(new_of_old=arr)
            assert np.array_equal(reverse(reverse(p)).new_of_old, arr)

    def test_formula(self):
        p = Permutation(new_of_old=np.array([1, 0, 2, 3, 4]))
        assert list(reverse(p).new_of_old) == [3, 4, 2, 1, 0]


class TestApplyPermutation:
    def test_identity_permutation(self):
        m = path_matrix(4)
        pm = apply_permutation(m, Permutation.identity(4))
        assert np.array_equal(pm.row_start, m.row_start)
        assert np.array_equal(pm.col_index, m.col_index)
        assert np.array_equal(pm.values, m.values)

    def test_tridiagonal_reversal_stays_tridiagonal(self):
        m = path_matrix(4)
        p = reverse(Permutation.identity(4))
        pm = apply_permutation(m, p)
        pm.validate()
        assert bandwidth(pm) == 1
        assert brute_bandwidth(pm.n, coord_entries(pm)) == 1

    def test_arrow_center_moved_last(self):
        m = star_matrix(5)
        p = Permutation(new_of_old=np.array([4, 0, 1, 2, 3]))
        pm = apply_permutation(m, p)
        pm.validate()
        assert bandwidth(pm) == 4
        assert profile(pm) == brute_profile(pm.n, coord_entries(pm)) == 4

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="does not match"):
            apply_permutation(path_matrix(4), Permutation.identity(5))

    def test_structure_preserved_random(self):
        rng = random.Random(31)
        for _ in range(25):
            n = rng.randint(2, 50)
            m = matrix_from_edges(n, random_connected_edges(rng, n, rng.randint(0, n)),
                                  values="spd")
            arr = np.array(rng.sample(range(n), n), dtype=np.int64)
            pm = apply_permutation(m, Permutation(new_of_old=arr))
            pm.validate()
            assert pm.nnz == m.nnz
            # entry (i, j) lands at (p[i], p[j]) with its value
            want = {(int(arr[i]), int(arr[j])) for i, j in zip(*m.coordinates())}
            got = set(zip(*(a.tolist() for a in pm.coordinates())))
            assert got == want


class TestPipeline:
    def test_identity_matrix_all_zero_metrics(self):
        m = from_coordinates(5, range(5), range(5), [1.0] * 5)
        for finder in ("BNF", "GL", "MIND", "none"):
            perm, rep = rcm_pipeline(m, finder)
            assert (rep.bandwidth_before, rep.bandwidth_after) == (0, 0)
            assert (rep.profile_before, rep.profile_after) == (0, 0)

    def test_scrambled_path_recovers_bandwidth_one(self):
        rng = random.Random(17)
        relabel = list(range(40))
        rng.shuffle(relabel)
        edges = [(relabel[i], relabel[i + 1]) for i in range(39)]
        m = matrix_from_edges(40, edges)
        assert bandwidth(m) > 1
        perm, rep = rcm_pipeline(m, "BNF")
        assert rep.bandwidth_after == 1

    def test_divergence_instance_rcmpp_beats_gl(self, divergence_matrix):
        _, rep_bnf = rcm_pipeline(divergence_matrix, "BNF")
        _, rep_gl = rcm_pipeline(divergence_matrix, "GL")
        assert rep_bnf.bandwidth_after < rep_gl.bandwidth_after
        assert rep_bnf.profile_after < rep_gl.profile_after

    def test_unknown_finder(self):
        with pytest.raises(ValueError, match="unknown finder"):
            rcm_pipeline(path_matrix(3), "GPS")

    def test_report_cross_checks_on_corpus(self, corpus):
        for name, m in corpus:
            perm, rep = rcm_pipeline(m, "BNF")
            assert sorted(perm.new_of_old.tolist()) == list(range(m.n)), name
            pm = apply_permutation(m, perm)
            assert pm.nnz == m.nnz
            # report values match the permuted matrix and the
            # permutation-only code path
            assert rep.bandwidth_after == bandwidth(pm) == \
                bandwidth_under(m, perm.new_of_old), name
            assert rep.profile_after == profile(pm) == \
                profile_under(m, perm.new_of_old), name
            assert rep.bandwidth_before == bandwidth(m)
            assert rep.profile_before == profile(m)
            comps = connected_components(build_graph(m)).components
            assert len(rep.start_nodes) == len(comps)

    def test_rcm_and_cm_bandwidth_equal_profile_differs(self, corpus):
        saw_profile_difference = False
        for name, m in corpus:
            g = build_graph(m)
            comps = connected_components(g)
            from rcmkit.reorder import find_starts
            starts = find_starts(g, comps, "BNF", StartPolicy())
            cm = cuthill_mckee(g, starts, comps)
            rcm = reverse(cm)
            assert bandwidth_under(m, cm.new_of_old) == \
                bandwidth_under(m, rcm.new_of_old), name
            pf_cm = profile_under(m, cm.new_of_old)
            pf_rcm = profile_under(m, rcm.new_of_old)
            assert pf_rcm <= pf_cm, name
            if pf_rcm != pf_cm:
                saw_profile_difference = True
        assert saw_profile_difference

    def test_component_order_independence(self):
        # path block on 0..3 plus star block on 4..7, then the same two
        # blocks with their id ranges swapped: each block's internal
        # ordering must not change
        edges = [(0, 1), (1, 2), (2, 3), (4, 5), (4, 6), (4, 7)]
        swap = {0: 4, 1: 5, 2: 6, 3: 7, 4: 0, 5: 1, 6: 2, 7: 3}
        p1, _ = rcm_pipeline(matrix_from_edges(8, edges), "BNF")
        p2, _ = rcm_pipeline(matrix_from_edges(
            8, [(swap[u], swap[v]) for u, v in edges]), "BNF")
        order1 = list(np.argsort(p1.new_of_old))
        order2 = [swap[v] for v in np.argsort(p2.new_of_old)]
        # the concatenation order of blocks differs, but each block's
        # internal sequence must match
        block1 = [v for v in order1 if v < 4]
        block2 = [v for v in order2 if v < 4]
        assert block1 == block2
        block1 = [v for v in order1 if v >= 4]
        block2 = [v for v in order2 if v >= 4]
        assert block1 == block2
