import io

import numpy as np
import pytest

from rcmkit.matrix_io import (MatrixFormatError, from_coordinates,
                              parse_matrix_market, write_matrix_market)

TRIDIAG_SYM = """%%MatrixMarket matrix coordinate real symmetric
3 3 5
1 1 2.0
2 1 -1.0
2 2 2.0
3 2 -1.0
3 3 2.0
"""


def test_symmetric_expansion_counts():
    m = parse_matrix_market(TRIDIAG_SYM)
    # 2 off-diagonal file entries expand to 4, plus 3 diagonal
    assert m.nnz == 7
    m.validate()
    assert list(m.row(1)) == [0, 1, 2]


TRIDIAG_PATTERN = """%%MatrixMarket matrix coordinate pattern symmetric
3 3 5
1 1
2 1
2 2
3 2
3 3
"""


def test_pattern_field_matches_real_twin():
    mp = parse_matrix_market(TRIDIAG_PATTERN)
    mr = parse_matrix_market(TRIDIAG_SYM)
    assert mp.values is None
    assert np.array_equal(mp.row_start, mr.row_start)
    assert np.array_equal(mp.col_index, mr.col_index)


def test_non_square_rejected():
    src = "%%MatrixMarket matrix coordinate real general\n3 4 1\n1 1 1.0\n"
    with pytest.raises(MatrixFormatError, match="non-square"):
        parse_matrix_market(src)


def test_complex_field_rejected():
    src = "%%MatrixMarket matrix coordinate complex symmetric\n1 1 1\n1 1 1.0 0.0\n"
    with pytest.raises(MatrixFormatError, match="complex"):
        parse_matrix_market(src)


def test_malformed_header_rejected():
    with pytest.raises(MatrixFormatError, match="header"):
        parse_matrix_market("%%NotMatrixMarket nope\n1 1 0\n")
    with pytest.raises(MatrixFormatError, match="layout"):
        parse_matrix_market("%%MatrixMarket matrix array real general\n1 1\n1.0\n")


def test_out_of_range_index_rejected():
    src = "%%MatrixMarket matrix coordinate real symmetric\n2 2 1\n3 1 1.0\n"
    with pytest.raises(MatrixFormatError, match="out of range"):
        parse_matrix_market(src)


def test_general_requires_structural_symmetry():
    src = ("%%MatrixMarket matrix coordinate real general\n"
           "3 3 3\n1 1 1.0\n1 2 5.0\n3 3 1.0\n")
    with pytest.raises(MatrixFormatError, match="not structurally symmetric"):
        parse_matrix_market(src)
    m = parse_matrix_market(src, symmetrize=True)
    m.validate()
    # mirror fill: the missing (2,1) entry takes the stored (1,2) value
    assert m.nnz == 4
    assert m.values[m.row_start[1]] == 5.0


def test_general_structurally_symmetric_accepted():
    src = ("%%MatrixMarket matrix coordinate integer general\n"
           "2 2 4\n1 1 4\n1 2 2\n2 1 2\n2 2 3\n")
    m = parse_matrix_market(src)
    assert m.nnz == 4
    assert list(m.values) == [4.0, 2.0, 2.0, 3.0]


def test_duplicate_entries_merge_by_summation():
    src = ("%%MatrixMarket matrix coordinate real symmetric\n"
           "2 2 3\n1 1 1.5\n1 1 2.5\n2 1 1.0\n")
    m = parse_matrix_market(src)
    assert m.nnz == 3
    assert m.values[0] == 4.0


def test_comment_and_blank_lines_skipped():
    src = ("%%MatrixMarket matrix coordinate pattern symmetric\n"
           "% a comment\n\n2 2 2\n1 1\n2 1\n")
    m = parse_matrix_market(src)
    assert m.nnz == 3


def test_entry_count_mismatch_rejected():
    src = "%%MatrixMarket matrix coordinate pattern symmetric\n2 2 2\n1 1\n"
    with pytest.raises(MatrixFormatError, match="declared"):
        parse_matrix_market(src)


def _write_to_string(m):
    sink = io.StringIO()
    write_matrix_market(m, sink)
    return sink.getvalue()


def test_round_trip_tridiagonal_exact():
    m = parse_matrix_market(TRIDIAG_SYM)
    m2 = parse_matrix_market(_write_to_string(m))
    assert np.array_equal(m.row_start, m2.row_start)
    assert np.array_equal(m.col_index, m2.col_index)
    assert np.array_equal(m.values, m2.values)


def test_write_identity_two_diagonal_entries():
    m = from_coordinates(2, [0, 1], [0, 1], [1.0, 1.0])
    text = _write_to_string(m)
    lines = text.strip().splitlines()
    assert lines[1] == "2 2 2"
    assert lines[2:] == ["1 1 1.0", "2 2 1.0"]


def test_write_full_precision_byte_compare():
    # 2x2 SPD with values [4, 2, 2, 3]; write -> parse -> write is byte-identical
    m = from_coordinates(2, [0, 0, 1, 1], [0, 1, 0, 1],
                         [4.0, 2.0 + 1e-13, 2.0 + 1e-13, 3.0])
    first = _write_to_string(m)
    again = _write_to_string(parse_matrix_market(first))
    assert first == again
    assert "real" in first.splitlines()[0]


def test_round_trip_corpus(corpus):
    for name, m in corpus:
        m2 = parse_matrix_market(_write_to_string(m))
        assert np.array_equal(m.row_start, m2.row_start), name
        assert np.array_equal(m.col_index, m2.col_index), name
        if m.values is None:
            assert m2.values is None, name
        else:
            assert np.array_equal(m.values, m2.values), name
