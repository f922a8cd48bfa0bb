import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from rcmkit.matrix_io import read_matrix_market_file

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
CORPUS_DIR = DATA_DIR / "corpus"
FIXTURES_DIR = DATA_DIR / "fixtures"


def suitesparse_dir() -> Path:
    return Path(os.environ.get("RCMKIT_SUITESPARSE_DIR", DATA_DIR / "suitesparse"))


@pytest.fixture(scope="session")
def corpus():
    """All corpus matrices as (name, matrix), sorted by (n, nnz, name)."""
    entries = [(p.stem, read_matrix_market_file(p))
               for p in sorted(CORPUS_DIR.glob("*.mtx"))]
    entries.sort(key=lambda e: (e[1].n, e[1].nnz, e[0]))
    assert entries, "corpus is missing; run tools/gen_corpus.py"
    return entries


@pytest.fixture(scope="session")
def divergence_matrix():
    return read_matrix_market_file(FIXTURES_DIR / "divergence.mtx")
