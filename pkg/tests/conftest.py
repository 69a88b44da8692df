import json
from pathlib import Path

import pytest

from csg_ldpc.analysis import load_graph_file
from csg_ldpc.codes import build_code
from csg_ldpc.graphs import parse_lcf

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def catalog(data_dir):
    """graph id -> (Graph, manifest entry) for every shipped catalog file."""
    manifest = json.loads((data_dir / "manifest.json").read_text())["graphs"]
    return {
        gid: (load_graph_file(data_dir / entry["file"]), entry)
        for gid, entry in manifest.items()
    }


@pytest.fixture(scope="session")
def heawood_code():
    return build_code(parse_lcf("[5,-5]^7"))
