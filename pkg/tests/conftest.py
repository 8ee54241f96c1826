from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from graftnames.namegraph import build_name_graph
from graftnames.strsim import EditDistanceRange


@pytest.fixture(scope="session")
def client():
    from graftnames.service import make_local_client

    return make_local_client()


@pytest.fixture()
def example_graph():
    """The worked example: robert adjacent to rob (ED 3) and reuben (ED 4)."""
    pairs = [("robert", "rob"), ("reuben", "robert")]
    return build_name_graph(
        pairs, EditDistanceRange(1, 4), vocabulary={"robert", "rob", "reuben"}
    )


@pytest.fixture()
def profile_rows() -> str:
    return (
        "id\tforename\tsurname\tfather_id\tmother_id\n"
        "p1\tJohn\tSmith\tp2\tp3\n"
        "p2\tJohan\tSmith\t\t\n"
        "p3\tMary\tJones\t\t\n"
    )


@pytest.fixture()
def profiles_file(tmp_path, profile_rows) -> Path:
    path = tmp_path / "profiles.tsv"
    path.write_text(profile_rows, encoding="utf-8")
    return path
