"""Acceptance suite: one test per release criterion, each printing a
PASS line with its measured runtime (visible under pytest -s / in the
captured-output section)."""

from __future__ import annotations

import random
import time
from fractions import Fraction

import pytest

from graftnames.evaluate import evaluate_method, make_suggester, run_experiment_grid
from graftnames.ingest import write_profiles
from graftnames.namegraph import build_name_graph, save_graph
from graftnames.normalize import normalize_profiles
from graftnames.phonetic import build_code_index, encode
from graftnames.pipeline import PipelineConfig, build_from_file
from graftnames.strsim import (
    EditDistanceRange,
    damerau_levenshtein,
    edit_distance,
    jaro_winkler,
)
from graftnames.suggest import (
    OrderingFunction,
    _dm_codes,
    graft_suggest,
    hgraft_suggest,
    score,
)
from graftnames.synth import generate_synthetic_genealogy

import refimpl
from test_evaluate import FIXTURE_EXPECTED, _fixture_ground_truth, _fixture_suggester
from test_phonetic import (
    DOUBLE_METAPHONE_GOLDEN,
    METAPHONE_GOLDEN,
    MRA_GOLDEN,
    NYSIIS_GOLDEN,
    SOUNDEX_GOLDEN,
)


def _report(criterion: str, started: float, detail: str) -> None:
    print(f"ACCEPTANCE {criterion}: PASS ({time.perf_counter() - started:.2f}s) {detail}")


def _build_graph(records):
    from graftnames.pipeline import build_graph_from_records

    _, graph = build_graph_from_records(records, PipelineConfig())
    return graph


@pytest.fixture(scope="module")
def seed42_dataset():
    profiles, ground_truth = generate_synthetic_genealogy(
        seed=42, families=200, generations=4, variant_rate=0.5
    )
    records, _ = normalize_profiles(profiles)
    return records, ground_truth


def test_c01_worked_example_exactness():
    started = time.perf_counter()
    graph = build_name_graph(
        [("robert", "rob"), ("reuben", "robert")],
        EditDistanceRange(1, 4),
        vocabulary={"robert", "rob", "reuben"},
    )
    assert score("robert", "rob", 1, "neted") == Fraction(1, 3)
    assert score("robert", "reuben", 1, "neted") == Fraction(1, 4)
    ranking = graft_suggest(graph, "robert", k=10, depth=2, function="neted")
    assert [s.name for s in ranking] == ["rob", "reuben"]
    assert ranking[0].score == Fraction(1, 3) and ranking[1].score == Fraction(1, 4)
    _report("C1", started, "NetED worked examples exact, ranking [rob, reuben]")


def test_c02_phonetic_golden_vectors():
    started = time.perf_counter()
    assert encode("robert", "soundex").primary == "R163"
    assert encode("robert", "metaphone").primary == "RBRT"
    jean = encode("jean", "double_metaphone")
    assert (jean.primary, jean.secondary) == ("JN", "AN")
    assert encode("robert", "nysiis").primary == "RABAD"
    assert encode("robert", "mra").primary == "RBRT"
    tables = {
        "soundex": SOUNDEX_GOLDEN,
        "metaphone": METAPHONE_GOLDEN,
        "nysiis": NYSIIS_GOLDEN,
        "mra": MRA_GOLDEN,
    }
    for algorithm, table in tables.items():
        assert len(table) >= 25, algorithm
        for name, expected in table.items():
            assert encode(name, algorithm).primary == expected, (algorithm, name)
    assert len(DOUBLE_METAPHONE_GOLDEN) >= 25
    for name, expected in DOUBLE_METAPHONE_GOLDEN.items():
        code = encode(name, "double_metaphone")
        assert (code.primary, code.secondary) == expected, name
    total = sum(len(t) for t in tables.values()) + len(DOUBLE_METAPHONE_GOLDEN)
    _report("C2", started, f"{total} golden vectors exact across 5 encoders")


def test_c03_string_metric_oracle_10k():
    started = time.perf_counter()
    rng = random.Random(20240613)
    alphabet = "abcdefghij"
    pairs = [
        (
            "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 10))),
            "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 10))),
        )
        for _ in range(10_000)
    ]
    for a, b in pairs:
        ed = edit_distance(a, b)
        assert ed == refimpl.levenshtein_ref(a, b)
        assert damerau_levenshtein(a, b) == refimpl.osa_ref(a, b)
        assert abs(jaro_winkler(a, b) - refimpl.jaro_winkler_ref(a, b)) < 1e-12
        # metric axioms on the sample
        assert ed == edit_distance(b, a)
        assert (ed == 0) == (a == b)
        assert abs(jaro_winkler(a, b) - jaro_winkler(b, a)) == 0.0
    triples = [pairs[i] + (pairs[i + 1][0],) for i in range(0, 2000, 2)]
    for a, b, c in triples:
        assert edit_distance(a, c) <= edit_distance(a, b) + edit_distance(b, c)
    _report("C3", started, "3 metrics == independent references on 10,000 pairs")


def test_c04_graph_build_invariants():
    started = time.perf_counter()
    rng = random.Random(77)
    names = [
        "".join(rng.choice("abcde") for _ in range(rng.randint(1, 6))) for _ in range(200)
    ]
    pairs = [(rng.choice(names), rng.choice(names)) for _ in range(10_000)]
    vocabulary = set(names)
    previous_edges = -1
    previous_non_isolated = -1
    previous_edge_map: dict = {}
    for hi in (2, 3, 4, 5):
        ed_range = EditDistanceRange(1, hi)
        graph = build_name_graph(pairs, ed_range, vocabulary)
        weight_sum = sum(r.weight for r in graph.edges.values())
        in_range = sum(
            1 for a, b in pairs if a != b and ed_range.contains(edit_distance(a, b))
        )
        assert weight_sum == in_range
        assert graph.edge_count >= previous_edges
        assert graph.non_isolated_count >= previous_non_isolated
        for key, record in previous_edge_map.items():
            assert graph.edges[key].weight == record.weight
            assert graph.edges[key].distance == record.distance
        previous_edges = graph.edge_count
        previous_non_isolated = graph.non_isolated_count
        previous_edge_map = graph.edges
    _report("C4", started, "weight sums exact, range-widening monotone for hi in 2..5")


def test_c05_ranking_oracle_equivalence_100_graphs():
    started = time.perf_counter()
    rng = random.Random(4242)
    functions = [f.value for f in OrderingFunction]
    checked = 0
    for _ in range(100):
        size = rng.randint(2, 50)
        names = list(
            {
                "".join(rng.choice("abcd") for _ in range(rng.randint(1, 5)))
                for _ in range(size)
            }
        )
        pairs = [
            (rng.choice(names), rng.choice(names))
            for _ in range(rng.randint(1, 3 * len(names)))
        ]
        graph = build_name_graph(
            pairs, EditDistanceRange(1, rng.randint(1, 4)), set(names)
        )
        dm = {name: _dm_codes(name) for name in graph.vocabulary}
        for query in names:
            for function in functions:
                for depth in (1, 2, 3):
                    got = graft_suggest(graph, query, k=10, depth=depth, function=function)
                    expected = refimpl.suggestion_oracle(
                        graph.adjacency, dm, query, 10, depth, function
                    )
                    assert [(s.name, s.score) for s in got] == expected
                    checked += 1
    _report("C5", started, f"{checked} (graph, query, function, depth) cells equal oracle")


def test_c06_metric_fixture_and_accuracy_identity():
    started = time.perf_counter()
    row = evaluate_method(_fixture_suggester, _fixture_ground_truth(), k=10, method="fixture")
    got = {
        "accuracy": row.accuracy,
        "f1": row.f1,
        "recall": row.recall,
        **{f"ap@{k}": v for k, v in row.ap_at.items()},
    }
    for column, expected in FIXTURE_EXPECTED.items():
        assert round(got[column], 4) == pytest.approx(expected, abs=5e-5), column
    assert row.covered_count == 4 and row.covered_pct == pytest.approx(0.8)
    # accuracy equals AP@10 for every method on a real pipeline run
    profiles, ground_truth = generate_synthetic_genealogy(
        seed=6, families=25, generations=3, variant_rate=0.6
    )
    records, _ = normalize_profiles(profiles)
    graph = _build_graph(records)
    for method in ("graft", "hgraft", "soundex", "mra", "ed", "jw"):
        method_row = evaluate_method(
            make_suggester(graph, method), ground_truth, k=10, method=method
        )
        assert method_row.accuracy == method_row.ap_at[10], method
    _report("C6", started, "fixture columns exact to 4 decimals; accuracy == AP@10 for 6 methods")


def test_c07_hybrid_dominance_50_configurations():
    started = time.perf_counter()
    rng = random.Random(555)
    for _ in range(50):
        names = list(
            {
                "".join(rng.choice("abcde") for _ in range(rng.randint(2, 6)))
                for _ in range(rng.randint(5, 40))
            }
        )
        pairs = [
            (rng.choice(names), rng.choice(names))
            for _ in range(rng.randint(1, 2 * len(names)))
        ]
        graph = build_name_graph(pairs, EditDistanceRange(1, 3), set(names))
        algorithm = rng.choice(["soundex", "metaphone", "dmetaphone", "nysiis", "mra"])
        index = build_code_index(graph.vocabulary, algorithm)
        queries = [rng.choice(names) for _ in range(10)] + [
            "".join(rng.choice("abcde") for _ in range(rng.randint(2, 6))) for _ in range(5)
        ]
        graft_covered = 0
        hybrid_covered = 0
        for query in queries:
            direct = graft_suggest(graph, query, k=10)
            hybrid = hgraft_suggest(graph, index, query, k=10)
            graft_covered += bool(direct)
            hybrid_covered += bool(hybrid)
            if graph.is_connected(query):
                assert hybrid == direct
        assert hybrid_covered >= graft_covered
    _report("C7", started, "hgraft coverage >= graft and pass-through identical, 50 configs")


def test_c08_synthetic_end_to_end(seed42_dataset, tmp_path):
    started = time.perf_counter()
    records, ground_truth = seed42_dataset
    graph = _build_graph(records)
    graft_row = evaluate_method(
        make_suggester(graph, "graft"), ground_truth, k=10, method="graft"
    )
    soundex_row = evaluate_method(
        make_suggester(graph, "soundex"), ground_truth, k=10, method="soundex"
    )
    assert graft_row.ap_at[1] >= 0.5
    assert graft_row.covered_pct >= 0.8
    assert graft_row.ap_at[1] > soundex_row.ap_at[1]
    _report(
        "C8",
        started,
        f"graft p@1={graft_row.ap_at[1]:.3f} cov={graft_row.covered_pct:.3f} "
        f"beats soundex p@1={soundex_row.ap_at[1]:.3f}",
    )


def test_c09_grid_shape_64_rows(seed42_dataset):
    started = time.perf_counter()
    records, ground_truth = seed42_dataset
    rows = run_experiment_grid(records, ground_truth)
    assert len(rows) == 64
    labels = [tuple(sorted(r.labels.items())) for r in rows]
    assert len(set(labels)) == 64
    rows_again = run_experiment_grid(records, ground_truth)
    assert [tuple(sorted(r.labels.items())) for r in rows_again] == labels
    assert [r.accuracy for r in rows_again] == [r.accuracy for r in rows]
    assert [r.covered_count for r in rows_again] == [r.covered_count for r in rows]
    _report("C9", started, "64 deterministic grid rows")


def test_c10_scale_smoke_1m_profiles(tmp_path):
    started = time.perf_counter()
    profiles, _ = generate_synthetic_genealogy(
        seed=1, families=46_000, generations=4, variant_rate=0.5
    )
    assert len(profiles) >= 1_000_000
    profiles_path = tmp_path / "profiles_1m.tsv"
    write_profiles(profiles_path, profiles)
    del profiles
    config = PipelineConfig()
    graph_a = tmp_path / "graph_a.txt"
    graph_b = tmp_path / "graph_b.txt"
    result = build_from_file(profiles_path, config)
    save_graph(result.graph, graph_a)
    assert result.graph.edge_count > 0
    del result
    second = build_from_file(profiles_path, config)
    save_graph(second.graph, graph_b)
    assert graph_a.read_bytes() == graph_b.read_bytes()
    _report("C10", started, "1M-profile build completes; repeat build byte-identical")
