"""FastAPI application exposing the build/suggest/evaluate pipeline.

Heavy inputs (profile dumps, graph files) are referenced by server-side
paths; responses carry stats and result tables, never bulk data. Loaded
graphs are cached per path until the file changes.
"""

from __future__ import annotations

import os

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..evaluate import (
    ReportRow,
    default_fallback,
    evaluate_method,
    make_suggester,
    report_to_tsv,
    run_experiment_grid,
)
from ..ingest import IngestError, load_ground_truth, load_profiles, write_ground_truth, write_profiles
from ..namegraph import GraphFormatError, NameGraph, graph_size_report, load_graph, save_graph
from ..normalize import NormalizationConfig, config_with_overrides, normalize_profiles
from ..phonetic import Unencodable, build_code_index, encode, parse_algorithm
from ..pipeline import PipelineConfig, build_from_file
from ..strsim import EditDistanceRange, damerau_levenshtein, edit_distance, jaro_winkler
from ..suggest import RankedSuggestion, graft_suggest, hgraft_suggest, parse_function
from ..synth import generate_synthetic_genealogy
from ..treegraph import build_tree, parse_relation
from . import schemas

_GRAPH_CACHE_LIMIT = 8


def _normalization(options: schemas.NormalizationOptions) -> NormalizationConfig:
    return config_with_overrides(
        min_name_length=options.min_name_length,
        prefixes=options.prefixes,
        honorifics=options.honorifics,
        case_fold=options.case_fold,
    )


def _row_model(row: ReportRow) -> schemas.ReportRowModel:
    return schemas.ReportRowModel(
        method=row.method,
        accuracy=row.accuracy,
        f1=row.f1,
        ap_at=row.ap_at,
        recall=row.recall,
        covered_count=row.covered_count,
        covered_pct=row.covered_pct,
        wall_time_seconds=row.wall_time_seconds,
        query_count=row.query_count,
        labels=row.labels,
    )


def _suggestion_items(suggestions: list[RankedSuggestion]) -> list[schemas.SuggestionItem]:
    return [
        schemas.SuggestionItem(
            rank=rank,
            name=s.name,
            score=float(s.score),
            hop=s.hop_distance,
            edit_distance=s.edit_distance,
            source=s.source.value,
        )
        for rank, s in enumerate(suggestions, start=1)
    ]


def create_app() -> FastAPI:
    app = FastAPI(title="graftnames", version=__version__)
    graph_cache: dict[str, tuple[tuple[int, int], NameGraph]] = {}

    def cached_graph(path: str) -> NameGraph:
        resolved = os.path.abspath(path)
        stat = os.stat(resolved)
        signature = (stat.st_mtime_ns, stat.st_size)
        hit = graph_cache.get(resolved)
        if hit is not None and hit[0] == signature:
            return hit[1]
        graph = load_graph(resolved)
        if len(graph_cache) >= _GRAPH_CACHE_LIMIT:
            graph_cache.pop(next(iter(graph_cache)))
        graph_cache[resolved] = (signature, graph)
        return graph

    def error_response(kind: str, exc: Exception, status: int) -> JSONResponse:
        payload = schemas.ErrorPayload(kind=kind, error=type(exc).__name__, message=str(exc))
        return JSONResponse(status_code=status, content={"detail": payload.model_dump()})

    @app.exception_handler(IngestError)
    async def _ingest_error(request: Request, exc: IngestError) -> JSONResponse:
        return error_response("data_error", exc, 422)

    @app.exception_handler(GraphFormatError)
    async def _graph_error(request: Request, exc: GraphFormatError) -> JSONResponse:
        return error_response("data_error", exc, 422)

    @app.exception_handler(Unencodable)
    async def _unencodable(request: Request, exc: Unencodable) -> JSONResponse:
        return error_response("data_error", exc, 422)

    @app.exception_handler(OSError)
    async def _os_error(request: Request, exc: OSError) -> JSONResponse:
        return error_response("data_error", exc, 422)

    @app.exception_handler(ValueError)
    async def _value_error(request: Request, exc: ValueError) -> JSONResponse:
        return error_response("usage_error", exc, 400)

    @app.get("/health", response_model=schemas.HealthResponse)
    def health() -> schemas.HealthResponse:
        return schemas.HealthResponse(status="ok", version=__version__)

    @app.post("/distance", response_model=schemas.DistanceResponse)
    def distance(request: schemas.DistanceRequest) -> schemas.DistanceResponse:
        if request.metric == "ed":
            value: float = edit_distance(request.a, request.b)
        elif request.metric == "dld":
            value = damerau_levenshtein(request.a, request.b)
        else:
            value = jaro_winkler(request.a, request.b)
        return schemas.DistanceResponse(metric=request.metric, a=request.a, b=request.b, value=float(value))

    @app.post("/phonetic", response_model=schemas.PhoneticResponse)
    def phonetic(request: schemas.PhoneticRequest) -> schemas.PhoneticResponse:
        code = encode(request.name, request.algorithm)
        return schemas.PhoneticResponse(
            algorithm=request.algorithm,
            name=request.name,
            primary=code.primary,
            secondary=code.secondary,
        )

    @app.post("/build", response_model=schemas.BuildResponse)
    def build(request: schemas.BuildRequest) -> schemas.BuildResponse:
        config = PipelineConfig(
            name_view=request.name_view,
            relation=parse_relation(request.relation),
            ed_range=EditDistanceRange(request.ed_lo, request.ed_hi),
            normalization=_normalization(request.normalization),
        )
        result = build_from_file(request.profiles_path, config, format=request.format)
        save_graph(result.graph, request.output_path)
        return schemas.BuildResponse(
            output_path=request.output_path,
            profiles_read=len(result.records),
            normalization=schemas.NormalizationCounters(
                honorifics_stripped=result.normalization.honorifics_stripped,
                prefixes_stripped=result.normalization.prefixes_stripped,
                short_tokens_dropped=result.normalization.short_tokens_dropped,
                names_dropped=result.normalization.names_dropped,
            ),
            tree=schemas.TreeStats(
                vertices=result.tree.vertex_count,
                edges=result.tree.edge_count,
                components=result.tree.component_count(),
                dangling_parent_refs=result.tree.dangling_parent_refs,
                self_references=result.tree.self_references,
                duplicate_parent_links=result.tree.duplicate_parent_links,
                cycle_vertex_count=len(result.tree.cycle_members),
            ),
            graph=schemas.GraphStats(
                vertices=result.graph.vertex_count,
                non_isolated=result.graph.non_isolated_count,
                edges=result.graph.edge_count,
                components=result.graph.component_count(),
            ),
        )

    @app.post("/suggest", response_model=schemas.SuggestResponse)
    def suggest(request: schemas.SuggestRequest) -> schemas.SuggestResponse:
        graph = cached_graph(request.graph_path)
        function = parse_function(request.function)
        index = None
        if request.hybrid:
            algorithm = (
                parse_algorithm(request.fallback) if request.fallback else default_fallback(graph)
            )
            index = build_code_index(graph.vocabulary, algorithm)
        blocks = []
        for query in request.queries:
            if index is not None:
                suggestions = hgraft_suggest(
                    graph, index, query, k=request.k, depth=request.depth, function=function
                )
            else:
                suggestions = graft_suggest(
                    graph, query, k=request.k, depth=request.depth, function=function
                )
            blocks.append(
                schemas.SuggestBlock(query=query, suggestions=_suggestion_items(suggestions))
            )
        return schemas.SuggestResponse(blocks=blocks)

    @app.post("/evaluate", response_model=schemas.EvaluateResponse)
    def evaluate(request: schemas.EvaluateRequest) -> schemas.EvaluateResponse:
        graph = cached_graph(request.graph_path)
        ground_truth = load_ground_truth(
            request.ground_truth_path, _normalization(request.normalization)
        ).entries
        suggester = make_suggester(
            graph,
            request.method,
            k=request.k,
            depth=request.depth,
            function=request.function,
            fallback=request.fallback,
        )
        row = evaluate_method(
            suggester,
            ground_truth,
            k=request.k,
            method=request.method,
            exclude_uncovered=request.exclude_uncovered,
        )
        tsv = report_to_tsv([row])
        if request.output_path:
            with open(request.output_path, "w", encoding="utf-8", newline="\n") as handle:
                handle.write(tsv)
        return schemas.EvaluateResponse(row=_row_model(row), tsv=tsv, output_path=request.output_path)

    @app.post("/grid", response_model=schemas.GridResponse)
    def grid(request: schemas.GridRequest) -> schemas.GridResponse:
        profiles = load_profiles(request.profiles_path, format=request.format)
        records, _ = normalize_profiles(profiles, _normalization(request.normalization))
        ground_truth = load_ground_truth(
            request.ground_truth_path, _normalization(request.normalization)
        ).entries
        kwargs: dict = {}
        if request.relations is not None:
            kwargs["relations"] = request.relations
        if request.ed_his is not None:
            kwargs["ed_his"] = request.ed_his
        if request.functions is not None:
            kwargs["functions"] = request.functions
        rows = run_experiment_grid(
            records,
            ground_truth,
            name_view=request.name_view,
            depth=request.depth,
            k=request.k,
            **kwargs,
        )
        tsv = report_to_tsv(rows, label_columns=("relation", "ed_lo", "ed_hi", "function"))
        if request.output_path:
            with open(request.output_path, "w", encoding="utf-8", newline="\n") as handle:
                handle.write(tsv)
        return schemas.GridResponse(
            rows=[_row_model(r) for r in rows], tsv=tsv, output_path=request.output_path
        )

    @app.post("/synth", response_model=schemas.SynthResponse)
    def synth(request: schemas.SynthRequest) -> schemas.SynthResponse:
        profiles, ground_truth = generate_synthetic_genealogy(
            seed=request.seed,
            families=request.families,
            generations=request.generations,
            variant_rate=request.variant_rate,
        )
        written = write_profiles(request.profiles_path, profiles)
        pairs = write_ground_truth(request.ground_truth_path, ground_truth)
        return schemas.SynthResponse(
            profiles_path=request.profiles_path,
            ground_truth_path=request.ground_truth_path,
            profiles_written=written,
            ground_truth_pairs=pairs,
            queries=len(ground_truth),
        )

    @app.post("/stats/tree", response_model=schemas.TreeStatsResponse)
    def stats_tree(request: schemas.TreeStatsRequest) -> schemas.TreeStatsResponse:
        profiles = load_profiles(request.profiles_path, format=request.format)
        records, stats = normalize_profiles(profiles, _normalization(request.normalization))
        tree = build_tree(records, request.name_view)
        return schemas.TreeStatsResponse(
            tree=schemas.TreeStats(
                vertices=tree.vertex_count,
                edges=tree.edge_count,
                components=tree.component_count(),
                dangling_parent_refs=tree.dangling_parent_refs,
                self_references=tree.self_references,
                duplicate_parent_links=tree.duplicate_parent_links,
                cycle_vertex_count=len(tree.cycle_members),
            ),
            normalization=schemas.NormalizationCounters(
                honorifics_stripped=stats.honorifics_stripped,
                prefixes_stripped=stats.prefixes_stripped,
                short_tokens_dropped=stats.short_tokens_dropped,
                names_dropped=stats.names_dropped,
            ),
            profiles_read=len(records),
        )

    @app.post("/stats/graph", response_model=schemas.GraphStatsResponse)
    def stats_graph(request: schemas.GraphStatsRequest) -> schemas.GraphStatsResponse:
        rows = []
        for path in request.graph_paths:
            graph = cached_graph(path)
            report = graph_size_report(
                [(graph.meta.get("relation", "?"), graph.ed_range, graph)]
            )[0]
            rows.append(
                schemas.GraphSizeRowModel(
                    graph_path=path,
                    relation=report.relation,
                    ed_range=report.ed_range,
                    vertices=report.vertex_count,
                    non_isolated=report.non_isolated_count,
                    edges=report.edge_count,
                    components=report.component_count,
                )
            )
        return schemas.GraphStatsResponse(rows=rows)

    return app


app = create_app()
