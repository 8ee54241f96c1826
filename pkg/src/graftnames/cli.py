"""Command-line client for the name-suggestion service.

Every subcommand goes through the HTTP API: against a remote server when
``--server`` is given, otherwise against an in-process instance of the same
app (no socket, zero setup, identical request/response path). Exit codes:
0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import sys
from typing import Any

import click
import httpx

from . import __version__
from .pipeline import load_config_file

_USAGE_EXIT = 1
_DATA_EXIT = 2

_BOOL_CONFIG_KEYS = {"hybrid", "case_fold", "exclude_uncovered"}
_LIST_CONFIG_KEYS = {"prefixes", "honorifics"}
_INT_CONFIG_KEYS = {"k", "depth", "ed_lo", "ed_hi", "min_name_length", "seed", "families", "generations"}
_FLOAT_CONFIG_KEYS = {"variant_rate"}


class CliError(Exception):
    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


class ServiceClient:
    """Thin JSON client; in-process app unless a server URL is configured."""

    def __init__(self, server: str | None):
        if server:
            self._client: httpx.Client = httpx.Client(base_url=server, timeout=None)
        else:
            from .service import make_local_client

            self._client = make_local_client()

    def post(self, path: str, payload: dict[str, Any]) -> dict[str, Any]:
        try:
            response = self._client.post(path, json=payload)
        except httpx.HTTPError as exc:
            raise CliError(f"cannot reach service: {exc}", _DATA_EXIT) from exc
        if response.status_code == 200:
            return response.json()
        raise self._as_error(response)

    @staticmethod
    def _as_error(response: httpx.Response) -> CliError:
        try:
            detail = response.json().get("detail")
        except ValueError:
            detail = None
        if isinstance(detail, dict) and "kind" in detail:
            code = _DATA_EXIT if detail["kind"] == "data_error" else _USAGE_EXIT
            return CliError(f"{detail.get('error', 'error')}: {detail.get('message', '')}", code)
        if isinstance(detail, list):  # request validation
            first = detail[0] if detail else {}
            loc = ".".join(str(p) for p in first.get("loc", []) if p != "body")
            return CliError(f"invalid request field {loc}: {first.get('msg', '')}", _USAGE_EXIT)
        return CliError(f"service error (HTTP {response.status_code})", _DATA_EXIT)


def _coerce_config(values: dict[str, str]) -> dict[str, Any]:
    coerced: dict[str, Any] = {}
    for key, value in values.items():
        if key in _BOOL_CONFIG_KEYS:
            coerced[key] = value.strip().lower() in ("1", "true", "yes", "on")
        elif key in _LIST_CONFIG_KEYS:
            coerced[key] = ",".join(part.strip() for part in value.split(",") if part.strip())
        elif key in _INT_CONFIG_KEYS:
            coerced[key] = int(value)
        elif key in _FLOAT_CONFIG_KEYS:
            coerced[key] = float(value)
        else:
            coerced[key] = value
    return coerced


@click.group(name="graft")
@click.version_option(version=__version__)
@click.option("--server", default=None, metavar="URL", help="Remote service URL; default is in-process.")
@click.option("--config", "config_path", default=None, type=click.Path(), help="key = value defaults file.")
@click.pass_context
def cli(ctx: click.Context, server: str | None, config_path: str | None) -> None:
    """Build name graphs from family-tree dumps and suggest name synonyms."""
    defaults: dict[str, Any] = {}
    if config_path:
        try:
            defaults = _coerce_config(load_config_file(config_path))
        except (OSError, ValueError) as exc:
            raise CliError(f"bad config file: {exc}", _USAGE_EXIT) from exc
    default_map: dict[str, Any] = {name: defaults for name in cli.commands}
    default_map["stats"] = {"tree": defaults, "graph": defaults}
    ctx.default_map = default_map
    ctx.obj = {"server": server}


def _client(ctx: click.Context) -> ServiceClient:
    return ServiceClient(ctx.obj["server"])


def _normalization_payload(
    min_name_length: int, prefixes: str | None, honorifics: str | None, case_fold: bool
) -> dict[str, Any]:
    payload: dict[str, Any] = {"min_name_length": min_name_length, "case_fold": case_fold}
    if prefixes is not None:
        payload["prefixes"] = [p.strip() for p in prefixes.split(",") if p.strip()]
    if honorifics is not None:
        payload["honorifics"] = [h.strip() for h in honorifics.split(",") if h.strip()]
    return payload


_norm_options = [
    click.option("--min-name-length", default=2, show_default=True, help="Shortest token kept."),
    click.option("--prefixes", default=None, metavar="CSV", help="Override prepositional prefix list."),
    click.option("--honorifics", default=None, metavar="CSV", help="Override honorific list."),
    click.option("--case-fold/--no-case-fold", "case_fold", default=True, show_default=True),
]


def _with_norm_options(command):
    for option in reversed(_norm_options):
        command = option(command)
    return command


def _format_score(value: float) -> str:
    return format(value, ".6g")


@cli.command()
@click.argument("profiles", type=click.Path())
@click.option("-o", "--output", "output", required=True, type=click.Path(), help="Graph file to write.")
@click.option("--format", "file_format", type=click.Choice(["tsv", "csv"]), default="tsv", show_default=True)
@click.option("--name-view", type=click.Choice(["forename", "surname"]), default="forename", show_default=True)
@click.option(
    "--relation",
    type=click.Choice(
        ["parent_child", "grandparent_grandchild", "greatgrandparent_greatgrandchild", "all_ancestors"]
    ),
    default="parent_child",
    show_default=True,
)
@click.option("--ed-lo", default=1, show_default=True, help="Smallest edit distance kept as a link.")
@click.option("--ed-hi", default=3, show_default=True, help="Largest edit distance kept as a link.")
@_with_norm_options
@click.pass_context
def build(
    ctx: click.Context,
    profiles: str,
    output: str,
    file_format: str,
    name_view: str,
    relation: str,
    ed_lo: int,
    ed_hi: int,
    min_name_length: int,
    prefixes: str | None,
    honorifics: str | None,
    case_fold: bool,
) -> None:
    """Build a name graph from a profile dump and persist it."""
    data = _client(ctx).post(
        "/build",
        {
            "profiles_path": profiles,
            "output_path": output,
            "format": file_format,
            "name_view": name_view,
            "relation": relation,
            "ed_lo": ed_lo,
            "ed_hi": ed_hi,
            "normalization": _normalization_payload(min_name_length, prefixes, honorifics, case_fold),
        },
    )
    click.echo("stat\tvalue")
    click.echo(f"profiles_read\t{data['profiles_read']}")
    for key in ("vertices", "edges", "components", "dangling_parent_refs", "self_references", "cycle_vertex_count"):
        click.echo(f"tree_{key}\t{data['tree'][key]}")
    for key in ("vertices", "non_isolated", "edges", "components"):
        click.echo(f"graph_{key}\t{data['graph'][key]}")
    for key, value in data["normalization"].items():
        click.echo(f"normalize_{key}\t{value}")
    click.echo(f"output\t{data['output_path']}")


@cli.command()
@click.argument("names", nargs=-1, required=True)
@click.option("--graph", "graph_path", required=True, type=click.Path(), help="Graph file from 'build'.")
@click.option("--k", default=10, show_default=True)
@click.option("--depth", default=2, show_default=True, help="BFS hop limit.")
@click.option(
    "--function",
    type=click.Choice(["neted", "net2ed", "edofdmphone", "netedofdmphoneed"]),
    default="netedofdmphoneed",
    show_default=True,
)
@click.option("--hybrid", is_flag=True, default=False, help="Phonetic fallback for unknown names.")
@click.option(
    "--fallback",
    type=click.Choice(["soundex", "metaphone", "dmetaphone", "nysiis", "mra"]),
    default=None,
    help="Fallback encoder; default dmetaphone (forename graphs) or nysiis (surname graphs).",
)
@click.pass_context
def suggest(
    ctx: click.Context,
    names: tuple[str, ...],
    graph_path: str,
    k: int,
    depth: int,
    function: str,
    hybrid: bool,
    fallback: str | None,
) -> None:
    """Rank synonym candidates for one or more names."""
    payload: dict[str, Any] = {
        "graph_path": graph_path,
        "queries": list(names),
        "k": k,
        "depth": depth,
        "function": function,
        "hybrid": hybrid,
    }
    if fallback is not None:
        payload["fallback"] = fallback
    data = _client(ctx).post("/suggest", payload)
    click.echo("query\trank\tname\tscore\tsp\ted\tsource")
    for block in data["blocks"]:
        for item in block["suggestions"]:
            hop = item["hop"] if item["hop"] is not None else "-"
            click.echo(
                f"{block['query']}\t{item['rank']}\t{item['name']}\t"
                f"{_format_score(item['score'])}\t{hop}\t{item['edit_distance']}\t{item['source']}"
            )


@cli.command()
@click.option("--graph", "graph_path", required=True, type=click.Path())
@click.option("--ground-truth", "ground_truth", required=True, type=click.Path())
@click.option(
    "--method",
    type=click.Choice(
        ["graft", "hgraft", "soundex", "metaphone", "dmetaphone", "nysiis", "mra", "ed", "dld", "jw"]
    ),
    default="graft",
    show_default=True,
)
@click.option("--k", default=10, show_default=True)
@click.option("--depth", default=2, show_default=True)
@click.option(
    "--function",
    type=click.Choice(["neted", "net2ed", "edofdmphone", "netedofdmphoneed"]),
    default="netedofdmphoneed",
    show_default=True,
)
@click.option("--fallback", type=click.Choice(["soundex", "metaphone", "dmetaphone", "nysiis", "mra"]), default=None)
@click.option("--exclude-uncovered", is_flag=True, default=False, help="Average over covered queries only.")
@click.option("-o", "--output", default=None, type=click.Path(), help="Also write the report TSV here.")
@click.pass_context
def evaluate(
    ctx: click.Context,
    graph_path: str,
    ground_truth: str,
    method: str,
    k: int,
    depth: int,
    function: str,
    fallback: str | None,
    exclude_uncovered: bool,
    output: str | None,
) -> None:
    """Score one suggestion method against a ground-truth synonym file."""
    payload: dict[str, Any] = {
        "graph_path": graph_path,
        "ground_truth_path": ground_truth,
        "method": method,
        "k": k,
        "depth": depth,
        "function": function,
        "exclude_uncovered": exclude_uncovered,
    }
    if fallback is not None:
        payload["fallback"] = fallback
    if output is not None:
        payload["output_path"] = output
    data = _client(ctx).post("/evaluate", payload)
    click.echo(data["tsv"], nl=False)


@cli.command(name="grid")
@click.option("--profiles", required=True, type=click.Path())
@click.option("--ground-truth", "ground_truth", required=True, type=click.Path())
@click.option("--format", "file_format", type=click.Choice(["tsv", "csv"]), default="tsv", show_default=True)
@click.option("--name-view", type=click.Choice(["forename", "surname"]), default="forename", show_default=True)
@click.option("--k", default=10, show_default=True)
@click.option("--depth", default=2, show_default=True)
@click.option("-o", "--output", default=None, type=click.Path())
@click.pass_context
def grid(
    ctx: click.Context,
    profiles: str,
    ground_truth: str,
    file_format: str,
    name_view: str,
    k: int,
    depth: int,
    output: str | None,
) -> None:
    """Run the 4 relations x 4 ranges x 4 functions experiment grid (64 rows)."""
    payload: dict[str, Any] = {
        "profiles_path": profiles,
        "ground_truth_path": ground_truth,
        "format": file_format,
        "name_view": name_view,
        "k": k,
        "depth": depth,
    }
    if output is not None:
        payload["output_path"] = output
    data = _client(ctx).post("/grid", payload)
    click.echo(data["tsv"], nl=False)


@cli.group()
def stats() -> None:
    """Size and quality statistics for built artifacts."""


@stats.command(name="tree")
@click.argument("profiles", type=click.Path())
@click.option("--format", "file_format", type=click.Choice(["tsv", "csv"]), default="tsv", show_default=True)
@click.option("--name-view", type=click.Choice(["forename", "surname"]), default="forename", show_default=True)
@_with_norm_options
@click.pass_context
def stats_tree(
    ctx: click.Context,
    profiles: str,
    file_format: str,
    name_view: str,
    min_name_length: int,
    prefixes: str | None,
    honorifics: str | None,
    case_fold: bool,
) -> None:
    """Family-tree graph statistics for a profile dump."""
    data = _client(ctx).post(
        "/stats/tree",
        {
            "profiles_path": profiles,
            "format": file_format,
            "name_view": name_view,
            "normalization": _normalization_payload(min_name_length, prefixes, honorifics, case_fold),
        },
    )
    click.echo("stat\tvalue")
    click.echo(f"profiles_read\t{data['profiles_read']}")
    for key, value in data["tree"].items():
        click.echo(f"{key}\t{value}")


@stats.command(name="graph")
@click.argument("graphs", nargs=-1, required=True, type=click.Path())
@click.pass_context
def stats_graph(ctx: click.Context, graphs: tuple[str, ...]) -> None:
    """Size table for one or more built name-graph files."""
    data = _client(ctx).post("/stats/graph", {"graph_paths": list(graphs)})
    click.echo("graph\trelation\ted_range\tvertices\tnon_isolated\tedges\tcomponents")
    for row in data["rows"]:
        click.echo(
            f"{row['graph_path']}\t{row['relation']}\t{row['ed_range']}\t"
            f"{row['vertices']}\t{row['non_isolated']}\t{row['edges']}\t{row['components']}"
        )


@cli.command()
@click.argument("algorithm", type=click.Choice(["soundex", "metaphone", "dmetaphone", "nysiis", "mra"]))
@click.argument("name")
@click.pass_context
def phonetic(ctx: click.Context, algorithm: str, name: str) -> None:
    """Print the phonetic code(s) of a name."""
    data = _client(ctx).post("/phonetic", {"algorithm": algorithm, "name": name})
    if data["secondary"] is not None and data["secondary"] != data["primary"]:
        click.echo(f"{data['primary']}\t{data['secondary']}")
    else:
        click.echo(data["primary"])


@cli.command()
@click.argument("metric", type=click.Choice(["ed", "dld", "jw"]))
@click.argument("a")
@click.argument("b")
@click.pass_context
def distance(ctx: click.Context, metric: str, a: str, b: str) -> None:
    """Print the string distance/similarity between two names."""
    data = _client(ctx).post("/distance", {"metric": metric, "a": a, "b": b})
    value = data["value"]
    if metric == "jw":
        click.echo(_format_score(value))
    else:
        click.echo(str(int(value)))


@cli.command()
@click.option("--seed", default=42, show_default=True)
@click.option("--families", default=200, show_default=True)
@click.option("--generations", default=4, show_default=True)
@click.option("--variant-rate", default=0.5, show_default=True)
@click.option("--profiles-out", required=True, type=click.Path())
@click.option("--ground-truth-out", required=True, type=click.Path())
@click.pass_context
def synth(
    ctx: click.Context,
    seed: int,
    families: int,
    generations: int,
    variant_rate: float,
    profiles_out: str,
    ground_truth_out: str,
) -> None:
    """Generate a seeded synthetic genealogy with planted ground truth."""
    data = _client(ctx).post(
        "/synth",
        {
            "seed": seed,
            "families": families,
            "generations": generations,
            "variant_rate": variant_rate,
            "profiles_path": profiles_out,
            "ground_truth_path": ground_truth_out,
        },
    )
    click.echo("stat\tvalue")
    click.echo(f"profiles_written\t{data['profiles_written']}")
    click.echo(f"ground_truth_pairs\t{data['ground_truth_pairs']}")
    click.echo(f"queries\t{data['queries']}")
    click.echo(f"profiles_path\t{data['profiles_path']}")
    click.echo(f"ground_truth_path\t{data['ground_truth_path']}")


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8787, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=host, port=port)


cli.add_command(grid, name="experiment-grid")


def main(argv: list[str] | None = None) -> None:
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Abort:
        sys.exit(_USAGE_EXIT)
    except click.UsageError as exc:
        exc.show()
        sys.exit(_USAGE_EXIT)
    except click.ClickException as exc:
        exc.show()
        sys.exit(_USAGE_EXIT)
    except CliError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(exc.exit_code)
    sys.exit(0)


if __name__ == "__main__":
    main()
