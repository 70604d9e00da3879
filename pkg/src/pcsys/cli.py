"""Command-line front end, a thin client over the HTTP service.

By default requests run against an in-process application instance; with
--server they go to a remote deployment instead.  Inputs are JSON files
(system, monoid, Petri net, valuation documents) or bundled fixture names.

Exit codes: 0 ok, 2 schema error, 3 validation error, 4 non-probabilistic
valuation, 5 unsafe Petri net.
"""

from __future__ import annotations

import json
import sys

import click

EXIT_BY_KIND = {
    "SchemaError": 2,
    "ValidationError": 3,
    "CoherenceError": 3,
    "NonProbabilisticError": 4,
    "UnsafeNetError": 5,
}


class Client:
    def __init__(self, server: str | None):
        if server:
            import httpx

            self._client = httpx.Client(base_url=server, timeout=120)
        else:
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import app

            self._client = TestClient(app)

    def post(self, path: str, payload: dict) -> dict:
        resp = self._client.post(path, json=payload)
        body = resp.json()
        if resp.status_code == 422:
            code = body.get("exit_code") or EXIT_BY_KIND.get(body.get("kind"), 2)
            # pydantic request-validation errors arrive as {"detail": [...]}
            if "detail" in body and "error" not in body:
                body = {"error": str(body["detail"]), "kind": "SchemaError"}
                code = 2
            click.echo(json.dumps(body, indent=2, sort_keys=True), err=True)
            sys.exit(code)
        resp.raise_for_status()
        return body


def _load_doc(path: str) -> dict:
    try:
        with open(path) as handle:
            return json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        click.echo(json.dumps({"error": str(exc), "kind": "SchemaError"}), err=True)
        sys.exit(2)


def _source(path: str | None, fixture: str | None) -> dict:
    if (path is None) == (fixture is None):
        click.echo("provide exactly one of INPUT path or --fixture", err=True)
        sys.exit(2)
    if fixture is not None:
        return {"fixture": fixture}
    return {"system": _load_doc(path)}


def _emit(doc: dict) -> None:
    click.echo(json.dumps(doc, indent=2, sort_keys=True))


@click.group()
@click.option("--server", default=None, help="Base URL of a remote service; default runs in-process.")
@click.option("--tol", type=float, default=None, help="Numeric tolerance override.")
@click.option("--format", "fmt", type=click.Choice(["json"]), default="json", show_default=True)
@click.pass_context
def main(ctx, server, tol, fmt):
    """Analysis toolkit for probabilistic concurrent systems."""
    ctx.obj = {"client": Client(server), "tol": tol}


@main.command()
@click.argument("input", required=False)
@click.option("--fixture", default=None, help="Bundled fixture name (M1-M3, S1-S4).")
@click.option("--uniform", is_flag=True, help="Include the uniform-measure block.")
@click.option("--dcs", is_flag=True, help="Include the deterministic-system report.")
@click.option("--spectral", is_flag=True, help="Include the spectral table.")
@click.option("--order", type=int, default=0, help="Growth matrices up to this length.")
@click.pass_context
def analyze(ctx, input, fixture, uniform, dcs, spectral, order):
    """Analyze a system (or monoid) JSON document."""
    payload = {
        **_source(input, fixture),
        "uniform": uniform,
        "dcs": dcs,
        "spectral": spectral,
        "order": order,
    }
    if ctx.obj["tol"] is not None:
        payload["tol"] = ctx.obj["tol"]
    _emit(ctx.obj["client"].post("/analyze", payload))


@main.command()
@click.argument("input", required=False)
@click.option("--fixture", default=None)
@click.option("--state", required=True, help="Start state.")
@click.option("--steps", type=int, default=10, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option(
    "--valuation",
    default="uniform",
    show_default=True,
    help="'uniform', 'dominant', or a valuation JSON file path.",
)
@click.pass_context
def simulate(ctx, input, fixture, state, steps, seed, valuation):
    """Sample the Markov chain of states-and-cliques."""
    spec = valuation
    if valuation not in ("uniform", "dominant"):
        spec = _load_doc(valuation)
    payload = {
        **_source(input, fixture),
        "state": state,
        "steps": steps,
        "seed": seed,
        "valuation": spec,
    }
    _emit(ctx.obj["client"].post("/simulate", payload))


@main.command("export-dot")
@click.argument("input", required=False)
@click.option("--fixture", default=None)
@click.option(
    "--graph",
    type=click.Choice(["coxeter", "states", "cliques", "sc"]),
    required=True,
)
@click.option(
    "--mark-null",
    default=None,
    help="Style null nodes dashed: 'uniform', 'dominant', or a valuation file.",
)
@click.pass_context
def export_dot(ctx, input, fixture, graph, mark_null):
    """Emit a Graphviz DOT rendering of a structural graph."""
    spec = mark_null
    if mark_null is not None and mark_null not in ("uniform", "dominant"):
        spec = _load_doc(mark_null)
    payload = {**_source(input, fixture), "graph": graph, "mark_null": spec}
    body = ctx.obj["client"].post("/export-dot", payload)
    click.echo(body["dot"], nl=False)


@main.command()
@click.argument("input", required=True)
@click.option("--to-system", default=None, help="Write the induced system JSON here.")
@click.pass_context
def petri(ctx, input, to_system):
    """Explore a 1-safe Petri net and emit the induced system."""
    body = ctx.obj["client"].post("/petri", {"net": _load_doc(input)})
    if to_system:
        with open(to_system, "w") as handle:
            json.dump(body["system"], handle, indent=2, sort_keys=True)
            handle.write("\n")
    _emit({k: v for k, v in body.items() if k != "system"} if to_system else body)


if __name__ == "__main__":
    main()
