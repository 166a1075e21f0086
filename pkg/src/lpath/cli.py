"""Command-line client for the path service.

Every subcommand is a thin client: it builds one request, sends it to
the service, and prints one JSON document on stdout (`render` prints
the drawing itself and `selftest` a summary table). By default the
requests run against an in-process instance of the service; --server
points them at a remote one instead.

Exit codes: 0 success, 2 usage error, 3 invalid instance, 4 requested
path does not exist, 5 oracle budget exceeded.
"""

from __future__ import annotations

import asyncio
import json
import sys

import click
import httpx

EXIT_CODES = {"usage": 2, "invalid": 3, "no_path": 4, "budget": 5}


def _request(server: str | None, method: str, path: str, payload=None) -> dict:
    async def go():
        if server is None:
            from .service import app
            transport = httpx.ASGITransport(app=app)
            client = httpx.AsyncClient(transport=transport,
                                       base_url="http://lpath.internal")
        else:
            client = httpx.AsyncClient(base_url=server, timeout=600.0)
        async with client:
            resp = await client.request(method, path, json=payload)
            return resp.status_code, resp.json()

    try:
        status, body = asyncio.run(go())
    except httpx.HTTPError as exc:
        raise click.ClickException(f"cannot reach {server}: {exc}")
    if status == 200:
        return body
    error = body.get("error", {})
    click.echo(json.dumps({"error": error}))
    sys.exit(EXIT_CODES.get(error.get("code"), 1))


def _parse_point(value: str, flag: str) -> list[int]:
    try:
        x, y = value.split(",")
        return [int(x), int(y)]
    except ValueError:
        raise click.UsageError(f"{flag} expects 'x,y', got {value!r}")


def _parse_json(text: str, what: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise click.UsageError(f"malformed JSON in {what}: {exc}")


def _read_input(path: str, what: str) -> dict:
    if path == "-":
        return _parse_json(sys.stdin.read(), what)
    try:
        with open(path, encoding="utf-8") as fh:
            return _parse_json(fh.read(), what)
    except OSError as exc:
        raise click.UsageError(f"cannot read {what}: {exc}")


def _emit(doc: dict) -> None:
    click.echo(json.dumps(doc))


shape_option = click.option("--shape", "shape_json", required=True,
                            help="shape as JSON, e.g. "
                                 '\'{"type":"lshape","m":3,"n":3,"k":2,"l":1}\'')
s_option = click.option("--s", "s_raw", required=True, help="start vertex x,y")
t_option = click.option("--t", "t_raw", required=True, help="end vertex x,y")


@click.group()
@click.option("--server", envvar="LPATH_SERVER", default=None, metavar="URL",
              help="base URL of a running service (default: in-process)")
@click.version_option(package_name="lpath")
@click.pass_context
def main(ctx, server):
    """Hamiltonian and longest (s,t)-paths in supergrid shapes."""
    ctx.obj = server


def _instance_payload(shape_json: str, s_raw: str, t_raw: str) -> dict:
    return {
        "shape": _parse_json(shape_json, "--shape"),
        "s": _parse_point(s_raw, "--s"),
        "t": _parse_point(t_raw, "--t"),
    }


@main.command()
@shape_option
@s_option
@t_option
@click.pass_obj
def classify(server, shape_json, s_raw, t_raw):
    """Report the forbidden-condition flags, label, and length bound."""
    _emit(_request(server, "POST", "/classify",
                   _instance_payload(shape_json, s_raw, t_raw)))


@main.command()
@shape_option
@click.pass_obj
def hc(server, shape_json):
    """Construct a Hamiltonian cycle."""
    _emit(_request(server, "POST", "/hc",
                   {"shape": _parse_json(shape_json, "--shape")}))


@main.command()
@shape_option
@s_option
@t_option
@click.pass_obj
def hp(server, shape_json, s_raw, t_raw):
    """Construct a Hamiltonian (s,t)-path."""
    _emit(_request(server, "POST", "/hp",
                   _instance_payload(shape_json, s_raw, t_raw)))


@main.command()
@shape_option
@s_option
@t_option
@click.pass_obj
def longest(server, shape_json, s_raw, t_raw):
    """Construct a provably longest (s,t)-path."""
    _emit(_request(server, "POST", "/longest",
                   _instance_payload(shape_json, s_raw, t_raw)))


@main.command()
@click.option("--input", "input_path", required=True,
              help="path/cycle document as JSON file, or - for stdin")
@click.option("--hamiltonian", is_flag=True,
              help="additionally require the sequence to cover every vertex")
@click.pass_obj
def verify(server, input_path, hamiltonian):
    """Validate a path or cycle document; exit 0 iff it is valid."""
    doc = _read_input(input_path, "--input")
    payload = {key: doc[key] for key in
               ("shape", "path", "cycle", "s", "t") if key in doc}
    if hamiltonian or doc.get("hamiltonian"):
        payload["hamiltonian"] = True
    report = _request(server, "POST", "/verify", payload)
    _emit(report)
    if not report["valid"]:
        sys.exit(3)


@main.command()
@click.option("--input", "input_path", required=True,
              help="path/cycle document as JSON file, or - for stdin")
@click.option("--format", "fmt", type=click.Choice(["ascii", "svg"]),
              default="ascii", show_default=True)
@click.pass_obj
def render(server, input_path, fmt):
    """Draw a shape with its path or cycle to stdout."""
    doc = _read_input(input_path, "--input")
    payload = {key: doc[key] for key in ("shape", "path", "cycle")
               if key in doc}
    payload["format"] = fmt
    click.echo(_request(server, "POST", "/render", payload)["content"])


@main.command()
@shape_option
@s_option
@t_option
@click.option("--budget", type=int, default=None,
              help="max vertex count the exhaustive search accepts")
@click.pass_obj
def oracle(server, shape_json, s_raw, t_raw, budget):
    """Exact longest path by brute force (small instances only)."""
    payload = _instance_payload(shape_json, s_raw, t_raw)
    if budget is not None:
        payload["budget"] = budget
    _emit(_request(server, "POST", "/oracle", payload))


@main.command()
@click.option("--max-vertices", type=int, default=12, show_default=True,
              help="vertex budget for the exhaustive sweeps")
@click.pass_obj
def selftest(server, max_vertices):
    """Sweep all small instances against the oracle; exit 0 iff clean."""
    report = _request(server, "POST", "/selftest",
                      {"max_vertices": max_vertices})
    from .selftest import format_table
    click.echo(format_table(report))
    if not report["ok"]:
        sys.exit(1)


@main.command(name="trace-plan")
@click.option("--input", "input_path", required=True,
              help='{"items": [{"shape": ..., "offset": [x, y]}, ...]} '
                   "as JSON file, or - for stdin")
@click.pass_obj
def trace_plan(server, input_path):
    """Pick per-shape endpoints minimizing the total jump length."""
    doc = _read_input(input_path, "--input")
    _emit(_request(server, "POST", "/trace-plan", doc))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("lpath.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
