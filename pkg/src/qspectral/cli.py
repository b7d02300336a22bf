"""Command-line interface.

Conventions shared by every subcommand:

* ``--format`` picks table (human, includes a wall-time footer), json, or csv.
  json and csv output is deterministic: parameters and rows only, no timing.
* Floats print with 12 significant digits in every format.
* Exit codes: 0 for the expected outcome, 1 for an unexpected or failed
  outcome (bound violated, no counterexample found, unreadable file,
  data-dependent math errors), 2 for usage errors (bad flags, malformed
  graph input, exponents outside a command's contract).
* Graph arguments accept a family spec (``Kn:8``, ``Kbip:3,5``,
  ``Kjoin:11,1,5``), a file path, or ``-`` for stdin; files and stdin may hold
  either graph6 or the edge-list format. Family specs use closed-form spectra
  unless ``--numeric`` asks for the eigensolver route.
"""

from __future__ import annotations

import csv as csv_mod
import io
import json
import sys
import time

import click

from . import __version__, closed_forms, conjectures, graphs, spectra
from .conjectures import CSV_COLUMNS, VERDICT_VIOLATED

FORMATS = ("table", "json", "csv")


def fmt12(x) -> str:
    return format(float(x), ".12g")


def round12(x) -> float:
    return float(format(float(x), ".12g"))


def _jsonable(obj):
    if isinstance(obj, float):
        return round12(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _emit(fmt: str, command: str, params: dict, *, rows=None, result=None,
          table_lines=(), columns=None, started: float = 0.0) -> None:
    if fmt == "table":
        for line in table_lines:
            click.echo(line)
        wall = time.perf_counter() - started
        param_str = " ".join(f"{k}={v}" for k, v in params.items())
        click.echo(f"# qspectral {__version__} | {command} | {param_str} | wall {wall:.3f}s")
        return
    if fmt == "json":
        envelope = {"command": command, "params": _jsonable(params)}
        if result is not None:
            envelope["result"] = _jsonable(result)
        if rows is not None:
            envelope["rows"] = _jsonable(rows)
        click.echo(json.dumps(envelope, sort_keys=True))
        return
    # csv
    if rows is None:
        rows = [result] if result is not None else []
    if columns is None:
        columns = list(rows[0].keys()) if rows else []
    sio = io.StringIO()
    writer = csv_mod.writer(sio, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        cells = [row[c] for c in columns]
        writer.writerow([fmt12(v) if isinstance(v, float) else v for v in cells])
    click.echo(sio.getvalue(), nl=False)


def _format_option(fn):
    return click.option(
        "--format", "-f", "fmt", type=click.Choice(FORMATS), default="table",
        show_default=True, help="output format",
    )(fn)


# ---------------------------------------------------------------------------
# graph argument handling

def _parse_ints(text: str, count: int, what: str) -> list[int]:
    parts = text.split(",")
    if len(parts) != count:
        raise click.UsageError(f"{what} needs {count} comma-separated integers, got {text!r}")
    out = []
    for p in parts:
        try:
            out.append(int(p))
        except ValueError:
            raise click.UsageError(f"bad integer {p!r} in {what} spec {text!r}")
    return out


def _load_graph(arg: str):
    """Returns (graph, closed_form_spectrum_or_None, source_label)."""
    if arg.startswith("Kn:"):
        (n,) = _parse_ints(arg[3:], 1, "Kn")
        try:
            return graphs.complete(n), closed_forms.spectrum_complete(n), arg
        except ValueError as exc:
            raise click.UsageError(str(exc))
    if arg.startswith("Kbip:"):
        r, s = _parse_ints(arg[5:], 2, "Kbip")
        try:
            return graphs.complete_bipartite(r, s), closed_forms.spectrum_complete_bipartite(r, s), arg
        except ValueError as exc:
            raise click.UsageError(str(exc))
    if arg.startswith("Kjoin:"):
        n, k, r = _parse_ints(arg[6:], 3, "Kjoin")
        try:
            return graphs.join_split(n, k, r), closed_forms.spectrum_join_split(n, k, r), arg
        except ValueError as exc:
            raise click.UsageError(str(exc))

    if arg == "-":
        text = sys.stdin.read()
        label = "stdin"
    else:
        try:
            with open(arg, "r", encoding="utf-8") as fh:
                text = fh.read()
        except FileNotFoundError:
            raise click.ClickException(f"file not found: {arg}")
        except OSError as exc:
            raise click.ClickException(f"cannot read {arg}: {exc}")
        label = arg

    stripped = text.strip()
    if not stripped:
        raise click.UsageError(f"empty graph input from {label}")
    first = stripped.splitlines()[0].split()
    try:
        if len(first) == 2 and all(tok.lstrip("-").isdigit() for tok in first):
            return graphs.from_edge_list(stripped), None, label
        return graphs.from_graph6(stripped.split()[0]), None, label
    except graphs.GraphFormatError as exc:
        raise click.UsageError(f"cannot parse graph from {label}: {exc}")


def _spectrum_for(g, closed, numeric: bool):
    """Closed form when available and not overridden; numeric otherwise."""
    if closed is not None and not numeric:
        return closed.to_spectrum(), list(closed.pairs), "closed-form"
    spec = spectra.spectrum_of(g)
    return spec, _compress(spec.values), "numeric"


def _compress(values, tol: float = 1e-8):
    pairs: list[tuple[float, int]] = []
    for v in values:
        if pairs and abs(pairs[-1][0] - v) <= tol:
            pairs[-1] = (pairs[-1][0], pairs[-1][1] + 1)
        else:
            pairs.append((float(v), 1))
    return pairs


def _spectrum_line(pairs, n: int) -> str:
    # small spectra print every value; larger ones compress repeats as vxm
    if n <= 10:
        out = []
        for v, m in pairs:
            out.extend([fmt12(v)] * m)
        return " ".join(out)
    return " ".join(fmt12(v) if m == 1 else f"{fmt12(v)}x{m}" for v, m in pairs)


# ---------------------------------------------------------------------------

@click.group()
@click.version_option(__version__, prog_name="qspectral")
def main():
    """Signless-Laplacian spectra, power sums, and extremal bound checks."""


@main.command()
@click.argument("graph")
@click.option("--kappa", is_flag=True, help="also report vertex connectivity (brute force)")
@click.option("--numeric", is_flag=True, help="force the eigensolver even for family specs")
@_format_option
def spectrum(graph, kappa, numeric, fmt):
    """Eigenvalues of Q(G) = D(G) + A(G), largest first."""
    started = time.perf_counter()
    g, closed, label = _load_graph(graph)
    spec, pairs, source = _spectrum_for(g, closed, numeric)
    result = {
        "n": g.n,
        "edges": g.edge_count,
        "zero_count": spec.zero_count,
        "source": source,
        "values": [float(v) for v in spec.values],
    }
    lines = [
        f"values: {_spectrum_line(pairs, g.n)}",
        f"zero_count: {spec.zero_count}",
        f"edges: {g.edge_count}",
    ]
    if kappa:
        if g.n > 20:
            raise click.UsageError(f"--kappa is brute force and capped at n=20, got n={g.n}")
        kap = graphs.vertex_connectivity(g)
        result["kappa"] = kap
        lines.append(f"kappa: {kap}")
    _emit(fmt, "spectrum", {"graph": label, "numeric": numeric}, result=result,
          table_lines=lines, started=started)


@main.command()
@click.argument("graph")
@click.argument("alpha", type=float)
@click.option("--numeric", is_flag=True, help="force the eigensolver even for family specs")
@_format_option
def salpha(graph, alpha, numeric, fmt):
    """Power sum of the nonzero Q-eigenvalues at exponent ALPHA."""
    started = time.perf_counter()
    g, closed, label = _load_graph(graph)
    spec, _, source = _spectrum_for(g, closed, numeric)
    try:
        value = spec.power_sum(alpha)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    used = list(spec.nonzero_values())
    result = {
        "alpha": float(alpha),
        "s_alpha": value,
        "n": g.n,
        "zero_count": spec.zero_count,
        "source": source,
        "values_used": [float(v) for v in used],
    }
    lines = [
        f"s_alpha: {fmt12(value)}",
        f"values used: {_spectrum_line(_compress(used), g.n)}",
    ]
    _emit(fmt, "salpha", {"graph": label, "alpha": fmt12(alpha), "numeric": numeric},
          result=result, table_lines=lines, started=started)


@main.command(name="conj1-verify")
@click.option("--alpha", type=float, required=True)
@click.option("--nmax", type=int, required=True)
@_format_option
@click.pass_context
def conj1_verify(ctx, alpha, nmax, fmt):
    """Check the balanced bipartite bound across all splits for n up to NMAX.

    ALPHA must lie in [1, 3], the range where the bound is a theorem.
    """
    started = time.perf_counter()
    try:
        reports = conjectures.verify_conjecture1(alpha, nmax)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    rows = [r.to_row() for r in reports]
    bad = [r for r in reports if r.verdict == VERDICT_VIOLATED]
    lines = [
        f"n={r.n}: best split r={r.param2} gives {fmt12(r.lhs)} vs bound {fmt12(r.rhs)} [{r.verdict}]"
        for r in reports
    ]
    lines.append(
        f"all {len(reports)} sizes consistent with the bound"
        if not bad
        else f"BOUND VIOLATED at {len(bad)} sizes"
    )
    _emit(fmt, "conj1-verify", {"alpha": fmt12(alpha), "nmax": nmax},
          rows=rows, columns=list(CSV_COLUMNS), table_lines=lines, started=started)
    ctx.exit(0 if not bad else 1)


@main.command(name="conj1-falsify")
@click.option("--alpha", type=float, required=True)
@click.option("--nmax", type=int, required=True)
@_format_option
@click.pass_context
def conj1_falsify(ctx, alpha, nmax, fmt):
    """Search complete bipartite splits for a violation of the balanced bound.

    Exit 0 when a counterexample is found, 1 when the scan comes up empty.
    """
    started = time.perf_counter()
    try:
        report = conjectures.find_counterexample_conj1(alpha, nmax)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    rows = [report.to_row()] if report else []
    if report:
        lines = [
            f"counterexample: {report.witness} (n={report.n}, r={report.param2})",
            f"lhs {fmt12(report.lhs)} vs bound {fmt12(report.rhs)}, violation {fmt12(report.margin)}",
        ]
    else:
        lines = [f"no counterexample among complete bipartite graphs with n <= {nmax}"]
    _emit(fmt, "conj1-falsify", {"alpha": fmt12(alpha), "nmax": nmax},
          rows=rows, columns=list(CSV_COLUMNS), table_lines=lines, started=started)
    ctx.exit(0 if report else 1)


@main.command(name="conj2-falsify")
@click.option("--alpha", type=float, required=True)
@click.option("-k", "--kappa-max", "k", type=int, required=True,
              help="connectivity parameter of the bound")
@click.option("--nmax", type=int, required=True)
@click.option("--all-r", is_flag=True, help="scan every split r, not just the balanced one")
@_format_option
@click.pass_context
def conj2_falsify(ctx, alpha, k, nmax, all_r, fmt):
    """Search split-clique graphs for a violation of the connectivity bound.

    Meaningful for ALPHA < 0, where the bound was conjectured to be a lower
    bound. Exit 0 when a counterexample is found, 1 otherwise.
    """
    started = time.perf_counter()
    try:
        report = conjectures.find_counterexample_conj2(alpha, k, nmax, scan_all_r=all_r)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    rows = [report.to_row()] if report else []
    if report:
        lines = [
            f"counterexample: {report.witness}",
            f"lhs {fmt12(report.lhs)} < bound {fmt12(report.rhs)}, violation {fmt12(report.margin)}",
        ]
    else:
        lines = [f"no counterexample in the split-clique family with n <= {nmax}"]
    _emit(fmt, "conj2-falsify",
          {"alpha": fmt12(alpha), "k": k, "nmax": nmax, "all_r": all_r},
          rows=rows, columns=list(CSV_COLUMNS), table_lines=lines, started=started)
    ctx.exit(0 if report else 1)


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--alpha", type=float, required=True)
@click.option("--mode", type=click.Choice(["bipartite", "connectivity"]), required=True)
@click.option("-k", "--kappa-max", "k", type=int, default=None,
              help="connectivity parameter (connectivity mode only)")
@click.option("--include-disconnected", is_flag=True,
              help="bipartite mode: widen the class to disconnected graphs")
@click.option("--force", is_flag=True, help="allow n beyond the soft limit of 8")
@click.option("--jobs", type=int, default=1, show_default=True,
              help="worker processes for the scan")
@_format_option
@click.pass_context
def exhaustive(ctx, n, alpha, mode, k, include_disconnected, force, jobs, fmt):
    """Scan every labeled graph in a class and compare the extremum to the bound.

    Exit 0 when the bound holds (tight or slack), 1 when the scan beats it.
    """
    started = time.perf_counter()
    if jobs < 1:
        raise click.UsageError(f"--jobs must be >= 1, got {jobs}")
    try:
        report = conjectures.exhaustive_verify(
            n, alpha, mode, k,
            include_disconnected=include_disconnected, force=force, jobs=jobs,
        )
    except ValueError as exc:
        raise click.UsageError(str(exc))
    lines = [
        f"class: {mode}" + (f" k={k}" if mode == "connectivity" else ""),
        f"extremal value {fmt12(report.lhs)} vs bound {fmt12(report.rhs)} [{report.verdict}]",
        f"witness: {report.witness}",
    ]
    _emit(fmt, "exhaustive",
          {"n": n, "alpha": fmt12(alpha), "mode": mode, "k": k if k is not None else "",
           "include_disconnected": include_disconnected, "jobs": jobs},
          rows=[report.to_row()], columns=list(CSV_COLUMNS),
          table_lines=lines, started=started)
    ctx.exit(0 if report.verdict != VERDICT_VIOLATED else 1)


@main.command()
@click.argument("alpha", type=float)
@_format_option
def palpha(alpha, fmt):
    """Asymptotic coefficient: max of x(1-x)^a + (1-x)x^a over [0, 1]."""
    started = time.perf_counter()
    try:
        value, argmax_x = conjectures.p_coefficient(alpha)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    result = {"alpha": float(alpha), "p": value, "argmax_x": argmax_x}
    lines = [f"p: {fmt12(value)}", f"argmax_x: {fmt12(argmax_x)}"]
    _emit(fmt, "palpha", {"alpha": fmt12(alpha)}, result=result,
          table_lines=lines, started=started)


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--alpha", type=float, required=True)
@_format_option
def zeta(n, alpha, fmt):
    """Extremal power sum over complete bipartite splits of n."""
    started = time.perf_counter()
    try:
        value, argmax_r = conjectures.zeta(n, alpha)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    normalized = value / float(n) ** (float(alpha) + 1.0)
    result = {"n": n, "alpha": float(alpha), "zeta": value,
              "argmax_r": argmax_r, "normalized": normalized}
    lines = [
        f"zeta: {fmt12(value)} at r={argmax_r}",
        f"normalized by n^(alpha+1): {fmt12(normalized)}",
    ]
    _emit(fmt, "zeta", {"n": n, "alpha": fmt12(alpha)}, result=result,
          table_lines=lines, started=started)


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--alpha", type=float, required=True)
@click.option("-k", "--kappa-max", "k", type=int, default=None,
              help="also evaluate the connectivity bound at this k")
@_format_option
def bounds(n, alpha, k, fmt):
    """Evaluate the closed-form bounds at (n, alpha)."""
    started = time.perf_counter()
    rows = []
    try:
        rows.append({"kind": "bipartite", "n": n, "alpha": float(alpha), "k": "",
                     "value": closed_forms.bipartite_bound(n, alpha)})
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if k is not None:
        try:
            rows.append({"kind": "connectivity", "n": n, "alpha": float(alpha), "k": k,
                         "value": closed_forms.connectivity_bound(n, k, alpha)})
        except ValueError as exc:
            raise click.ClickException(str(exc))
    lines = [f"{row['kind']}{' k=' + str(row['k']) if row['k'] != '' else ''}: "
             f"{fmt12(row['value'])}" for row in rows]
    _emit(fmt, "bounds", {"n": n, "alpha": fmt12(alpha), "k": k if k is not None else ""},
          rows=rows, table_lines=lines, started=started)


if __name__ == "__main__":
    main()
