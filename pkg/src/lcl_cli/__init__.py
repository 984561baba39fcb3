"""
lcl - limit cones, Schottky certificates and arithmeticity checks

Usage:
    lcl directions --group hecke:5 --max-len 8 --out cloud.csv
    lcl one-point --group psl2z-diag:2
    lcl takeuchi --group hecke:5
    lcl schottky --spec pair.json --power-budget 8

Groups come from the catalog (``--group name:params``) or from a GroupSpec
JSON file (``--spec file.json``).
"""

import json
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Annotated, List, Optional

import typer
try:  # newer typer vendors click and raises its own exception classes
    from typer._click.exceptions import UsageError
except ImportError:
    from click.exceptions import UsageError
from mpmath import mp
from rich.align import Align
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table
from typer.core import TyperGroup

from .analysis.arithtest import (
    factor_reports,
    maclachlan_reid_report,
    takeuchi_report,
    trace_map_report,
)
from .analysis.formatters import JSONFormatter, SVGFormatter, export, save_report
from .analysis.limitset import (
    cone_hull,
    convexity_probe,
    dalbo_deviation,
    furstenberg_samples,
    moebius_fit,
    one_point_test,
    sample_directions,
)
from .catalog import CATALOG, GroupSpec, group_spec
from .config import LclConfig, default_config_path, save_config
from .core import effective_config, setup_logging
from .errors import LclError, NotCertified
from .groups.moebius import schottky_certificate, zariski_span_dim
from .groups.stargroup import gamma_ne, nonelementary_evidence, star_embed
from .groups.words import Word, enumerate_words
from .ui import StepTracker, console, key_value_table, rows_table, show_banner, verdict_panel

WITNESS_EXIT = 2
USAGE_EXIT = 64


class BannerGroup(TyperGroup):
    """Custom group that shows banner before help."""

    def format_help(self, ctx, formatter):
        show_banner()
        super().format_help(ctx, formatter)

    # exit code 2 is reserved for verdicts with a witness
    def make_context(self, info_name, args, parent=None, **extra):
        try:
            return super().make_context(info_name, args, parent, **extra)
        except UsageError as exc:
            exc.exit_code = USAGE_EXIT
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except UsageError as exc:
            exc.exit_code = USAGE_EXIT
            raise


app = typer.Typer(
    name="lcl",
    help="Limit cones and arithmeticity checks for groups in PSL(2,C)^q x PSL(2,R)^r",
    add_completion=False,
    invoke_without_command=True,
    cls=BannerGroup,
)


@app.callback()
def callback(ctx: typer.Context):
    """Show banner when no subcommand is provided."""
    if ctx.invoked_subcommand is None and "--help" not in sys.argv and "-h" not in sys.argv:
        show_banner()
        console.print(Align.center("[dim]Run 'lcl --help' for usage information[/dim]"))
        console.print()


GroupOpt = Annotated[Optional[str], typer.Option("--group", "-g", help="Catalog group, e.g. hecke:5")]
SpecOpt = Annotated[Optional[str], typer.Option("--spec", help="GroupSpec JSON file")]
MaxLenOpt = Annotated[Optional[int], typer.Option("--max-len", help="Longest word to enumerate")]
CapOpt = Annotated[Optional[int], typer.Option("--cap", help="Maximum number of distinct elements")]
PrecisionOpt = Annotated[Optional[int], typer.Option("--precision", help="Working precision in decimal digits")]
TolOpt = Annotated[Optional[float], typer.Option("--tol", help="Tolerance for one-point and fit verdicts")]
OutOpt = Annotated[Optional[Path], typer.Option("--out", "-o", help="Write the report to this path")]
FormatOpt = Annotated[Optional[str], typer.Option("--format", "-f", help="csv, json or svg")]
NoTimestampOpt = Annotated[bool, typer.Option("--no-timestamp", help="Omit the timestamp comment from SVG output")]
VerboseOpt = Annotated[bool, typer.Option("--verbose", "-v", help="Log progress")]
DebugOpt = Annotated[bool, typer.Option("--debug", help="Log everything, with tracebacks")]
ConfigOpt = Annotated[Optional[str], typer.Option("--config", help="Configuration file")]
WordOpt = Annotated[Optional[str], typer.Option(help="Word in the generator labels, e.g. 'T^4 S'")]
PowerBudgetOpt = Annotated[Optional[int], typer.Option("--power-budget", help="Largest power tried for ping-pong")]


@dataclass
class Session:
    config: LclConfig
    spec: GroupSpec
    ring: object
    gens: list
    ctx: object

    @property
    def labels(self) -> List[str]:
        return self.spec.labels

    def element(self, text: Optional[str], fallback: int):
        """Parse a word in the generator labels; default to generator ``fallback``."""
        if text is None:
            if fallback >= len(self.gens):
                raise typer.BadParameter(f"{self.spec.label} has only {len(self.gens)} generators")
            return Word((fallback + 1,)), self.gens[fallback]
        try:
            word = Word.parse(text, self.labels)
        except ValueError as exc:
            raise typer.BadParameter(str(exc)) from exc
        return word, word.evaluate(self.gens)


@contextmanager
def _handled():
    try:
        yield
    except LclError as exc:
        console.print(f"[red]Error:[/red] {type(exc).__name__}: {escape(str(exc))}")
        raise typer.Exit(1)


def _session(
    group: Optional[str],
    spec_file: Optional[str],
    config_file: Optional[str] = None,
    precision: Optional[int] = None,
    max_len: Optional[int] = None,
    cap: Optional[int] = None,
    tol: Optional[float] = None,
    verbose: bool = False,
    debug: bool = False,
) -> Session:
    setup_logging(verbose, debug)
    config = effective_config(config_file, precision, max_len, cap, tol)
    spec = group_spec(group, spec_file, config.numerics.precision)
    ring, gens, ctx = spec.build(config.numerics.precision, config.numerics.max_precision_factor)
    return Session(config, spec, ring, gens, ctx)


def _write(content: str, fmt: str, out: Optional[Path]) -> None:
    path = save_report(content, fmt, out)
    console.print(f"[green]Wrote[/green] {path}")


def _num(x, digits: int = 8) -> str:
    return mp.nstr(x, digits)


def _cloud(s: Session):
    return sample_directions(
        s.gens,
        s.ctx,
        s.config.sampling.max_len,
        s.config.sampling.cap,
        s.labels,
        s.spec.label,
        s.config.numerics.order_bound,
        s.config.numerics.interior_threshold,
    )


@app.command(name="classify")
def classify_words(
    group: GroupOpt = None,
    spec: SpecOpt = None,
    word: WordOpt = None,
    max_len: MaxLenOpt = None,
    cap: CapOpt = None,
    precision: PrecisionOpt = None,
    out: OutOpt = None,
    limit: Annotated[int, typer.Option(help="Rows to print")] = 40,
    verbose: VerboseOpt = False,
    debug: DebugOpt = False,
    config: ConfigOpt = None,
):
    """Classify the star-embedded components of a word, or of every enumerated element."""
    with _handled():
        s = _session(group, spec, config, precision, max_len, cap, verbose=verbose, debug=debug)
        if word is not None:
            items = [s.element(word, 0)]
        else:
            items = list(enumerate_words(s.gens, s.config.sampling.max_len, s.config.sampling.cap))
        rows, records = [], []
        for w, element in items:
            iso = star_embed(element, s.ctx, w, s.config.numerics.order_bound, strict=False)
            labels = [t.label for t in iso.types]
            rows.append([w.format(s.labels), iso.kind, *labels, *(_num(x) for x in iso.lengths)])
            records.append(
                {
                    "word": w.format(s.labels),
                    "kind": iso.kind,
                    "types": labels,
                    "lengths": [_num(x, 15) for x in iso.lengths],
                    "violations": list(iso.violations),
                }
            )
        factor_names = [s.ctx.factor_label(i) for i in range(s.ctx.size)]
        columns = ["word", "kind", *factor_names, *(f"l({f})" for f in factor_names)]
        console.print(rows_table(f"{s.spec.label}: {len(rows)} elements", columns, rows, limit))
        if out is not None:
            _write(json.dumps({"group": s.spec.label, "elements": records}, indent=2), "json", out)


@app.command()
def directions(
    group: GroupOpt = None,
    spec: SpecOpt = None,
    max_len: MaxLenOpt = None,
    cap: CapOpt = None,
    precision: PrecisionOpt = None,
    tol: TolOpt = None,
    out: OutOpt = None,
    format: FormatOpt = None,
    no_timestamp: NoTimestampOpt = False,
    verbose: VerboseOpt = False,
    debug: DebugOpt = False,
    config: ConfigOpt = None,
):
    """Sample translation directions of loxodromic elements."""
    with _handled():
        s = _session(group, spec, config, precision, max_len, cap, tol, verbose, debug)
        cloud = _cloud(s)
        fmt = format or s.config.output.format
        if out is not None:
            export(cloud, fmt, out, timestamp=s.config.output.timestamp and not no_timestamp)
            console.print(f"[green]Wrote[/green] {out}")
        else:
            rows = [
                [d.word.format(s.labels), *(_num(x) for x in d.direction.coords), "yes" if d.interior else "no"]
                for d in cloud.samples
            ]
            columns = ["word", *(f"dir_{i + 1}" for i in range(s.ctx.size)), "interior"]
            console.print(rows_table(f"{s.spec.label}: translation directions", columns, rows, 20))
        distinct = cloud.distinct_interior(s.config.numerics.one_point_tol)
        console.print(f"directions sampled: {cloud.size}")
        console.print(f"distinct interior directions: {len(distinct)}")


@app.command()
def cone(
    group: GroupOpt = None,
    spec: SpecOpt = None,
    max_len: MaxLenOpt = None,
    cap: CapOpt = None,
    precision: PrecisionOpt = None,
    out: OutOpt = None,
    verbose: VerboseOpt = False,
    debug: DebugOpt = False,
    config: ConfigOpt = None,
):
    """Hull of the sampled directions (the sampled projective limit set)."""
    with _handled():
        s = _session(group, spec, config, precision, max_len, cap, verbose=verbose, debug=debug)
        hull = cone_hull(_cloud(s))
        if hull["kind"] == "interval":
            console.print(f"first coordinate in [{hull['min']:.8f}, {hull['max']:.8f}]")
        elif hull["kind"] == "polygon":
            for x, y in hull["vertices"]:
                console.print(f"vertex ({x:.8f}, {y:.8f})")
        elif hull["kind"] == "pairwise":
            for pair, span in hull["intervals"].items():
                console.print(f"factors {pair}: {span}")
        else:
            console.print("single factor: the cone is a ray")
        if out is not None:
            _write(json.dumps({"group": s.spec.label, "hull": hull}, indent=2), "json", out)


@app.command(name="one-point")
def one_point(
    group: GroupOpt = None,
    spec: SpecOpt = None,
    max_len: MaxLenOpt = None,
    cap: CapOpt = None,
    precision: PrecisionOpt = None,
    tol: TolOpt = None,
    include_boundary: Annotated[bool, typer.Option(help="Also test boundary directions")] = False,
    out: OutOpt = None,
    verbose: VerboseOpt = False,
    debug: DebugOpt = False,
    config: ConfigOpt = None,
):
    """Decide whether the sampled projective limit set is a single point."""
    with _handled():
        s = _session(group, spec, config, precision, max_len, cap, tol, verbose, debug)
        verdict = one_point_test(_cloud(s), s.config.numerics.one_point_tol, include_boundary)
        lines = [f"sample size: {verdict.sample_size}", f"diameter: {verdict.diameter:.3e}"]
        if verdict.point is not None:
            lines.append("point: (" + ", ".join(_num(x) for x in verdict.point.coords) + ")")
        if verdict.witnesses:
            lines.append("witnesses: " + ", ".join(w.format(s.labels) for w in verdict.witnesses))
        console.print(verdict_panel("one-point test", verdict.label, lines))
        if out is not None:
            _write(JSONFormatter().format_verdict(verdict, s.labels), "json", out)
    if not verdict.one_point:
        raise typer.Exit(WITNESS_EXIT)


def _trace_command(run, title, group, spec, max_len, cap, precision, out, verbose, debug, config):
    with _handled():
        s = _session(group, spec, config, precision, max_len, cap, verbose=verbose, debug=debug)
        report = run(s.gens, s.ctx, s.config.sampling.max_len, s.config.sampling.gamma2_product_len, s.config.sampling.cap)
        lines = [
            f"sampled Gamma^(2): {report.sample_size} elements (words <= {report.budget})",
            f"trace field degree: {report.trace_field_degree}",
            f"totally real: {report.totally_real}",
            f"tested places: {report.tested_places}",
        ]
        for w in report.non_integral[:3]:
            lines.append(f"non-integral trace: {w.word.format(s.labels)}")
        for w in report.witnesses:
            lines.append(f"witness: {w.word.format(s.labels)} at place {w.place_index}, |trace| = {w.abs_value:.6f}")
        console.print(verdict_panel(title, report.verdict, lines))
        if out is not None:
            _write(JSONFormatter().format_trace_report(report, s.labels), "json", out)
    if report.has_witness:
        raise typer.Exit(WITNESS_EXIT)


@app.command()
def takeuchi(
    group: GroupOpt = None,
    spec: SpecOpt = None,
    max_len: MaxLenOpt = None,
    cap: CapOpt = None,
    precision: PrecisionOpt = None,
    out: OutOpt = None,
    verbose: VerboseOpt = False,
    debug: DebugOpt = False,
    config: ConfigOpt = None,
):
    """Trace test for Fuchsian groups: integrality and boundedness at the other real places."""
    _trace_command(takeuchi_report, "takeuchi", group, spec, max_len, cap, precision, out, verbose, debug, config)


@app.command(name="maclachlan-reid")
def maclachlan_reid(
    group: GroupOpt = None,
    spec: SpecOpt = None,
    max_len: MaxLenOpt = None,
    cap: CapOpt = None,
    precision: PrecisionOpt = None,
    out: OutOpt = None,
    verbose: VerboseOpt = False,
    debug: DebugOpt = False,
    config: ConfigOpt = None,
):
    """Trace test for Kleinian groups: places other than the identity and its conjugate must bound traces."""
    _trace_command(
        maclachlan_reid_report, "maclachlan-reid", group, spec, max_len, cap, precision, out, verbose, debug, config
    )


@app.command()
def schottky(
    group: GroupOpt = None,
    spec: SpecOpt = None,
    g: WordOpt = None,
    h: WordOpt = None,
    power_budget: PowerBudgetOpt = None,
    precision: PrecisionOpt = None,
    out: OutOpt = None,
    verbose: VerboseOpt = False,
    debug: DebugOpt = False,
    config: ConfigOpt = None,
):
    """Search a ping-pong certificate for two elements (default: the first two generators) at every factor."""
    with _handled():
        s = _session(group, spec, config, precision, verbose=verbose, debug=debug)
        wg, eg = s.element(g, 0)
        wh, eh = s.element(h, 1)
        budget = power_budget or s.config.sampling.power_budget
        found = {}
        for i, place in enumerate(s.ctx.places):
            certificate = schottky_certificate(eg, eh, place, budget)
            label = s.ctx.factor_label(i)
            if certificate is None:
                console.print(f"[yellow]{label}:[/yellow] no certificate with powers <= {budget}")
                continue
            found[label] = certificate.to_dict()
            console.print(f"[green]{label}:[/green] certified at power {certificate.power}, disk scale {certificate.scale}")
        if out is not None:
            body = {"g": wg.format(s.labels), "h": wh.format(s.labels), "certificates": found}
            _write(json.dumps(body, indent=2, default=str), "json", out)
        if len(found) < s.ctx.size:
            raise NotCertified(f"{s.ctx.size - len(found)} factor(s) without a certificate")


@app.command()
def zariski(
    group: GroupOpt = None,
    spec: SpecOpt = None,
    g: WordOpt = None,
    h: WordOpt = None,
    power_budget: PowerBudgetOpt = None,
    precision: PrecisionOpt = None,
    verbose: VerboseOpt = False,
    debug: DebugOpt = False,
    config: ConfigOpt = None,
):
    """Real dimension of the Lie algebra spanned by a certified Schottky pair at each factor."""
    with _handled():
        s = _session(group, spec, config, precision, verbose=verbose, debug=debug)
        _, eg = s.element(g, 0)
        _, eh = s.element(h, 1)
        budget = power_budget or s.config.sampling.power_budget
        for i, place in enumerate(s.ctx.places):
            dim = zariski_span_dim(eg, eh, place, budget)
            full = 3 if place.is_real else 6
            status = "[green]Zariski dense[/green]" if dim == full else "[yellow]not dense[/yellow]"
            console.print(f"{s.ctx.factor_label(i)}: span dimension {dim} of {full} {status}")


@app.command(name="fit-circle")
def fit_circle(
    group: GroupOpt = None,
    spec: SpecOpt = None,
    max_len: MaxLenOpt = None,
    cap: CapOpt = None,
    precision: PrecisionOpt = None,
    tol: TolOpt = None,
    out: OutOpt = None,
    verbose: VerboseOpt = False,
    debug: DebugOpt = False,
    config: ConfigOpt = None,
):
    """Fit fractional-linear boundary maps between factors through sampled attracting fixed points."""
    with _handled():
        s = _session(group, spec, config, precision, max_len, cap, tol, verbose, debug)
        samples = furstenberg_samples(s.gens, s.ctx, s.config.sampling.max_len, s.config.sampling.cap)
        fit = moebius_fit(samples, s.config.numerics.precision)
        tol_value = s.config.numerics.one_point_tol
        for m in fit.maps:
            console.print(
                f"factor {m.factor + 1}: residual {m.residual:.3e}"
                + (" (orientation reversing)" if m.conjugated else "")
            )
        embedded = fit.max_residual <= tol_value
        console.print(
            f"{fit.sample_size} samples, anchors {', '.join(w.format(s.labels) for w in fit.anchors)}: "
            + ("[green]fits a circle[/green]" if embedded else "[yellow]no Moebius fit[/yellow]")
        )
        if out is not None:
            _write(JSONFormatter().format_fit(fit, s.labels), "json", out)


@app.command()
def furstenberg(
    group: GroupOpt = None,
    spec: SpecOpt = None,
    max_len: MaxLenOpt = None,
    cap: CapOpt = None,
    precision: PrecisionOpt = None,
    out: OutOpt = None,
    verbose: VerboseOpt = False,
    debug: DebugOpt = False,
    config: ConfigOpt = None,
):
    """Attracting fixed points of totally loxodromic elements, one per factor."""
    with _handled():
        s = _session(group, spec, config, precision, max_len, cap, verbose=verbose, debug=debug)
        samples = furstenberg_samples(s.gens, s.ctx, s.config.sampling.max_len, s.config.sampling.cap)
        rows = [[x.word.format(s.labels), *(_num(z) for z in x.points)] for x in samples]
        columns = ["word", *(s.ctx.factor_label(i) for i in range(s.ctx.size))]
        console.print(rows_table(f"{s.spec.label}: boundary samples", columns, rows, 20))
        if out is not None:
            _write(JSONFormatter().format_samples(samples, s.labels), "json", out)


@app.command()
def dalbo(
    group: GroupOpt = None,
    spec: SpecOpt = None,
    g: WordOpt = None,
    h: WordOpt = None,
    grid: Annotated[Optional[int], typer.Option(help="Grid size for m, n")] = None,
    ratio: Annotated[str, typer.Option(help="Mixture ratio n/m for the convexity probe")] = "1",
    k_max: Annotated[Optional[int], typer.Option("--k-max", help="Steps of the convexity probe")] = None,
    power_budget: PowerBudgetOpt = None,
    no_certificate: Annotated[bool, typer.Option("--no-certificate", help="Use g, h without a ping-pong power")] = False,
    precision: PrecisionOpt = None,
    out: OutOpt = None,
    verbose: VerboseOpt = False,
    debug: DebugOpt = False,
    config: ConfigOpt = None,
):
    """Additivity defect of translation lengths on g^m h^n and the convexity probe."""
    with _handled():
        s = _session(group, spec, config, precision, verbose=verbose, debug=debug)
        _, eg = s.element(g, 0)
        _, eh = s.element(h, 1)
        try:
            mix = Fraction(ratio)
        except (ValueError, ZeroDivisionError) as exc:
            raise typer.BadParameter(f"ratio {ratio!r}: {exc}") from exc
        budget = power_budget or s.config.sampling.power_budget
        report = dalbo_deviation(eg, eh, s.ctx, grid or s.config.sampling.dalbo_grid, budget, not no_certificate)
        probe = convexity_probe(eg, eh, s.ctx, mix, k_max or s.config.sampling.k_max, budget, not no_certificate)
        table = Table(title=f"deviation over a {report.grid_n} x {report.grid_n} grid (power {report.power})")
        table.add_column("factor")
        table.add_column("max |l(g^m h^n) - m l(g) - n l(h)|")
        for i, value in enumerate(report.per_factor_max):
            table.add_row(s.ctx.factor_label(i), f"{value:.6f}")
        console.print(table)
        console.print(
            "convexity probe distances: " + ", ".join(f"{d:.2e}" for d in probe.distances)
        )
        if out is not None:
            body = {
                "power": report.power,
                "grid": report.grid_n,
                "per_factor_max": report.per_factor_max,
                "ratio": f"{probe.ratio[0]}/{probe.ratio[1]}",
                "predicted": [_num(x, 15) for x in probe.predicted.coords],
                "distances": probe.distances,
            }
            _write(json.dumps(body, indent=2), "json", out)


@app.command(name="export-svg")
def export_svg(
    group: GroupOpt = None,
    spec: SpecOpt = None,
    max_len: MaxLenOpt = None,
    cap: CapOpt = None,
    precision: PrecisionOpt = None,
    out: OutOpt = None,
    no_timestamp: NoTimestampOpt = False,
    verbose: VerboseOpt = False,
    debug: DebugOpt = False,
    config: ConfigOpt = None,
):
    """Scatter plot of the direction cloud for two or three factors."""
    with _handled():
        s = _session(group, spec, config, precision, max_len, cap, verbose=verbose, debug=debug)
        content = SVGFormatter(timestamp=s.config.output.timestamp and not no_timestamp).format(_cloud(s))
        _write(content, "svg", out)


@app.command(name="trace-maps")
def trace_maps(
    group: GroupOpt = None,
    spec: SpecOpt = None,
    max_len: MaxLenOpt = None,
    cap: CapOpt = None,
    precision: PrecisionOpt = None,
    verbose: VerboseOpt = False,
    debug: DebugOpt = False,
    config: ConfigOpt = None,
):
    """How each factor place acts on the sampled Gamma^(2) traces."""
    with _handled():
        s = _session(group, spec, config, precision, max_len, cap, verbose=verbose, debug=debug)
        report = trace_map_report(s.gens, s.ctx, s.config.sampling.max_len, 2, s.config.sampling.cap)
        rows = []
        for i, kind in report.kinds.items():
            witness = report.witnesses.get(i)
            rows.append([s.ctx.factor_label(i), kind, witness.format(s.labels) if witness else ""])
        console.print(rows_table("restriction to the trace field", ["factor", "kind", "witness"], rows))
        console.print(
            "predicted projective limit set: " + ("one point" if report.predicted_one_point else "more than one point")
        )


@app.command()
def factors(
    group: GroupOpt = None,
    spec: SpecOpt = None,
    max_len: MaxLenOpt = None,
    cap: CapOpt = None,
    power_budget: PowerBudgetOpt = None,
    precision: PrecisionOpt = None,
    verbose: VerboseOpt = False,
    debug: DebugOpt = False,
    config: ConfigOpt = None,
):
    """Drop elliptic-only factors, then certify and test each remaining factor."""
    with _handled():
        s = _session(group, spec, config, precision, max_len, cap, verbose=verbose, debug=debug)
        budget = min(s.config.sampling.max_len, 6)
        reduced = gamma_ne(s.gens, s.ctx, budget, s.config.sampling.cap, s.config.numerics.order_bound)
        evidence = nonelementary_evidence(
            s.gens,
            reduced.context,
            budget,
            power_budget or s.config.sampling.power_budget,
            s.config.sampling.cap,
            s.config.numerics.order_bound,
        )
        reports = factor_reports(s.gens, s.ctx, budget, 2, s.config.sampling.cap, reduced)

        tracker = StepTracker(f"{s.spec.label}: factors")
        for i in range(s.ctx.size):
            tracker.add(str(i), s.ctx.factor_label(i))
            if i in reduced.dropped:
                tracker.skip(str(i), "no loxodromic element, dropped")
        for position, item in enumerate(evidence.factors):
            index = reduced.kept[position]
            report = reports.get(index)
            detail = "ping-pong certified" if item.certified else "no certificate"
            if report is not None:
                detail += f", {report.criterion}: {report.verdict}"
            if item.certified:
                tracker.complete(str(index), detail)
            else:
                tracker.error(str(index), detail)
        console.print(tracker.render())
        for word, problem in evidence.violations[:5]:
            console.print(f"[red]type violation[/red] {word.format(s.labels)}: {escape(problem)}")


@app.command(name="catalog")
def catalog_cmd(
    group: GroupOpt = None,
    spec: SpecOpt = None,
    precision: PrecisionOpt = None,
    out: OutOpt = None,
    verbose: VerboseOpt = False,
    debug: DebugOpt = False,
    config: ConfigOpt = None,
):
    """List the catalog, or show one group's normalized spec and its quaternion algebra."""
    if group is None and spec is None:
        rows = [(name, params, description) for name, (_, params, description) in CATALOG.items()]
        console.print(rows_table("catalog", ["name", "params", "description"], rows))
        return
    with _handled():
        s = _session(group, spec, config, precision, verbose=verbose, debug=debug)
        info = [
            ("label", s.spec.label),
            ("field", s.ring.label),
            ("generators", ", ".join(s.labels)),
            ("factors", ", ".join(s.ctx.factor_label(i) for i in range(s.ctx.size))),
            ("(q, r)", (s.ctx.q, s.ctx.r)),
        ]
        algebra = s.spec.algebra(s.config.numerics.precision)
        if algebra is not None:
            ramification = ", ".join(
                f"place {p.index} ({_num(p.root, 6)}): {'ramified' if ramified else 'unramified'}"
                for p, ramified in algebra.ramification()
            )
            info.append(("algebra", repr(algebra)))
            info.append(("real ramification", ramification or "-"))
            info.append(("algebra signature", algebra.signature()))
        console.print(key_value_table(s.spec.label, info))
        if out is not None:
            _write(s.spec.to_json(), "json", out)


@app.command(name="config")
def config_cmd(
    init: Annotated[bool, typer.Option("--init", help="Write the default configuration file")] = False,
    config: ConfigOpt = None,
    precision: PrecisionOpt = None,
):
    """Show the effective configuration."""
    path = Path(config) if config else default_config_path()
    if init:
        written = save_config(LclConfig(), path)
        console.print(f"[green]Wrote[/green] {written}")
    effective = effective_config(config, precision)
    rows = []
    for section, values in effective.to_dict().items():
        for key, value in values.items():
            rows.append((f"{section}.{key}", value))
    console.print(key_value_table(f"configuration ({path})", rows))


@app.command()
def version():
    """Display version and system information."""
    import importlib.metadata
    import platform

    cli_version = "unknown"
    try:
        cli_version = importlib.metadata.version("lcl-cli")
    except importlib.metadata.PackageNotFoundError:
        pass

    info_table = Table(show_header=False, box=None, padding=(0, 2))
    info_table.add_column("Key", style="deep_sky_blue1", justify="right")
    info_table.add_column("Value", style="white")
    info_table.add_row("CLI Version", cli_version)
    info_table.add_row("Python", platform.python_version())
    info_table.add_row("mpmath", importlib.metadata.version("mpmath"))
    info_table.add_row("sympy", importlib.metadata.version("sympy"))
    info_table.add_row("Platform", platform.system())
    console.print(Panel(info_table, title="[bold]lcl CLI Information[/bold]", border_style="deep_sky_blue1"))


def main():
    """Entry point for the lcl CLI application."""
    app()


if __name__ == "__main__":
    main()
