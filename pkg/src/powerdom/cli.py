#!/usr/bin/env python3
import functools
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Optional, TextIO, TypeVar, cast

import click
from click_option_group import RequiredAnyOptionGroup, optgroup

from .bound_lab import LabConfig, run_lab, write_counterexample, write_report
from .constants import EXACT_SOLVER_CAP, LAB_DEGREE, LAB_MAX_CUBIC, WEIGHTED_SOLVER_CAP, ExitStatus, Family
from .errors import BoundViolationError, InputError, PowerDomError, ResourceError
from .exact_solver import PdsResult, min_pds, min_weight_pds
from .families import FamilySpec, build_family
from .graph import Graph, VertexSet, is_claw_free, is_connected, is_regular, line_graph
from .graph_io import (
    format_ids,
    format_number,
    parse_graph,
    parse_id_list,
    parse_tree,
    parse_weights,
    render_graph,
    render_tree,
)
from .metrics import MetricsCollector
from .propagation import closure_trace
from .tree_dp import wpdt

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def setup_logging(log_level_str: str) -> None:
    """Converts logging level string to numeric level and configures logging."""
    level_map = {
        "DEBUG": logging.DEBUG,
        "INFO": logging.INFO,
        "WARNING": logging.WARNING,
        "ERROR": logging.ERROR,
        "CRITICAL": logging.CRITICAL,
    }

    if log_level_str not in level_map:
        raise ValueError(f"Invalid logging level: {log_level_str}. " f"Valid values: {list(level_map.keys())}")

    logging.basicConfig(
        level=level_map[log_level_str],
        format="%(asctime)s - PID:%(process)d - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )


class CommandError(click.ClickException):
    """A package error surfaced on stderr with the exit status of its kind."""

    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


def exit_status_for(error: PowerDomError) -> ExitStatus:
    if isinstance(error, InputError):
        return ExitStatus.INPUT_ERROR
    if isinstance(error, ResourceError):
        return ExitStatus.RESOURCE_CAP
    return ExitStatus.CHECK_FAILED


def reports_errors(f: F) -> F:
    """Turn PowerDomError into a CommandError carrying the matching exit status."""

    @functools.wraps(f)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return f(*args, **kwargs)
        except PowerDomError as e:
            logger.debug("command failed", exc_info=True)
            raise CommandError(str(e), int(exit_status_for(e))) from e

    return cast(F, wrapper)


def _source_name(stream: TextIO) -> str:
    return "stdin" if stream.name == "<stdin>" else stream.name


def _read_graph(stream: TextIO) -> Graph:
    try:
        return parse_graph(stream.read())
    except InputError as e:
        raise InputError(f"{_source_name(stream)}: {e}") from e


def _echo_trace(result: PdsResult) -> None:
    for step, batch in result.certificate:
        click.echo(f"step {step}: {', '.join(str(v) for v in batch.one_based())}")


@click.group()
@click.option(
    "--log-level",
    envvar="POWERDOM_LOG_LEVEL",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default="WARNING",
    help="Logging level for diagnostics on stderr. Default: WARNING",
)
@click.version_option(package_name="powerdom")
def cli(log_level: str) -> None:
    """Power domination toolkit: exact and tree solvers, generators and the (n+1)/5 bound lab."""
    setup_logging(log_level.upper())


@cli.command("solve-exact")
@click.option(
    "--graph", "-g", "graph_file", type=click.File("r"), default="-", help="Edge-list document (default: stdin)"
)
@click.option(
    "--weights", "-w", "weights_file", type=click.File("r"), help="Weight document; solves for minimum weight"
)
@click.option("--trace", is_flag=True, help="Print the round-by-round observation of the set")
@click.option(
    "--cap", type=int, help=f"Largest graph to search (default: {EXACT_SOLVER_CAP}, weighted {WEIGHTED_SOLVER_CAP})"
)
@click.option(
    "--workers", "-p", envvar="POWERDOM_WORKERS", type=click.IntRange(min=1), default=1, help="Search processes"
)
@reports_errors
def solve_exact(
    graph_file: TextIO, weights_file: Optional[TextIO], trace: bool, cap: Optional[int], workers: int
) -> None:
    """Minimum (weight) power dominating set by exhaustive search."""
    g = _read_graph(graph_file)
    if weights_file is None:
        result = min_pds(g, cap=cap if cap is not None else EXACT_SOLVER_CAP, workers=workers)
        click.echo(f"gamma_p = {result.cardinality}")
    else:
        weights = parse_weights(weights_file.read(), g.vertex_count)
        result = min_weight_pds(g, weights, cap=cap if cap is not None else WEIGHTED_SOLVER_CAP, workers=workers)
        click.echo(f"gamma_p_w = {format_number(result.weight)}")
    click.echo(f"set = {format_ids(result.members)}")
    if trace:
        _echo_trace(result)


@cli.command("solve-tree")
@click.option("--tree", "-t", "tree_file", type=click.File("r"), default="-", help="Tree document (default: stdin)")
@click.option("--emit-set", is_flag=True, help="Also print the optimal set")
@click.option("--trace", is_flag=True, help="Print the round-by-round observation of the set")
@reports_errors
def solve_tree(tree_file: TextIO, emit_set: bool, trace: bool) -> None:
    """Minimum-weight power dominating set of a weighted tree in linear time."""
    try:
        t = parse_tree(tree_file.read())
    except InputError as e:
        raise InputError(f"{_source_name(tree_file)}: {e}") from e
    result = wpdt(t)
    click.echo(f"gamma_p_w = {format_number(result.weight)}")
    if emit_set or trace:
        n = t.vertex_count
        original = VertexSet.from_ids((t.labels[p] for p in result.members), n)
        if emit_set:
            click.echo(f"set = {format_ids(original)}")
        if trace:
            for step, batch in result.certificate:
                ids = sorted(t.labels[p] + 1 for p in batch)
                click.echo(f"step {step}: {', '.join(str(v) for v in ids)}")


@cli.command()
@click.option(
    "--graph", "-g", "graph_file", type=click.File("r"), default="-", help="Edge-list document (default: stdin)"
)
@click.option("--seed", "-s", "seed_ids", required=True, help="Comma-separated 1-based ids of the chosen set")
@click.option("--pre", "pre_ids", default="", help="Comma-separated 1-based ids observed from the start")
@reports_errors
def propagate(graph_file: TextIO, seed_ids: str, pre_ids: str) -> None:
    """Observation closure of a vertex set, with the per-round trace."""
    g = _read_graph(graph_file)
    n = g.vertex_count
    try:
        seeds = parse_id_list(seed_ids, n)
    except InputError as e:
        raise InputError(f"--seed: {e}") from e
    try:
        pre = parse_id_list(pre_ids, n)
    except InputError as e:
        raise InputError(f"--pre: {e}") from e

    trace = closure_trace(g, seeds, pre)
    observed = VertexSet.empty(n)
    for _, batch in trace:
        observed = observed | batch
    click.echo(f"observed = {len(observed)}/{n}")
    click.echo(f"closure = {format_ids(observed)}")
    click.echo(f"power dominating = {'true' if len(observed) == n else 'false'}")
    for step, batch in trace:
        click.echo(f"step {step}: {', '.join(str(v) for v in batch.one_based())}")


@cli.command()
@click.option(
    "--graph", "-g", "graph_file", type=click.File("r"), default="-", help="Edge-list document (default: stdin)"
)
@optgroup.group("Checks", cls=RequiredAnyOptionGroup, help="Properties to verify; at least one is required.")
@optgroup.option("--claw-free", is_flag=True, help="No induced K_{1,3}")
@optgroup.option("--regular", type=click.IntRange(min=0), help="Every vertex has degree K")
@optgroup.option("--connected", is_flag=True, help="A single component")
@optgroup.option("--bound", is_flag=True, help="gamma_p <= floor((n+1)/5), computed exactly")
@click.option(
    "--cap", type=int, default=EXACT_SOLVER_CAP, help=f"Exact solver cap for --bound (default: {EXACT_SOLVER_CAP})"
)
@click.pass_context
@reports_errors
def check(
    ctx: click.Context,
    graph_file: TextIO,
    claw_free: bool,
    regular: Optional[int],
    connected: bool,
    bound: bool,
    cap: int,
) -> None:
    """Structural checks; exits 0 iff every requested check passes."""
    g = _read_graph(graph_file)
    results = []
    if claw_free:
        results.append(("claw-free", is_claw_free(g), ""))
    if regular is not None:
        results.append((f"regular {regular}", is_regular(g, regular), ""))
    if connected:
        results.append(("connected", is_connected(g), ""))
    if bound:
        gamma_p = min_pds(g, cap=cap).cardinality
        limit = (g.vertex_count + 1) // 5
        results.append(("bound", gamma_p <= limit, f" (gamma_p = {gamma_p}, floor((n+1)/5) = {limit})"))

    for name, ok, detail in results:
        click.echo(f"{name}: {'pass' if ok else 'fail'}{detail}")
    if not all(ok for _, ok, _ in results):
        ctx.exit(int(ExitStatus.CHECK_FAILED))


def _out_option(f: F) -> F:
    return cast(
        F,
        click.option(
            "--out", "-o", type=click.File("w", encoding="utf-8"), default="-", help="Output file (default: stdout)"
        )(f),
    )


def _write_instance(spec: FamilySpec, out: TextIO, line: bool = False) -> None:
    instance = build_family(spec)
    if isinstance(instance, Graph):
        out.write(render_graph(line_graph(instance) if line else instance))
    else:
        out.write(render_tree(instance))
    logger.info(f"generated {spec.family.value} instance")


@cli.group()
def gen() -> None:
    """Generate an instance as an edge-list or tree document."""


@gen.command("ek")
@click.option("--r", "r", type=int, default=LAB_DEGREE, help=f"Even degree >= 4 (default: {LAB_DEGREE})")
@click.option("--k", "k", type=int, required=True, help="Number of splits")
@_out_option
@reports_errors
def gen_ek(r: int, k: int, out: TextIO) -> None:
    """The r-regular claw-free graph E_k."""
    _write_instance(FamilySpec(family=Family.E, r=r, k=k), out)


@gen.command("lk")
@click.option("--k", "k", type=int, required=True, help="Number of K_4 copies (>= 2)")
@_out_option
@reports_errors
def gen_lk(k: int, out: TextIO) -> None:
    """Chain of k copies of K_4."""
    _write_instance(FamilySpec(family=Family.L, k=k), out)


STANDARD_FAMILIES = [
    f.value for f in (Family.PATH, Family.CYCLE, Family.STAR, Family.COMPLETE, Family.COMPLETE_BIPARTITE)
]


@gen.command("std")
@click.option("--family", "-f", type=click.Choice(STANDARD_FAMILIES), required=True, help="Family name")
@click.option("--n", "n", type=int, required=True, help="Vertices (leaves for star, first side for complete-bipartite)")
@click.option("--m", "m", type=int, help="Second side of complete-bipartite")
@_out_option
@reports_errors
def gen_std(family: str, n: int, m: Optional[int], out: TextIO) -> None:
    """Path, cycle, star, complete or complete bipartite graph."""
    _write_instance(FamilySpec(family=Family(family), n=n, m=m), out)


@gen.command("cubic")
@click.option("--n", "n", type=int, required=True, help="Even vertex count >= 4")
@click.option("--seed", type=int, default=0, help="Sampling seed (default: 0)")
@click.option("--line", is_flag=True, help="Emit the line graph of the sampled cubic graph")
@_out_option
@reports_errors
def gen_cubic(n: int, seed: int, line: bool, out: TextIO) -> None:
    """Connected random cubic graph (pairing model)."""
    _write_instance(FamilySpec(family=Family.RANDOM_CUBIC, n=n, seed=seed), out, line=line)


@gen.command("tree")
@click.option("--n", "n", type=int, required=True, help="Vertex count")
@click.option("--lo", type=int, default=1, help="Smallest weight (default: 1)")
@click.option("--hi", type=int, default=100, help="Largest weight (default: 100)")
@click.option("--seed", type=int, default=0, help="Sampling seed (default: 0)")
@_out_option
@reports_errors
def gen_tree(n: int, lo: int, hi: int, seed: int, out: TextIO) -> None:
    """Uniform random tree with integer weights in [lo, hi]."""
    _write_instance(FamilySpec(family=Family.RANDOM_TREE, n=n, seed=seed, weight_range=(lo, hi)), out)


@cli.command()
@click.option("--trials", "-t", type=click.IntRange(min=0), default=20, help="Random cubic line graphs (default: 20)")
@click.option(
    "--max-cubic",
    type=int,
    default=LAB_MAX_CUBIC,
    help=f"Largest cubic graph sampled, even, 4..{LAB_MAX_CUBIC} (default: {LAB_MAX_CUBIC})",
)
@click.option("--ek-max", type=int, default=2, help="Include E_0 .. E_K for r = 4 (default: 2)")
@click.option("--no-ek", is_flag=True, help="Leave the E_k family out")
@click.option("--seed", type=int, default=0, help="Master seed (default: 0)")
@click.option("--out", "-o", type=click.Path(dir_okay=False, path_type=Path), required=True, help="Report CSV path")
@click.option("--no-timing", is_flag=True, help="Leave runtime_ms empty so reruns are byte-identical")
@click.option("--workers", "-p", envvar="POWERDOM_WORKERS", type=click.IntRange(min=1), default=1, help="Processes")
@click.option("--cap", type=int, default=EXACT_SOLVER_CAP, help=f"Exact solver cap (default: {EXACT_SOLVER_CAP})")
@reports_errors
def lab(
    trials: int,
    max_cubic: int,
    ek_max: int,
    no_ek: bool,
    seed: int,
    out: Path,
    no_timing: bool,
    workers: int,
    cap: int,
) -> None:
    """Verify gamma_p <= (n+1)/5 on 4-regular claw-free instances and write a CSV report."""
    config = LabConfig(
        trials=trials,
        max_cubic=max_cubic,
        seed=seed,
        ek_max=None if no_ek else ek_max,
        workers=workers,
        cap=cap,
    )
    metrics = MetricsCollector()
    try:
        records = run_lab(config, metrics)
    except PowerDomError:
        # instance errors are listed under the summary before the run fails
        if metrics.error_messages:
            metrics.print_summary()
        raise
    write_report(records, out, timing=not no_timing)
    metrics.print_summary()
    click.echo(f"report = {out}")

    violations = [r for r in records if r.violation]
    for r in violations:
        path = write_counterexample(r, out.parent)
        click.echo(f"BOUND VIOLATED: {r.instance} (gamma_p = {r.gamma_p} > {r.bound}), graph in {path}", err=True)
    if violations:
        first = violations[0]
        raise BoundViolationError(f"{len(violations)} instance(s) exceed (n+1)/5", first.instance, first.graph)

