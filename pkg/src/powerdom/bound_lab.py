"""
Desk-scale verification of the (n+1)/5 bound for connected 4-regular claw-free graphs.

The lab evaluates the sharp family E_0 .. E_k (r = 4), line graphs of seeded
random cubic graphs and the octahedron, computes gamma_p exactly and writes
one CSV row per instance.
"""

import csv
import logging
import random
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

from .constants import (
    CONJECTURE_MARK,
    EXACT_SOLVER_CAP,
    LAB_DEGREE,
    LAB_MAX_CUBIC,
    LAB_MAX_VERTICES,
    REPORT_HEADER,
    VIOLATION_MARK,
)
from .errors import ConsistencyError, InputError, PowerDomError, ResourceError
from .exact_solver import min_pds
from .families import gen_E, gen_random_cubic
from .graph import Graph, VertexSet, closed_neighborhood, is_claw_free, is_connected, is_packing, is_regular, line_graph
from .graph_io import render_graph
from .metrics import MetricsCollector
from .parallel_runner import run_parallel

logger = logging.getLogger(__name__)

E_GROUP = "E_k"
CUBIC_GROUP = "line-cubic"
OCTAHEDRON_GROUP = "octahedron"


@dataclass(frozen=True)
class BoundRecord:
    """
    One evaluated lab instance.

    ``gamma_p`` is None when the instance was skipped for exceeding the solver cap.
    """

    instance: str
    group: str
    n: int
    gamma_p: Optional[int]
    connected: bool
    regular4: bool
    clawfree: bool
    runtime_ms: float
    graph: Graph = field(repr=False, compare=False)

    @property
    def bound(self) -> int:
        return (self.n + 1) // 5

    @property
    def skipped(self) -> bool:
        return self.gamma_p is None

    @property
    def checks_pass(self) -> bool:
        return self.connected and self.regular4 and self.clawfree

    @property
    def tight(self) -> bool:
        return self.gamma_p is not None and self.gamma_p == self.bound

    @property
    def violation(self) -> bool:
        return self.checks_pass and self.gamma_p is not None and self.gamma_p > self.bound

    @property
    def refutes_conjecture(self) -> bool:
        return refutes_conjecture(self)

    @property
    def report_name(self) -> str:
        name = self.instance
        if self.violation:
            name += VIOLATION_MARK
        if self.refutes_conjecture:
            name += CONJECTURE_MARK
        return name

    def csv_row(self, timing: bool = True) -> List[str]:
        return [
            self.report_name,
            str(self.n),
            "" if self.gamma_p is None else str(self.gamma_p),
            str(self.bound),
            _flag(self.tight),
            _flag(self.connected),
            _flag(self.regular4),
            _flag(self.clawfree),
            f"{self.runtime_ms:.3f}" if timing else "",
        ]


def _flag(value: bool) -> str:
    return "true" if value else "false"


@dataclass(frozen=True)
class LabConfig:
    """
    Parameters of a lab run.

    Attributes:
        trials: number of random cubic graphs whose line graphs are evaluated
        max_cubic: largest cubic graph drawn (even, 4 .. LAB_MAX_CUBIC)
        seed: master seed; every per-trial seed is derived from it
        ek_max: E_0 .. E_{ek_max} are included; None leaves the family out
        include_octahedron: evaluate line_graph(K_4)
        workers: processes evaluating instances
        cap: exact solver cap handed to every instance
    """

    trials: int = 20
    max_cubic: int = LAB_MAX_CUBIC
    seed: int = 0
    ek_max: Optional[int] = 2
    include_octahedron: bool = True
    workers: int = 1
    cap: int = EXACT_SOLVER_CAP

    def validate(self) -> None:
        if self.trials < 0:
            raise InputError(f"trials must be non-negative, got {self.trials}")
        if self.max_cubic % 2 or not 4 <= self.max_cubic <= LAB_MAX_CUBIC:
            raise InputError(f"max cubic size must be even and within 4..{LAB_MAX_CUBIC}, got {self.max_cubic}")
        if self.ek_max is not None:
            largest = 2 * LAB_DEGREE + 1 + self.ek_max * (LAB_DEGREE + 1)
            if self.ek_max < 0 or largest > LAB_MAX_VERTICES:
                raise InputError(f"E_k range must keep n <= {LAB_MAX_VERTICES}, got k up to {self.ek_max}")
        if self.workers < 1:
            raise InputError(f"workers must be positive, got {self.workers}")


def conjecture_bound(n: int, r: int = LAB_DEGREE) -> float:
    """The competing upper bound n/(r+1) for connected r-regular graphs."""
    return n / (r + 1)


def refutes_conjecture(record: BoundRecord, r: int = LAB_DEGREE) -> bool:
    """True when a connected r-regular instance needs more than n/(r+1) vertices."""
    if record.gamma_p is None or not (record.connected and record.regular4):
        return False
    return record.gamma_p * (r + 1) > record.n


def packing_identity_holds(g: Graph, s: VertexSet, r: int = LAB_DEGREE) -> bool:
    """|N[s]| = (r+1)|s| for a packing s of an r-regular graph."""
    if not is_packing(g, s):
        raise InputError(f"{s.one_based()} is not a packing")
    return len(closed_neighborhood(g, s)) == (r + 1) * len(s)


def build_instances(config: LabConfig) -> List[Tuple[str, str, Graph]]:
    """(name, group, graph) for every instance of a run, in generation order."""
    instances: List[Tuple[str, str, Graph]] = []
    if config.ek_max is not None:
        for k in range(config.ek_max + 1):
            instances.append((f"E_{k}", E_GROUP, gen_E(LAB_DEGREE, k)))

    sizes = list(range(6, config.max_cubic + 1, 2)) or [4]
    rng = random.Random(config.seed)
    for trial in range(config.trials):
        n = rng.choice(sizes)
        cubic = gen_random_cubic(n, seed=rng.getrandbits(32))
        g = line_graph(cubic)
        name = f"line-cubic-n{n:02d}-t{trial:03d}"
        # line graphs of connected cubic graphs are connected, 4-regular and claw-free
        if not (is_connected(g) and is_regular(g, LAB_DEGREE) and is_claw_free(g)):
            raise ConsistencyError(f"{name} failed the structural checks")
        instances.append((name, CUBIC_GROUP, g))

    if config.include_octahedron:
        k4 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        instances.append(("octahedron", OCTAHEDRON_GROUP, line_graph(k4)))
    return instances


def evaluate_instance(name: str, group: str, g: Graph, cap: int = EXACT_SOLVER_CAP) -> BoundRecord:
    """Structural checks plus exact gamma_p; over-cap instances come back skipped."""
    start = time.perf_counter()
    gamma_p: Optional[int]
    try:
        gamma_p = min_pds(g, cap=cap).cardinality
    except ResourceError as e:
        logger.warning(f"{name} skipped: {e}")
        gamma_p = None
    return BoundRecord(
        instance=name,
        group=group,
        n=g.vertex_count,
        gamma_p=gamma_p,
        connected=is_connected(g),
        regular4=is_regular(g, LAB_DEGREE),
        clawfree=is_claw_free(g),
        runtime_ms=(time.perf_counter() - start) * 1000,
        graph=g,
    )


def _evaluate_safely(name: str, group: str, g: Graph, cap: int) -> Tuple[Optional[BoundRecord], Optional[str]]:
    try:
        return evaluate_instance(name, group, g, cap), None
    except Exception as e:
        return None, f"{name}: {type(e).__name__}: {e}"


def run_lab(config: LabConfig, metrics: Optional[MetricsCollector] = None) -> List[BoundRecord]:
    """
    Evaluate every instance of ``config`` and return the records sorted by name.

    Violations of the bound are logged at ERROR and left in the records; the
    caller decides how to fail. Rows beating n/(r+1) are logged at WARNING.

    Raises:
        InputError: on an invalid configuration
        PowerDomError: if any instance failed with an unexpected error
    """
    config.validate()
    instances = build_instances(config)
    logger.info(f"bound lab: {len(instances)} instances on {config.workers} worker(s)")

    outcomes = run_parallel(
        _evaluate_safely, [(name, group, g, config.cap) for name, group, g in instances], config.workers
    )
    records = sorted((r for r, _ in outcomes if r is not None), key=lambda r: r.instance)
    errors = [msg for _, msg in outcomes if msg is not None]

    if metrics is not None:
        for r in records:
            metrics.record_instance(
                instance=r.instance,
                group=r.group,
                runtime_ms=r.runtime_ms,
                solved=not r.skipped,
                tight=r.tight,
                violation=r.violation,
                refutes_conjecture=r.refutes_conjecture,
            )
        metrics.error_messages.extend(errors)

    for r in records:
        if r.violation:
            logger.error(f"BOUND VIOLATED on {r.instance}: gamma_p = {r.gamma_p} > {r.bound} (n = {r.n})")
        elif r.refutes_conjecture:
            logger.warning(
                f"{r.instance}: gamma_p = {r.gamma_p} > n/(r+1) = {conjecture_bound(r.n):.2f}, "
                f"a counterexample to the n/(r+1) bound"
            )
    if errors:
        raise PowerDomError(f"{len(errors)} lab instance(s) failed: " + "; ".join(errors))
    return records


def write_report(records: List[BoundRecord], path: Path, timing: bool = True) -> None:
    """
    Write the lab CSV, rows in ascending instance-name order.

    With ``timing=False`` the runtime column is left empty so that reruns of
    the same configuration give byte-identical files.

    Raises:
        PowerDomError: if the file cannot be written
    """
    try:
        with open(path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(REPORT_HEADER.split(","))
            for r in sorted(records, key=lambda r: r.instance):
                writer.writerow(r.csv_row(timing))
    except OSError as e:
        raise PowerDomError(f"cannot write report {path}: {e.strerror or e}") from e
    logger.info(f"wrote {len(records)} rows to {path}")


def write_counterexample(record: BoundRecord, directory: Path) -> Path:
    """Serialize the graph of a violating record as an edge-list document."""
    safe = "".join(c if c.isalnum() or c in "-_" else "_" for c in record.instance)
    path = directory / f"counterexample-{safe}.txt"
    header = f"# {record.instance}: gamma_p = {record.gamma_p} exceeds (n+1)/5 = {record.bound}\n"
    try:
        path.write_text(header + render_graph(record.graph), encoding="utf-8")
    except OSError as e:
        raise PowerDomError(f"cannot write counterexample {path}: {e.strerror or e}") from e
    logger.error(f"counterexample for {record.instance} written to {path}")
    return path
