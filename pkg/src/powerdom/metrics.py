import logging
import statistics
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, TextIO

logger = logging.getLogger(__name__)


@dataclass
class InstanceMetrics:
    """Outcome of one lab instance."""

    instance: str
    group: str
    runtime_ms: float
    solved: bool
    tight: bool = False
    violation: bool = False
    refutes_conjecture: bool = False


@dataclass
class MetricsCollector:
    """Collects per-instance outcomes of a lab run and prints a summary table."""

    instances: List[InstanceMetrics] = field(default_factory=list)
    error_messages: List[str] = field(default_factory=list)

    def record_instance(
        self,
        instance: str,
        group: str,
        runtime_ms: float,
        solved: bool,
        tight: bool = False,
        violation: bool = False,
        refutes_conjecture: bool = False,
    ) -> None:
        """
        Record one instance.

        Args:
            instance: instance name as it appears in the report
            group: family the instance came from (used to split the summary)
            runtime_ms: wall time spent on the instance
            solved: False when the instance was skipped
            tight: gamma_p met the bound
            violation: gamma_p exceeded the bound
            refutes_conjecture: gamma_p exceeded n/(r+1)
        """
        self.instances.append(
            InstanceMetrics(
                instance=instance,
                group=group,
                runtime_ms=runtime_ms,
                solved=solved,
                tight=tight,
                violation=violation,
                refutes_conjecture=refutes_conjecture,
            )
        )

    @staticmethod
    def _calculate_percentiles(values: List[float]) -> Dict[str, float]:
        """Calculate percentiles for a list of values."""
        if not values:
            return {"avg": 0.0, "stddev": 0.0, "min": 0.0, "max": 0.0, "p50": 0.0, "p95": 0.0, "p99": 0.0}

        sorted_values = sorted(values)
        count = len(sorted_values)

        def percentile(q: float) -> float:
            return sorted_values[min(int(count * q), count - 1)]

        return {
            "avg": sum(sorted_values) / count,
            "stddev": statistics.stdev(sorted_values) if count > 1 else 0.0,
            "min": sorted_values[0],
            "max": sorted_values[-1],
            "p50": percentile(0.50),
            "p95": percentile(0.95),
            "p99": percentile(0.99),
        }

    def get_summary(self, group: str = "SUMMARY") -> Dict[str, object]:
        selected = self.instances if group == "SUMMARY" else [m for m in self.instances if m.group == group]
        solved = [m for m in selected if m.solved]
        return {
            "instances": len(selected),
            "solved": len(solved),
            "skipped": len(selected) - len(solved),
            "tight": sum(1 for m in solved if m.tight),
            "violations": sum(1 for m in solved if m.violation),
            "refutations": sum(1 for m in solved if m.refutes_conjecture),
            "runtime": self._calculate_percentiles([m.runtime_ms for m in solved]),
        }

    def print_group(self, group: str, out: Optional[TextIO] = None) -> None:
        """Print one summary block to ``out`` (stdout by default, not as log)."""
        out = out or sys.stdout
        summary = self.get_summary(group)
        runtime = summary["runtime"]
        assert isinstance(runtime, dict)

        print("=" * 60, file=out)
        print(f"BOUND LAB: {group}", file=out)
        print("=" * 60, file=out)
        print(f"Instances:                {summary['instances']}", file=out)
        print(f"Solved:                   {summary['solved']}", file=out)
        print(f"Skipped (over cap):       {summary['skipped']}", file=out)
        print(f"Tight (gamma_p = bound):  {summary['tight']}", file=out)
        print(f"Bound violations:         {summary['violations']}", file=out)
        print(f"Beat n/(r+1):             {summary['refutations']}", file=out)
        print("-" * 60, file=out)
        print(f"{'Runtime':<15} {'ms':>20}", file=out)
        for label, key in (("Average", "avg"), ("STDDev", "stddev"), ("Minimum", "min"), ("Maximum", "max")):
            print(f"{label:<15} {runtime[key]:>20.2f}", file=out)
        for label, key in (("P50 (Median)", "p50"), ("P95", "p95"), ("P99", "p99")):
            print(f"{label:<15} {runtime[key]:>20.2f}", file=out)
        print("=" * 60, file=out)

        if self.error_messages and group == "SUMMARY":
            print("\nErrors occurred:", file=sys.stderr)
            for error_msg in self.error_messages:
                print(f"  {error_msg}", file=sys.stderr)

        out.flush()

    def print_summary(self, out: Optional[TextIO] = None) -> None:
        out = out or sys.stdout
        groups = sorted({m.group for m in self.instances})
        self.print_group("SUMMARY", out)
        if len(groups) > 1:
            for group in groups:
                print(file=out)
                self.print_group(group, out)
