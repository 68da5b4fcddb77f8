"""
Constants for the powerdom toolkit.

Solver caps keep exhaustive searches at desk scale; the lab limits keep every
generated instance inside the exact solver's cap.
"""

from enum import Enum, IntEnum

# Largest graph min_pds accepts (cardinality-first subset search)
EXACT_SOLVER_CAP = 24

# Largest graph min_weight_pds accepts (full 2^n enumeration)
WEIGHTED_SOLVER_CAP = 20

# Pairing-model retries before random cubic sampling gives up
CUBIC_SAMPLING_ATTEMPTS = 10_000

# Largest random cubic graph fed to the lab (its line graph has 3n/2 vertices)
LAB_MAX_CUBIC = 12

# Largest instance the lab hands to the exact solver
LAB_MAX_VERTICES = 24

# Degree of the graphs the bound lab studies
LAB_DEGREE = 4

REPORT_HEADER = "instance,n,gamma_p,bound,tight,connected,regular4,clawfree,runtime_ms"

# Appended to the instance name of rows that beat n/(r+1)
CONJECTURE_MARK = " [n/(r+1) counterexample]"

# Appended to the instance name of rows that exceed the (n+1)/5 bound
VIOLATION_MARK = " [BOUND VIOLATED]"

INF = float("inf")


class DPClass(IntEnum):
    """Slots of a class vector, in table order."""

    A = 0
    B = 1
    C = 2
    D = 3
    E = 4

    @property
    def letter(self) -> str:
        return self.name.lower()


# Process exit statuses of the command line tool
class ExitStatus(IntEnum):
    OK = 0
    CHECK_FAILED = 1
    INPUT_ERROR = 2
    RESOURCE_CAP = 3


class Family(Enum):
    E = "ek"
    L = "lk"
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete-bipartite"
    RANDOM_TREE = "random-tree"
    RANDOM_CUBIC = "random-cubic"
