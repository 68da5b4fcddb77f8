"""Power domination toolkit: propagation, exact and tree solvers, generators and a bound lab."""

__version__ = "0.1.0"

from .cli import cli

__all__ = ["cli"]
