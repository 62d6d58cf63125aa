"""Host generators, experiment suites and the command-line interface."""

from .cli import run_cli
from .experiments import ExperimentReport, tightness_check, verify_partitions, verify_universality
from .generators import InstanceFamily, generate

__all__ = ["ExperimentReport", "InstanceFamily", "generate", "run_cli", "tightness_check",
           "verify_partitions", "verify_universality"]
