"""Simplicial Lines sub-commands."""

from .analyze import run_analyze
from .common import ExitCode
from .gen import run_gen
from .shell import run_shell
from .verify import run_verify

__all__ = ["ExitCode", "run_analyze", "run_gen", "run_shell", "run_verify"]
