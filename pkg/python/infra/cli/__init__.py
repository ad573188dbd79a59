"""Command-line frontend."""

from .cli import build_parser, cmd_analyze, cmd_experiment, cmd_simulate, main

__all__ = ["build_parser", "cmd_analyze", "cmd_experiment", "cmd_simulate", "main"]
