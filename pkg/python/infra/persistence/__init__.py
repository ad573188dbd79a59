"""Scenario, trace and report files."""

from .exceptions import PersistenceError, ScenarioFileError, TraceFileError
from .models import SCHEMA_VERSION, TraceFileRecord, TraceHeader
from .reports import report_frame, stats_frame, write_report, write_series
from .scenario import load_relations, load_scenario, write_scenario
from .trace import read_trace, trace_records, write_trace

__all__ = [
    "SCHEMA_VERSION",
    "PersistenceError",
    "ScenarioFileError",
    "TraceFileError",
    "TraceFileRecord",
    "TraceHeader",
    "load_relations",
    "load_scenario",
    "read_trace",
    "report_frame",
    "stats_frame",
    "trace_records",
    "write_report",
    "write_scenario",
    "write_series",
    "write_trace",
]
