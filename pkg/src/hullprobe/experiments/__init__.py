from .grunbaum import DirectionRecord, GrunbaumAudit, cap_floor, grunbaum_audit, random_unit_directions
from .records import csv_dumps, jsonl_dumps, read_jsonl, write_csv, write_jsonl
from .trials import (
    MIN_TRIALS,
    MinSampleSearch,
    SuccessEstimate,
    TrialOutcome,
    containment_check,
    empirical_min_t,
    estimate_success_probability,
    run_trial,
)

__all__ = [
    "MIN_TRIALS",
    "DirectionRecord",
    "GrunbaumAudit",
    "MinSampleSearch",
    "SuccessEstimate",
    "TrialOutcome",
    "cap_floor",
    "containment_check",
    "csv_dumps",
    "empirical_min_t",
    "estimate_success_probability",
    "grunbaum_audit",
    "jsonl_dumps",
    "random_unit_directions",
    "read_jsonl",
    "run_trial",
    "write_csv",
    "write_jsonl",
]
