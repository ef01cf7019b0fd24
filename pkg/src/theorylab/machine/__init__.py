"""Counter machines: a concrete model of the partial recursive functions."""

from .program import (
    CANONICAL_DIVERGER,
    Program,
    decjz,
    decode,
    encode,
    format_program,
    halt,
    inc,
    parse_program,
)
from .run import (
    Halted,
    Running,
    Trace,
    dom_enum,
    find_trace,
    in_domain_at,
    kleene_T,
    run,
    run_halts,
    trace_output,
)
from .smn import smn, smn_overhead

__all__ = [
    "CANONICAL_DIVERGER",
    "Program",
    "Halted",
    "Running",
    "Trace",
    "decjz",
    "decode",
    "dom_enum",
    "encode",
    "find_trace",
    "format_program",
    "halt",
    "in_domain_at",
    "inc",
    "kleene_T",
    "parse_program",
    "run",
    "run_halts",
    "smn",
    "smn_overhead",
    "trace_output",
]
