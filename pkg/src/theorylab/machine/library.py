"""Small hand-written programs used throughout tests and demos."""

from __future__ import annotations

from .program import DECJZ, HALT, Program, decjz, halt, inc

#: Halts immediately; output 0.
HALT_ONLY = Program((halt(),), arity=0)

#: Identity on one input: halt with register 0 = x.
IDENTITY = Program((halt(),), arity=1)

#: Output x+1.
SUCCESSOR = Program((inc(0), halt()), arity=1)

#: Output x+y (adds register 1 into register 0).
ADDITION = Program((decjz(1, 3), inc(0), decjz(2, 0), halt()), arity=2)

#: Output 2x.
DOUBLE = Program(
    (decjz(0, 4), inc(1), inc(1), decjz(2, 0), decjz(1, 7), inc(0), decjz(2, 4), halt()),
    arity=1,
)

#: Diverges everywhere (register 1 is always zero).
SELF_LOOP = Program((decjz(1, 0),), arity=1)

#: Halts iff x is even; diverges on odds.
EVENS = Program(
    (decjz(0, 4), decjz(0, 3), decjz(2, 0), decjz(2, 3), halt()),
    arity=1,
)

#: Halts iff x is odd.
ODDS = Program(
    (decjz(0, 3), decjz(0, 4), decjz(2, 0), decjz(2, 3), halt()),
    arity=1,
)

#: Output 0 on any input.
CONST_ZERO = Program((decjz(0, 2), decjz(1, 0), halt()), arity=1)

#: Output 1 on any input.
CONST_ONE = Program((decjz(0, 2), decjz(1, 0), inc(0), halt()), arity=1)

#: Output 1 if x even, 0 if x odd.
EVENS_CHAR = Program(
    (decjz(0, 4), decjz(0, 3), decjz(2, 0), halt(), inc(0), halt()),
    arity=1,
)


def finite_acceptor(values) -> Program:
    """Halts exactly on the given finite set; diverges elsewhere.

    A decjz ladder: control reaches rung d with register 0 zero iff the
    input was exactly d.
    """
    values = frozenset(values)
    if any(v < 0 for v in values):
        raise ValueError("naturals only")
    if not values:
        return SELF_LOOP
    n = max(values) + 1
    diverge, halt_at = n, n + 1
    rungs = [decjz(0, halt_at if d in values else diverge) for d in range(n)]
    return Program(tuple(rungs) + (decjz(1, diverge), halt()), arity=1)


def cofinite_acceptor(missing) -> Program:
    """Halts exactly off the given finite set."""
    missing = frozenset(missing)
    if any(v < 0 for v in missing):
        raise ValueError("naturals only")
    if not missing:
        return IDENTITY
    n = max(missing) + 1
    halt_at, diverge = n, n + 1
    rungs = [decjz(0, diverge if d in missing else halt_at) for d in range(n)]
    return Program(tuple(rungs) + (halt(), decjz(1, diverge)), arity=1)


def const_program(c: int) -> Program:
    """Output the constant c on any input."""
    body = [decjz(0, 2), decjz(1, 0)] + [inc(0)] * c + [halt()]
    return Program(tuple(body), arity=1)


def compose(outer: Program, inner: Program) -> Program:
    """outer after inner, both unary: run inner, zero the scratch
    registers, then run outer on the output in register 0."""
    hi = max(outer.max_register(), inner.max_register(), 0)
    spare = hi + 1  # never incremented by either part: stays zero
    cleanup_at = len(inner.instructions)
    body: list = []
    for ins in inner.instructions:
        body.append(decjz(spare, cleanup_at) if ins[0] == HALT else ins)
    for r in range(1, hi + 1):
        top = len(body)
        body.append(decjz(r, top + 2))
        body.append(decjz(spare, top))
    off = len(body)
    for ins in outer.instructions:
        if ins[0] == DECJZ:
            body.append(decjz(ins[1], ins[2] + off))
        else:
            body.append(ins)
    return Program(tuple(body), arity=1)
