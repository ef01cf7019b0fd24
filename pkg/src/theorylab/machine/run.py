"""Step-bounded execution, traces, the Kleene T predicate, domain stages.

All semi-decidable notions in the package bottom out here: ``run`` is
monotone in its budget (once halted, always halted with the same value)
and ``dom_enum`` gives the stage-s approximation of a domain W_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..budget import Budget, steps_of
from ..pairing import pair, unpair, seq_encode, seq_decode
from .program import DECJZ, HALT, INC, Program, decode


@dataclass(frozen=True)
class Halted:
    value: int
    steps: int

    halted = True


@dataclass(frozen=True)
class Running:
    halted = False

    #: True when a repeated configuration proves the run diverges forever.
    diverges: bool = False


Outcome = Halted | Running

RUNNING = Running()
DIVERGES = Running(diverges=True)


@lru_cache(maxsize=4096)
def _compiled(program: Program):
    return program.instructions


def _coerce(program_or_index) -> Program:
    if isinstance(program_or_index, Program):
        return program_or_index
    return decode(int(program_or_index))


def _init_registers(program: Program, args: tuple[int, ...]) -> list[int]:
    regs = [0] * max(len(args), program.arity, program.max_register() + 1, 1)
    for k, v in enumerate(args):
        if v < 0:
            raise ValueError("inputs must be naturals")
        regs[k] = v
    return regs


def _step(ins, pc: int, regs: list[int]) -> int:
    """Execute one instruction, mutating regs; returns the next pc."""
    op = ins[0]
    if op == INC:
        r = ins[1]
        if r >= len(regs):
            regs.extend([0] * (r + 1 - len(regs)))
        regs[r] += 1
        return pc + 1
    if op == DECJZ:
        r = ins[1]
        if r >= len(regs):
            regs.extend([0] * (r + 1 - len(regs)))
        if regs[r] == 0:
            return ins[2]
        regs[r] -= 1
        return pc + 1
    return -1  # HALT


# Plain stepping for this many steps before switching to cycle detection.
_PLAIN_PHASE = 2048


def run(program_or_index, args: tuple[int, ...] | list[int] = (), budget: Budget | int = 10**4) -> Outcome:
    """Run for at most ``budget`` steps; inputs are placed in registers 0..

    Missing inputs (up to the arity) default to 0.  A detected
    configuration repeat is reported as ``Running(diverges=True)`` without
    burning the remaining budget; this never changes any verdict.
    """
    return _execute(program_or_index, args, budget, clamp=False)


def run_halts(program_or_index, args: tuple[int, ...] | list[int], budget: Budget | int) -> bool:
    """Does the run halt within the budget?  Same verdict as ``run`` but
    input values above budget+1 are clamped: such a register cannot reach
    zero within the budget, so no zero-test can tell the difference, and
    the bignum arithmetic disappears.  (Outputs are not meaningful here.)
    """
    return _execute(program_or_index, args, budget, clamp=True).halted


def _execute(program_or_index, args, budget: Budget | int, clamp: bool) -> Outcome:
    program = _coerce(program_or_index)
    limit = steps_of(budget)
    code = _compiled(program)
    n = len(code)
    regs = _init_registers(program, tuple(args))
    if clamp:
        cap = limit + 1
        regs = [v if v <= cap else cap for v in regs]
    pc = 0
    steps = 0

    plain = min(limit, _PLAIN_PHASE)
    while steps < plain:
        if pc >= n or code[pc][0] == HALT:
            return Halted(regs[0], steps)
        pc = _step(code[pc], pc, regs)
        steps += 1
    if pc >= n or code[pc][0] == HALT:
        return Halted(regs[0], steps)
    if steps >= limit:
        return RUNNING

    # Floyd cycle detection from the current configuration onward: the
    # hare runs on the real budget, the tortoise at half speed.  A meeting
    # proves the configuration recurs, i.e. the run never halts.
    t_pc, t_regs = pc, list(regs)
    parity = 0
    while steps < limit:
        if pc >= n or code[pc][0] == HALT:
            return Halted(regs[0], steps)
        pc = _step(code[pc], pc, regs)
        steps += 1
        if parity:
            t_pc = _step(code[t_pc], t_pc, t_regs)
        parity ^= 1
        if pc == t_pc and regs == t_regs:
            return DIVERGES
    if pc >= n or code[pc][0] == HALT:
        return Halted(regs[0], steps)
    return RUNNING


# ---------------------------------------------------------------------------
# Traces and the Kleene T predicate.

@dataclass(frozen=True)
class Trace:
    """A halting run, as the list of configurations it passes through.

    A configuration (pc, registers) is coded pair(pc, seq(registers)) with
    trailing zero registers trimmed; the trace code is
    pair(index, seq(configuration codes)), so traces of distinct indices
    never collide.
    """

    index: int
    configs: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def code(self) -> int:
        return pair(self.index, seq_encode([_config_code(pc, regs) for pc, regs in self.configs]))


def _trim(regs: list[int]) -> tuple[int, ...]:
    end = len(regs)
    while end > 0 and regs[end - 1] == 0:
        end -= 1
    return tuple(regs[:end])


def _config_code(pc: int, regs: tuple[int, ...]) -> int:
    return pair(pc, seq_encode(list(regs)))


def _is_halted(program: Program, pc: int) -> bool:
    return pc >= len(program.instructions) or program.instructions[pc][0] == HALT


def find_trace(index: int, x: int, budget: Budget | int = 10**4) -> Trace | None:
    """The canonical halting trace of program ``index`` on input x, if it
    halts within the budget."""
    program = decode(index)
    limit = steps_of(budget)
    regs = _init_registers(program, (x,))
    pc = 0
    configs = [(pc, _trim(regs))]
    for _ in range(limit):
        if _is_halted(program, pc):
            return Trace(index, tuple(configs))
        pc = _step(program.instructions[pc], pc, regs)
        configs.append((pc, _trim(regs)))
    if _is_halted(program, pc):
        return Trace(index, tuple(configs))
    return None


def kleene_T(index: int, x: int, y: int) -> bool:
    """True iff y is the code of a valid halting trace of program ``index``
    on input x.  Decides one candidate; no search."""
    if y < 0:
        return False
    idx, body = unpair(y)
    if idx != index:
        return False
    cells = seq_decode(body)
    if not cells or seq_encode(cells) != body:
        return False
    program = decode(index)
    configs = []
    for cell in cells:
        pc, regbody = unpair(cell)
        regs = seq_decode(regbody)
        if regs is None or seq_encode(regs) != regbody:
            return False
        if regs and regs[-1] == 0:
            return False  # registers must be trimmed (canonical coding)
        configs.append((pc, regs))
    first_pc, first_regs = configs[0]
    want = list(_trim(_init_registers(program, (x,))))
    if first_pc != 0 or first_regs != want:
        return False
    for (pc, regs), (npc, nregs) in zip(configs, configs[1:]):
        if _is_halted(program, pc):
            return False
        work = list(regs)
        got_pc = _step(program.instructions[pc], pc, work)
        if got_pc != npc or list(_trim(work)) != nregs:
            return False
    return _is_halted(program, configs[-1][0])


def trace_output(y: int) -> int | None:
    """Output register of the final configuration of a trace code."""
    _, body = unpair(y)
    cells = seq_decode(body)
    if not cells:
        return None
    _, regbody = unpair(cells[-1])
    regs = seq_decode(regbody)
    return regs[0] if regs else 0


# ---------------------------------------------------------------------------
# Stage approximations of domains.

def dom_enum(index: int, stage: Budget | int) -> set[int]:
    """W_{index, s} = { x <= s : program halts on x within s steps }."""
    s = steps_of(stage)
    return {x for x in range(s + 1) if run_halts(index, (x,), s)}


def in_domain_at(index: int, x: int, stage: Budget | int) -> bool:
    """Membership x in W_{index, s} without enumerating the whole stage."""
    s = steps_of(stage)
    return x <= s and run_halts(index, (x,), s)
