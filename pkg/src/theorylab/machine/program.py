"""Counter-machine programs and their Goedel numbering.

The machine model is an unbounded-register counter machine with three
instructions:

    inc r          increment register r, fall through
    decjz r L      if register r is zero jump to L, else decrement and
                   fall through
    halt           stop; the output is register 0

A program halts when it executes ``halt`` or when control falls off the
end of the instruction list.

Instruction coding:  inc r -> pair(0, r), decjz r L -> pair(1, pair(r, L)),
halt -> pair(2, 0).  A program with arity a and instruction codes cs is
coded as pair(a, seq(cs)).  Decoding is total: the tag is read mod 3, and
any code whose jump targets are out of range (or that claims more than
MAX_SEQ_LEN instructions) decodes to a canonical diverging program, so
every natural number is the index of some program.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..pairing import pair, unpair, seq_encode, seq_decode

INC, DECJZ, HALT = 0, 1, 2

Instruction = tuple  # (INC, r) | (DECJZ, r, label) | (HALT,)


@dataclass(frozen=True)
class Program:
    instructions: tuple[Instruction, ...]
    arity: int = 1

    def __post_init__(self):
        if self.arity < 0:
            raise ValueError("arity must be >= 0")
        n = len(self.instructions)
        for ins in self.instructions:
            op = ins[0]
            if op == INC:
                if ins[1] < 0:
                    raise ValueError("register index must be >= 0")
            elif op == DECJZ:
                if ins[1] < 0:
                    raise ValueError("register index must be >= 0")
                if not 0 <= ins[2] < n:
                    raise ValueError(f"jump target {ins[2]} out of range")
            elif op != HALT:
                raise ValueError(f"unknown opcode {op}")

    @property
    def code(self) -> int:
        return encode(self)

    def max_register(self) -> int:
        m = -1
        for ins in self.instructions:
            if ins[0] in (INC, DECJZ):
                m = max(m, ins[1])
        return m


def inc(r: int) -> Instruction:
    return (INC, r)


def decjz(r: int, label: int) -> Instruction:
    return (DECJZ, r, label)


def halt() -> Instruction:
    return (HALT,)


#: Diverges on every input: register 1 is never incremented, so the jump
#: back to 0 fires forever once register 0 is drained.
CANONICAL_DIVERGER = Program((decjz(1, 0),), arity=1)


def _encode_instruction(ins: Instruction) -> int:
    if ins[0] == INC:
        return pair(0, ins[1])
    if ins[0] == DECJZ:
        return pair(1, pair(ins[1], ins[2]))
    return pair(2, 0)


def _decode_instruction(code: int) -> Instruction:
    tag, payload = unpair(code)
    tag %= 3
    if tag == INC:
        return (INC, payload)
    if tag == DECJZ:
        r, label = unpair(payload)
        return (DECJZ, r, label)
    return (HALT,)


def encode(p: Program) -> int:
    """Goedel number of a program; injective on valid programs."""
    return pair(p.arity, seq_encode([_encode_instruction(i) for i in p.instructions]))


@lru_cache(maxsize=None)
def decode(code: int) -> Program:
    """Total decoding; invalid jump targets yield the canonical diverger."""
    if code < 0:
        return CANONICAL_DIVERGER
    arity, body = unpair(code)
    cells = seq_decode(body)
    if cells is None:
        return CANONICAL_DIVERGER
    instructions = tuple(_decode_instruction(c) for c in cells)
    n = len(instructions)
    for ins in instructions:
        if ins[0] == DECJZ and ins[2] >= n:
            return CANONICAL_DIVERGER
    return Program(instructions, arity)


def format_program(p: Program) -> str:
    """One instruction per line: ``inc <r>``, ``decjz <r> <label>``, ``halt``."""
    lines = [f"# arity {p.arity}"]
    for ins in p.instructions:
        if ins[0] == INC:
            lines.append(f"inc {ins[1]}")
        elif ins[0] == DECJZ:
            lines.append(f"decjz {ins[1]} {ins[2]}")
        else:
            lines.append("halt")
    return "\n".join(lines) + "\n"


def parse_program(text: str) -> Program:
    arity = 1
    instructions: list[Instruction] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip() if not raw.lstrip().startswith("# arity") else raw.strip()
        if line.startswith("# arity"):
            arity = int(line.split()[2])
            continue
        if not line:
            continue
        parts = line.split()
        if parts[0] == "inc" and len(parts) == 2:
            instructions.append(inc(int(parts[1])))
        elif parts[0] == "decjz" and len(parts) == 3:
            instructions.append(decjz(int(parts[1]), int(parts[2])))
        elif parts[0] == "halt" and len(parts) == 1:
            instructions.append(halt())
        else:
            raise ValueError(f"cannot parse instruction: {raw!r}")
    return Program(tuple(instructions), arity)
