"""The s-m-n construction: currying by code prefixing.

smn(m, n, i, ys) returns the index of a program of arity n that first
shifts its n inputs up into registers m..m+n-1, loads the constants ys
into registers 0..m-1 (by binary doubling, so code size is logarithmic in
the constants), and then runs program i unchanged apart from a jump-target
offset.

The prefix runs for an exactly computable number of steps, so budgets
translate exactly: program smn(m,n,i,ys) on inputs zs halts within
b + smn_overhead(ys, zs) steps iff program i on ys++zs halts within b
steps, with the same output.
"""

from __future__ import annotations

from ..pairing import MAX_SEQ_LEN, pair, seq_encode
from .program import DECJZ, HALT, INC, decjz, decode, halt, inc, _encode_instruction


def _emit_load_const(out: list, k: int, value: int, tmp: int, zreg: int) -> None:
    """Append code setting register k := value (k starts at 0), using tmp
    (drained back to 0) and the never-incremented register zreg for jumps."""
    if value == 0:
        return
    out.append(inc(k))
    for b in bin(value)[3:]:
        top = len(out)
        # double k through tmp
        out.append(decjz(k, top + 4))
        out.append(inc(tmp))
        out.append(inc(tmp))
        out.append(decjz(zreg, top))
        back = len(out)
        out.append(decjz(tmp, back + 3))
        out.append(inc(k))
        out.append(decjz(zreg, back))
        if b == "1":
            out.append(inc(k))


def _load_const_steps(value: int) -> int:
    """Exact running time of the _emit_load_const code."""
    if value == 0:
        return 0
    steps = 1
    v = 1
    for b in bin(value)[3:]:
        steps += 4 * v + 1  # drain k into tmp twice over
        steps += 3 * (2 * v) + 1  # transfer tmp back
        v *= 2
        if b == "1":
            steps += 1
            v += 1
    return steps


def smn(m: int, n: int, i: int, ys: tuple[int, ...] | list[int]) -> int:
    """Index of program i with its first m arguments frozen to ys."""
    if m < 1 or n < 1:
        raise ValueError("smn requires m, n >= 1")
    ys = tuple(ys)
    if len(ys) != m:
        raise ValueError(f"expected {m} frozen arguments, got {len(ys)}")
    if any(y < 0 for y in ys):
        raise ValueError("frozen arguments must be naturals")
    base = decode(i)

    scratch = max(m + n, base.max_register() + 1)  # never incremented
    tmp = scratch + 1
    prefix: list = []
    # Shift z_j from register j to register m+j, highest first so source
    # and target ranges never collide.
    for j in range(n - 1, -1, -1):
        top = len(prefix)
        prefix.append(decjz(j, top + 3))
        prefix.append(inc(m + j))
        prefix.append(decjz(scratch, top))
    for k in range(m):
        _emit_load_const(prefix, k, ys[k], tmp, scratch)

    off = len(prefix)
    total = off + len(base.instructions)
    if total >= MAX_SEQ_LEN:
        raise ValueError(f"curried program too long ({total} instructions)")
    codes = [_encode_instruction(ins) for ins in prefix]
    for ins in base.instructions:
        if ins[0] == DECJZ:
            codes.append(_encode_instruction(decjz(ins[1], ins[2] + off)))
        else:
            codes.append(_encode_instruction(ins))
    return pair(n, seq_encode(codes))


def smn_overhead(ys: tuple[int, ...] | list[int], zs: tuple[int, ...] | list[int]) -> int:
    """Exact step count of the smn prefix on inputs zs."""
    return sum(3 * z + 1 for z in zs) + sum(_load_const_steps(y) for y in ys)
