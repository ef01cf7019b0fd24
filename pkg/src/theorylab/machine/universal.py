"""Interpreter programs: counter machines that run coded counter machines.

``universal_program()`` U satisfies, for every index p and input x,

    U(p, x) halts iff program p halts on x, with the same output,

where "program p" means exactly ``decode(p)`` (including the diverger
convention for bad codes, replicated in machine code).  On top of U:

    diagonal_program()   K-acceptor: halts on x iff program x halts on x
    k0/k1_program()      halt on x iff program x outputs 0 (resp. 1) on x
    ei_master_program()  3-ary (i, j, x): runs i and j on x in lockstep,
                         outputs 0 if j halts first (ties to j), 1 if i
                         halts first, diverges if neither halts

Unary arithmetic makes interpretation costly: reading an index p takes
about p machine steps, so these programs are desk-fast only on indices of
magnitude up to ~10^5 (one- and two-instruction targets).  They are exact
on everything, given enough budget.
"""

from __future__ import annotations

from functools import lru_cache

from .asm import Asm, Label
from .program import Program, encode


class SimState:
    """Registers holding one simulated machine inside an interpreter."""

    def __init__(self, a: Asm):
        (self.LEN, self.TREE, self.PC, self.SIM0, self.BANK, self.HALTED,
         self.CELL, self.TAG, self.PAYLOAD, self.Q3, self.TAGM, self.RNO,
         self.LAB, self.WASZERO, self.STK, self.H, self.V) = (a.reg() for _ in range(17))


def emit_decode(a: Asm, p_reg: int, st: SimState, bad: Label) -> None:
    """Unpack program p_reg into (st.LEN, st.TREE); p_reg consumed.
    Jumps to ``bad`` exactly when the host decoder yields the diverger:
    length claim >= 2^23 or some jump target out of range."""
    ar, body = a.reg(), a.reg()
    a.unpair(p_reg, ar, body)  # arity is irrelevant to single-input runs
    a.unpair(body, st.LEN, st.TREE)

    c, q, r = a.reg(), a.reg(), a.reg()
    a.copy(st.LEN, c)
    for _ in range(23):
        a.divmod_const(c, 2, q, r)
        a.move(q, c)
    okcap = a.label()
    a.jz_keep(c, okcap)
    a.goto(bad)
    a.place(okcap)

    cnt, cell, tag, payload, q3, tagm, rno, lab = (a.reg() for _ in range(8))
    vloop, vbody, vval, vnext, vdone = (a.label() for _ in range(5))
    a.zero(cnt)
    a.place(vloop)
    a.jump_if_lt(cnt, st.LEN, vbody)
    a.goto(vdone)
    a.place(vbody)
    a.tree_get(st.TREE, st.LEN, cnt, cell)
    a.unpair(cell, tag, payload)
    a.divmod_const(tag, 3, q3, tagm)
    a.decjz(tagm, vnext)  # inc: nothing to validate
    a.decjz(tagm, vval)
    a.goto(vnext)         # halt: nothing to validate
    a.place(vval)
    a.unpair(payload, rno, lab)
    a.jump_if_lt(lab, st.LEN, vnext)
    a.goto(bad)
    a.place(vnext)
    a.inc(cnt)
    a.goto(vloop)
    a.place(vdone)


def emit_init(a: Asm, st: SimState, x_reg: int, keep: bool = False) -> None:
    """Simulated registers := (x, 0, 0, ...); pc := 0."""
    if keep:
        a.copy(x_reg, st.SIM0)
    else:
        a.move(x_reg, st.SIM0)
    a.zero(st.BANK)
    a.zero(st.PC)
    a.zero(st.HALTED)


def _emit_bank_walk(a: Asm, st: SimState, idx: int, at: Label) -> None:
    """Shared prefix of the bank operations: pop idx cells onto st.STK,
    then jump to ``at``; idx consumed."""
    a.zero(st.STK)
    walk = a.label()
    a.place(walk)
    a.jz_keep(idx, at)
    a.decjz(idx, a.trap)
    popped, push = a.label(), a.label()
    a.jz_keep(st.BANK, popped)
    a.chain_pop(st.BANK, st.H)
    a.goto(push)
    a.place(popped)
    a.zero(st.H)
    a.place(push)
    a.chain_push(st.STK, st.H)
    a.goto(walk)


def _emit_bank_unwind(a: Asm, st: SimState) -> None:
    unwind, done = a.label(), a.label()
    a.place(unwind)
    a.jz_keep(st.STK, done)
    a.chain_pop(st.STK, st.H)
    a.chain_push(st.BANK, st.H)
    a.goto(unwind)
    a.place(done)


def emit_bank_inc(a: Asm, st: SimState, idx: int) -> None:
    """Simulated register idx+1 += 1 (bank holds registers 1..); idx consumed."""
    at = a.label()
    _emit_bank_walk(a, st, idx, at)
    a.place(at)
    empty, got = a.label(), a.label()
    a.jz_keep(st.BANK, empty)
    a.chain_pop(st.BANK, st.V)
    a.goto(got)
    a.place(empty)
    a.zero(st.V)
    a.place(got)
    a.inc(st.V)
    a.chain_push(st.BANK, st.V)
    _emit_bank_unwind(a, st)


def emit_bank_decjz(a: Asm, st: SimState, idx: int, waszero: int) -> None:
    """Simulated register idx+1: if zero set waszero := 1, else decrement
    (waszero := 0); idx consumed."""
    a.zero(waszero)
    at = a.label()
    _emit_bank_walk(a, st, idx, at)
    a.place(at)
    empty, got, store = a.label(), a.label(), a.label()
    a.jz_keep(st.BANK, empty)
    a.chain_pop(st.BANK, st.V)
    a.goto(got)
    a.place(empty)
    a.zero(st.V)
    a.place(got)
    wz = a.label()
    a.jz_keep(st.V, wz)
    a.decjz(st.V, a.trap)  # v >= 1: plain decrement
    a.goto(store)
    a.place(wz)
    a.inc(waszero)
    a.place(store)
    a.chain_push(st.BANK, st.V)
    _emit_bank_unwind(a, st)


def emit_step(a: Asm, st: SimState) -> None:
    """One observation-step of the simulated machine: sets st.HALTED when
    the current configuration is halted, else executes one instruction."""
    lend, lrun = a.label(), a.label()
    a.decjz(st.HALTED, lrun)
    a.inc(st.HALTED)
    a.goto(lend)
    a.place(lrun)

    lfetch = a.label()
    a.jump_if_lt(st.PC, st.LEN, lfetch)
    a.inc(st.HALTED)
    a.goto(lend)
    a.place(lfetch)
    a.tree_get(st.TREE, st.LEN, st.PC, st.CELL)
    a.unpair(st.CELL, st.TAG, st.PAYLOAD)
    a.divmod_const(st.TAG, 3, st.Q3, st.TAGM)

    linc, ldec, lpc1 = a.label(), a.label(), a.label()
    a.decjz(st.TAGM, linc)
    a.decjz(st.TAGM, ldec)
    a.inc(st.HALTED)  # halt instruction
    a.goto(lend)

    a.place(linc)
    ls0i = a.label()
    a.jz_keep(st.PAYLOAD, ls0i)
    a.decjz(st.PAYLOAD, a.trap)  # register index k >= 1: bank cell k-1
    emit_bank_inc(a, st, st.PAYLOAD)
    a.goto(lpc1)
    a.place(ls0i)
    a.inc(st.SIM0)
    a.goto(lpc1)

    a.place(ldec)
    a.unpair(st.PAYLOAD, st.RNO, st.LAB)
    ls0d, ltaken = a.label(), a.label()
    a.jz_keep(st.RNO, ls0d)
    a.decjz(st.RNO, a.trap)
    emit_bank_decjz(a, st, st.RNO, st.WASZERO)
    a.decjz(st.WASZERO, lpc1)  # register was nonzero: fall through
    a.goto(ltaken)
    a.place(ls0d)
    a.decjz(st.SIM0, ltaken)   # zero: jump taken; else decrement
    a.goto(lpc1)
    a.place(ltaken)
    a.move(st.LAB, st.PC)
    a.goto(lend)

    a.place(lpc1)
    a.inc(st.PC)
    a.place(lend)


def _emit_main_loop(a: Asm, st: SimState) -> None:
    loop = a.label()
    a.place(loop)
    emit_step(a, st)
    a.jz_keep(st.HALTED, loop)


@lru_cache(maxsize=None)
def universal_program() -> Program:
    """U(p, x): simulate program p on input x."""
    a = Asm(arity=2)
    st = SimState(a)
    emit_decode(a, 0, st, a.trap)
    emit_init(a, st, 1)
    _emit_main_loop(a, st)
    a.zero(0)
    a.transfer(st.SIM0, 0)
    a.halt()
    return a.emit()


@lru_cache(maxsize=None)
def diagonal_program() -> Program:
    """Halts on x iff program x halts on input x (accepts K)."""
    a = Asm(arity=1)
    st = SimState(a)
    p, x = a.reg(), a.reg()
    a.transfer(0, p, x)
    emit_decode(a, p, st, a.trap)
    emit_init(a, st, x)
    _emit_main_loop(a, st)
    a.zero(0)
    a.transfer(st.SIM0, 0)
    a.halt()
    return a.emit()


def _diagonal_value_acceptor(value: int) -> Program:
    a = Asm(arity=1)
    st = SimState(a)
    p, x = a.reg(), a.reg()
    a.transfer(0, p, x)
    emit_decode(a, p, st, a.trap)
    emit_init(a, st, x)
    _emit_main_loop(a, st)
    lh = a.label()
    for _ in range(value):
        a.decjz(st.SIM0, a.trap)  # too small: diverge
    a.decjz(st.SIM0, lh)
    a.goto(a.trap)                # too big: diverge
    a.place(lh)
    a.zero(0)
    a.halt()
    return a.emit()


@lru_cache(maxsize=None)
def k0_program() -> Program:
    """Halts on x iff program x outputs 0 on input x."""
    return _diagonal_value_acceptor(0)


@lru_cache(maxsize=None)
def k1_program() -> Program:
    """Halts on x iff program x outputs 1 on input x."""
    return _diagonal_value_acceptor(1)


@lru_cache(maxsize=None)
def ei_master_program() -> Program:
    """(i, j, x) -> 0 if x enters W_j no later than W_i, 1 if it enters
    W_i strictly first, undefined when x is in neither."""
    a = Asm(arity=3)
    sa, sb = SimState(a), SimState(a)
    emit_decode(a, 0, sa, a.trap)
    emit_decode(a, 1, sb, a.trap)
    emit_init(a, sa, 2, keep=True)
    emit_init(a, sb, 2)
    loop = a.label()
    a.place(loop)
    emit_step(a, sb)
    emit_step(a, sa)
    check_a = a.label()
    a.jz_keep(sb.HALTED, check_a)
    a.zero(0)
    a.halt()  # output 0: entered W_j first (ties go to j)
    a.place(check_a)
    a.jz_keep(sa.HALTED, loop)
    a.zero(0)
    a.inc(0)
    a.halt()  # output 1: entered W_i first
    return a.emit()


@lru_cache(maxsize=None)
def universal_index() -> int:
    return encode(universal_program())


@lru_cache(maxsize=None)
def diagonal_index() -> int:
    return encode(diagonal_program())
