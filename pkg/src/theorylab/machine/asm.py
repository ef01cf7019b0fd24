"""A tiny macro assembler for counter-machine code.

Builds instruction lists with symbolic labels and named registers, plus
the arithmetic subroutines (all inlined) that the generated interpreter
programs need: transfer/copy, comparison, small-constant divmod, Cantor
pair/unpair, and chain-coded stacks.

Register discipline: macros allocate fresh scratch registers per call via
``reg()`` and re-zero anything they assume to be zero, so a macro instance
sitting inside a loop is safe to re-enter.  Contracts below say which
arguments are consumed (left at zero) and which are preserved.

Cost discipline: counter machines do unary arithmetic, so every macro runs
in time linear in the magnitudes of the values it touches.  The generated
programs exist to be *correct* on all inputs and fast only on tiny ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .program import Program, decjz, halt, inc


@dataclass(frozen=True)
class Label:
    id: int


@dataclass
class Asm:
    arity: int
    code: list = field(default_factory=list)
    _next_label: int = 0
    _placed: dict = field(default_factory=dict)
    _trap: Label | None = None

    def __post_init__(self):
        self._next_reg = self.arity
        # reserved always-zero register backing unconditional jumps
        self.ZERO = self.reg()

    # -- registers and labels ----------------------------------------------
    def reg(self) -> int:
        r = self._next_reg
        self._next_reg += 1
        return r

    def label(self) -> Label:
        lbl = Label(self._next_label)
        self._next_label += 1
        return lbl

    def place(self, lbl: Label) -> None:
        if lbl.id in self._placed:
            raise ValueError("label placed twice")
        self._placed[lbl.id] = len(self.code)

    @property
    def trap(self) -> Label:
        """Shared diverge loop (used for can't-happen branches and for
        inputs that must diverge); emitted by ``emit``."""
        if self._trap is None:
            self._trap = self.label()
        return self._trap

    # -- raw instructions ----------------------------------------------------
    def inc(self, r: int) -> None:
        self.code.append((0, r))

    def decjz(self, r: int, target: Label) -> None:
        self.code.append((1, r, target))

    def halt(self) -> None:
        self.code.append((2,))

    def emit(self) -> Program:
        if self._trap is not None:
            self.place(self._trap)
            self.goto(self._trap)
        out = []
        for ins in self.code:
            if ins[0] == 0:
                out.append(inc(ins[1]))
            elif ins[0] == 1:
                out.append(decjz(ins[1], self._placed[ins[2].id]))
            else:
                out.append(halt())
        return Program(tuple(out), self.arity)

    # -- control macros ------------------------------------------------------
    def goto(self, lbl: Label) -> None:
        self.decjz(self.ZERO, lbl)

    def jz_keep(self, r: int, lbl: Label) -> None:
        """Jump to lbl iff r == 0; r unchanged either way."""
        self.decjz(r, lbl)
        self.inc(r)

    def jump_if_lt(self, a: int, b: int, lt: Label) -> None:
        """Jump to lt iff a < b; a, b preserved.  Falls through on a >= b."""
        ca, cb = self.reg(), self.reg()
        self.copy(a, ca)
        self.copy(b, cb)
        top = self.label()
        ge = self.label()
        self.place(top)
        self.decjz(cb, ge)
        self.decjz(ca, lt)
        self.goto(top)
        self.place(ge)

    # -- data macros ---------------------------------------------------------
    def zero(self, r: int) -> None:
        top = self.label()
        done = self.label()
        self.place(top)
        self.decjz(r, done)
        self.goto(top)
        self.place(done)

    def transfer(self, src: int, *dsts: int) -> None:
        """dst += src for every dst; src left at 0."""
        top = self.label()
        done = self.label()
        self.place(top)
        self.decjz(src, done)
        for d in dsts:
            self.inc(d)
        self.goto(top)
        self.place(done)

    def copy(self, src: int, dst: int) -> None:
        """dst := src; src preserved."""
        tmp = self.reg()
        self.zero(dst)
        self.zero(tmp)
        self.transfer(src, dst, tmp)
        self.transfer(tmp, src)

    def move(self, src: int, dst: int) -> None:
        """dst := src; src left at 0."""
        self.zero(dst)
        self.transfer(src, dst)

    def add(self, dst: int, src: int) -> None:
        """dst += src; src preserved."""
        tmp = self.reg()
        self.zero(tmp)
        self.transfer(src, dst, tmp)
        self.transfer(tmp, src)

    def sub(self, a: int, b: int) -> None:
        """a -= b; b preserved.  Diverges into the trap if a < b."""
        cb = self.reg()
        self.copy(b, cb)
        top = self.label()
        done = self.label()
        self.place(top)
        self.decjz(cb, done)
        self.decjz(a, self.trap)
        self.goto(top)
        self.place(done)

    def divmod_const(self, n: int, d: int, q: int, r: int) -> None:
        """q, r := divmod(n, d) for a compile-time constant d >= 2;
        n consumed."""
        if d < 2:
            raise ValueError("divisor must be >= 2")
        self.zero(q)
        self.zero(r)
        top = self.label()
        done = self.label()
        outs = [self.label() for _ in range(d)]
        self.place(top)
        for k in range(d):
            self.decjz(n, outs[k])
        self.inc(q)
        self.goto(top)
        for k in range(d - 1, -1, -1):
            self.place(outs[k])
            if k:
                self.add_const(r, k)
                self.goto(done)
        self.place(done)

    def add_const(self, r: int, k: int) -> None:
        for _ in range(k):
            self.inc(r)

    def triangular(self, s: int, out: int) -> None:
        """out := s(s+1)/2; s consumed."""
        self.zero(out)
        top = self.label()
        done = self.label()
        self.place(top)
        self.jz_keep(s, done)
        self.add(out, s)
        self.decjz(s, done)  # s >= 1 here: plain decrement
        self.goto(top)
        self.place(done)

    def pair(self, a: int, b: int, out: int) -> None:
        """out := cantor_pair(a, b); a, b consumed."""
        s, keep = self.reg(), self.reg()
        self.zero(s)
        self.zero(keep)
        self.transfer(a, s)
        self.transfer(b, s, keep)
        self.triangular(s, out)
        self.transfer(keep, out)

    def unpair(self, z: int, a: int, b: int) -> None:
        """(a, b) := cantor_unpair(z); z consumed; a, b fully rewritten."""
        w, k = self.reg(), self.reg()
        self.zero(w)
        outer = self.label()
        subloop = self.label()
        subdone = self.label()
        under = self.label()
        self.place(outer)
        self.copy(w, k)
        self.inc(k)
        self.place(subloop)
        self.decjz(k, subdone)
        self.decjz(z, under)
        self.goto(subloop)
        self.place(subdone)
        self.inc(w)
        self.goto(outer)
        self.place(under)
        # z == 0 now; first component is what remains of k, second is w - a
        self.move(k, a)
        self.move(w, b)
        self.sub(b, a)

    # -- chain coding: empty = 0, cons(h, t) = pair(h, t) + 1 ----------------
    def chain_push(self, stack: int, value: int) -> None:
        """stack := cons(value, stack); value consumed."""
        out = self.reg()
        self.pair(value, stack, out)
        self.inc(out)
        self.transfer(out, stack)  # stack is 0 after pair consumed it

    def chain_pop(self, stack: int, head: int) -> None:
        """head := head(stack), stack := tail(stack); stack must be nonzero
        (zero diverges into the trap)."""
        self.decjz(stack, self.trap)
        tail = self.reg()
        self.unpair(stack, head, tail)  # z=stack consumed (ends 0)
        self.transfer(tail, stack)

    def tree_get(self, tree: int, length: int, idx: int, out: int) -> None:
        """out := element idx of the balanced-tree sequence (tree, length);
        tree, length, idx preserved.  idx must be < length.  out := 0 when
        length == 0."""
        tcur, n, k = self.reg(), self.reg(), self.reg()
        half, q, rr, cn, a, b = (self.reg() for _ in range(6))
        self.copy(tree, tcur)
        self.copy(length, n)
        self.copy(idx, k)
        self.zero(out)
        top = self.label()
        empty = self.label()
        single = self.label()
        left = self.label()
        done = self.label()
        self.place(top)
        self.copy(n, cn)
        self.decjz(cn, empty)
        self.decjz(cn, single)
        # n >= 2: half := ceil(n/2)
        self.copy(n, cn)
        self.divmod_const(cn, 2, q, rr)
        self.zero(half)
        self.transfer(q, half)
        self.transfer(rr, half)
        self.jump_if_lt(k, half, left)
        # right branch: k -= half, n -= half, tcur := snd
        self.sub(k, half)
        self.sub(n, half)
        self.unpair(tcur, a, b)
        self.transfer(b, tcur)  # tcur is 0 after unpair
        self.goto(top)
        self.place(left)
        self.move(half, n)
        self.unpair(tcur, a, b)
        self.transfer(a, tcur)
        self.goto(top)
        self.place(single)
        self.transfer(tcur, out)
        self.goto(done)
        self.place(empty)
        self.place(done)
