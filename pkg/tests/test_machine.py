import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from theorylab.machine import (
    CANONICAL_DIVERGER,
    Program,
    decode,
    dom_enum,
    encode,
    find_trace,
    format_program,
    kleene_T,
    parse_program,
    run,
    smn,
    smn_overhead,
    trace_output,
)
from theorylab.machine.library import (
    ADDITION,
    EVENS,
    HALT_ONLY,
    IDENTITY,
    SELF_LOOP,
    SUCCESSOR,
    compose,
    finite_acceptor,
)
from theorylab.pairing import pair, seq_decode, seq_encode, unpair


def random_program(rng, max_len=8, max_reg=3):
    n = rng.randint(1, max_len)
    instructions = []
    for _ in range(n):
        op = rng.randint(0, 2)
        if op == 0:
            instructions.append((0, rng.randint(0, max_reg)))
        elif op == 1:
            instructions.append((1, rng.randint(0, max_reg), rng.randint(0, n - 1)))
        else:
            instructions.append((2,))
    return Program(tuple(instructions), arity=rng.randint(0, 3))


class TestPairing:
    @given(st.integers(0, 10**9), st.integers(0, 10**9))
    def test_roundtrip(self, a, b):
        assert unpair(pair(a, b)) == (a, b)

    @given(st.integers(0, 10**9))
    def test_total(self, z):
        a, b = unpair(z)
        assert pair(a, b) == z

    @given(st.lists(st.integers(0, 50), max_size=6))
    def test_seq_roundtrip(self, xs):
        assert seq_decode(seq_encode(xs)) == xs


class TestCoding:
    def test_halt_only_roundtrip(self):
        assert decode(encode(HALT_ONLY)) == HALT_ONLY

    def test_zero_decodes_to_fixed_program(self):
        assert decode(0) == decode(0)
        assert isinstance(decode(0), Program)

    def test_injective_on_random_programs(self):
        rng = random.Random(7)
        programs = [random_program(rng) for _ in range(100)]
        codes = {}
        for p in programs:
            c = encode(p)
            assert decode(c) == p
            if c in codes:
                assert codes[c] == p
            codes[c] = p
        assert len({encode(p) for p in set(programs)}) == len(set(programs))

    def test_bad_labels_decode_to_diverger(self):
        # decjz 0 7 in a one-instruction program: label out of range
        bad = pair(1, seq_encode([pair(1, pair(0, 7))]))
        assert decode(bad) == CANONICAL_DIVERGER

    def test_text_format_roundtrip(self):
        for p in (HALT_ONLY, SUCCESSOR, ADDITION, EVENS):
            assert parse_program(format_program(p)) == p


class TestRun:
    def test_immediate_halt(self):
        out = run(encode(HALT_ONLY), (), 1)
        assert out.halted and out.value == 0

    def test_successor(self):
        out = run(SUCCESSOR, (4,), 100)
        assert out.halted and out.value == 5

    def test_self_loop_runs_forever(self):
        assert not run(SELF_LOOP, (0,), 10**6).halted

    def test_budget_monotone(self):
        rng = random.Random(3)
        for _ in range(50):
            p = random_program(rng)
            x = rng.randint(0, 5)
            small = run(p, (x,), 30)
            big = run(p, (x,), 1000)
            if small.halted:
                assert big.halted and big.value == small.value

    def test_cycle_detection_sound(self):
        # the diverger is flagged, and flagging never disagrees with honest stepping
        out = run(SELF_LOOP, (3,), 10**6)
        assert not out.halted


class TestTraces:
    def test_trace_accepted(self):
        i = encode(SUCCESSOR)
        tr = find_trace(i, 3, 100)
        assert tr is not None
        assert kleene_T(i, 3, tr.code)
        assert trace_output(tr.code) == 4

    def test_corrupted_trace_rejected(self):
        i = encode(SUCCESSOR)
        tr = find_trace(i, 3, 100)
        assert not kleene_T(i, 3, tr.code + 1)
        assert not kleene_T(i, 4, tr.code)
        assert not kleene_T(i + 1, 3, tr.code)

    def test_trace_search_matches_simulation(self):
        rng = random.Random(11)
        for _ in range(100):
            p = random_program(rng)
            i = encode(p)
            x = rng.randint(0, 4)
            b = rng.choice([10, 50, 200])
            tr = find_trace(i, x, b)
            out = run(i, (x,), b)
            assert (tr is not None) == out.halted
            if tr is not None:
                assert kleene_T(i, x, tr.code)
                assert trace_output(tr.code) == out.value

    def test_tiny_trace_found_by_blind_search(self):
        # the halting trace of the empty program is a small number
        empty = encode(Program((), arity=0))
        found = [y for y in range(10**5) if kleene_T(empty, 0, y)]
        assert found == [find_trace(empty, 0, 10).code]


class TestDomEnum:
    def test_empty_domain(self):
        assert dom_enum(encode(SELF_LOOP), 200) == set()

    def test_identity_total(self):
        d = dom_enum(encode(IDENTITY), 50)
        assert d == set(range(51))

    def test_evens_subset(self):
        d = dom_enum(encode(EVENS), 1000)
        assert d and all(x % 2 == 0 for x in d)

    def test_monotone_in_stage(self):
        i = encode(EVENS)
        assert dom_enum(i, 100) <= dom_enum(i, 300)

    def test_finite_acceptor(self):
        p = finite_acceptor({1, 4})
        assert dom_enum(encode(p), 100) == {1, 4}


class TestSmn:
    def test_addition_curry(self):
        c = encode(ADDITION)
        j = smn(1, 1, c, (3,))
        out = run(j, (4,), 10**4)
        assert out.halted and out.value == 7

    def test_injective_in_frozen_args(self):
        i = encode(IDENTITY)
        assert smn(1, 1, i, (0,)) != smn(1, 1, i, (1,))

    def test_agreement_on_random_instances(self):
        rng = random.Random(23)
        budget = 10**4
        for _ in range(200):
            p = random_program(rng)
            i = encode(p)
            m = rng.randint(1, 2)
            n = rng.randint(1, 2)
            ys = tuple(rng.randint(0, 6) for _ in range(m))
            zs = tuple(rng.randint(0, 6) for _ in range(n))
            direct = run(i, ys + zs, budget)
            curried = run(smn(m, n, i, ys), zs, budget + smn_overhead(ys, zs))
            assert direct.halted == curried.halted
            if direct.halted:
                assert direct.value == curried.value


class TestCompose:
    def test_compose_agrees_with_chained_runs(self):
        rng = random.Random(5)
        comp = compose(SUCCESSOR, ADDITION_UNARY := compose(SUCCESSOR, SUCCESSOR))
        for x in range(6):
            first = run(ADDITION_UNARY, (x,), 10**4)
            assert first.halted
            second = run(SUCCESSOR, (first.value,), 10**4)
            chained = run(comp, (x,), 10**5)
            assert chained.halted and chained.value == second.value
