"""Cantor pairing and sequence coding.

One coding convention for the whole package: wherever a natural number
encodes a pair, a sequence, a program, a machine configuration or a trace,
it is this one.

    pair(a, b)   = (a+b)(a+b+1)/2 + b
    seq(xs)      = pair(len(xs), tree(xs))
    tree([])     = 0
    tree([x])    = x
    tree(xs)     = pair(tree(left), tree(right)),  left = first ceil(n/2)

The balanced tree keeps code magnitudes near value^length; a flat chain of
pairs would square the magnitude per element and becomes unrepresentable
beyond a dozen elements.  Both directions are total on the naturals;
``seq_decode`` refuses only length claims above ``MAX_SEQ_LEN`` (callers
give such codes their own degenerate meaning).
"""

from __future__ import annotations

try:  # GMP keeps the huge-code arithmetic fast; plain ints work too
    from gmpy2 import isqrt as _isqrt, mpz as _mpz
except ImportError:  # pragma: no cover
    from math import isqrt as _isqrt

    def _mpz(x):
        return x

MAX_SEQ_LEN = 1 << 23


def pair(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise ValueError("pairing is defined on naturals only")
    s = _mpz(a) + b
    return int(s * (s + 1) // 2 + b)


def unpair(z: int) -> tuple[int, int]:
    if z < 0:
        raise ValueError("pairing is defined on naturals only")
    # largest s with s(s+1)/2 <= z
    s = (_isqrt(8 * _mpz(z) + 1) - 1) // 2
    b = z - s * (s + 1) // 2
    return int(s - b), int(b)


def _pair_raw(a, b):
    s = a + b
    return s * (s + 1) // 2 + b


def _unpair_raw(z):
    s = (_isqrt(8 * z + 1) - 1) // 2
    b = z - s * (s + 1) // 2
    return s - b, b


def _tree_encode(xs, lo: int, hi: int):
    n = hi - lo
    if n == 0:
        return _mpz(0)
    if n == 1:
        return _mpz(xs[lo])
    mid = lo + (n + 1) // 2
    return _pair_raw(_tree_encode(xs, lo, mid), _tree_encode(xs, mid, hi))


def _tree_decode(t, n: int, out: list[int]) -> None:
    if n == 0:
        return
    if n == 1:
        out.append(int(t))
        return
    left_n = (n + 1) // 2
    a, b = _unpair_raw(t)
    _tree_decode(a, left_n, out)
    _tree_decode(b, n - left_n, out)


def seq_encode(items: list[int] | tuple[int, ...]) -> int:
    items = list(items)
    if any(x < 0 for x in items):
        raise ValueError("sequence elements must be naturals")
    return pair(len(items), _tree_encode(items, 0, len(items)))


def seq_length(code: int) -> int:
    """Claimed length of a sequence code (total, cheap)."""
    return unpair(code)[0]


def seq_decode(code: int) -> list[int] | None:
    """Inverse of seq_encode; None when the claimed length exceeds
    MAX_SEQ_LEN (no real sequence in this package is that long).

    Not injective: a zero-length claim ignores its tree component.
    Callers needing canonical codes re-encode and compare.
    """
    n, t = unpair(code)
    if n >= MAX_SEQ_LEN:
        return None
    out: list[int] = []
    _tree_decode(t, n, out)
    return out
