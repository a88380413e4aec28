"""Bijections between the naturals and the carriers of the structures."""
from __future__ import annotations

from fractions import Fraction
from math import isqrt


def pair(i: int, j: int) -> int:
    """Cantor pairing, ``pair(0, 0) == 0``."""
    return (i + j) * (i + j + 1) // 2 + j


def unpair(n: int) -> tuple[int, int]:
    w = (isqrt(8 * n + 1) - 1) // 2
    j = n - w * (w + 1) // 2
    return w - j, j


def int_to_nat(z: int) -> int:
    """0, 1, -1, 2, -2, ... -> 0, 1, 2, 3, 4, ..."""
    return 2 * z - 1 if z > 0 else -2 * z


def nat_to_int(n: int) -> int:
    return (n + 1) // 2 if n % 2 else -(n // 2)


def seq_to_nat(seq) -> int:
    """Finite sequences of naturals <-> naturals via gaps between 1-bits.

    ``()`` is 0; the first entry is the position of the lowest 1-bit and each
    further entry is the number of 0-bits skipped before the next 1-bit.
    """
    n, pos = 0, -1
    for s in seq:
        pos += s + 1
        n |= 1 << pos
    return n


def nat_to_seq(n: int) -> list[int]:
    out, prev, pos = [], -1, 0
    while n:
        if n & 1:
            out.append(pos - prev - 1)
            prev = pos
        n >>= 1
        pos += 1
    return out


def trailing_seq_to_nat(e) -> int:
    """Sequences whose last entry is nonzero (or empty) <-> naturals."""
    if not e:
        return 0
    if e[-1] == 0:
        raise ValueError("last entry must be nonzero")
    return seq_to_nat(list(e[:-1]) + [e[-1] - 1])


def nat_to_trailing_seq(n: int) -> list[int]:
    if n == 0:
        return []
    s = nat_to_seq(n)
    s[-1] += 1
    return s


def calkin_wilf(k: int) -> Fraction:
    """k-th positive rational (1-based) in breadth-first Calkin-Wilf order."""
    if k < 1:
        raise ValueError("Calkin-Wilf index starts at 1")
    a, b = 1, 1
    for bit in bin(k)[3:]:
        if bit == "0":
            a, b = a, a + b
        else:
            a, b = a + b, b
    return Fraction(a, b)


def calkin_wilf_index(q: Fraction) -> int:
    a, b = q.numerator, q.denominator
    if a <= 0:
        raise ValueError("Calkin-Wilf covers positive rationals only")
    bits = []
    while a != b:
        if a < b:
            bits.append("0")
            b -= a
        else:
            bits.append("1")
            a -= b
    return int("1" + "".join(reversed(bits)), 2)


def nat_to_rational(n: int) -> Fraction:
    """0, 1, -1, 1/2, -1/2, 2, -2, ... (sign-interleaved Calkin-Wilf)."""
    if n == 0:
        return Fraction(0)
    q = calkin_wilf((n + 1) // 2)
    return q if n % 2 else -q


def rational_to_nat(q: Fraction) -> int:
    if q == 0:
        return 0
    k = calkin_wilf_index(abs(q))
    return 2 * k - 1 if q > 0 else 2 * k
