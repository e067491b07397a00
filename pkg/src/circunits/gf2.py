"""GF(2) linear algebra on word-packed rows, plus the mod-2 coefficient ring.

Rows and ring elements are Python ints used as bitsets, so a row of any
width fits in one object and elimination is shift/xor work.  The mod-2
coefficient ring is Z[alpha]/2: since alpha^m = -1 = 1 there, exponents
simply wrap at m.
"""

from __future__ import annotations

__all__ = [
    "gf2_rank",
    "gf2_rank_nullity",
    "gf2_rref",
    "pack_bits",
    "unpack_bits",
    "cyc_mul_f2",
    "cyc_square_f2",
    "cyc_pow_f2",
]


def pack_bits(bits) -> int:
    """Pack an iterable of 0/1 into an int, bit i = bits[i]."""
    value = 0
    for i, b in enumerate(bits):
        if b & 1:
            value |= 1 << i
    return value


def unpack_bits(value: int, width: int) -> tuple[int, ...]:
    return tuple((value >> i) & 1 for i in range(width))


def gf2_rref(rows: list[int]) -> list[int]:
    """Reduced row echelon form; returns the nonzero rows.

    Pivots are chosen from the highest set bit downward, which keeps the
    result deterministic for a given input order.
    """
    reduced: list[int] = []
    for row in rows:
        for r in reduced:
            if row & (1 << (r.bit_length() - 1)):
                row ^= r
        if row:
            # clear this pivot from earlier rows
            pivot = 1 << (row.bit_length() - 1)
            reduced = [r ^ row if r & pivot else r for r in reduced]
            reduced.append(row)
    reduced.sort(reverse=True)
    return reduced


def gf2_rank(rows: list[int]) -> int:
    return len(gf2_rref(rows))


def gf2_rank_nullity(rows: list[int], n_cols: int) -> tuple[int, int]:
    rank = gf2_rank(rows)
    return rank, n_cols - rank


# ---------------------------------------------------------------------- #
# the ring Z[alpha]/2 as m-bit masks


def cyc_mul_f2(a: int, b: int, m: int) -> int:
    """Product of two mod-2 classes packed as m-bit masks."""
    acc = 0
    x, shift = a, 0
    while x:
        if x & 1:
            acc ^= b << shift
        x >>= 1
        shift += 1
    # one fold suffices: the raw product has fewer than 2m bits
    return (acc ^ (acc >> m)) & ((1 << m) - 1)


def cyc_square_f2(a: int, m: int) -> int:
    """Squaring mod 2 doubles each exponent (the Frobenius map)."""
    acc = 0
    j = 0
    x = a
    while x:
        if x & 1:
            e = 2 * j
            if e >= m:
                e -= m
            acc ^= 1 << e
        x >>= 1
        j += 1
    return acc


def cyc_pow_f2(a: int, exponent: int, m: int) -> int:
    if exponent < 0:
        raise ValueError("negative exponents are not defined in the parity ring")
    result = 1
    base = a
    e = exponent
    while e:
        if e & 1:
            result = cyc_mul_f2(result, base, m)
        base = cyc_square_f2(base, m)
        e >>= 1
    return result
