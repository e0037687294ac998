"""Pure-Python GF(2) elimination kernels on int bitsets.

Fallback backend; same interface as the compiled ``_gf2kernel`` module.
Bit j of a row int is the entry in column j.
"""

from __future__ import annotations

NAME = "pure"


def rank(rows: list[int], ncols: int) -> int:
    """GF(2) rank via leading-bit reduction."""
    if ncols == 0:
        return 0
    pivots: dict[int, int] = {}
    rk = 0
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = row
                rk += 1
                break
            row ^= piv
    return rk


def solve(rows: list[int], ncols: int, rhs: int) -> int | None:
    """One solution x of A x = rhs (free variables 0), or None if inconsistent.

    ``rows`` are the rows of A; bit i of ``rhs`` is the right-hand side of
    row i; the result has bit j set iff x_j = 1.
    """
    if ncols == 0:
        return 0 if rhs == 0 else None
    # Keep the rhs in bit 0 so leading-bit reduction always pivots on a
    # genuine column; a row reduced to exactly 1 is an inconsistency.
    pivots: dict[int, int] = {}
    for i, row in enumerate(rows):
        acc = (row << 1) | ((rhs >> i) & 1)
        while acc > 1:
            lead = acc.bit_length() - 1
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = acc
                acc = 0
                break
            acc ^= piv
        if acc == 1:
            return None
    x = 0
    for lead in sorted(pivots):
        acc = pivots[lead]
        col = lead - 1
        rest = (acc >> 1) & ~(1 << col)
        bit = (acc & 1) ^ ((rest & x).bit_count() & 1)
        if bit:
            x |= 1 << col
    return x
