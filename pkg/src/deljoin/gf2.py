"""Sparse GF(2) linear algebra and cellular chain complexes.

Matrices are stored row-wise as int bitsets (bit j = column j).  The hot
elimination kernels live in the compiled extension ``_gf2kernel``; a pure
Python fallback with the identical interface is selected at import when the
extension is unavailable, or when ``DELJOIN_GF2_BACKEND=pure`` is set.
"""

from __future__ import annotations

import os
from typing import Callable, Iterable, Sequence

from .config import ENV_GF2_BACKEND, CapExceeded, VerificationError

_requested = os.environ.get(ENV_GF2_BACKEND, "").strip().lower()
if _requested == "pure":
    from . import _gf2py as _kernel
elif _requested == "compiled":
    from . import _gf2kernel as _kernel  # type: ignore[no-redef]
else:
    try:
        from . import _gf2kernel as _kernel  # type: ignore[no-redef]
    except ImportError:
        from . import _gf2py as _kernel  # type: ignore[no-redef]

BACKEND = _kernel.NAME

# Elimination on anything larger than this is a bug at desk scale.
MATRIX_ENTRY_CAP = 1_000_000_000


class GF2Matrix:
    """Immutable matrix over the two-element field."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[int]):
        if nrows < 0 or ncols < 0 or len(rows) != nrows:
            raise ValueError("inconsistent matrix shape")
        if nrows * ncols > MATRIX_ENTRY_CAP:
            raise CapExceeded(f"{nrows}x{ncols} matrix exceeds entry cap")
        mask = (1 << ncols) - 1
        for r in rows:
            if r & ~mask:
                raise ValueError("row has bits outside the column range")
        self.nrows = nrows
        self.ncols = ncols
        self._rows = tuple(rows)

    @classmethod
    def from_dense(cls, entries: Sequence[Sequence[int]],
                   ncols: int | None = None) -> "GF2Matrix":
        rows = []
        width = ncols if ncols is not None else (len(entries[0]) if entries else 0)
        for e in entries:
            acc = 0
            for j, bit in enumerate(e):
                if bit & 1:
                    acc |= 1 << j
            rows.append(acc)
        return cls(len(entries), width, rows)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "GF2Matrix":
        return cls(nrows, ncols, [0] * nrows)

    def row(self, i: int) -> int:
        return self._rows[i]

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def entry(self, i: int, j: int) -> int:
        return (self._rows[i] >> j) & 1

    def rank(self) -> int:
        return _kernel.rank(list(self._rows), self.ncols)

    def solve(self, rhs: int) -> int | None:
        """One x with A x = rhs (bit i of rhs = row i), or None."""
        if rhs >> self.nrows:
            raise ValueError("rhs has bits beyond the row count")
        return _kernel.solve(list(self._rows), self.ncols, rhs)

    def transpose(self) -> "GF2Matrix":
        cols = [0] * self.ncols
        for i, r in enumerate(self._rows):
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= 1 << i
                r ^= low
        return GF2Matrix(self.ncols, self.nrows, cols)

    def mul(self, other: "GF2Matrix") -> "GF2Matrix":
        """Matrix product over GF(2): rows of self combine rows of other."""
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch: {self.ncols} vs {other.nrows}")
        out = []
        for r in self._rows:
            acc = 0
            while r:
                low = r & -r
                acc ^= other._rows[low.bit_length() - 1]
                r ^= low
            out.append(acc)
        return GF2Matrix(self.nrows, other.ncols, out)

    def is_zero(self) -> bool:
        return all(r == 0 for r in self._rows)

    def kernel_basis(self) -> list[int]:
        """Basis of {x : A x = 0} as column bitsets (free variables method)."""
        # Fully reduced row echelon, done in Python: this is not on the hot
        # path.  Invariant: no pivot row contains another pivot column.
        pivots: dict[int, int] = {}  # column -> reduced row
        for row in self._rows:
            for c, pr in pivots.items():
                if (row >> c) & 1:
                    row ^= pr
            if row == 0:
                continue
            lead = row.bit_length() - 1
            for c, pr in list(pivots.items()):
                if (pr >> lead) & 1:
                    pivots[c] = pr ^ row
            pivots[lead] = row
        basis = []
        pivot_cols = set(pivots)
        for f in range(self.ncols):
            if f in pivot_cols:
                continue
            vec = 1 << f
            for c, pr in pivots.items():
                if (pr >> f) & 1:
                    vec |= 1 << c
            basis.append(vec)
        return basis

    def dump_lines(self) -> list[str]:
        """Debug dump: first line "rows cols", then one 0/1 line per row."""
        lines = [f"{self.nrows} {self.ncols}"]
        for r in self._rows:
            lines.append("".join("1" if (r >> j) & 1 else "0"
                                 for j in range(self.ncols)))
        return lines

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GF2Matrix):
            return NotImplemented
        return (self.nrows, self.ncols, self._rows) == \
            (other.nrows, other.ncols, other._rows)

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, self._rows))

    def __repr__(self) -> str:
        return f"GF2Matrix({self.nrows}x{self.ncols})"


def rank(A: GF2Matrix) -> int:
    return A.rank()


def solve(A: GF2Matrix, rhs: int) -> int | None:
    return A.solve(rhs)


def bits_from_indices(indices: Iterable[int]) -> int:
    acc = 0
    for i in indices:
        acc ^= 1 << i
    return acc


class ChainComplexGF2:
    """Cellular chain complex over GF(2).

    ``cells[i]`` is the canonically ordered list of i-cells (any hashable,
    printable keys).  ``boundary_rows[i]`` holds, for each i-cell, the bitset
    of its codim-1 faces; as a matrix this is the transpose of the boundary
    operator from dimension i to i-1, which is all rank and solve need.
    """

    __slots__ = ("cells", "boundaries")

    def __init__(self, cells: Sequence[Sequence[object]],
                 boundary_rows: Sequence[Sequence[int]]):
        if len(cells) != len(boundary_rows):
            raise ValueError("cells and boundaries disagree on dimensions")
        mats = []
        for i, rows in enumerate(boundary_rows):
            ncols = len(cells[i - 1]) if i > 0 else 0
            mats.append(GF2Matrix(len(cells[i]), ncols, rows))
        self.cells = tuple(tuple(level) for level in cells)
        self.boundaries = tuple(mats)

    @classmethod
    def from_cells(cls, cells: Sequence[Sequence[object]],
                   faces: Callable[[int, object], Iterable[object]]
                   ) -> "ChainComplexGF2":
        """Build boundaries from a face function (dim, cell) -> face cells."""
        index = [{c: i for i, c in enumerate(level)} for level in cells]
        rows_per_dim: list[list[int]] = []
        for d, level in enumerate(cells):
            rows = []
            for c in level:
                if d == 0:
                    rows.append(0)
                    continue
                lookup = index[d - 1]
                rows.append(bits_from_indices(lookup[f] for f in faces(d, c)))
            rows_per_dim.append(rows)
        return cls(cells, rows_per_dim)

    @classmethod
    def from_simplicial(cls, K) -> "ChainComplexGF2":
        levels = K.simplices_by_dim()

        def faces(d: int, s: tuple[str, ...]):
            return (s[:i] + s[i + 1:] for i in range(len(s)))

        return cls.from_cells(levels, faces)

    @property
    def dim(self) -> int:
        return len(self.cells) - 1

    def cell_counts(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.cells)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * len(level) for i, level in enumerate(self.cells))

    def validate(self) -> None:
        """Check boundary-of-boundary vanishes and ranks are transpose-stable."""
        for i in range(1, len(self.boundaries)):
            # rows of B_i are i-cell face bitsets, so composing boundaries is
            # B_i followed by B_{i-1} on the row side.
            if not self.boundaries[i].mul(self.boundaries[i - 1]).is_zero():
                raise VerificationError(
                    f"boundary^2 != 0 between dims {i} and {i - 2}")
        for B in self.boundaries:
            if B.rank() != B.transpose().rank():
                raise VerificationError("rank(A) != rank(A^T)")

    def betti(self) -> list[int]:
        """Unreduced GF(2) Betti numbers, with the Euler cross-check."""
        n = len(self.cells)
        ranks = [B.rank() for B in self.boundaries] + [0]
        out = [len(self.cells[i]) - ranks[i] - ranks[i + 1] for i in range(n)]
        if any(b < 0 for b in out):
            raise VerificationError(f"negative Betti number: {out}")
        euler_cells = self.euler_characteristic()
        euler_betti = sum((-1) ** i * b for i, b in enumerate(out))
        if euler_cells != euler_betti:
            raise VerificationError(
                f"Euler mismatch: cells give {euler_cells}, "
                f"Betti give {euler_betti}")
        return out


def chain_complex(source) -> ChainComplexGF2:
    """Chain complex of a simplicial complex, cell complex, or quotient."""
    builder = getattr(source, "to_chain_complex", None)
    if builder is None:
        raise TypeError(f"cannot build a chain complex from {type(source)!r}")
    return builder()


def betti(source) -> list[int]:
    """GF(2) Betti numbers of any chain-complex-bearing object."""
    if isinstance(source, ChainComplexGF2):
        return source.betti()
    return chain_complex(source).betti()
