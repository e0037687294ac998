"""Deleted joins, deleted products, and the swap involutions.

The simplicial deleted join of K lives on two labeled copies of K's
vertices (``v#1``, ``v#2``); its simplices are unions of two disjoint faces
of K, one per copy, not both empty.  The deleted product keeps ordered
pairs of disjoint nonempty simplices as polytopal cells and is never
triangulated: GF(2) cellular homology works on the pairs directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from .complexes import (JOIN_LEFT, JOIN_RIGHT, Simplex, SimplicialComplex,
                        cone_with_apex, join)
from .config import VerificationError, guard_cells
from .gf2 import ChainComplexGF2

COPY1 = "#1"
COPY2 = "#2"


class Z2Complex:
    """A simplicial complex with a free simplicial involution.

    Freeness is checked in its testable form: T has no fixed vertex and no
    simplex contains both v and T(v).
    """

    __slots__ = ("complex", "involution")

    def __init__(self, complex: SimplicialComplex,
                 involution: Mapping[str, str], check: bool = True):
        self.complex = complex
        self.involution = dict(involution)
        if check:
            self.validate()

    def validate(self) -> None:
        T = self.involution
        verts = set(self.complex.vertices)
        if set(T) != verts:
            raise ValueError("involution domain differs from the vertex set")
        for v in verts:
            w = T[v]
            if w not in verts:
                raise ValueError(f"involution leaves the vertex set at {v!r}")
            if w == v:
                raise ValueError(f"involution fixes vertex {v!r}")
            if T[w] != v:
                raise ValueError(f"involution is not self-inverse at {v!r}")
        for s in self.complex:
            ts = tuple(sorted(T[v] for v in s))
            if ts not in self.complex.simplices:
                raise ValueError(f"involution is not simplicial on {s}")
            if any(T[v] in s for v in s):
                raise ValueError(f"involution is not free on {s}")

    @property
    def name(self) -> str:
        return self.complex.name

    @property
    def dim(self) -> int:
        return self.complex.dim

    def apply(self, s: Simplex) -> Simplex:
        return tuple(sorted(self.involution[v] for v in s))

    def to_chain_complex(self) -> ChainComplexGF2:
        return self.complex.to_chain_complex()

    def __repr__(self) -> str:
        return f"Z2Complex({self.complex!r})"


def cross_polytope_boundary(n: int) -> Z2Complex:
    """Boundary of the (n+1)-dimensional cross-polytope with the antipodal
    involution a_i <-> b_i: the canonical free simplicial n-sphere."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    pairs = [(f"a{i}", f"b{i}") for i in range(n + 1)]
    simps = []
    for k in range(1, n + 2):
        for axes in combinations(range(n + 1), k):
            for signs in range(1 << k):
                simps.append(tuple(sorted(
                    pairs[axes[j]][(signs >> j) & 1] for j in range(k))))
    complex = SimplicialComplex(f"crosspoly({n})", simps, check=False)
    T = {}
    for a, b in pairs:
        T[a] = b
        T[b] = a
    return Z2Complex(complex, T)


def _copy_label(v: str, which: int) -> str:
    return v + (COPY1 if which == 1 else COPY2)


def deleted_join(K: SimplicialComplex, cap: int | None = None) -> Z2Complex:
    """Simplicial deleted join: disjoint face pairs on two vertex copies.

    One-sided cells (one empty factor) are included; the wholly empty pair
    is not.  The involution swaps the copies, and the result is free: a
    simplex never contains both copies of a vertex.
    """
    if not len(K):
        raise ValueError("deleted join needs a nonempty complex")
    faces: list[Simplex | None] = [None]
    faces.extend(K)
    vertex_bit = {v: 1 << i for i, v in enumerate(K.vertices)}
    masks = [0] + [sum(vertex_bit[v] for v in s) for s in K]
    simps = []
    count = 0
    for i, s in enumerate(faces):
        for j, t in enumerate(faces):
            if i == 0 and j == 0:
                continue
            if masks[i] & masks[j]:
                continue
            left = tuple(_copy_label(v, 1) for v in s) if s else ()
            right = tuple(_copy_label(v, 2) for v in t) if t else ()
            simps.append(tuple(sorted(left + right)))
            count += 1
            if count % 4096 == 0:
                guard_cells(count, cap, f"deleted_join({K.name})")
    guard_cells(count, cap, f"deleted_join({K.name})")
    complex = SimplicialComplex(f"deljoin({K.name})", simps, check=False)
    T = {}
    for v in K.vertices:
        T[_copy_label(v, 1)] = _copy_label(v, 2)
        T[_copy_label(v, 2)] = _copy_label(v, 1)
    return Z2Complex(complex, T)


Cell = tuple[Simplex, Simplex]


class CellComplex:
    """Polytopal cell complex of ordered pairs of disjoint simplices.

    The boundary of (s, t) over GF(2) is the sum of (s', t) over codim-1
    faces s' of s plus (s, t') over codim-1 faces t' of t; faces of
    disjoint simplices stay disjoint, so every face is again a cell.
    """

    __slots__ = ("name", "cells")

    def __init__(self, name: str, cells: list[Cell]):
        by_dim: list[list[Cell]] = []
        for s, t in cells:
            if not s or not t:
                raise ValueError("cell parts must be nonempty")
            if set(s) & set(t):
                raise ValueError(f"cell parts overlap: {(s, t)}")
            d = len(s) + len(t) - 2
            while len(by_dim) <= d:
                by_dim.append([])
            by_dim[d].append((s, t))
        self.name = name
        self.cells = tuple(tuple(sorted(level)) for level in by_dim)

    @property
    def dim(self) -> int:
        return len(self.cells) - 1

    def cell_counts(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.cells)

    def swap(self, cell: Cell) -> Cell:
        s, t = cell
        return (t, s)

    @staticmethod
    def cell_faces(cell: Cell):
        s, t = cell
        if len(s) > 1:
            for i in range(len(s)):
                yield (s[:i] + s[i + 1:], t)
        if len(t) > 1:
            for i in range(len(t)):
                yield (s, t[:i] + t[i + 1:])

    def to_chain_complex(self) -> ChainComplexGF2:
        return ChainComplexGF2.from_cells(
            self.cells, lambda d, cell: self.cell_faces(cell))

    def check_free_swap(self) -> None:
        """The swap has no fixed cell and permutes cells dimension-wise."""
        for level in self.cells:
            present = set(level)
            for cell in level:
                sw = self.swap(cell)
                if sw == cell:
                    raise VerificationError(f"swap fixes cell {cell}")
                if sw not in present:
                    raise VerificationError(f"swap leaves the complex: {cell}")

    def __repr__(self) -> str:
        return f"CellComplex({self.name!r}, cells={self.cell_counts()})"


def deleted_product(K: SimplicialComplex, cap: int | None = None) -> CellComplex:
    """All ordered pairs of disjoint nonempty simplices of K."""
    if len(K.vertices) < 2:
        raise ValueError("deleted product needs at least 2 vertices")
    simps = list(K)
    vertex_bit = {v: 1 << i for i, v in enumerate(K.vertices)}
    masks = [sum(vertex_bit[v] for v in s) for s in simps]
    cells = []
    count = 0
    for i, s in enumerate(simps):
        for j, t in enumerate(simps):
            if masks[i] & masks[j]:
                continue
            cells.append((s, t))
            count += 1
            if count % 4096 == 0:
                guard_cells(count, cap, f"deleted_product({K.name})")
    guard_cells(count, cap, f"deleted_product({K.name})")
    return CellComplex(f"delprod({K.name})", cells)


def z2_join(X: Z2Complex, Y: Z2Complex, cap: int | None = None) -> Z2Complex:
    """Join of free involution complexes with the side-wise involution."""
    J = join(X.complex, Y.complex, cap=cap)
    T = {}
    for v, w in X.involution.items():
        T[JOIN_LEFT + v] = JOIN_LEFT + w
    for v, w in Y.involution.items():
        T[JOIN_RIGHT + v] = JOIN_RIGHT + w
    return Z2Complex(J, T)


@dataclass(frozen=True)
class JoinDecomposition:
    """Explicit isomorphism between the deleted join of a join and the join
    of the deleted joins."""

    left_name: str
    right_name: str
    bijection: dict[str, str]
    counts: tuple[int, ...]
    passed: bool


def verify_join_decomposition(K: SimplicialComplex, L: SimplicialComplex,
                              cap: int | None = None) -> JoinDecomposition:
    """Check, simplex by simplex, that deljoin(K*L) = deljoin(K) * deljoin(L)
    under the vertex map (side/v)#copy -> side-copy of v#copy, and that the
    map commutes with both involutions.

    Failure raises: it would mean a construction bug, not a mathematical
    possibility.
    """
    if not len(K) or not len(L):
        raise ValueError("decomposition check needs nonempty complexes")
    A = deleted_join(join(K, L, cap=cap), cap=cap)
    B = z2_join(deleted_join(K, cap=cap), deleted_join(L, cap=cap), cap=cap)

    bijection: dict[str, str] = {}
    for side, source in ((JOIN_LEFT, K), (JOIN_RIGHT, L)):
        for v in source.vertices:
            for copy in (COPY1, COPY2):
                bijection[side + v + copy] = side + v + copy

    ok = set(A.complex.vertices) == set(bijection)
    ok = ok and set(B.complex.vertices) == set(bijection.values())
    if ok:
        mapped = {tuple(sorted(bijection[v] for v in s))
                  for s in A.complex.simplices}
        ok = mapped == B.complex.simplices
    if ok:
        for v, w in bijection.items():
            if bijection[A.involution[v]] != B.involution[w]:
                ok = False
                break
    if not ok:
        raise VerificationError(
            f"join decomposition failed for ({K.name}, {L.name})")
    counts = A.complex.f_vector()
    if counts != B.complex.f_vector():
        raise VerificationError("decomposition sides disagree on f-vectors")
    return JoinDecomposition(K.name, L.name, bijection, counts, True)


@dataclass(frozen=True)
class ConeCollapseReport:
    """Homology comparison for collapsing apex x K and K x apex in the
    deleted product of a cone.

    Collapsing each of the two swapped subcomplexes to its own point must
    reproduce the GF(2) homology of the suspension of the deleted product
    of K itself.
    """

    subject: str
    quotient_betti: tuple[int, ...]
    suspension_betti: tuple[int, ...]
    matches: bool


def _suspension_betti(b: list[int]) -> tuple[int, ...]:
    """Unreduced Betti of the suspension from unreduced Betti of the base."""
    if not b:
        return (2,)  # suspension of the empty space is a 0-sphere
    out = [1, b[0] - 1] + list(b[1:])
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _trim(b: list[int]) -> tuple[int, ...]:
    out = list(b)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def cone_collapse_report(K: SimplicialComplex,
                         cap: int | None = None) -> ConeCollapseReport:
    """Collapse the two apex-sided subcomplexes of delprod(cone K) and
    compare the quotient homology with the suspension of delprod(K)."""
    if not len(K):
        raise ValueError("cone collapse needs a nonempty complex")
    C, apex = cone_with_apex(K)
    X = deleted_product(C, cap=cap)

    apex_simplex = (apex,)
    A = {(apex_simplex, s) for s in K}
    B = {(s, apex_simplex) for s in K}
    for cell in A:
        if X.swap(cell) not in B:
            raise VerificationError("swap does not exchange the collapsed sides")
    for cell in A | B:
        for face in CellComplex.cell_faces(cell):
            if face not in A and face not in B:
                raise VerificationError("collapsed sides are not subcomplexes")

    # Quotient cell structure: drop the collapsed cells, add two points;
    # 1-cells with a collapsed endpoint attach to the new points instead.
    # The sentinels have equal parts, which no genuine cell can have, and
    # "!" sorts before any vertex label.
    point_a = (("!pole_a",), ("!pole_a",))
    point_b = (("!pole_b",), ("!pole_b",))
    collapsed = A | B
    cells: list[list] = [[point_a, point_b]]
    for d, level in enumerate(X.cells):
        kept = [cell for cell in level if cell not in collapsed]
        if d == 0:
            cells[0].extend(kept)
        else:
            while len(cells) <= d:
                cells.append([])
            cells[d] = kept
    while len(cells) > 1 and not cells[-1]:
        cells.pop()
    cells = [sorted(level) for level in cells]

    def faces(d: int, cell):
        for face in CellComplex.cell_faces(cell):
            if face in A:
                if d == 1:
                    yield point_a
            elif face in B:
                if d == 1:
                    yield point_b
            else:
                yield face

    quotient = ChainComplexGF2.from_cells(cells, faces)
    q_betti = _trim(quotient.betti())

    if len(K.vertices) >= 2:
        base_betti = deleted_product(K, cap=cap).to_chain_complex().betti()
    else:
        base_betti = []  # the deleted product of a point is empty
    s_betti = _suspension_betti(base_betti)
    return ConeCollapseReport(K.name, q_betti, s_betti, q_betti == s_betti)
