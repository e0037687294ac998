"""Quotients of free involutions and the cohomological Z2-index.

The quotient of a free Z2Complex is a Delta-complex: one cell per orbit of
simplices, with ordered vertices and explicit face maps, but possibly with
several cells on the same vertex set (no barycentric subdivision).  The
double cover X -> X/T is classified by a 1-cocycle w built from a two-sheet
labeling of X; the index h(X) is the largest n with [w^n] != 0, where cup
powers of w are evaluated by the ordered front/back-face rule.  Whenever a
free Z2-map X -> S^m (antipodal) exists, h(X) <= m: that inequality is what
turns index computations into non-embeddability certificates downstream.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .complexes import Simplex
from .config import VerificationError
from .deleted import COPY1, Z2Complex
from .gf2 import ChainComplexGF2, bits_from_indices


@dataclass(frozen=True)
class QuotientCell:
    lift: Simplex              # lexicographically smaller orbit member
    ordered: tuple[str, ...]   # lift vertices ordered by orbit rank
    faces: tuple[int, ...]     # codim-1 cell indices, one per dropped vertex


class DeltaQuotient:
    """Delta-complex structure on the orbit space of a free Z2Complex."""

    __slots__ = ("source", "orbit_rank", "cells", "cell_index")

    def __init__(self, source: Z2Complex):
        T = source.involution
        X = source.complex
        orbit_rep = {v: min(v, T[v]) for v in X.vertices}
        rank_of = {rep: i for i, rep in enumerate(sorted(set(orbit_rep.values())))}
        self.source = source
        self.orbit_rank = {v: rank_of[orbit_rep[v]] for v in X.vertices}

        levels = X.simplices_by_dim()
        cells: list[list[QuotientCell]] = []
        self.cell_index: list[dict[Simplex, int]] = []
        for d, level in enumerate(levels):
            lifts = sorted({min(s, source.apply(s)) for s in level})
            if 2 * len(lifts) != len(level):
                raise VerificationError(
                    f"orbit count is not half the cell count in dim {d}")
            index = {lift: i for i, lift in enumerate(lifts)}
            built = []
            for lift in lifts:
                ranks = [self.orbit_rank[v] for v in lift]
                if len(set(ranks)) != len(ranks):
                    raise VerificationError(
                        f"cell {lift} repeats a vertex orbit (not free)")
                ordered = tuple(v for _, v in sorted(zip(ranks, lift)))
                faces = []
                for i in range(len(ordered)):
                    sub = tuple(sorted(ordered[:i] + ordered[i + 1:]))
                    if sub:
                        key = min(sub, source.apply(sub))
                        faces.append(self.cell_index[d - 1][key])
                built.append(QuotientCell(lift, ordered, tuple(faces)))
            cells.append(built)
            self.cell_index.append(index)
        self.cells = tuple(tuple(level) for level in cells)

    @property
    def dim(self) -> int:
        return len(self.cells) - 1

    def cell_counts(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.cells)

    def to_chain_complex(self) -> ChainComplexGF2:
        keys = [[c.lift for c in level] for level in self.cells]
        rows = [[bits_from_indices(c.faces) for c in level]
                for level in self.cells]
        return ChainComplexGF2(keys, rows)


def quotient(X: Z2Complex) -> DeltaQuotient:
    return DeltaQuotient(X)


@dataclass(frozen=True)
class CoverCocycle:
    """Sheet labeling of X and the induced 1-cocycle on the quotient."""

    sheet: dict[str, int]
    w_bits: int  # bit e set iff w is 1 on quotient 1-cell e


def cover_class(X: Z2Complex, Q: DeltaQuotient) -> CoverCocycle:
    """The degree-1 class of the double cover X -> X/T as a pinned cocycle.

    The sheet function sends the ``#1`` copy (else the lexicographically
    smaller orbit member) to 0.  Besides the cocycle condition, this
    verifies the reconstruction property: on each component of the
    quotient, w vanishes on a cycle basis exactly when the preimage of
    that component in X is disconnected.
    """
    T = X.involution
    sheet: dict[str, int] = {}
    for v in X.complex.vertices:
        if v in sheet:
            continue
        w = T[v]
        if v.endswith(COPY1) and not w.endswith(COPY1):
            zero = v
        elif w.endswith(COPY1) and not v.endswith(COPY1):
            zero = w
        else:
            zero = min(v, w)
        sheet[zero] = 0
        sheet[T[zero]] = 1

    w_bits = 0
    if Q.dim >= 1:
        for e, cell in enumerate(Q.cells[1]):
            a, b = cell.lift
            value = sheet[a] ^ sheet[b]
            ta, tb = X.apply(cell.lift)
            if (sheet[ta] ^ sheet[tb]) != value:
                raise VerificationError(f"w depends on the lift at {cell.lift}")
            if value:
                w_bits |= 1 << e
    if Q.dim >= 2:
        for cell in Q.cells[2]:
            total = 0
            for f in cell.faces:
                total ^= (w_bits >> f) & 1
            if total:
                raise VerificationError(f"delta w != 0 on {cell.lift}")

    _check_monodromy(X, Q, w_bits)
    return CoverCocycle(sheet, w_bits)


def _check_monodromy(X: Z2Complex, Q: DeltaQuotient, w_bits: int) -> None:
    n0 = len(Q.cells[0])
    comp = list(range(n0))

    def find(i: int) -> int:
        while comp[i] != i:
            comp[i] = comp[comp[i]]
            i = comp[i]
        return i

    # Spanning forest of the quotient 1-skeleton with w-potentials.
    potential = [0] * n0
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n0)]
    edges = []
    if Q.dim >= 1:
        for e, cell in enumerate(Q.cells[1]):
            u, v = cell.faces
            edges.append((e, u, v))
            adj[u].append((v, e))
            adj[v].append((u, e))
    seen = [False] * n0
    order = []
    for root in range(n0):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        while stack:
            u = stack.pop()
            order.append(u)
            for v, e in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    potential[v] = potential[u] ^ ((w_bits >> e) & 1)
                    a, b = find(u), find(v)
                    comp[a] = b
                    stack.append(v)
    trivial = [True] * n0
    for e, u, v in edges:
        if potential[u] ^ potential[v] ^ ((w_bits >> e) & 1):
            trivial[find(u)] = False

    # Connectivity of X over each quotient component.
    verts = list(X.complex.vertices)
    vid = {v: i for i, v in enumerate(verts)}
    xcomp = list(range(len(verts)))

    def xfind(i: int) -> int:
        while xcomp[i] != i:
            xcomp[i] = xcomp[xcomp[i]]
            i = xcomp[i]
        return i

    for s in X.complex.simplices_by_dim()[1] if X.complex.dim >= 1 else ():
        a, b = xfind(vid[s[0]]), xfind(vid[s[1]])
        if a != b:
            xcomp[a] = b

    for root in range(n0):
        members = [v for v in verts
                   if find(Q.cell_index[0][(min(v, X.involution[v]),)]) == find(root)]
        pieces = {xfind(vid[v]) for v in members}
        disconnected = len(pieces) == 2
        if len(pieces) not in (1, 2):
            raise VerificationError("cover has more than two sheets")
        if trivial[find(root)] != disconnected:
            raise VerificationError(
                "monodromy of w disagrees with cover connectivity")


def _cup_power_bits(Q: DeltaQuotient, w_bits: int, n: int) -> int:
    """The n-th cup power of w as a bitset over n-cells.

    By the ordered front/back-face rule the value on a cell with ordered
    vertices v_0..v_n is the product of w over the consecutive edge faces
    v_{i-1} v_i; an edge's w value is looked up on its quotient cell.
    """
    X = Q.source
    out = 0
    edge_index = Q.cell_index[1]
    for idx, cell in enumerate(Q.cells[n]):
        value = 1
        ordered = cell.ordered
        for i in range(1, n + 1):
            pair = tuple(sorted((ordered[i - 1], ordered[i])))
            e = edge_index[min(pair, X.apply(pair))]
            value &= (w_bits >> e) & 1
            if not value:
                break
        if value:
            out |= 1 << idx
    return out


@dataclass(frozen=True)
class IndexComputation:
    h: int
    ladder: tuple[bool, ...]  # ladder[n] = ([w^n] != 0), up to the last level tried
    quotient_counts: tuple[int, ...]


def cohomological_index(X: Z2Complex, full_ladder: bool = False
                        ) -> IndexComputation:
    """Largest n with [w^n] != 0 in H^n of the quotient.

    Ascends from n = 0 and stops at the first vanishing class; this is
    sound because w^{n+1} = w cup w^n is a coboundary whenever w^n is.
    With ``full_ladder`` every level up to dim is computed anyway (used by
    the property suite to confirm the ladder never resurrects).
    """
    if not len(X.complex):
        raise ValueError("index of the empty complex is undefined")
    Q = quotient(X)
    cover = cover_class(X, Q)
    cc = Q.to_chain_complex()

    ladder = [True]  # [w^0] = [1] != 0 since X is nonempty
    h = 0
    dead = False
    for n in range(1, Q.dim + 1):
        wn = _cup_power_bits(Q, cover.w_bits, n)
        if n < Q.dim:
            for cell in Q.cells[n + 1]:
                total = 0
                for f in cell.faces:
                    total ^= (wn >> f) & 1
                if total:
                    raise VerificationError(
                        f"cup power w^{n} is not a cocycle at {cell.lift}")
        nonzero = cc.boundaries[n].solve(wn) is None
        if dead and nonzero:
            raise VerificationError(
                f"cup ladder resurrects at level {n}")
        ladder.append(nonzero)
        if nonzero:
            h = n
        else:
            dead = True
            if not full_ladder:
                break
    return IndexComputation(h, tuple(ladder), Q.cell_counts())


def index_of(X: Z2Complex) -> int:
    return cohomological_index(X).h


@dataclass(frozen=True)
class SphereCertificate:
    """GF(2)-homology sphere verdict, tight when the index equals the dim."""

    subject: str
    n: int
    betti: tuple[int, ...]
    is_sphere: bool
    h: int | None
    tight: bool


def homology_sphere_certificate(X: Z2Complex, n: int) -> SphereCertificate:
    """True iff X has the Betti numbers of an n-sphere in dimension n;
    tight when additionally h(X) = n."""
    b = X.complex.to_chain_complex().betti()
    if n == 0:
        expected = [2]
    else:
        expected = [1] + [0] * (n - 1) + [1]
    is_sphere = (X.complex.dim == n) and (b == expected)
    h = None
    tight = False
    if is_sphere:
        h = index_of(X)
        tight = h == n
    return SphereCertificate(X.name, n, tuple(b), is_sphere, h, tight)


def index_report(X: Z2Complex) -> dict:
    """Index report for the CLI: homology, index, sphere certificate."""
    t0 = time.perf_counter()
    b = X.complex.to_chain_complex().betti()
    t1 = time.perf_counter()
    comp = cohomological_index(X)
    t2 = time.perf_counter()
    n = X.complex.dim
    cert = homology_sphere_certificate(X, n)
    return {
        "complex": X.name,
        "dim": n,
        "betti": b,
        "h": comp.h,
        "sphere_certificate": cert.is_sphere,
        "tight": cert.tight,
        "timings_ms": {
            "betti": round(1000 * (t1 - t0), 3),
            "index": round(1000 * (t2 - t1), 3),
        },
    }
