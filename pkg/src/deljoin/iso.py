"""Combinatorial isomorphism testing for small simplicial complexes.

Backtracking over vertex bijections with invariant pruning (f-vectors,
per-vertex incidence signatures, 1-skeleton consistency).  Worst case is
exponential; a hard node cap keeps it desk-scale, and hitting the cap is a
distinct outcome from "not isomorphic".
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .complexes import SimplicialComplex

DEFAULT_NODE_CAP = 500_000

ISOMORPHIC = "isomorphic"
NOT_ISOMORPHIC = "not_isomorphic"
CAP_EXCEEDED = "cap_exceeded"


@dataclass(frozen=True)
class IsoResult:
    status: str
    witness: dict[str, str] | None
    nodes: int

    def __bool__(self) -> bool:
        return self.status == ISOMORPHIC


def _signature(K: SimplicialComplex, v: str) -> tuple[int, ...]:
    counts = [0] * (K.dim + 1)
    for s in K:
        if v in s:
            counts[len(s) - 1] += 1
    return tuple(counts)


def _verify_witness(K: SimplicialComplex, L: SimplicialComplex,
                    witness: dict[str, str]) -> bool:
    if set(witness) != set(K.vertices):
        return False
    if set(witness.values()) != set(L.vertices):
        return False
    mapped = {tuple(sorted(witness[v] for v in s)) for s in K.simplices}
    return mapped == L.simplices


def isomorphic(K: SimplicialComplex, L: SimplicialComplex,
               witness: dict[str, str] | None = None,
               node_cap: int = DEFAULT_NODE_CAP) -> IsoResult:
    """Decide whether K and L are isomorphic as labeled complexes.

    With a witness, only verifies it.  Without, searches for one; the
    returned witness always passes ``_verify_witness``.
    """
    if witness is not None:
        ok = _verify_witness(K, L, witness)
        return IsoResult(ISOMORPHIC if ok else NOT_ISOMORPHIC,
                         dict(witness) if ok else None, 0)

    if K.f_vector() != L.f_vector():
        return IsoResult(NOT_ISOMORPHIC, None, 0)
    if not K.vertices:
        return IsoResult(ISOMORPHIC, {}, 0)

    sig_K = {v: _signature(K, v) for v in K.vertices}
    sig_L = {w: _signature(L, w) for w in L.vertices}
    by_sig_L: dict[tuple[int, ...], list[str]] = {}
    for w in L.vertices:
        by_sig_L.setdefault(sig_L[w], []).append(w)
    if Counter(sig_K.values()) != Counter(sig_L.values()):
        return IsoResult(NOT_ISOMORPHIC, None, 0)

    # Most constrained vertices first; ties broken by label for determinism.
    order = sorted(K.vertices,
                   key=lambda v: (len(by_sig_L[sig_K[v]]), sig_K[v], v))
    edges_K = {s for s in K.simplices if len(s) == 2}
    edges_L = {s for s in L.simplices if len(s) == 2}

    assignment: dict[str, str] = {}
    used: set[str] = set()
    nodes = 0

    def extend(i: int) -> str | None:
        nonlocal nodes
        if i == len(order):
            return ISOMORPHIC if _verify_witness(K, L, assignment) else None
        v = order[i]
        for w in by_sig_L[sig_K[v]]:
            if w in used:
                continue
            nodes += 1
            if nodes > node_cap:
                return CAP_EXCEEDED
            ok = True
            for u, x in assignment.items():
                if ((tuple(sorted((v, u))) in edges_K)
                        != (tuple(sorted((w, x))) in edges_L)):
                    ok = False
                    break
            if not ok:
                continue
            assignment[v] = w
            used.add(w)
            res = extend(i + 1)
            if res is not None:
                if res == ISOMORPHIC:
                    return ISOMORPHIC
                return res  # cap exceeded propagates
            del assignment[v]
            used.discard(w)
        return None

    res = extend(0)
    if res == ISOMORPHIC:
        return IsoResult(ISOMORPHIC, dict(assignment), nodes)
    if res == CAP_EXCEEDED:
        return IsoResult(CAP_EXCEEDED, None, nodes)
    return IsoResult(NOT_ISOMORPHIC, None, nodes)
