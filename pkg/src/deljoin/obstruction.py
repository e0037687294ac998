"""Non-embeddability certificates and the verification checks built on them.

The engine: an embedding of K into R^d induces a free Z2-map from the
deleted join of K to the antipodal d-sphere, which forces h <= d.  So
h(deleted join) >= d + 1 certifies that no embedding into R^d exists.  The
converse is never claimed: verdicts are one-sided.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

from .complexes import (SimplicialComplex, discrete_points, join,
                        links_intersection, simplex_skeleton)
from .config import CapExceeded
from .deleted import (cone_collapse_report, deleted_join,
                      verify_join_decomposition, z2_join)
from .index import homology_sphere_certificate, index_of

CERTIFIED = "CERTIFIED_NONEMBEDDABLE"
NO_CERTIFICATE = "NO_CERTIFICATE"
INDETERMINATE = "INDETERMINATE"

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class Certificate:
    subject: str
    dim: int
    h: int | None
    verdict: str
    justification: tuple[str, ...]

    def to_report(self) -> dict:
        return {
            "check": "certify",
            "inputs": {"complex": self.subject, "dim": self.dim},
            "h_values": {"deleted_join": self.h},
            "verdict": self.verdict,
            "hypothesis_flags": [],
            "cross_checks": [],
            "justification": list(self.justification),
        }


def _certificate_from_h(name: str, d: int, h: int) -> Certificate:
    if h >= d + 1:
        verdict = CERTIFIED
        tail = (f"h = {h} >= {d + 1} rules such a map out, "
                f"so no embedding into R^{d} exists",)
    else:
        verdict = NO_CERTIFICATE
        tail = (f"h = {h} <= {d} is compatible with such a map; "
                "no conclusion (the certificate is one-sided)",)
    return Certificate(name, d, h, verdict, (
        f"deleted join of {name} has cohomological index h = {h}",
        f"an embedding into R^{d} would induce a free Z2-map from the "
        f"deleted join to the antipodal {d}-sphere, forcing h <= {d}",
    ) + tail)


def certify_nonembeddable(K: SimplicialComplex, d: int,
                          cap: int | None = None) -> Certificate:
    """One-sided certificate: CERTIFIED_NONEMBEDDABLE iff h >= d + 1.

    A cap overrun yields INDETERMINATE, distinct from both verdicts.
    """
    if d < 0:
        raise ValueError(f"target dimension must be >= 0, got {d}")
    if not len(K):
        return Certificate(K.name, d, None, NO_CERTIFICATE,
                           ("the empty complex embeds everywhere",))
    try:
        h = index_of(deleted_join(K, cap=cap))
    except CapExceeded as exc:
        return Certificate(K.name, d, None, INDETERMINATE,
                           (f"cell cap exceeded: {exc}",))
    return _certificate_from_h(K.name, d, h)


def _timed(reports: dict, key: str, t0: float) -> float:
    t1 = time.perf_counter()
    reports[key] = round(1000 * (t1 - t0), 3)
    return t1


def theorem1_check(K: SimplicialComplex, cap: int | None = None) -> dict:
    """Joining with three points raises the index by exactly 2.

    Verifies h(deljoin(K * [3])) = h(deljoin(K)) + 2 along two routes (the
    joined complex directly, and the join of the two deleted joins, which
    the decomposition check proves isomorphic), and emits the certificate
    implication table: every non-embeddability certificate for K in R^d
    lifts to one for K * [3] in R^{d+2}.
    """
    timings: dict = {}
    t0 = time.perf_counter()
    three = discrete_points(3)
    try:
        h1 = index_of(deleted_join(K, cap=cap))
        t0 = _timed(timings, "h_base", t0)
        joined = join(K, three, cap=cap)
        h2 = index_of(deleted_join(joined, cap=cap))
        t0 = _timed(timings, "h_joined", t0)
        decomposition = verify_join_decomposition(K, three, cap=cap)
        h_cross = index_of(z2_join(deleted_join(K, cap=cap),
                                   deleted_join(three), cap=cap))
        t0 = _timed(timings, "h_cross_route", t0)
    except CapExceeded as exc:
        return {"check": "theorem1", "inputs": {"complex": K.name},
                "h_values": {}, "verdict": INDETERMINATE,
                "hypothesis_flags": [], "cross_checks": [],
                "error": str(exc), "timings_ms": timings}
    plus2 = h2 == h1 + 2
    routes_agree = h_cross == h2
    table = [{"d": d, "base_certified": True, "joined_dim": d + 2,
              "joined_certified": h2 >= d + 3}
             for d in range(h1)]
    implications_ok = all(row["joined_certified"] for row in table)
    verdict = PASS if (plus2 and routes_agree and decomposition.passed
                       and implications_ok) else FAIL
    return {
        "check": "theorem1",
        "inputs": {"complex": K.name},
        "h_values": {"base": h1, "joined": h2, "joined_via_z2_join": h_cross},
        "verdict": verdict,
        "hypothesis_flags": [],
        "cross_checks": [
            {"name": "plus2_law", "ok": plus2},
            {"name": "route_agreement", "ok": routes_agree},
            {"name": "join_decomposition", "ok": decomposition.passed},
        ],
        "implication_table": table,
        "timings_ms": timings,
    }


def theorem3a_check(K: SimplicialComplex, L: SimplicialComplex,
                    cap: int | None = None) -> dict:
    """Index shadow of joining with a complex whose deleted join is a
    certified tight sphere of dimension q: the index of deljoin(K*L) must
    be h(deljoin(K)) + q + 1.

    When the deleted join of L is not a certified tight sphere the check is
    SKIPPED: the hypothesis (a free Z2-map from S^q into it) is then not
    certifiable here.
    """
    timings: dict = {}
    t0 = time.perf_counter()
    try:
        XL = deleted_join(L, cap=cap)
        q = XL.complex.dim
        cert = homology_sphere_certificate(XL, q)
        t0 = _timed(timings, "sphere_certificate", t0)
        if not cert.tight:
            return {
                "check": "theorem3a",
                "inputs": {"K": K.name, "L": L.name},
                "h_values": {},
                "verdict": SKIPPED,
                "hypothesis_flags": [
                    {"name": "factor_deleted_join_is_tight_sphere",
                     "satisfied": False, "detail": f"betti={list(cert.betti)}"}],
                "cross_checks": [],
                "timings_ms": timings,
            }
        hK = index_of(deleted_join(K, cap=cap))
        t0 = _timed(timings, "h_base", t0)
        h_join = index_of(deleted_join(join(K, L, cap=cap), cap=cap))
        t0 = _timed(timings, "h_joined", t0)
        decomposition = verify_join_decomposition(K, L, cap=cap)
        h_cross = index_of(z2_join(deleted_join(K, cap=cap), XL, cap=cap))
        t0 = _timed(timings, "h_cross_route", t0)
    except CapExceeded as exc:
        return {"check": "theorem3a", "inputs": {"K": K.name, "L": L.name},
                "h_values": {}, "verdict": INDETERMINATE,
                "hypothesis_flags": [], "cross_checks": [],
                "error": str(exc), "timings_ms": timings}
    expected = hK + q + 1
    shift_ok = h_join == expected
    routes_agree = h_cross == h_join
    verdict = PASS if (shift_ok and routes_agree and decomposition.passed) else FAIL
    return {
        "check": "theorem3a",
        "inputs": {"K": K.name, "L": L.name},
        "h_values": {"base": hK, "sphere_dim": q, "joined": h_join,
                     "expected": expected, "joined_via_z2_join": h_cross},
        "verdict": verdict,
        "hypothesis_flags": [
            {"name": "factor_deleted_join_is_tight_sphere", "satisfied": True,
             "detail": f"q={q}"}],
        "cross_checks": [
            {"name": "index_shift", "ok": shift_ok},
            {"name": "route_agreement", "ok": routes_agree},
            {"name": "join_decomposition", "ok": decomposition.passed},
        ],
        "implication": (
            f"a certificate for {join(K, L).name} in R^(d+{q + 1}) at index "
            f"level yields one for {K.name} in R^d"),
        "timings_ms": timings,
    }


def gvkf_check(ks: Sequence[int], cap: int | None = None) -> dict:
    """Joins of skeleta that never embed in twice their dimension.

    P is the join over i of the k_i-skeleton of the (2k_i+2)-simplex; its
    deleted join must have index sum(2k_i + 1) + p - 1, which certifies
    non-embeddability of P in R^(2 dim P).
    """
    if not ks or any(k < 1 for k in ks):
        raise ValueError("need a nonempty list of integers k_i >= 1")
    timings: dict = {}
    t0 = time.perf_counter()
    factors = [simplex_skeleton(2 * k + 2, k, cap=cap) for k in ks]
    P = factors[0]
    for f in factors[1:]:
        P = join(P, f, cap=cap)
    p = len(ks)
    dim_expected = sum(ks) + p - 1
    h_expected = sum(2 * k + 1 for k in ks) + p - 1
    try:
        h = index_of(deleted_join(P, cap=cap))
    except CapExceeded as exc:
        return {"check": "gvkf", "inputs": {"ks": list(ks)},
                "h_values": {}, "verdict": INDETERMINATE,
                "hypothesis_flags": [], "cross_checks": [],
                "error": str(exc), "timings_ms": timings}
    t0 = _timed(timings, "h", t0)
    d = 2 * dim_expected
    cert = _certificate_from_h(P.name, d, h)
    dims_ok = P.dim == dim_expected
    h_ok = h == h_expected
    verdict = PASS if (dims_ok and h_ok and cert.verdict == CERTIFIED) else FAIL
    return {
        "check": "gvkf",
        "inputs": {"ks": list(ks), "complex": P.name},
        "h_values": {"deleted_join": h, "expected": h_expected},
        "verdict": verdict,
        "hypothesis_flags": [],
        "cross_checks": [
            {"name": "join_dimension", "ok": dims_ok,
             "detail": f"dim P = {P.dim}, expected {dim_expected}"},
            {"name": "index_value", "ok": h_ok},
        ],
        "certificate": {"target_dim": d, "verdict": cert.verdict},
        "timings_ms": timings,
    }


def corollary2_check(P: SimplicialComplex, vs: Sequence[str], d: int,
                     cap: int | None = None) -> dict:
    """Extract the triple link intersection K of three vertices of P, verify
    the K*[3] containment, and certify K against R^d.

    When K is certified non-embeddable in R^d, the +2 law lifts the
    certificate to K*[3] in R^{d+2}; since P contains K*[3], P inherits it.
    The classical dimension hypothesis 2d >= 3k+3 >= 6 is checked and
    flagged but does not gate the index-level conclusion.
    """
    timings: dict = {}
    t0 = time.perf_counter()
    li = links_intersection(P, vs)
    K = li.complex
    k = K.dim
    t0 = _timed(timings, "links", t0)
    # The metastable hypothesis is informational only: index-level
    # certificates do not need it.
    flags = []
    if k < 0:
        flags.append({"name": "metastable_2d_ge_3k_plus_3_ge_6",
                      "satisfied": False,
                      "detail": "k undefined: link intersection is empty"})
    else:
        holds = 2 * d >= 3 * k + 3 and 3 * k + 3 >= 6
        flags.append({"name": "metastable_2d_ge_3k_plus_3_ge_6",
                      "satisfied": holds,
                      "detail": f"2d = {2 * d}, 3k+3 = {3 * k + 3}"})
    cert = certify_nonembeddable(K, d, cap=cap)
    t0 = _timed(timings, "certify", t0)
    cross = [{"name": "join_containment", "ok": li.contains_join}]
    report = {
        "check": "corollary2",
        "inputs": {"complex": P.name, "vertices": list(vs), "dim": d},
        "h_values": {"link_intersection": cert.h},
        "verdict": cert.verdict,
        "hypothesis_flags": flags,
        "cross_checks": cross,
        "extracted": {"name": K.name, "f_vector": list(K.f_vector()),
                      "dim": k},
        "timings_ms": timings,
    }
    if cert.verdict == CERTIFIED and li.contains_join:
        try:
            h2 = index_of(deleted_join(join(K, discrete_points(3), cap=cap),
                                       cap=cap))
        except CapExceeded as exc:
            report["conclusion"] = {"error": str(exc)}
            return report
        t0 = _timed(timings, "h_joined", t0)
        lift_ok = h2 == (cert.h or 0) + 2 and h2 >= d + 3
        cross.append({"name": "plus2_lift", "ok": lift_ok,
                      "detail": f"h(deljoin(K*[3])) = {h2}"})
        report["conclusion"] = {
            "complex": P.name,
            "target_dim": d + 2,
            "verdict": CERTIFIED if lift_ok else INDETERMINATE,
            "reason": (f"P contains K*[3] and h = {h2} >= {d + 3} "
                       f"certifies K*[3] against R^{d + 2}"),
        }
    return report


def conelemma_check(K: SimplicialComplex, cap: int | None = None) -> dict:
    """Collapse check: the deleted product of the cone on K, with the two
    apex-sided copies of K collapsed, has the homology of the suspension of
    the deleted product of K."""
    timings: dict = {}
    t0 = time.perf_counter()
    try:
        rep = cone_collapse_report(K, cap=cap)
    except CapExceeded as exc:
        return {"check": "conelemma", "inputs": {"complex": K.name},
                "h_values": {}, "verdict": INDETERMINATE,
                "hypothesis_flags": [], "cross_checks": [],
                "error": str(exc), "timings_ms": timings}
    _timed(timings, "collapse", t0)
    return {
        "check": "conelemma",
        "inputs": {"complex": K.name},
        "h_values": {},
        "verdict": PASS if rep.matches else FAIL,
        "hypothesis_flags": [],
        "cross_checks": [
            {"name": "betti_match", "ok": rep.matches,
             "detail": f"quotient={list(rep.quotient_betti)}, "
                       f"suspension={list(rep.suspension_betti)}"}],
        "timings_ms": timings,
    }


def joindecomp_check(K: SimplicialComplex, L: SimplicialComplex,
                     cap: int | None = None) -> dict:
    """Explicit simplicial isomorphism between the two deleted-join sides."""
    timings: dict = {}
    t0 = time.perf_counter()
    try:
        rep = verify_join_decomposition(K, L, cap=cap)
    except CapExceeded as exc:
        return {"check": "joindecomp", "inputs": {"K": K.name, "L": L.name},
                "h_values": {}, "verdict": INDETERMINATE,
                "hypothesis_flags": [], "cross_checks": [],
                "error": str(exc), "timings_ms": timings}
    _timed(timings, "decomposition", t0)
    return {
        "check": "joindecomp",
        "inputs": {"K": K.name, "L": L.name},
        "h_values": {},
        "verdict": PASS if rep.passed else FAIL,
        "hypothesis_flags": [],
        "cross_checks": [{"name": "simplexwise_isomorphism", "ok": rep.passed,
                          "detail": f"f_vector={list(rep.counts)}"}],
        "timings_ms": timings,
    }
