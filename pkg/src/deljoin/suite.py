"""Named verification suite: the checkable identities behind the theorems.

Each entry is an independent pure job returning a report dict; the runner
executes them on a thread pool and reassembles results in name order, so
output is identical for any thread count (timings aside).
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

from .complexes import (SimplicialComplex, cycle_complex, discrete_points,
                        join, simplex_skeleton)
from .deleted import deleted_join
from .gf2 import betti
from .index import homology_sphere_certificate
from .iso import isomorphic
from .obstruction import (CERTIFIED, FAIL, NO_CERTIFICATE, PASS,
                          certify_nonembeddable, conelemma_check,
                          corollary2_check, gvkf_check, joindecomp_check,
                          theorem1_check, theorem3a_check)

Check = Callable[[int | None], dict]


def _hexagon_check(cap: int | None) -> dict:
    """deljoin([3]) is a 6-cycle with circle homology and index 1."""
    X = deleted_join(discrete_points(3), cap=cap)
    iso = isomorphic(X.complex, cycle_complex(6))
    b = betti(X)
    cert = homology_sphere_certificate(X, 1)
    ok = bool(iso) and b == [1, 1] and cert.tight
    return {
        "check": "hexagon",
        "inputs": {"complex": "points(3)"},
        "h_values": {"deleted_join": cert.h},
        "verdict": PASS if ok else FAIL,
        "hypothesis_flags": [],
        "cross_checks": [
            {"name": "isomorphic_to_C6", "ok": bool(iso)},
            {"name": "betti", "ok": b == [1, 1], "detail": str(b)},
            {"name": "tight_sphere", "ok": cert.tight},
        ],
        "timings_ms": {},
    }


def _sphere_check(k: int):
    def run(cap: int | None) -> dict:
        X = deleted_join(simplex_skeleton(2 * k + 2, k, cap=cap), cap=cap)
        n = 2 * k + 1
        cert = homology_sphere_certificate(X, n)
        return {
            "check": f"sphere_k{k}",
            "inputs": {"complex": f"skeleton({2 * k + 2},{k})", "n": n},
            "h_values": {"h": cert.h},
            "verdict": PASS if cert.tight else FAIL,
            "hypothesis_flags": [],
            "cross_checks": [
                {"name": "betti_sphere", "ok": cert.is_sphere,
                 "detail": str(list(cert.betti))},
                {"name": "index_equals_dim", "ok": cert.h == n},
            ],
            "timings_ms": {},
        }
    return run


def _certificates_check(cap: int | None) -> dict:
    cases = [
        (simplex_skeleton(6, 2), 4, CERTIFIED),
        (simplex_skeleton(1, 1), 1, NO_CERTIFICATE),
        (cycle_complex(4), 2, NO_CERTIFICATE),
    ]
    results = []
    ok = True
    for K, d, expected in cases:
        cert = certify_nonembeddable(K, d, cap=cap)
        good = cert.verdict == expected
        ok = ok and good
        results.append({"complex": K.name, "dim": d, "h": cert.h,
                        "verdict": cert.verdict, "ok": good})
    return {
        "check": "certificates",
        "inputs": {"cases": [r["complex"] for r in results]},
        "h_values": {r["complex"]: r["h"] for r in results},
        "verdict": PASS if ok else FAIL,
        "hypothesis_flags": [],
        "cross_checks": [{"name": f"{r['complex']}@R^{r['dim']}",
                          "ok": r["ok"], "detail": r["verdict"]}
                         for r in results],
        "timings_ms": {},
    }


def _certificates_large_check(cap: int | None) -> dict:
    cert = certify_nonembeddable(simplex_skeleton(8, 3), 6, cap=cap)
    ok = cert.verdict == CERTIFIED and cert.h == 7
    return {
        "check": "certificates_large",
        "inputs": {"complex": "skeleton(8,3)", "dim": 6},
        "h_values": {"deleted_join": cert.h},
        "verdict": PASS if ok else FAIL,
        "hypothesis_flags": [],
        "cross_checks": [{"name": "verdict", "ok": ok,
                          "detail": cert.verdict}],
        "timings_ms": {},
    }


def _corpus() -> dict[str, SimplicialComplex]:
    return {
        "point": discrete_points(1),
        "edge": simplex_skeleton(1, 1),
        "points3": discrete_points(3),
        "triangle_boundary": simplex_skeleton(2, 1),
        "k5": simplex_skeleton(4, 1),
        "vkf2": simplex_skeleton(6, 2),
    }


def _plus2_check(key: str):
    def run(cap: int | None) -> dict:
        report = theorem1_check(_corpus()[key], cap=cap)
        report["check"] = f"plus2_{key}"
        return report
    return run


def _joindecomp_entry(name: str, build_k, build_l):
    def run(cap: int | None) -> dict:
        report = joindecomp_check(build_k(), build_l(), cap=cap)
        report["check"] = f"joindecomp_{name}"
        return report
    return run


def _conelemma_entry(name: str, build):
    def run(cap: int | None) -> dict:
        report = conelemma_check(build(), cap=cap)
        report["check"] = f"conelemma_{name}"
        return report
    return run


def _gvkf_entry(ks: tuple[int, ...]):
    def run(cap: int | None) -> dict:
        report = gvkf_check(list(ks), cap=cap)
        report["check"] = "gvkf_" + "_".join(map(str, ks))
        return report
    return run


def _theorem3a_entry(name: str, build_k, build_l):
    def run(cap: int | None) -> dict:
        report = theorem3a_check(build_k(), build_l(), cap=cap)
        report["check"] = f"theorem3a_{name}"
        return report
    return run


def _corollary2_main(cap: int | None) -> dict:
    P = join(simplex_skeleton(6, 2), discrete_points(3), cap=cap)
    vs = ["L/p0", "L/p1", "L/p2"]
    report = corollary2_check(P, vs, 4, cap=cap)
    report["check"] = "corollary2_main"
    # Hypothesis flags are informational and do not gate the verdict.
    ok = (report["verdict"] == CERTIFIED
          and report["extracted"]["f_vector"] == [7, 21, 35]
          and all(c["ok"] for c in report["cross_checks"])
          and report.get("conclusion", {}).get("verdict") == CERTIFIED)
    report["verdict"] = PASS if ok else FAIL
    return report


CORE_CHECKS: dict[str, Check] = {
    "hexagon": _hexagon_check,
    "sphere_k1": _sphere_check(1),
    "sphere_k2": _sphere_check(2),
    "certificates": _certificates_check,
    "plus2_point": _plus2_check("point"),
    "plus2_edge": _plus2_check("edge"),
    "plus2_points3": _plus2_check("points3"),
    "plus2_triangle_boundary": _plus2_check("triangle_boundary"),
    "plus2_k5": _plus2_check("k5"),
    "joindecomp_point_point": _joindecomp_entry(
        "point_point", lambda: discrete_points(1), lambda: discrete_points(1)),
    "joindecomp_edge_edge": _joindecomp_entry(
        "edge_edge", lambda: simplex_skeleton(1, 1),
        lambda: simplex_skeleton(1, 1)),
    "joindecomp_k5_points3": _joindecomp_entry(
        "k5_points3", lambda: simplex_skeleton(4, 1),
        lambda: discrete_points(3)),
    "joindecomp_points3_triangle": _joindecomp_entry(
        "points3_triangle", lambda: discrete_points(3),
        lambda: simplex_skeleton(2, 1)),
    "joindecomp_point_edge": _joindecomp_entry(
        "point_edge", lambda: discrete_points(1),
        lambda: simplex_skeleton(1, 1)),
    "conelemma_points2": _conelemma_entry("points2", lambda: discrete_points(2)),
    "conelemma_points3": _conelemma_entry("points3", lambda: discrete_points(3)),
    "conelemma_triangle": _conelemma_entry(
        "triangle", lambda: simplex_skeleton(2, 1)),
    "gvkf_1": _gvkf_entry((1,)),
    "gvkf_2": _gvkf_entry((2,)),
    "corollary2_main": _corollary2_main,
}

FULL_EXTRA_CHECKS: dict[str, Check] = {
    "sphere_k3": _sphere_check(3),
    "certificates_large": _certificates_large_check,
    "plus2_vkf2": _plus2_check("vkf2"),
    "gvkf_1_1": _gvkf_entry((1, 1)),
    "conelemma_k5": _conelemma_entry("k5", lambda: simplex_skeleton(4, 1)),
    "theorem3a_vkf2_points3": _theorem3a_entry(
        "vkf2_points3", lambda: simplex_skeleton(6, 2),
        lambda: discrete_points(3)),
    "theorem3a_k5_k5": _theorem3a_entry(
        "k5_k5", lambda: simplex_skeleton(4, 1),
        lambda: simplex_skeleton(4, 1)),
    "theorem3a_point_edge": _theorem3a_entry(
        "point_edge", lambda: discrete_points(1),
        lambda: simplex_skeleton(1, 1)),
}


def suite_checks(suite: str) -> dict[str, Check]:
    if suite == "core":
        return dict(CORE_CHECKS)
    if suite == "full":
        merged = dict(CORE_CHECKS)
        merged.update(FULL_EXTRA_CHECKS)
        return merged
    raise ValueError(f"unknown suite {suite!r} (use core or full)")


def run_suite(suite: str = "core", threads: int = 1,
              cap: int | None = None) -> dict:
    checks = suite_checks(suite)
    t0 = time.perf_counter()
    results: dict[str, dict] = {}

    def job(item):
        name, fn = item
        start = time.perf_counter()
        try:
            report = fn(cap)
        except Exception as exc:  # a crashed check is a FAIL, not a crash
            report = {"check": name, "inputs": {}, "h_values": {},
                      "verdict": FAIL, "hypothesis_flags": [],
                      "cross_checks": [], "error": f"{type(exc).__name__}: {exc}",
                      "timings_ms": {}}
        report.setdefault("timings_ms", {})
        report["timings_ms"]["check_total"] = round(
            1000 * (time.perf_counter() - start), 3)
        return name, report

    if threads <= 1:
        for item in sorted(checks.items()):
            name, report = job(item)
            results[name] = report
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for name, report in pool.map(job, sorted(checks.items())):
                results[name] = report

    ordered = [results[name] for name in sorted(results)]
    counts: dict[str, int] = {}
    for report in ordered:
        counts[report["verdict"]] = counts.get(report["verdict"], 0) + 1
    return {
        "suite": suite,
        "results": ordered,
        "summary": {
            "checks": len(ordered),
            "by_verdict": dict(sorted(counts.items())),
            "all_pass": all(r["verdict"] == PASS for r in ordered),
        },
        "timings_ms": {"total": round(1000 * (time.perf_counter() - t0), 3)},
    }


def summary_table(suite_report: dict) -> str:
    lines = []
    width = max(len(r["check"]) for r in suite_report["results"])
    for r in suite_report["results"]:
        h = r.get("h_values") or {}
        detail = " ".join(f"{k}={v}" for k, v in h.items())
        lines.append(f"{r['check']:<{width}}  {r['verdict']:<14} {detail}")
    s = suite_report["summary"]
    lines.append(f"{s['checks']} checks; all pass: {s['all_pass']}")
    return "\n".join(lines)
