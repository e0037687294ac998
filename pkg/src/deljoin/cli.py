"""Command-line front end.

Complex inputs are either file paths (JSON) or inline specifiers:
``skeleton:N:K``, ``points:M``, ``cycle:N``, ``crosspoly:N``, and the
compositions ``join(A,B)``, ``cone(A)``, ``deljoin(A)``.

Exit codes: 0 success, 2 verification mismatch, 3 cell cap exceeded,
4 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .complexes import (SimplicialComplex, cone, cycle_complex,
                        discrete_points, join, simplex_skeleton)
from .config import CapExceeded, RunConfig, VerificationError, default_threads
from .deleted import (CellComplex, Z2Complex, cross_polytope_boundary,
                      deleted_join, deleted_product)
from .gf2 import chain_complex
from .index import index_report
from .obstruction import (INDETERMINATE, certify_nonembeddable,
                          conelemma_check, corollary2_check, gvkf_check,
                          joindecomp_check, theorem1_check, theorem3a_check)
from .suite import run_suite, summary_table

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_CAP = 3
EXIT_USAGE = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _split_args(body: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(body[start:i])
            start = i + 1
    parts.append(body[start:])
    return [p.strip() for p in parts]


def parse_spec(spec: str) -> SimplicialComplex | Z2Complex:
    """Inline complex specifier or file path."""
    spec = spec.strip()
    if spec.endswith(")") and "(" in spec:
        head, body = spec.split("(", 1)
        args = _split_args(body[:-1])
        if head == "join" and len(args) == 2:
            return join(_plain(parse_spec(args[0])),
                        _plain(parse_spec(args[1])))
        if head == "cone" and len(args) == 1:
            return cone(_plain(parse_spec(args[0])))
        if head == "deljoin" and len(args) == 1:
            return deleted_join(_plain(parse_spec(args[0])))
        raise UsageError(f"unknown construction {head!r} in {spec!r}")
    if ":" in spec:
        head, *rest = spec.split(":")
        try:
            nums = [int(x) for x in rest]
        except ValueError:
            raise UsageError(f"bad specifier {spec!r}")
        if head == "skeleton" and len(nums) == 2:
            return simplex_skeleton(*nums)
        if head == "points" and len(nums) == 1:
            return discrete_points(nums[0])
        if head == "cycle" and len(nums) == 1:
            return cycle_complex(nums[0])
        if head == "crosspoly" and len(nums) == 1:
            return cross_polytope_boundary(nums[0])
        raise UsageError(f"unknown specifier {spec!r}")
    if Path(spec).exists():
        return io.read_any(spec)
    raise UsageError(f"no such file or specifier: {spec!r}")


def _plain(obj: SimplicialComplex | Z2Complex) -> SimplicialComplex:
    return obj.complex if isinstance(obj, Z2Complex) else obj


def _need_z2(obj: SimplicialComplex | Z2Complex) -> Z2Complex:
    if not isinstance(obj, Z2Complex):
        raise UsageError("this command needs a Z2 complex "
                         "(a file with an involution, crosspoly:N, or deljoin(...))")
    return obj


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _emit_report(report: dict, out: str | None) -> None:
    _emit(io.dumps_stable(report), out)


def _dump_matrices(source, directory: str, tag: str) -> None:
    cc = chain_complex(source)
    dest = Path(directory)
    dest.mkdir(parents=True, exist_ok=True)
    for i, B in enumerate(cc.boundaries):
        path = dest / f"{tag}_boundary_{i}.txt"
        path.write_text("\n".join(B.dump_lines()) + "\n", encoding="utf-8")


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--cap", type=int, default=None,
                        help="cell cap (default 5,000,000 or DELJOIN_CELL_CAP)")
    common.add_argument("--threads", type=int, default=default_threads(),
                        help="worker threads for the suite runner")
    common.add_argument("--out", default=None, help="write output to a file")
    common.add_argument("--dump-matrices", default=None, metavar="DIR",
                        help="dump GF(2) boundary matrices to DIR")
    common.add_argument("--verbose", action="store_true",
                        help="print backend and configuration to stderr")

    parser = _Parser(prog="deljoin", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p_build = add("build", help="construct a complex and write it")
    p_build.add_argument("what", choices=["skeleton", "join", "cone", "points",
                                          "crosspoly", "deljoin", "delprod"])
    p_build.add_argument("args", nargs="*")

    p_betti = add("betti", help="GF(2) Betti numbers")
    p_betti.add_argument("spec")

    p_index = add("index", help="cohomological Z2-index report")
    p_index.add_argument("spec")

    p_cert = add("certify", help="non-embeddability certificate")
    p_cert.add_argument("spec")
    p_cert.add_argument("--dim", type=int, required=True)

    p_check = add("check", help="run a single verification check")
    check_sub = p_check.add_subparsers(dest="check", required=True)

    def add_check(name: str):
        return check_sub.add_parser(name, parents=[common])

    c = add_check("theorem1")
    c.add_argument("K")
    c = add_check("theorem3a")
    c.add_argument("K")
    c.add_argument("L")
    c = add_check("gvkf")
    c.add_argument("ks", help="comma-separated skeleton parameters, e.g. 1,1")
    c = add_check("corollary2")
    c.add_argument("P")
    c.add_argument("v1")
    c.add_argument("v2")
    c.add_argument("v3")
    c.add_argument("--dim", type=int, required=True)
    c = add_check("conelemma")
    c.add_argument("K")
    c = add_check("joindecomp")
    c.add_argument("K")
    c.add_argument("L")

    p_suite = add("verify-paper", help="run the verification suite")
    p_suite.add_argument("--suite", choices=["core", "full"], default="core")

    return parser


def _cmd_build(ns) -> tuple[int, None]:
    what, args = ns.what, ns.args

    def ints(n):
        if len(args) != n:
            raise UsageError(f"build {what} takes {n} argument(s)")
        try:
            return [int(a) for a in args]
        except ValueError:
            raise UsageError(f"build {what} takes integer argument(s)")

    if what == "skeleton":
        n, k = ints(2)
        obj = simplex_skeleton(n, k, cap=ns.cap)
    elif what == "points":
        obj = discrete_points(ints(1)[0])
    elif what == "crosspoly":
        obj = cross_polytope_boundary(ints(1)[0])
    elif what == "join":
        if len(args) != 2:
            raise UsageError("build join takes two complex specifiers")
        obj = join(_plain(parse_spec(args[0])), _plain(parse_spec(args[1])),
                   cap=ns.cap)
    elif what == "cone":
        if len(args) != 1:
            raise UsageError("build cone takes one complex specifier")
        obj = cone(_plain(parse_spec(args[0])))
    elif what == "deljoin":
        if len(args) != 1:
            raise UsageError("build deljoin takes one complex specifier")
        obj = deleted_join(_plain(parse_spec(args[0])), cap=ns.cap)
    else:  # delprod
        if len(args) != 1:
            raise UsageError("build delprod takes one complex specifier")
        obj = deleted_product(_plain(parse_spec(args[0])), cap=ns.cap)

    if isinstance(obj, Z2Complex):
        _emit(io.dumps_stable(io.z2_to_payload(obj)), ns.out)
    elif isinstance(obj, CellComplex):
        _emit(io.dumps_stable(io.cell_complex_to_payload(obj)), ns.out)
    else:
        _emit(io.dumps_stable(io.complex_to_payload(obj)), ns.out)
    return EXIT_OK, None


def _run(ns) -> int:
    if ns.verbose:
        from .gf2 import BACKEND
        from .config import cell_cap
        print(f"gf2 backend: {BACKEND}; cell cap: {cell_cap(ns.cap)}; "
              f"threads: {ns.threads}", file=sys.stderr)

    if ns.command == "build":
        return _cmd_build(ns)[0]

    if ns.command == "betti":
        obj = parse_spec(ns.spec)
        source = obj.complex if isinstance(obj, Z2Complex) else obj
        b = source.to_chain_complex().betti()
        if ns.dump_matrices:
            _dump_matrices(source, ns.dump_matrices, "betti")
        _emit_report({"complex": source.name, "betti": b}, ns.out)
        return EXIT_OK

    if ns.command == "index":
        X = _need_z2(parse_spec(ns.spec))
        report = index_report(X)
        if ns.dump_matrices:
            _dump_matrices(X.complex, ns.dump_matrices, "index")
        _emit_report(report, ns.out)
        return EXIT_OK

    if ns.command == "certify":
        K = _plain(parse_spec(ns.spec))
        cert = certify_nonembeddable(K, ns.dim, cap=ns.cap)
        _emit_report(cert.to_report(), ns.out)
        return EXIT_CAP if cert.verdict == INDETERMINATE else EXIT_OK

    if ns.command == "check":
        if ns.check == "theorem1":
            report = theorem1_check(_plain(parse_spec(ns.K)), cap=ns.cap)
        elif ns.check == "theorem3a":
            report = theorem3a_check(_plain(parse_spec(ns.K)),
                                     _plain(parse_spec(ns.L)), cap=ns.cap)
        elif ns.check == "gvkf":
            try:
                ks = [int(x) for x in ns.ks.split(",") if x]
            except ValueError:
                raise UsageError(f"bad gvkf parameters {ns.ks!r}")
            report = gvkf_check(ks, cap=ns.cap)
        elif ns.check == "corollary2":
            report = corollary2_check(_plain(parse_spec(ns.P)),
                                      [ns.v1, ns.v2, ns.v3], ns.dim,
                                      cap=ns.cap)
        elif ns.check == "conelemma":
            report = conelemma_check(_plain(parse_spec(ns.K)), cap=ns.cap)
        else:
            report = joindecomp_check(_plain(parse_spec(ns.K)),
                                      _plain(parse_spec(ns.L)), cap=ns.cap)
        _emit_report(report, ns.out)
        verdict = report.get("verdict")
        if verdict == INDETERMINATE:
            return EXIT_CAP
        if verdict == "FAIL":
            return EXIT_MISMATCH
        return EXIT_OK

    if ns.command == "verify-paper":
        config = RunConfig(cap=ns.cap, threads=ns.threads, suite=ns.suite,
                           out=ns.out, verbose=ns.verbose)
        report = run_suite(config.suite, threads=config.threads,
                           cap=config.cap)
        if ns.out:
            _emit(io.dumps_stable(report), ns.out)
        print(summary_table(report))
        return EXIT_OK if report["summary"]["all_pass"] else EXIT_MISMATCH

    raise UsageError(f"unknown command {ns.command!r}")


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        return _run(ns)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except VerificationError as exc:
        print(f"verification mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
