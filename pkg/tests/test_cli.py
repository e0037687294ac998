import json
import subprocess
import sys

import pytest

from deljoin import cli, io
from deljoin.complexes import simplex_skeleton
from deljoin.deleted import cross_polytope_boundary


def run_cli(args, capsys):
    code = cli.run(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_complex_roundtrip(tmp_path):
    K = simplex_skeleton(4, 1)
    path = tmp_path / "k5.json"
    io.write_complex(K, path)
    back = io.read_complex(path)
    assert back.simplices == K.simplices
    assert back.name == K.name
    # byte-stable
    first = path.read_text()
    io.write_complex(back, path)
    assert path.read_text() == first


def test_z2_roundtrip(tmp_path):
    X = cross_polytope_boundary(2)
    path = tmp_path / "oct.json"
    io.write_z2(X, path)
    back = io.read_z2(path)
    assert back.complex.simplices == X.complex.simplices
    assert back.involution == X.involution


def test_reader_validates(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"name": "x", "vertices": ["a"],
                                "facets": [["a", "zz"]]}))
    with pytest.raises(ValueError):
        io.read_complex(path)
    path.write_text(json.dumps({"name": "x", "vertices": ["a", "a"],
                                "facets": []}))
    with pytest.raises(ValueError):
        io.read_complex(path)


def test_reader_closes_faces(tmp_path):
    path = tmp_path / "tri.json"
    path.write_text(json.dumps({"name": "tri", "vertices": ["a", "b", "c"],
                                "facets": [["a", "b", "c"]]}))
    K = io.read_complex(path)
    assert K.f_vector() == (3, 3, 1)


def test_build_and_betti(tmp_path, capsys):
    out = tmp_path / "dj.json"
    code, _, _ = run_cli(["build", "deljoin", "points:3", "--out", str(out)],
                         capsys)
    assert code == 0
    payload = json.loads(out.read_text())
    assert "involution" in payload

    code, stdout, _ = run_cli(["betti", str(out)], capsys)
    assert code == 0
    assert json.loads(stdout)["betti"] == [1, 1]


def test_build_delprod(tmp_path, capsys):
    out = tmp_path / "dp.json"
    code, _, _ = run_cli(["build", "delprod", "skeleton:2:2",
                          "--out", str(out)], capsys)
    assert code == 0
    payload = json.loads(out.read_text())
    counts = [len(level) for level in payload["cells_by_dim"]]
    assert counts == [6, 6]


def test_index_command(capsys):
    code, stdout, _ = run_cli(["index", "crosspoly:2"], capsys)
    assert code == 0
    rep = json.loads(stdout)
    assert rep["h"] == 2 and rep["tight"]


def test_index_from_file(tmp_path, capsys):
    path = tmp_path / "dj.json"
    code, _, _ = run_cli(["build", "deljoin", "skeleton:4:1",
                          "--out", str(path)], capsys)
    assert code == 0
    code, stdout, _ = run_cli(["index", str(path)], capsys)
    assert code == 0
    rep = json.loads(stdout)
    assert rep["h"] == 3 and rep["betti"] == [1, 0, 0, 1] and rep["tight"]


def test_build_join_and_cone(tmp_path, capsys):
    out = tmp_path / "j.json"
    code, _, _ = run_cli(["build", "join", "points:2", "points:2",
                          "--out", str(out)], capsys)
    assert code == 0
    payload = json.loads(out.read_text())
    assert len(payload["vertices"]) == 4
    assert all(len(f) == 2 for f in payload["facets"])

    code, _, _ = run_cli(["build", "cone", "cycle:6", "--out", str(out)],
                         capsys)
    assert code == 0
    payload = json.loads(out.read_text())
    assert len(payload["vertices"]) == 7
    assert "c" in payload["vertices"]


def test_index_requires_involution(capsys):
    code, _, err = run_cli(["index", "skeleton:2:1"], capsys)
    assert code == 4


def test_certify_command(capsys):
    code, stdout, _ = run_cli(["certify", "skeleton:4:1", "--dim", "2"],
                              capsys)
    assert code == 0
    rep = json.loads(stdout)
    assert rep["verdict"] == "CERTIFIED_NONEMBEDDABLE"
    assert rep["h_values"]["deleted_join"] == 3

    code, stdout, _ = run_cli(["certify", "cycle:4", "--dim", "2"], capsys)
    assert code == 0
    assert json.loads(stdout)["verdict"] == "NO_CERTIFICATE"


def test_exit_codes(capsys, tmp_path):
    # usage error
    code, _, _ = run_cli(["build", "skeleton", "4"], capsys)
    assert code == 4
    code, _, _ = run_cli(["betti", "nope:spec"], capsys)
    assert code == 4
    # cap exceeded
    code, _, _ = run_cli(["build", "deljoin", "skeleton:4:1", "--cap", "5"],
                         capsys)
    assert code == 3
    # certify with tiny cap: indeterminate, exit 3
    code, stdout, _ = run_cli(["certify", "skeleton:6:2", "--dim", "4",
                               "--cap", "10"], capsys)
    assert code == 3
    assert json.loads(stdout)["verdict"] == "INDETERMINATE"


def test_check_commands(capsys):
    code, stdout, _ = run_cli(["check", "theorem1", "skeleton:4:1"], capsys)
    assert code == 0
    rep = json.loads(stdout)
    assert rep["h_values"] == {"base": 3, "joined": 5, "joined_via_z2_join": 5}

    code, stdout, _ = run_cli(["check", "gvkf", "1"], capsys)
    assert code == 0
    assert json.loads(stdout)["verdict"] == "PASS"

    code, stdout, _ = run_cli(["check", "joindecomp", "points:3",
                               "skeleton:1:1"], capsys)
    assert code == 0

    code, stdout, _ = run_cli(["check", "conelemma", "points:2"], capsys)
    assert code == 0

    code, stdout, _ = run_cli(
        ["check", "corollary2", "join(skeleton:6:2,points:3)",
         "L/p0", "L/p1", "L/p2", "--dim", "4"], capsys)
    assert code == 0
    assert json.loads(stdout)["verdict"] == "CERTIFIED_NONEMBEDDABLE"


def test_check_theorem3a(capsys):
    code, stdout, _ = run_cli(["check", "theorem3a", "points:1",
                               "skeleton:1:1"], capsys)
    assert code == 0
    assert json.loads(stdout)["h_values"]["joined"] == 2


def test_spec_parser_compositions(capsys):
    code, stdout, _ = run_cli(["betti", "deljoin(join(points:1,points:3))"],
                              capsys)
    assert code == 0
    assert json.loads(stdout)["betti"] == [1, 0, 1]


def test_dump_matrices(tmp_path, capsys):
    dump = tmp_path / "dumps"
    code, _, _ = run_cli(["betti", "cycle:3", "--dump-matrices", str(dump)],
                         capsys)
    assert code == 0
    files = sorted(p.name for p in dump.iterdir())
    assert files == ["betti_boundary_0.txt", "betti_boundary_1.txt"]
    lines = (dump / "betti_boundary_1.txt").read_text().splitlines()
    assert lines[0] == "3 3"
    assert all(set(line) <= {"0", "1"} for line in lines[1:])


def test_verify_paper_core(tmp_path, capsys):
    out = tmp_path / "suite.json"
    code, stdout, _ = run_cli(["verify-paper", "--suite", "core",
                               "--threads", "1", "--out", str(out)], capsys)
    assert code == 0
    report = json.loads(out.read_text())
    assert report["summary"]["all_pass"]
    assert "all pass: True" in stdout


def test_verify_paper_deterministic_across_threads(tmp_path, capsys):
    out1 = tmp_path / "t1.json"
    out4 = tmp_path / "t4.json"
    code1, _, _ = run_cli(["verify-paper", "--suite", "core", "--threads", "1",
                           "--out", str(out1)], capsys)
    code4, _, _ = run_cli(["verify-paper", "--suite", "core", "--threads", "4",
                           "--out", str(out4)], capsys)
    assert code1 == 0 and code4 == 0
    r1 = io.strip_timings(json.loads(out1.read_text()))
    r4 = io.strip_timings(json.loads(out4.read_text()))
    assert io.dumps_stable(r1) == io.dumps_stable(r4)


def test_check_reports_deterministic(capsys):
    # identical inputs and flags give byte-identical JSON apart from timings
    outs = []
    for _ in range(2):
        code, stdout, _ = run_cli(["check", "theorem1", "points:3"], capsys)
        assert code == 0
        outs.append(io.dumps_stable(io.strip_timings(json.loads(stdout))))
    assert outs[0] == outs[1]


def test_read_z2_validates_involution(tmp_path):
    payload = {"name": "bad", "vertices": ["a", "b"], "facets": [["a"], ["b"]],
               "involution": [["a", "a"]]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(payload))
    with pytest.raises(ValueError):
        io.read_z2(path)
    payload["involution"] = [["a", "b"]]
    path.write_text(json.dumps(payload))
    X = io.read_z2(path)
    assert X.involution == {"a": "b", "b": "a"}


def test_env_cap_override(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("DELJOIN_CELL_CAP", "5")
    code, _, _ = run_cli(["build", "deljoin", "skeleton:4:1"], capsys)
    assert code == 3
    monkeypatch.delenv("DELJOIN_CELL_CAP")


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "deljoin.cli", "betti",
                           "points:3"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["betti"] == [3]
