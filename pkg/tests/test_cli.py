import json

from cobeq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, body):
    path = tmp_path / name
    path.write_text(body, encoding="utf-8")
    return str(path)


def test_check_all_equal(tmp_path, capsys):
    path = write(tmp_path, "ok.cob", """
# biproduct resolution of the identity
mode smcb
obj a = p (+) q
arrow res : a -> a = inj1[p,q] . proj1[p,q] + inj2[p,q] . proj2[p,q]
check res = id[a]
""")
    code, out, err = run(capsys, "check", path)
    assert code == 0 and err == ""
    assert "check res = id[a]: equal" in out


def test_check_not_equal_exit_code(tmp_path, capsys):
    path = write(tmp_path, "ne.cob", "check id[p] = zero[p,p]\n")
    code, out, _ = run(capsys, "check", path)
    assert code == 1
    assert "not-equal" in out


def test_check_inconclusive_exit_code(tmp_path, capsys):
    path = write(tmp_path, "inc.cob", """
obj h = p -o I
check id[h] = lambda[h] . lambda'[h]
""")
    code, out, _ = run(capsys, "check", path)
    assert code == 2
    assert "inconclusive: " in out


def test_check_error_exit_code(tmp_path, capsys):
    path = write(tmp_path, "bad.cob", "check id[p] = id[\n")
    code, out, err = run(capsys, "check", path)
    assert code == 3
    assert "bad.cob:1" in err


def test_check_reports_file_line_col(tmp_path, capsys):
    path = write(tmp_path, "bad2.cob", "obj a = p (x)\ncheck id[p] = id[p]\n")
    code, _, err = run(capsys, "check", path)
    assert code == 3
    assert "bad2.cob:1:" in err


def test_mode_must_come_first(tmp_path, capsys):
    path = write(tmp_path, "late.cob", "obj a = p\nmode ccb\n")
    code, _, err = run(capsys, "check", path)
    assert code == 3
    assert "mode must be the first statement" in err


def test_arrow_annotation_checked(tmp_path, capsys):
    path = write(tmp_path, "ann.cob", "arrow f : p -> q = id[p]\n")
    code, _, err = run(capsys, "check", path)
    assert code == 3
    assert "declared" in err


def test_file_mode_applies_to_directives(tmp_path, capsys):
    path = write(tmp_path, "cc.cob", """
mode ccb
arrow loop : I -> I = eps[p] . sigma[p*, p] . eta[p]
check loop = loop
interpret loop
""")
    code, out, _ = run(capsys, "check", path)
    assert code == 0
    assert "circles=1" in out


def test_normalize_inline(capsys):
    code, out, _ = run(capsys, "normalize", "inj1[p,q]")
    assert code == 0
    assert "entry 0 0: id[p]" in out
    assert "entry 1 0: 0" in out


def test_normalize_json(capsys):
    code, out, _ = run(capsys, "normalize", "inj1[p,q]", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["entries"] == [[["id[p]"]], [[]]]


def test_interpret_inline_and_verbose(capsys):
    code, out, _ = run(capsys, "interpret", "sigma[p,q]")
    assert code == 0
    assert "cobmatrix 1x1" in out
    code, out, _ = run(capsys, "interpret", "id[p (+) q]", "--verbose")
    assert code == 0
    assert "source object: p (+) q" in out or "components: 2" in out


def test_interpret_ccb_flag(capsys):
    code, out, _ = run(capsys, "interpret", "eps[p] . sigma[p*,p] . eta[p]",
                       "--mode", "ccb")
    assert code == 0
    assert "circles=1" in out


def test_decompose_inline(capsys):
    code, out, _ = run(capsys, "decompose", "(p (+) q) (x) r")
    assert code == 0
    assert "components: 2" in out
    assert "inj: (inj1[p,q] . id[p]) (x) id[r]" in out


def test_render_dot(tmp_path, capsys):
    out_path = tmp_path / "m.dot"
    code, _, _ = run(capsys, "render", "sigma[p,q]", "--out", str(out_path))
    assert code == 0
    dot = out_path.read_text()
    assert dot.startswith("digraph entry_0_0 {")
    assert 'rank=source' in dot and 'rank=sink' in dot
    assert "dir=none" in dot
    assert 'label="circles: 0"' in dot


def test_render_stdout(capsys):
    code, out, _ = run(capsys, "render", "eta[p]", "--mode", "ccb")
    assert code == 0
    assert out.count("digraph") == 1


def test_selftest_exit_and_determinism(capsys):
    args = ("selftest", "--mode", "dccb", "--depth", "2",
            "--instances", "3", "--seed", "7")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert "0 failures" in out1


def test_selftest_json(capsys):
    code, out, _ = run(capsys, "selftest", "--depth", "1", "--instances", "2",
                       "--seed", "1", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["total_failures"] == 0


def test_check_json_round_trip(tmp_path, capsys):
    path = write(tmp_path, "j.cob", "check id[p] = zero[p,p]\n")
    code, out, _ = run(capsys, "check", path, "--format", "json")
    assert code == 1
    blob = json.loads(out)
    (res,) = blob["results"]
    assert res["verdict"] == "not-equal"
    assert res["certificate"]["lhs_image"]["shape"] == [1, 1]


def test_unknown_name_reported(capsys):
    code, _, err = run(capsys, "interpret", "nosuch . id[p]")
    assert code == 3
    assert "unknown arrow" in err


def test_normalize_rejects_non_smcb(capsys):
    code, _, err = run(capsys, "normalize", "eta[p]", "--mode", "ccb")
    assert code == 3
    assert err.startswith("error: ")


def test_console_script_deterministic_across_processes(tmp_path):
    import subprocess
    import sys

    path = write(tmp_path, "d.cob", """
mode smcb
obj a = p (+) (q -o r)
check inj1[p, q -o r] . proj1[p, q -o r] + inj2[p, q -o r] . proj2[p, q -o r] = id[a]
interpret eta[p, q (+) r]
""")
    cmd = [sys.executable, "-m", "cobeq.cli", "check", path, "--format", "json"]
    r1 = subprocess.run(cmd, capture_output=True)
    r2 = subprocess.run(cmd, capture_output=True)
    assert r1.returncode == r2.returncode == 0
    assert r1.stdout == r2.stdout
    json.loads(r1.stdout)
