import json
import subprocess
import sys

import pytest

from perfectcodes import io as fmt
from perfectcodes.bitcode import is_perfect, rank
from perfectcodes.cli import main
from perfectcodes.errors import InvalidInput
from perfectcodes.perm import Permutation


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_code_round_trip(h7, v15):
    for code in (h7, v15):
        back = fmt.parse_code(fmt.format_code(code))
        assert set(back.words()) == set(code.words())


def test_sts_and_perm_round_trip(fano):
    assert fmt.parse_sts(fmt.format_sts(fano)) == fano
    perms = [Permutation([2, 1, 3]), Permutation.identity(3)]
    assert fmt.parse_perms(fmt.format_perms(perms)) == perms


@pytest.mark.parametrize(
    "text",
    ["", "101\n", "n=3\n10\n", "n=3\n1a1\n", "n=x\n000\n", "n=3\n"],
)
def test_bad_code_files(text):
    with pytest.raises(InvalidInput):
        fmt.parse_code(text)


def test_bad_sts_files():
    with pytest.raises(InvalidInput):
        fmt.parse_sts("n=3\n1 2\n")
    with pytest.raises(InvalidInput):
        fmt.parse_sts("n=7\n1 2 3\n")


def test_comments_are_ignored():
    code = fmt.parse_code("# repetition\nn=3\n000  # zero\n111\n")
    assert set(code.words()) == {0, 7}


def test_construct_hamming(tmp_path, capsys):
    out = tmp_path / "h7.code"
    assert run(capsys, "construct", "hamming", "--m", 3, "-o", out)[0] == 0
    lines = [l for l in out.read_text().splitlines() if not l.startswith("n=")]
    assert len(lines) == 16
    assert rank(fmt.read_code(out)) == 4


def test_construct_vasilev_and_invariants(tmp_path, capsys):
    h7 = tmp_path / "h7.code"
    v = tmp_path / "v15.code"
    run(capsys, "construct", "hamming", "--m", 3, "-o", h7)
    assert run(capsys, "construct", "vasilev", "--base", h7, "--lambda", "nonlinear:seed=1", "-o", v)[0] == 0
    assert "seed=1" in v.read_text().splitlines()[0]
    code = fmt.read_code(v)
    assert code.n == 15 and is_perfect(code) and rank(code) > 11

    rc, out, _ = run(capsys, "invariants", h7)
    d = json.loads(out)
    assert rc == 0 and d["rank"] == 4 and d["kernel_dim"] == 4 and d["lin_mu"] == list(range(1, 8))


def test_construct_mollard_small_and_descriptor(tmp_path, capsys):
    h3 = tmp_path / "h3.code"
    run(capsys, "construct", "hamming", "--m", 2, "-o", h3)
    m15 = tmp_path / "m15.code"
    assert run(capsys, "construct", "mollard", "--C", h3, "--D", h3, "-o", m15)[0] == 0
    code = fmt.read_code(m15)
    assert code.n == 15 and code.size == 2**11

    h15 = tmp_path / "h15.code"
    run(capsys, "construct", "hamming", "--m", 4, "-o", h15)
    sub = tmp_path / "out"
    sub.mkdir()
    desc = sub / "m63.json"
    assert run(capsys, "construct", "mollard", "--C", h3, "--D", h15, "-o", desc)[0] == 0
    M = fmt.read_code(desc)
    assert M.n == 63 and M.size == 2 ** (1 + 11 + 45)


def test_invariants_on_designs(tmp_path, capsys, fano):
    f = tmp_path / "fano.sts"
    f.write_text(fmt.format_sts(fano))
    d = json.loads(run(capsys, "invariants", f)[1])
    assert d["pasch_total"] == 7 and d["lin_nu"] == list(range(1, 8)) and d["projective"]
    t = tmp_path / "trivial.txt"
    t.write_text("n=3\n1 2 3\n")
    assert json.loads(run(capsys, "invariants", t)[1])["pasch_total"] == 0


def test_construct_mollard_sts(tmp_path, capsys):
    t = tmp_path / "t.sts"
    t.write_text("n=3\n1 2 3\n")
    out = tmp_path / "m.sts"
    assert run(capsys, "construct", "mollard-sts", "--S1", t, "--S2", t, "-o", out)[0] == 0
    assert len(fmt.read_sts(out)) == 35


def test_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.code"
    bad.write_text("n=3\n10\n")
    assert run(capsys, "invariants", bad)[0] == 2
    assert run(capsys, "invariants", tmp_path / "missing.code")[0] == 2
    assert run(capsys, "construct", "hamming")[0] == 2
    assert run(capsys, "construct", "vasilev", "--base", bad)[0] == 2
    assert run(capsys, "verify", "mollard", "--t", 4)[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2


def test_verify_lemmas_passes(tmp_path, capsys):
    h7 = tmp_path / "h7.code"
    run(capsys, "construct", "hamming", "--m", 3, "-o", h7)
    rc, out, _ = run(capsys, "verify", "lemmas", "--code", h7)
    rep = json.loads(out)
    assert rc == 0 and rep["passed"]
    assert all(c["status"] == "pass" for c in rep["claims"])


def test_verify_theorem2_reports_dub2_normality_failure(capsys):
    rc, out, _ = run(capsys, "verify", "theorem2", "--t", 3, "--m", 3)
    rep = json.loads(out)
    failed = [c["claim"] for c in rep["claims"] if c["status"] == "fail"]
    assert rc == 1
    assert failed == ["theorem2: Dub2(Sym D) is normal in G"]
    assert any("576" in json.dumps(c["measured"]) for c in rep["claims"])


def test_verify_output_is_deterministic(capsys):
    a = run(capsys, "verify", "mollard", "--seed", 3)[1]
    b = run(capsys, "verify", "mollard", "--seed", 3)[1]
    assert a == b


def test_text_format(capsys):
    rc, out, _ = run(capsys, "verify", "mollard", "--format", "text")
    assert rc == 0 and "claims, 0 failed" in out


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "perfectcodes.cli", "--version"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip()
