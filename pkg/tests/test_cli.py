import json
import subprocess
import sys

import pytest

from slnepoly.cli import CACHE_ENV, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_epoly_formats(capsys):
    code, out, _ = run(capsys, "epoly", "--n", "2", "--g", "2")
    assert code == 0 and out.strip() == "q^6 - 2q^4 - 30q^3 - 2q^2 + 1"
    code, out, _ = run(capsys, "epoly", "--n", "2", "--g", "2", "--format", "json")
    obj = json.loads(out)
    assert obj["coeffs"][0] == [6, "1"] and obj["euler"] == -32 and obj["palindromic"]
    code, out, _ = run(capsys, "epoly", "--n", "2", "--g", "2", "--format", "latex")
    assert out.startswith("q^{6}")
    code, out, _ = run(capsys, "epoly", "--n", "2", "--g", "2", "--format", "csv")
    assert out.splitlines()[:2] == ["exponent,coefficient", "6,1"]


def test_alt_gives_same_output(capsys):
    _, a, _ = run(capsys, "epoly", "--n", "3", "--g", "2", "--format", "json")
    _, b, _ = run(capsys, "epoly", "--n", "3", "--g", "2", "--format", "json", "--alt")
    assert a == b


def test_deterministic(capsys):
    outs = {run(capsys, "coeff", "--n", "4", "--format", "json")[1] for _ in range(2)}
    assert len(outs) == 1


def test_cache(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv(CACHE_ENV, raising=False)
    d = tmp_path / "c"
    _, first, _ = run(capsys, "epoly", "--n", "3", "--g", "2", "--format", "json", "--cache-dir", str(d))
    files = list(d.glob("*.json"))
    assert len(files) == 1
    blob = files[0].read_bytes()
    _, second, _ = run(capsys, "epoly", "--n", "3", "--g", "2", "--format", "json", "--cache-dir", str(d))
    assert first == second and files[0].read_bytes() == blob
    env_dir = tmp_path / "env"
    monkeypatch.setenv(CACHE_ENV, str(env_dir))
    _, third, _ = run(capsys, "epoly", "--n", "3", "--g", "2", "--format", "json")
    assert third == first and len(list(env_dir.glob("*.json"))) == 1


def test_euler(capsys):
    code, out, _ = run(capsys, "euler", "--n", "3", "--g", "3")
    assert code == 0 and out.strip() == "-19683"
    code, out, _ = run(capsys, "euler", "--n", "4", "--g", "2", "--format", "json")
    assert json.loads(out) == {"n": 4, "g": 2, "euler": 0, "closed_form": 0, "match": True}


def test_types_and_coeff(capsys):
    _, out, _ = run(capsys, "types", "--n", "2")
    assert len(out.splitlines()) == 4
    _, out, _ = run(capsys, "types", "--n", "3", "--format", "json")
    assert len(json.loads(out)) == 7
    _, out, _ = run(capsys, "coeff", "--n", "2", "--nonzero", "--format", "json")
    assert len(json.loads(out)) == 5
    _, out, _ = run(capsys, "coeff", "--n", "2", "--format", "csv")
    assert out.splitlines()[0] == "type,t,value" and len(out.splitlines()) == 9


@pytest.mark.parametrize(
    "argv",
    [
        ["epoly", "--n", "0", "--g", "2"],
        ["epoly", "--n", "2"],
        ["frobnicate"],
        ["epoly", "--n", "2", "--g", "2", "--format", "xml"],
        ["verify", "brute", "--n", "3", "--q", "5"],
        ["verify", "gamma", "--q", "7", "--n", "4"],
        ["verify", "sl2", "--q", "4"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and err.startswith("usage error")


def test_verify_brute(capsys):
    code, out, _ = run(capsys, "verify", "brute", "--n", "2", "--q", "5", "--g", "2")
    rec = json.loads(out)
    assert code == 0 and rec["pass"] and rec["count"] == 1269120
    code, out, _ = run(capsys, "verify", "brute", "--n", "2", "--q", "3", "--g", "2")
    rec = json.loads(out)
    assert rec["expected"] == 1360 and rec["pass"]


def test_verify_skipped(capsys):
    code, out, _ = run(capsys, "verify", "brute", "--n", "3", "--q", "7", "--budget", "1000")
    rec = json.loads(out)
    assert code == 0 and rec["status"] == "skipped"


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "gamma", "--q", "5", "--n", "2")
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and recs and all(r["pass"] for r in recs)
    assert set(recs[0]) == {"lemma", "params", "expected", "got", "pass"}
    code, out, _ = run(capsys, "verify", "hanlon", "--max", "5")
    assert code == 0 and all(json.loads(line)["pass"] for line in out.splitlines())
    code, out, _ = run(capsys, "verify", "crossformula", "--n", "3", "--g", "2")
    assert code == 0 and len(out.splitlines()) == 6
    code, out, _ = run(capsys, "verify", "sl2", "--q", "5")
    assert code == 0 and json.loads(out)["closed_form"] == 1269120


def test_verify_gamma_off_branch(capsys):
    # q = 7 misses the oddity condition for n = 2, so the closed form is not checked
    code, out, _ = run(capsys, "verify", "gamma", "--q", "7", "--n", "2")
    recs = [json.loads(line) for line in out.splitlines()]
    assert not any(r["lemma"] == "zhat_closed_form" for r in recs)
    assert code == 0


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "slnepoly", "epoly", "--n", "1", "--g", "3"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "1"


def test_failed_check_exits_one(capsys, monkeypatch):
    import slnepoly.posets as posets

    monkeypatch.setattr(posets, "hanlon_mu", lambda d, m: 99)
    code, out, _ = run(capsys, "verify", "hanlon", "--max", "2")
    assert code == 1 and not json.loads(out.splitlines()[0])["pass"]
