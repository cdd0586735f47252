import io
import json
import subprocess
import sys

import pytest

from g2def.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, run
from g2def.homogeneous import builtin, dumps_space, space_to_dict


def _run(argv):
    buf = io.StringIO()
    code = run(argv, stdout=buf)
    return code, buf.getvalue()


def test_verify_ok():
    code, out = _run(["verify", "--samples", "5"])
    assert code == EXIT_OK
    assert out.strip().endswith("all checks passed")


@pytest.mark.parametrize("name", ["so5-so3", "squashed-s7", "n11"])
def test_check_and_candidates(name):
    code, out = _run(["check", name, "--format", "json"])
    assert code == EXIT_OK
    d = json.loads(out)
    assert d["nearly_parallel"] and d["induces_metric"] and d["isotropy_preserves_sigma_o"]
    assert d["sigma_o_norm2"] == "7"
    code, out = _run(["candidates", name, "--format", "json"])
    assert code == EXIT_OK
    assert all(c["casimir"] == "-1" for c in json.loads(out)["candidates"])


def test_deform_json_is_canonical_and_deterministic(tmp_path):
    code, out = _run(["deform", "n11", "--format", "json"])
    assert code == EXIT_OK
    d = json.loads(out)
    assert d["total_dimension"] == 8
    assert json.dumps(d, indent=2, sort_keys=True) + "\n" == out
    assert _run(["deform", "n11", "--format", "json"])[1] == out
    p = tmp_path / "r.json"
    assert run(["deform", "n11", "--format", "json", "--out", str(p)]) == EXIT_OK
    assert p.read_text() == out


def test_deform_text_and_decimal():
    code, out = _run(["deform", "squashed-s7", "--decimal"])
    assert code == EXIT_OK
    assert "total dimension: 0" in out
    assert "tau0 (approx.): -5.36656314" in out


def test_export_reload_same_report(tmp_path):
    code, out = _run(["export", "n11"])
    assert code == EXIT_OK
    p = tmp_path / "n11.json"
    p.write_text(out)
    assert _run(["deform", str(p), "--format", "json"])[1] == _run(["deform", "n11", "--format", "json"])[1]
    assert out == dumps_space(builtin("n11"))


def test_bad_inputs(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("{")
    assert run(["check", str(p)]) == EXIT_INPUT
    assert run(["check", str(tmp_path / "missing.json")]) == EXIT_INPUT
    d = space_to_dict(builtin("n11"))
    d["structure_constants"][0][3] = "5"
    p.write_text(json.dumps(d))
    assert run(["check", str(p)]) == EXIT_INPUT
    assert "invariant violated" in capsys.readouterr().err


def test_orientation_flip_is_a_failed_check(tmp_path):
    d = space_to_dict(builtin("so5-so3"))
    d["orientation"] = 1
    p = tmp_path / "flip.json"
    p.write_text(json.dumps(d))
    code, out = _run(["check", str(p), "--format", "json"])
    assert code == EXIT_FAIL
    assert json.loads(out)["nearly_parallel"] is False


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "g2def", "candidates", "n11"], capture_output=True, text=True)
    assert res.returncode == 0
    assert "su(3)" in res.stdout
