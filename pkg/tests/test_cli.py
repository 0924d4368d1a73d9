import json
import os
import subprocess
import sys

import pytest

from starkit.cli import main
from starkit.corpus import CORPUS_VERSION

from conftest import fixture_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_star_pinned_output(capsys):
    code, out, _ = run(capsys, "star", "--form", "omega0",
                       "--order", "3", "z1", "z2")
    assert code == 0
    assert out == "z1*z2 - 1/2*i*h\n"


def test_star_with_series_inputs(capsys):
    code, out, _ = run(capsys, "star", "--order", "4", "h*z1", "h*z2")
    assert code == 0
    assert out == "z1*z2*h^2 - 1/2*i*h^3\n"


def test_star_in_dim_four(capsys):
    code, out, _ = run(capsys, "star", "--form", "omega0x2",
                       "--order", "2", "z1*z3", "z4")
    assert code == 0
    assert out == "z1*z3*z4 - 1/2*i*z1*h\n"


def test_bracket(capsys):
    code, out, _ = run(capsys, "bracket", "z1", "z2")
    assert (code, out) == (0, "-1\n")
    # q/p aliases are accepted on input; output uses the z names
    code, out, _ = run(capsys, "bracket", "--form", "omega0x2",
                       "q2^2*p2", "q2")
    assert (code, out) == (0, "z3^2\n")


def test_verify_dq_passes(capsys):
    code, out, _ = run(capsys, "verify-dq", "--form", "omega0",
                       "--order", "6", "--seed", "42")
    assert code == 0
    assert out.rstrip().endswith("pass")
    assert "[FAIL]" not in out


def test_surface_ingest_pinned_lines(capsys):
    code, out, _ = run(capsys, "surface-ingest", fixture_path("octagon.json"))
    assert (code, out) == (0, "genus 2, zeros [order 2], sum 2 = 2g-2\n")
    code, out, _ = run(capsys, "surface-ingest", fixture_path("square.json"))
    assert (code, out) == (0, "genus 1, zeros [], sum 0 = 2g-2\n")


def test_surface_ingest_malformed_is_exit_2(capsys, tmp_path):
    bad = tmp_path / "open.json"
    bad.write_text(json.dumps({
        "edges": [["1", "0"], ["0", "1"], ["-1", "0"], ["0", "-2"]],
        "pairing": [[0, 2], [1, 3]],
    }))
    code, _, err = run(capsys, "surface-ingest", str(bad))
    assert code == 2
    assert "does not close" in err

    missing = tmp_path / "nope.json"
    code, _, err = run(capsys, "surface-ingest", str(missing))
    assert code == 2

    notjson = tmp_path / "garbage.json"
    notjson.write_text("{not json")
    code, _, err = run(capsys, "surface-ingest", str(notjson))
    assert code == 2


def test_patch_check_square(capsys):
    code, out, _ = run(capsys, "patch-check", "--surface",
                       fixture_path("square.json"), "--order", "4",
                       "--count", "1")
    assert code == 0
    assert out.rstrip().endswith("pass")


def test_product_star_reports_delta(capsys):
    code, out, _ = run(capsys, "product-star", "--rank", "2", "--genus", "2",
                       "--order", "2", "q1", "p1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "delta = 5 (2*delta = 10 coordinates)"
    assert lines[1] == "q1*p1 - 1/2*i*h"
    code, out, _ = run(capsys, "product-star", "--rank", "1", "--genus", "2",
                       "--order", "2", "q1", "p2")
    assert code == 0
    assert out.splitlines()[0] == "delta = 2 (2*delta = 4 coordinates)"


def test_product_star_conflicting_n(capsys):
    code, _, err = run(capsys, "product-star", "--n", "3", "--rank", "2",
                       "--genus", "2", "q1", "p1")
    assert code == 2
    assert "conflicts" in err


def test_symmetrize(capsys):
    code, out, _ = run(capsys, "symmetrize", "--n", "2", "p1")
    assert (code, out) == (0, "1/2*p1 + 1/2*p2\n")


def test_transport_good_map(capsys):
    code, out, _ = run(capsys, "transport", "--map",
                       fixture_path("shear_map.json"), "--order", "3",
                       "z1", "z2")
    assert (code, out) == (0, "z1*z2 - 1/2*i*h\n")


def test_transport_rejects_non_symplectic(capsys):
    code, out, _ = run(capsys, "transport", "--map",
                       fixture_path("scale_map.json"), "--order", "3",
                       "z1", "z2")
    assert code == 1
    assert "[FAIL]" in out and out.rstrip().endswith("fail")


def test_transport_rejects_broken_inverse(capsys):
    code, out, _ = run(capsys, "transport", "--map",
                       fixture_path("broken_map.json"), "--order", "3",
                       "z1", "z2")
    assert code == 1
    assert "round trip" in out


def test_verify_transport(capsys):
    code, out, _ = run(capsys, "verify-transport", "--map",
                       fixture_path("shear_map.json"), "--order", "4",
                       "--count", "2", "--seed", "7")
    assert code == 0
    assert out.rstrip().endswith("pass")
    code, out, _ = run(capsys, "verify-transport", "--map",
                       fixture_path("scale_map.json"), "--order", "4",
                       "--count", "2", "--seed", "7")
    assert code == 1


def test_malformed_expression_is_exit_2(capsys):
    code, _, err = run(capsys, "star", "z1 +", "z2")
    assert code == 2
    assert "column 5" in err
    code, _, err = run(capsys, "star", "0.5*z1", "z2")
    assert code == 2
    assert "exact rational" in err


def test_json_reports_are_deterministic(capsys):
    args = ("verify-dq", "--form", "omega0x2", "--order", "4",
            "--seed", "11", "--count", "3", "--json")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["passed"] is True
    assert payload["command"] == "verify-dq"
    assert payload["corpus_version"] == CORPUS_VERSION


def test_json_star_payload(capsys):
    code, out, _ = run(capsys, "star", "--order", "3", "--json", "z1", "z2")
    assert code == 0
    payload = json.loads(out)
    assert payload["outputs"]["series"] == "z1*z2 - 1/2*i*h"


def test_json_identical_across_hash_seeds():
    # string hashing varies per process; reports must not
    cmd = [sys.executable, "-m", "starkit.cli", "surface-ingest",
           fixture_path("octagon.json"), "--json"]
    outs = []
    for seed in ("0", "424242"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        outs.append(subprocess.run(cmd, capture_output=True, text=True,
                                   env=env, check=True).stdout)
    assert outs[0] == outs[1]


def test_console_script_is_installed():
    out = subprocess.run(["starkit", "star", "--order", "3", "z1", "z2"],
                         capture_output=True, text=True)
    if out.returncode != 0:
        pytest.skip("entry point not on PATH in this environment")
    assert out.stdout == "z1*z2 - 1/2*i*h\n"
