import io
import json
import shlex
import subprocess
import sys
from pathlib import Path

import pytest

from dedekind.cli import main

GOLDEN = Path(__file__).parent / "golden"


def load_script():
    out = []
    for line in (GOLDEN / "script.txt").read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, _, args = line.partition(":")
        out.append((name.strip(), shlex.split(args)))
    return out


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def transcript(argv):
    code, out, err = run(argv)
    return f"$ dedekind {shlex.join(argv)}\n[stdout]\n{out}[stderr]\n{err}[exit {code}]\n"


SCRIPT = load_script()


@pytest.mark.parametrize("name, argv", SCRIPT, ids=[n for n, _ in SCRIPT])
def test_golden(name, argv):
    expected = (GOLDEN / f"{name}.txt").read_bytes()
    assert transcript(argv).encode("utf-8") == expected


def test_script_covers_every_subcommand_and_exit_code():
    commands = {"eval", "factor", "valuation", "crt", "approx", "two-gen", "primary", "classes", "suite"}
    seen, codes = set(), set()
    for name, argv in SCRIPT:
        seen |= commands & set(argv)
        codes.add(run(argv)[0])
    assert seen == commands
    assert codes == {0, 1, 2, 3}


def test_json_and_text_agree():
    for expr in ["<3,1+2w> * <3,1-2w>", "inv(<2,1+w>)^3", "<7/2, w>"]:
        _, text, _ = run(["--ring", "d=-5", "eval", expr])
        _, js, _ = run(["--ring", "d=-5", "--json", "eval", expr])
        payload = json.loads(js)
        assert payload["ideal"]["text"] == text.strip()
        a, b, c = payload["ideal"]["hnf"]
        assert text.strip() == f"[{a}, {b}+{c}w] den {payload['ideal']['den']}"
        assert payload["ring"] == {"d": -5, "conductor": 1, "omega": "sqrt_d", "discriminant": -20}


def test_text_output_parses_back():
    _, text, _ = run(["--ring", "d=-23", "eval", "<2, w>^-2 * <3/4>"])
    _, again, _ = run(["--ring", "d=-23", "eval", text.strip()])
    assert again == text


def test_suite_reads_a_config(tmp_path):
    cfg = tmp_path / "profile.cfg"
    cfg.write_text("d=-14\nseed=3\ncases=7\nprimes=2,3\n")
    code, out, _ = run(["--ring", "d=-5", "suite", "factorization", "--config", str(cfg)])
    assert code == 0
    assert out.startswith("suite factorization on Z[w], w = sqrt(-14): 7 cases, PASS")
    code, _, err = run(["--ring", "d=-5", "suite", "factorization", "--config", str(tmp_path / "missing")])
    assert code == 2 and err.startswith("domain error: cannot read config")


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dedekind", "--ring", "d=-5", "factor", "<6>"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "(2, 1+1w)^2 * (3, 1+1w) * (3, 2+1w)\n"
    proc = subprocess.run([sys.executable, "-m", "dedekind", "--ring", "d=-5", "eval", "<0>"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 2 and proc.stdout == ""
