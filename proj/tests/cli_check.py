"""Runs lamelab, validates JSON output against schema/ and checks exit codes."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

lamelab, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
failures = []


def run(*args, env=None):
    return subprocess.run([lamelab, *args], capture_output=True, text=True, env=env)


def expect(args, code):
    r = run(*args)
    if r.returncode != code:
        failures.append(f"{' '.join(args)}: exit {r.returncode}, wanted {code}\n{r.stderr}")
    return r


def validate(name, args):
    r = expect([name, *args, "--format", "json"], 0)
    try:
        data = json.loads(r.stdout)
        schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
        jsonschema.validate(data, schema)
    except Exception as e:
        failures.append(f"{name} {' '.join(args)}: {e}")
        return []
    return data


with tempfile.TemporaryDirectory() as tmp:
    validate("spectral", ["--m", "0..6", "--component", "both"])
    validate("legendre", ["--m", "2..5", "--j", "0"])
    validate("legendre", ["--m", "1..5", "--j", "2", "--labeling", "complement"])
    validate("topology", ["--m", "0..13"])
    validate("angles", ["--m", "0..6"])
    validate("cohn", ["--m", "2..8", "--component", "both"])
    validate("interlace", ["--trials", "10", "--m", "0..6"])
    validate("selfcheck", [])
    lw = validate("linwang", ["--m", "1..3", "--grid", "120", "--out", tmp])
    for rec in lw:
        for f in rec["files"]:
            if not pathlib.Path(f).is_file():
                failures.append(f"linwang did not write {f}")

    if expect(["spectral", "--m", "2"], 0).stdout.strip() != "lambda^2 - 3*g2":
        failures.append("spectral --m 2 text output")
    if expect(["legendre", "--m", "3", "--j", "0"], 0).stdout.strip() != "B + 4*a + 4":
        failures.append("legendre --m 3 --j 0 text output")
    expect(["selfcheck"], 0)
    expect([], 2)
    expect(["bogus"], 2)
    expect(["spectral", "--m", "x"], 2)
    expect(["spectral", "--m", "2", "--component", "III"], 2)
    expect(["cohn", "--m", "1", "--component", "I"], 2)
    expect(["legendre", "--m", "2", "--j", "7"], 2)
    expect(["linwang", "--m", "4"], 2)
    expect(["linwang", "--m", "1", "--grid", "8"], 2)

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
