import json
import os
import subprocess
from fractions import Fraction
from math import gcd
from pathlib import Path

import jsonschema
import pytest

import thurston_obstruct as t

ROOT = Path(__file__).resolve().parents[2]
SCHEMAS = ROOT / "schemas"
SAMPLES = ROOT / "samples"
CLI = os.environ.get("THURSTON_OBSTRUCT_CLI")

SAMPLE_COMMANDS = {
    "portrait": ("orbifold", "portrait"),
    "matrix": ("matrix", "matrix"),
    "torus": ("slopes", "torus-map"),
    "table": ("table", "table"),
    "canonical": ("canonical", "canonical"),
}


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def samples():
    for path in sorted(SAMPLES.glob("*.json")):
        command, kind = SAMPLE_COMMANDS[path.name.split(".")[1]]
        yield path, command, kind


def test_spectral_examples():
    assert t.spectral_radius_class([[Fraction(1, 2)]])[0] == "BelowOne"
    assert t.spectral_radius_class([[0, 1], [1, 0]]) == ("ExactlyOne", (1, 1))
    tag, (lo, hi) = t.spectral_radius_class([[0, 2], [1, 0]])
    assert tag == "AboveOne"
    assert lo * lo <= 2 <= hi * hi
    lo, hi = t.leading_eigenvalue_interval([[0, 2], [1, 0]], Fraction(1, 1000))
    assert hi - lo <= Fraction(1, 1000) and lo * lo <= 2 <= hi * hi
    assert t.imprimitivity_index([[0, 1], [1, 0]]) == 2


def test_subinvariant_vector():
    assert t.subinvariant_vector([[0, 1], [1, 0]]) == [1, 1]
    assert t.subinvariant_vector([["1/2", 0], [1, 1]]) is None
    assert t.subinvariant_vector([[2]]) == [1]


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        t.spectral_radius_class([[1, 2]])
    with pytest.raises(ValueError):
        t.pullback_slope([[1, 0], [0, 1]], (0, 1))


def covering_count(a, v):
    # distinct offsets det[w, A^-1 z] mod 1 over the cosets z of A Z^2
    (a00, a01), (a10, a11) = a
    det = a00 * a11 - a01 * a10
    r1, r2 = a00 * v[1] - a10 * v[0], a01 * v[1] - a11 * v[0]
    g = gcd(r1, r2)
    w = (r2 // g, -r1 // g)
    offsets = set()
    for z1 in range(det):
        for z2 in range(det):
            x1 = Fraction(a11 * z1 - a01 * z2, det)
            x2 = Fraction(a00 * z2 - a10 * z1, det)
            phi = w[0] * x2 - w[1] * x1
            offsets.add(phi - (phi.numerator // phi.denominator))
    return len(offsets)


@pytest.mark.parametrize("a", [[[2, 0], [0, 3]], [[2, 2], [0, 2]], [[1, -1], [1, 1]], [[3, 1], [1, 2]]])
def test_pullback_counts(a):
    det = a[0][0] * a[1][1] - a[0][1] * a[1][0]
    for v in [(1, 0), (0, 1), (1, 1), (-1, 2), (3, 2)]:
        target, count, degree = t.pullback_slope(a, v)
        assert count * degree == det
        assert count == covering_count(a, v)


def test_canonical_obstruction():
    assert t.canonical_obstruction([[2, 0], [0, 3]]) == ((1, 0), Fraction(3, 2))
    assert t.canonical_obstruction([[2, 2], [0, 2]]) is None


@pytest.mark.parametrize("path,command,kind", list(samples()), ids=lambda x: getattr(x, "name", str(x)))
def test_samples_validate_and_replay(path, command, kind):
    doc = json.loads(path.read_text())
    jsonschema.validate(doc, schema(kind))
    code, report = t.run(command, doc)
    assert code == 0
    jsonschema.validate(report, schema("report"))
    assert t.replay(report)


def test_error_reports_validate():
    code, report = t.run("slopes", {"schema": "thurston-obstruct/torus-map/1", "matrix": [[1, 0], [0, 1]]})
    assert code == 3
    jsonschema.validate(report, schema("report"))
    code, report = t.run("matrix", {"schema": "thurston-obstruct/matrix/1", "matrix": [[1, 2]]})
    assert code == 2
    assert report["error"]["kind"] == "malformed-input"


def test_rationals_are_strings():
    code, report = t.run("matrix", {"schema": "thurston-obstruct/matrix/1", "matrix": [[0, 2], [1, 0]]},
                         width=Fraction(1, 1000))
    assert code == 0

    def walk(x):
        assert not isinstance(x, float)
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)

    walk(report)
    lo, hi = report["result"]["leading_eigenvalue"]["interval"]
    assert Fraction(lo) ** 2 <= 2 <= Fraction(hi) ** 2


@pytest.mark.skipif(CLI is None, reason="command-line tool not configured")
def test_cli_exit_codes(tmp_path):
    def cli(*args, **kw):
        return subprocess.run([CLI, *args], capture_output=True, text=True, **kw)

    r = cli("slopes", "--matrix", "[[2,0],[0,3]]", "--format", "text")
    assert r.returncode == 0
    assert "slope 1/0, multiplier 3/2" in r.stdout

    r = cli("orbifold", str(SAMPLES / "z2.portrait.json"))
    assert r.returncode == 0
    report = json.loads(r.stdout)
    assert report["result"]["signature"] == ["inf", "inf"] and report["result"]["chi"] == "0/1"
    saved = tmp_path / "report.json"
    saved.write_text(r.stdout)
    assert cli("--replay", str(saved)).returncode == 0
    report["result"]["chi"] = "1/1"
    saved.write_text(json.dumps(report))
    assert cli("--replay", str(saved)).returncode == 1

    r = cli("matrix", "--check-simple", "[[1/2,0],[1,1]]")
    assert r.returncode == 0
    assert json.loads(r.stdout)["result"]["simple"]["subinvariant_vector"] is None

    assert cli("matrix", "-", input="{\"schema\": ").returncode == 2
    assert cli("slopes", "--matrix", "[[1,0],[0,1]]").returncode == 3
    assert cli("table", str(SAMPLES / "levy.table.json"), "--subset-cap", "1").returncode == 4
    r = cli("slopes", "--matrix", "[[2,0],[0,3]]", env={**os.environ, "THURSTON_OBSTRUCT_THREADS": "2"})
    assert r.returncode == 0
