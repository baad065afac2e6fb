"""The ``angulate`` command line."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from angulate.cli import main
from angulate.formats import parse_complex, parse_qp, serialize_complex
from angulate.gallery import decagon, torus


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path):
    dec = tmp_path / "dec.json"
    dec.write_text(serialize_complex(decagon()))
    tor = tmp_path / "tor.json"
    tor.write_text(serialize_complex(torus()))
    return tmp_path, str(dec), str(tor)


def test_count(capsys):
    assert run(capsys, "count", "--g", "1", "--b", "1", "--c", "2", "--m", "2")[:2] == (0, "3\n")
    assert run(capsys, "count", "--g", "1", "--b", "1", "--c", "1", "--p", "1", "--m", "2")[:2] == (0, "5\n")
    code, out, _ = run(capsys, "count", "--g", "0", "--b", "1", "--c", "5", "--m", "2")
    assert code == 1 and out == "no (2+2)-angulation\n"


def test_exists(capsys):
    assert run(capsys, "exists", "--g", "1", "--b", "1", "--c", "2", "--m", "2")[0] == 0
    assert run(capsys, "exists", "--g", "0", "--b", "1", "--c", "5", "--m", "2")[0] == 1
    assert run(capsys, "exists", "--g", "0", "--b", "0", "--c", "5", "--m", "2")[0] == 2


def test_build(capsys, tmp_path):
    out = tmp_path / "t.json"
    assert run(capsys, "build", "--g", "1", "--b", "1", "--c", "2", "--m", "2", "--out", str(out))[0] == 0
    assert parse_complex(out.read_text()).n_arcs == 3
    assert run(capsys, "build", "--g", "0", "--b", "1", "--c", "5", "--m", "2")[0] == 1


def test_enum_disc(capsys):
    assert run(capsys, "enum-disc", "--m", "1", "--c", "6", "--count-only")[:2] == (0, "14\n")
    code, out, _ = run(capsys, "enum-disc", "--m", "2", "--c", "6")
    data = json.loads(out)
    assert code == 0 and data["count"] == 3 == len(data["angulations"])
    assert run(capsys, "enum-disc", "--m", "2", "--c", "7")[0] == 2
    assert run(capsys, "enum-disc", "--m", "1", "--c", "20")[0] == 2


def test_flip_and_inverse(capsys, files):
    tmp, dec, _ = files
    flipped = tmp / "f.json"
    assert run(capsys, "flip", "--in", dec, "--arc", "2", "--out", str(flipped))[0] == 0
    code, out, _ = run(capsys, "flip", "--in", str(flipped), "--arc", "2", "--inverse")
    assert code == 0 and parse_complex(out).same_as(decagon())
    assert run(capsys, "flip", "--in", dec, "--arc", "9")[0] == 2


def test_walk_seed_fallback(capsys, files, monkeypatch):
    _, _, tor = files
    explicit = run(capsys, "walk", "--in", tor, "--steps", "20", "--seed", "7")[1]
    monkeypatch.setenv("ANGULATE_SEED", "7")
    assert run(capsys, "walk", "--in", tor, "--steps", "20")[1] == explicit
    monkeypatch.setenv("ANGULATE_SEED", "x")
    assert run(capsys, "walk", "--in", tor, "--steps", "20")[0] == 2


def test_quiver_outputs(capsys, files):
    tmp, dec, _ = files
    code, out, _ = run(capsys, "quiver", "--in", dec)
    q, w = parse_qp(out)
    assert code == 0 and len(q.arrows) == 6 and len(w.terms) == 1
    dot = tmp / "q.dot"
    assert run(capsys, "quiver", "--in", dec, "--dot", str(dot))[1] == ""
    assert dot.read_text().count("->") == 6


def test_mutate(capsys, files):
    tmp, dec, _ = files
    qp = tmp / "qp.json"
    run(capsys, "quiver", "--in", dec, "--json", str(qp))
    code, out, _ = run(capsys, "mutate", "--in", str(qp), "--vertex", "2")
    q, w = parse_qp(out)
    assert code == 0 and len(q.arrows) == 4 and not w.terms
    code, out, _ = run(capsys, "mutate", "--in", dec, "--vertex", "2", "--no-reduce")
    assert code == 0 and len(parse_qp(out)[0].arrows) == 8
    assert run(capsys, "mutate", "--in", dec, "--vertex", "7")[0] == 2


def test_check_compat(capsys, files):
    _, dec, tor = files
    code, out, _ = run(capsys, "check-compat", "--in", tor, "--arc", "2")
    assert code == 0 and "arc 2: equal" in out
    code, out, _ = run(capsys, "check-compat", "--in", dec, "--walk", "10", "--seed", "3")
    assert code == 0 and "10 checked" in out
    code, out, _ = run(capsys, "check-compat", "--in", dec)
    assert code == 0 and "3 checked" in out


def test_ginzburg(capsys, files):
    tmp, dec, _ = files
    out = tmp / "p.json"
    code, _, err = run(capsys, "ginzburg", "--in", dec, "--out", str(out), "--verify")
    assert code == 0 and "d^2 = 0" in err
    assert len(json.loads(out.read_text())["generators"]) == 9


def test_export_dot(capsys, files):
    _, _, tor = files
    code, out, _ = run(capsys, "export-dot", "--in", tor)
    assert code == 0 and out.startswith("digraph Q {")


def test_schema_errors_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"m": 2, "polygons": [[{"bnd": 0}]]}')
    code, _, err = run(capsys, "quiver", "--in", str(bad))
    assert code == 2 and "SchemaError" in err
    bad.write_text("not json")
    assert run(capsys, "flip", "--in", str(bad), "--arc", "0")[0] == 2
    assert run(capsys, "quiver", "--in", str(tmp_path / "missing.json"))[0] == 2


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--g", "1"])
    assert exc.value.code == 2


def test_batch(capsys, tmp_path):
    corpus_file = tmp_path / "corpus.json"
    corpus_file.write_text(json.dumps({"entries": [{"signature": [0, 1, 6, 0], "m": 2, "walk": 5, "seed": 1}]}))
    code, out, _ = run(capsys, "batch", "--corpus", str(corpus_file))
    assert code == 0 and json.loads(out)["results"][0]["status"] == "pass"
    corpus_file.write_text(json.dumps({"entries": [{"complex": {"m": 2, "polygons": [[{"bnd": 0}]]}}]}))
    assert run(capsys, "batch", "--corpus", str(corpus_file))[0] == 1
    corpus_file.write_text("[]")
    assert run(capsys, "batch", "--corpus", str(corpus_file))[0] == 2


def test_console_script_is_byte_stable(files):
    _, dec, _ = files
    cmd = [sys.executable, "-m", "angulate", "walk", "--in", dec, "--steps", "15", "--seed", "4"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
