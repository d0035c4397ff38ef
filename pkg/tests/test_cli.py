"""Command-line behavior: formats, exit codes, stream separation."""

import json

import pytest

from feyncount.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_counts_table(capsys):
    code, out, err = run(capsys, "counts", "--max-order", "4")
    assert code == 0
    assert err == ""
    lines = out.splitlines()
    assert lines[0].split() == ["m", "total", "bubble", "connected", "distinct"]
    distinct = [line.split()[-1] for line in lines[1:]]
    assert distinct == ["1", "2", "10", "74", "706"]


def test_counts_csv(capsys):
    code, out, _ = run(capsys, "counts", "--max-order", "4", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "m,total,bubble,connected,distinct"
    assert lines[4] == "3,5040,720,3552,74"


def test_counts_json_uses_decimal_strings(capsys):
    code, out, _ = run(capsys, "counts", "--max-order", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["rows"][3] == {
        "m": 3,
        "total": "5040",
        "bubble": "720",
        "connected": "3552",
        "distinct": "74",
    }
    assert all(isinstance(row["connected"], str) for row in payload["rows"])


def test_counts_bfile_starts_at_order_one(capsys):
    code, out, _ = run(capsys, "counts", "--max-order", "4", "--format", "bfile")
    assert code == 0
    assert out == "1 2\n2 10\n3 74\n4 706\n"


def test_counts_all_methods_agree(capsys):
    code, out, err = run(capsys, "counts", "--max-order", "12", "--method", "all")
    assert code == 0
    assert err == ""
    assert out.splitlines()[-1].split()[0] == "12"


def test_counts_rejects_blown_term_budget(capsys):
    code, out, err = run(
        capsys, "counts", "--max-order", "9", "--method", "arques-walsh",
        "--term-budget", "100",
    )
    assert code == 2
    assert out == ""
    assert "term budget" in err and "100" in err


def test_counts_output_is_byte_identical(capsys):
    _, first, _ = run(capsys, "counts", "--max-order", "6", "--format", "csv")
    _, second, _ = run(capsys, "counts", "--max-order", "6", "--format", "csv")
    assert first == second


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--max-order", "2")
    assert code == 0
    assert out.splitlines()[-1].startswith("overall: PASS")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--max-order", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["overall"] is True
    assert payload["passed"] == payload["total"] == len(payload["checks"])
    names = {c["name"] for c in payload["checks"]}
    assert {
        "convolution", "divisibility", "total-rewrite", "bubble-rewrite",
        "closed-form-agreement", "arques-walsh-agreement", "coefficient-recursion",
        "composition-count", "wick-total", "wick-connected", "wick-vacuum",
        "orbit-count", "orbit-histogram",
    } <= names


def test_verify_rejects_order_zero(capsys):
    code, out, err = run(capsys, "verify", "--max-order", "0")
    assert code == 2
    assert out == ""
    assert "error" in err


def test_oracle_table(capsys):
    code, out, err = run(capsys, "oracle", "--order", "1")
    assert code == 0
    assert err == ""
    fields = dict(line.split() for line in out.splitlines())
    assert fields["total"] == "6"
    assert fields["connected"] == "4"
    assert fields["vacuum"] == "2"
    assert fields["orbits"] == "2"
    assert fields["orbit_size_2"] == "2"


def test_oracle_json_order_two(capsys):
    code, out, _ = run(capsys, "oracle", "--order", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["total"] == "120"
    assert payload["connected"] == "80"
    assert payload["vacuum"] == "24"
    assert payload["orbits"] == "10"
    assert payload["orbit_sizes"] == {"8": "10"}


def test_oracle_csv(capsys):
    code, out, _ = run(capsys, "oracle", "--order", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "metric,value"
    assert "connected,4" in out.splitlines()


def test_oracle_refuses_order_six_with_cost(capsys):
    code, out, err = run(capsys, "oracle", "--order", "6")
    assert code == 2
    assert out == ""
    assert "6227020800" in err


def test_oracle_requires_override_above_cap(capsys):
    code, _, err = run(capsys, "oracle", "--order", "5")
    assert code == 2
    assert "override" in err


def test_oracle_writes_dot_files(capsys, tmp_path):
    out_dir = tmp_path / "dots"
    code, out, err = run(
        capsys, "oracle", "--order", "1", "--dot-dir", str(out_dir)
    )
    assert code == 0
    assert sorted(p.name for p in out_dir.iterdir()) == [
        "diagram_m1_1.dot", "diagram_m1_2.dot",
    ]
    assert "wrote 2 DOT files" in err


def test_export_subcommand(capsys, tmp_path):
    out_dir = tmp_path / "exported"
    code, out, _ = run(capsys, "export", "--order", "2", "--out-dir", str(out_dir))
    assert code == 0
    assert "wrote 10 DOT files" in out
    files = sorted(out_dir.iterdir())
    assert len(files) == 10
    first = (out_dir / "diagram_m2_1.dot").read_text()
    assert first.startswith("graph diagram_m2 {")
    # re-running produces identical bytes
    run(capsys, "export", "--order", "2", "--out-dir", str(out_dir))
    assert (out_dir / "diagram_m2_1.dot").read_text() == first


def test_export_respects_census_cap(capsys, tmp_path):
    code, _, err = run(capsys, "export", "--order", "5", "--out-dir", str(tmp_path))
    assert code == 2
    assert "census" in err


def test_compositions_count(capsys):
    code, out, _ = run(capsys, "compositions", "--n", "5")
    assert code == 0
    assert out == "16\n"


def test_compositions_list(capsys):
    code, out, _ = run(capsys, "compositions", "--n", "5", "--list")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 16
    listed = {tuple(int(x) for x in line.split("+")) for line in lines}
    assert (5,) in listed and (1, 1, 1, 1, 1) in listed and (4, 1) in listed


def test_compositions_trivial_list(capsys):
    code, out, _ = run(capsys, "compositions", "--n", "1", "--list")
    assert code == 0
    assert out == "1\n"


def test_compositions_rejects_zero(capsys):
    code, _, err = run(capsys, "compositions", "--n", "0")
    assert code == 2
    assert "error" in err


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
