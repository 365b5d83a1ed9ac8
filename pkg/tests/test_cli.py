"""CLI surface: formats, golden tables, determinism, exit codes."""

import json
from pathlib import Path

import pytest

import hyperlah.weighted_lah as weighted_lah
from hyperlah.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_ehrhart_text_examples(capsys):
    code, out, _ = run_cli(capsys, "ehrhart", "--k", "2", "--n", "4")
    assert code == 0
    assert out == "1 + 7/3 t + 2 t^2 + 2/3 t^3\n"
    code, out, _ = run_cli(capsys, "ehrhart", "--k", "1", "--n", "3")
    assert code == 0
    assert out == "1 + 3/2 t + 1/2 t^2\n"
    code, out, _ = run_cli(capsys, "ehrhart", "--k", "4", "--n", "4")
    assert code == 0
    assert out == "1\n"


def test_ehrhart_methods_give_same_output(capsys):
    outputs = set()
    for method in ("katzman", "stirling", "wlah", "oracle"):
        _, out, _ = run_cli(capsys, "ehrhart", "--k", "3", "--n", "6", "--method", method)
        outputs.add(out)
    assert len(outputs) == 1


def test_ehrhart_json_schema_and_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "ehrhart", "--k", "2", "--n", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"k": 2, "n": 4, "method": "wlah", "coeffs": ["1", "7/3", "2", "2/3"]}
    assert list(doc) == ["k", "n", "method", "coeffs"]
    # re-emitting the parsed document is the identity
    assert json.dumps(doc) + "\n" == out


def test_ehrhart_csv(capsys):
    code, out, _ = run_cli(capsys, "ehrhart", "--k", "1", "--n", "3", "--format", "csv")
    assert code == 0
    assert out == "degree,coeff\n0,1\n1,3/2\n2,1/2\n"


def test_ehrhart_invalid_params_exit_2(capsys):
    code, out, err = run_cli(capsys, "ehrhart", "--k", "9", "--n", "4")
    assert code == 2
    assert out == ""
    assert "error" in err


def test_wlah_table_golden_files(capsys):
    for n in (5, 6):
        golden = (GOLDEN / f"wlah_table_n{n}.csv").read_bytes()
        code, out, _ = run_cli(capsys, "wlah-table", "--n", str(n))
        assert code == 0
        assert out.encode() == golden


def test_wlah_table_small(capsys):
    code, out, _ = run_cli(capsys, "wlah-table", "--n", "2")
    assert code == 0
    assert out == "m\\l,0,1\n1,1,1\n2,1,\n"


def test_wlah_table_json(capsys):
    code, out, _ = run_cli(capsys, "wlah-table", "--n", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {
        "n": 3,
        "rows": [
            {"m": 1, "values": ["2", "2", "2"]},
            {"m": 2, "values": ["3", "3"]},
            {"m": 3, "values": ["1"]},
        ],
    }


def test_wlah_single_value(capsys):
    for method in ("enum", "rec-a", "rec-b", "closed", "genfun"):
        code, out, _ = run_cli(
            capsys, "wlah", "--n", "6", "--m", "2", "--l", "2", "--method", method
        )
        assert code == 0
        assert out == "444\n"


def test_wlah_single_value_json(capsys):
    code, out, _ = run_cli(
        capsys, "wlah", "--n", "5", "--m", "3", "--l", "0", "--format", "json"
    )
    assert code == 0
    assert json.loads(out) == {"n": 5, "m": 3, "l": 0, "method": "closed", "value": "35"}


def test_wlah_without_indices_prints_table(capsys):
    code, out, _ = run_cli(capsys, "wlah", "--n", "2", "--format", "csv")
    assert code == 0
    assert out == "m\\l,0,1\n1,1,1\n2,1,\n"


def test_wlah_requires_both_indices(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["wlah", "--n", "5", "--m", "2"])
    assert exc.value.code == 2


def test_wlah_enum_over_cap_exits_cleanly(capsys):
    code, out, err = run_cli(
        capsys, "wlah", "--n", "12", "--m", "2", "--l", "0", "--method", "enum"
    )
    assert code == 2
    assert out == ""
    assert "cap" in err


def test_output_is_deterministic(capsys):
    args = ("wlah-table", "--n", "6")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_crosscheck_passes(capsys):
    code, out, _ = run_cli(capsys, "crosscheck", "--max-n", "5", "--oracle-max-n", "4")
    assert code == 0
    assert "overall: PASS" in out
    for suite in (
        "wlah-methods",
        "wlah-structure",
        "wlah-tables",
        "ehrhart-methods",
        "ehrhart-structure",
        "worpitzky",
    ):
        assert f"PASS  {suite}" in out


def test_crosscheck_minimal_range(capsys):
    code, out, _ = run_cli(capsys, "crosscheck", "--max-n", "2")
    assert code == 0
    assert "overall: PASS" in out


def test_crosscheck_json(capsys):
    code, out, _ = run_cli(
        capsys, "crosscheck", "--max-n", "4", "--oracle-max-n", "3", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert {s["name"] for s in doc["suites"]} >= {"wlah-methods", "ehrhart-methods"}


def test_crosscheck_rejects_tiny_max_n(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["crosscheck", "--max-n", "1"])
    assert exc.value.code == 2


def test_crosscheck_injected_fault_exits_1(capsys, monkeypatch):
    true_closed = weighted_lah._wlah_closed

    def faulty(l, n, m):
        value = true_closed(l, n, m)
        return value + 1 if (l, n, m) == (1, 4, 2) else value

    monkeypatch.setattr(weighted_lah, "_wlah_closed", faulty)
    code, out, _ = run_cli(capsys, "crosscheck", "--max-n", "5", "--oracle-max-n", "3")
    assert code == 1
    assert "FAIL" in out
    assert "(l=1, n=4, m=2)" in out


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["ehrhart", "--k", "2"])  # missing --n
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
