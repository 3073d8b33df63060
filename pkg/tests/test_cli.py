"""Command-line interface: subcommands, exit codes, determinism."""

import copy
import json

from parakahler.builtin_data import BUILTIN_DOCUMENT
from parakahler.cli import main


def test_list_shows_all_algebras(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert "15 algebras, 57 structures" in out
    for name in (
        "r2r2", "rh3", "rr30", "rr3m1", "r2p", "r40", "r4m1", "r4m1b",
        "r4m1m1", "r4maa", "d41", "d42", "d4lam", "h4", "rn4",
    ):
        assert f"- {name}:" in out


def test_verify_filtered_r2r2(capsys):
    assert main(["verify", "--filter", "r2r2.*", "--samples", "2"]) == 0
    out = capsys.readouterr().out
    assert "verified 8 structures" in out
    assert "0 failures" in out


def test_verify_strict_flips_exit_code():
    # the catalog carries documented published-label discrepancies, so
    # --strict must fail while the default run succeeds
    assert main(["verify", "--filter", "r2r2.lambdapos.*", "--samples", "2"]) == 0
    assert (
        main(["verify", "--filter", "r2r2.lambdapos.*", "--samples", "2", "--strict"])
        == 1
    )


def test_verify_clean_subset_strict_ok():
    assert main(["verify", "--filter", "rh3.*", "--samples", "2", "--strict"]) == 0


def test_usage_error_exit_code(capsys):
    assert main(["verify", "--format", "yaml"]) == 2
    assert main(["frobnicate"]) == 2
    assert main([]) == 2
    assert main(["verify", "--samples", "0"]) == 2
    assert main(["verify", "--term-limit", "0"]) == 2


def test_corrupted_catalog_file_exits_one(tmp_path, capsys):
    doc = copy.deepcopy(BUILTIN_DOCUMENT)
    for alg in doc["algebras"]:
        if alg["name"] == "rh3":
            alg["structures"][0]["J"][0][0] = "5"  # breaks J^2 = Id
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code = main(
        ["verify", "--catalog", str(path), "--filter", "rh3.*", "--samples", "2"]
    )
    out = capsys.readouterr().out
    assert code == 1
    assert "FAILURE" in out
    assert "axiom=involution" in out


def test_check_file_ok(tmp_path, capsys):
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps(BUILTIN_DOCUMENT), encoding="utf-8")
    assert main(["check-file", str(path)]) == 0
    assert "OK: 15 algebras" in capsys.readouterr().out


def test_check_file_malformed(tmp_path, capsys):
    doc = copy.deepcopy(BUILTIN_DOCUMENT)
    doc["algebras"][0]["structures"][0]["J"][0][0] = "a+*b"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    assert main(["check-file", str(path)]) == 2
    assert "catalog error" in capsys.readouterr().err


def test_check_file_missing(capsys):
    assert main(["check-file", "/nonexistent/catalog.json"]) == 2


def test_report_written_and_deterministic(tmp_path):
    out1 = tmp_path / "report1.json"
    out2 = tmp_path / "report2.json"
    for out in (out1, out2):
        code = main(
            [
                "report",
                "--filter",
                "rr3m1.*",
                "--samples",
                "2",
                "--seed",
                "3",
                "--out",
                str(out),
            ]
        )
        assert code == 0
    assert out1.read_bytes() == out2.read_bytes()
    doc = json.loads(out1.read_text())
    assert doc["summary"]["total"] == 3
    assert "sasakian" in doc
    assert doc["summary"]["sasakian_ok"] == 3


def test_report_markdown(tmp_path):
    out = tmp_path / "report.md"
    assert (
        main(
            [
                "report", "--filter", "rn4.*", "--samples", "2",
                "--format", "markdown", "--out", str(out),
            ]
        )
        == 0
    )
    text = out.read_text()
    assert "| rn4.omega.J |" in text
    assert "## Para-Sasakian extensions" in text


def test_extend_exit_zero(capsys):
    assert main(["extend", "--filter", "rn4.*", "--samples", "2"]) == 0
    out = capsys.readouterr().out
    assert "sasakian rn4.omega.J" in out


def test_stdout_byte_identical_across_runs(capsys):
    runs = []
    for _ in range(2):
        assert main(["verify", "--filter", "rr30.*", "--samples", "2", "--seed", "4"]) == 0
        runs.append(capsys.readouterr().out)
    assert runs[0] == runs[1]


def test_env_seed_override(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("PARAKAHLER_SEED", "11")
    out1 = tmp_path / "a.json"
    assert main(["report", "--filter", "rn4.*", "--samples", "2", "--out", str(out1)]) == 0
    doc = json.loads(out1.read_text())
    assert doc["config"]["seed"] == 11
