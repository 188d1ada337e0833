"""Command-line interface: stream analysis, generation, verify, search."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from hypodom.cli import main
from hypodom.graph import cycle, parse_graph6, write_graph6
from hypodom.canon import certificate


def run_cli(args: list[str], stdin: str = "") -> tuple[int, str, str]:
    proc = subprocess.run(
        [sys.executable, "-m", "hypodom.cli", *args],
        input=stdin,
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


class TestAnalyze:
    def test_c7_record(self):
        code, out, _ = run_cli(["analyze"], stdin=write_graph6(cycle(7)) + "\n")
        assert code == 0
        rec = json.loads(out.strip())
        assert rec["gamma"] == 3
        assert "hypo-UD" in rec["classes"] and "hypo-ED" in rec["classes"]
        assert rec["n"] == 7 and rec["m"] == 7
        assert certificate(parse_graph6(rec["g6"])) == certificate(cycle(7))

    def test_c4_both_classes(self):
        code, out, _ = run_cli(["analyze"], stdin=write_graph6(cycle(4)) + "\n")
        rec = json.loads(out.strip())
        assert set(rec["classes"]) >= {"hypo-ED", "hypo-UD"}

    def test_malformed_line_continues(self):
        stdin = write_graph6(cycle(4)) + "\n!!!\n" + write_graph6(cycle(5)) + "\n"
        code, out, _ = run_cli(["analyze"], stdin=stdin)
        lines = [json.loads(s) for s in out.splitlines()]
        assert len(lines) == 3
        assert "error" in lines[1] and lines[1]["line"] == 2
        assert lines[2]["n"] == 5
        assert code == 2  # format errors reported via exit status

    def test_order_preserved_and_jobs_invariant(self):
        stdin = "".join(write_graph6(cycle(n)) + "\n" for n in range(3, 9))
        _, seq, _ = run_cli(["analyze"], stdin=stdin)
        _, par, _ = run_cli(["analyze", "--jobs", "3"], stdin=stdin)
        assert seq == par
        orders = [json.loads(s)["n"] for s in seq.splitlines()]
        assert orders == list(range(3, 9))

    def test_gamma_sets_listing_flag(self):
        _, out, _ = run_cli(["analyze", "--cap-gamma-sets", "2"], stdin="Cr\n")
        rec = json.loads(out.strip())
        assert rec["gamma_set_count"] == 6
        assert len(rec["gamma_sets"]) == 2

    def test_bondage_flag(self):
        _, out, _ = run_cli(["analyze", "--bondage-cap", "3"], stdin=write_graph6(cycle(7)) + "\n")
        assert json.loads(out.strip())["bondage"] == 3

    def test_max_n_guard(self):
        code, out, _ = run_cli(["analyze", "--max-n", "5"], stdin=write_graph6(cycle(7)) + "\n")
        assert "error" in json.loads(out.strip())
        assert code == 2

    def test_edgelist_format(self):
        code, out, _ = run_cli(["analyze", "--format", "edgelist"], stdin="4 4\n0 1\n1 2\n2 3\n3 0\n")
        rec = json.loads(out.strip())
        assert code == 0 and rec["n"] == 4 and rec["gamma"] == 2

    def test_file_input_and_output(self, tmp_path):
        src = tmp_path / "in.g6"
        src.write_text(write_graph6(cycle(6)) + "\n")
        dst = tmp_path / "out.jsonl"
        code, out, _ = run_cli(["analyze", str(src), "--output", str(dst)])
        assert code == 0 and out == ""
        assert json.loads(dst.read_text())["n"] == 6


class TestGen:
    def test_cycle(self):
        _, out, _ = run_cli(["gen", "cycle", "--n", "10"])
        assert parse_graph6(out.strip()).degree_sequence() == (2,) * 10

    def test_extr1(self):
        _, out, _ = run_cli(["gen", "extr1", "--k", "2", "--t", "2"])
        g = parse_graph6(out.strip())
        assert g.n == 9 and g.degree_sequence() == (4,) * 9

    def test_kminusm(self):
        _, out, _ = run_cli(["gen", "kminusm", "--n", "6"])
        g = parse_graph6(out.strip())
        assert g.n == 6 and g.degree_sequence() == (4,) * 6

    def test_multiple_params_multiple_lines(self):
        _, out, _ = run_cli(["gen", "cycle", "--n", "4", "7", "10"])
        assert [parse_graph6(s).n for s in out.splitlines()] == [4, 7, 10]

    def test_coalescence_family(self):
        _, out, _ = run_cli(["gen", "coalescence", "--k", "1", "--l", "1"])
        assert parse_graph6(out.strip()).n == 7

    def test_unknown_family_exits_2(self):
        code, _, _ = run_cli(["gen", "nope", "--n", "4"])
        assert code == 2

    def test_bad_params_exit_2(self):
        code, _, _ = run_cli(["gen", "kminusm", "--n", "5"])
        assert code == 2


class TestVerify:
    def test_single_claim_passes(self):
        code, out, _ = run_cli(["verify", "CIRCU", "--param", "n_max=15"])
        assert code == 0
        rep = json.loads(out.strip())
        assert rep["claim"] == "CIRCU" and not rep["failures"]

    def test_verify_all_small(self):
        code, out, _ = run_cli(["verify", "all", "--max-n", "5",
                                "--param", "n_max=10", "--param", "k_max=1",
                                "--param", "unicyclic_max=6", "--param", "h_max=3"])
        assert code == 0
        reports = [json.loads(s) for s in out.splitlines()]
        assert {r["claim"] for r in reports} == set(
            __import__("hypodom.harness", fromlist=["CLAIMS"]).CLAIMS
        )
        assert all(not r["failures"] for r in reports)

    def test_unknown_claim_exits_2(self):
        code, _, err = run_cli(["verify", "WRONG"])
        assert code == 2 and "unknown" in err

    def test_jobs_output_identical(self):
        args = ["verify", "CYCLES", "OBED", "--max-n", "5", "--param", "n_max=9"]
        _, a, _ = run_cli(args)
        _, b, _ = run_cli(args + ["--jobs", "2"])
        assert a == b

    def test_custom_stream_file(self, tmp_path):
        f = tmp_path / "s.g6"
        f.write_text("".join(write_graph6(cycle(n)) + "\n" for n in (4, 5, 6, 7)))
        code, out, _ = run_cli(["verify", "UDVC", "--stream", str(f)])
        assert code == 0
        assert json.loads(out.strip())["n_checked"] == 2  # C4 and C7 are hypo-UD

    def test_range_guard_exits_2(self):
        code, _, err = run_cli(["verify", "UDVC", "--max-n", "12"])
        assert code == 2 and "error" in err

    def test_claim_failure_exits_1(self, monkeypatch, capsys):
        # inject a claim that always fails to exercise the exit-1 path
        from hypodom import harness
        from hypodom.harness import ClaimSpec, Finding, ClaimReport

        def always_fails(params, stream):
            return ClaimReport("DOOMED", "synthetic", 1, 0, (Finding("A_", "synthetic"),))

        monkeypatch.setitem(
            harness.CLAIMS, "DOOMED", ClaimSpec("DOOMED", "synthetic", {}, always_fails)
        )
        assert main(["verify", "DOOMED"]) == 1
        rep = json.loads(capsys.readouterr().out.strip())
        assert rep["failures"][0]["g6"] == "A_"


class TestSearch:
    def test_selfcomp_stream(self, tmp_path):
        from hypodom.streams import all_graphs

        f = tmp_path / "n5.g6"
        f.write_text("".join(write_graph6(g) + "\n" for g in all_graphs(5)))
        code, out, _ = run_cli(["search", "SELFCOMP", str(f)])
        assert code == 0
        lines = [json.loads(s) for s in out.splitlines()]
        assert len(lines) == 2
        assert all("hypo-ED" in rec["detail"] for rec in lines)

    def test_pairs_aggregation(self):
        stdin = write_graph6(cycle(4)) + "\n" + write_graph6(cycle(7)) + "\n"
        code, out, _ = run_cli(["search", "PAIRS"], stdin=stdin)
        rows = [json.loads(s) for s in out.splitlines()]
        assert {(r["class"], r["n"], r["gamma"]) for r in rows} == {
            ("hypo-ED", 4, 2), ("hypo-UD", 4, 2), ("hypo-ED", 7, 3), ("hypo-UD", 7, 3),
        }

    def test_unknown_problem_exits_2(self):
        code, _, _ = run_cli(["search", "NOPE"], stdin="")
        assert code == 2

    def test_bad_stream_exits_2(self):
        code, _, _ = run_cli(["search", "SELFCOMP"], stdin="!!!\n")
        assert code == 2


def test_main_callable_directly():
    assert main(["gen", "cycle", "--n", "5"]) == 0


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
