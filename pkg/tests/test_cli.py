import io
import json
import subprocess
import sys

import pytest

from subsec import emit_graph6, gamma_s_exact, generate, parse_graph6, subdivide
from subsec.cli import main


def run_cli(args, stdin_text="", monkeypatch=None, capsys=None):
    if monkeypatch is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def run_proc(args, stdin_text=""):
    proc = subprocess.run(
        [sys.executable, "-m", "subsec", *args],
        input=stdin_text, capture_output=True, text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


class TestGenEnum:
    def test_gen_path_g6(self, capsys, monkeypatch):
        code, out, _ = run_cli(["gen", "--family", "path", "--n", "4", "--format", "g6"],
                               capsys=capsys)
        assert code == 0 and out == "Ch\n"

    def test_gen_edges(self, capsys, monkeypatch):
        code, out, _ = run_cli(["gen", "--family", "path", "--n", "3", "--format", "edges"],
                               capsys=capsys)
        assert code == 0 and out == "p 3\ne 0 1\ne 1 2\n"

    def test_gen_random_seeded(self, capsys, monkeypatch):
        args = ["gen", "--family", "random", "--n", "9", "--p", "0.5", "--seed", "11"]
        code, first, _ = run_cli(args, capsys=capsys)
        code2, second, _ = run_cli(args, capsys=capsys)
        assert code == code2 == 0 and first == second

    def test_gen_random_without_seed_is_usage_error(self, capsys, monkeypatch):
        code, _, err = run_cli(["gen", "--family", "random", "--n", "5", "--p", "0.5"],
                               capsys=capsys)
        assert code == 64 and "seed" in err

    def test_enum(self, capsys, monkeypatch):
        code, out, _ = run_cli(["enum", "--n", "4"], capsys=capsys)
        lines = out.splitlines()
        assert code == 0 and len(lines) == 6
        assert all(parse_graph6(line).n == 4 for line in lines)


class TestSolveCommands:
    def test_gamma_s_on_path7(self, capsys, monkeypatch):
        code, out, _ = run_cli(["gamma-s"], stdin_text=emit_graph6(generate("path", 7)) + "\n",
                               monkeypatch=monkeypatch, capsys=capsys)
        assert code == 0
        assert out == "value=3 status=exact witness=1,3,5\n"

    def test_gamma_batch_lines(self, capsys, monkeypatch):
        stdin = "\n".join(emit_graph6(generate("path", n)) for n in (4, 5, 6)) + "\n"
        code, out, _ = run_cli(["gamma"], stdin_text=stdin, monkeypatch=monkeypatch, capsys=capsys)
        values = [line.split()[0] for line in out.splitlines()]
        assert code == 0 and values == ["value=2", "value=2", "value=2"]

    def test_skipped_row(self, capsys, monkeypatch):
        code, out, _ = run_cli(["gamma-s", "--max-vertices", "3"],
                               stdin_text=emit_graph6(generate("path", 7)) + "\n",
                               monkeypatch=monkeypatch, capsys=capsys)
        assert code == 0 and out == "value=- status=skipped witness=-\n"

    def test_edges_input(self, capsys, monkeypatch):
        code, out, _ = run_cli(["gamma-s", "--format", "edges"],
                               stdin_text="p 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\n",
                               monkeypatch=monkeypatch, capsys=capsys)
        assert code == 0 and out.startswith("value=3 ")

    def test_naive_matches_default(self, capsys, monkeypatch):
        stdin = "\n".join(emit_graph6(g) for g in
                          [generate("path", 6), generate("cycle", 5), generate("star", 4)]) + "\n"
        _, fast, _ = run_cli(["gamma-s"], stdin_text=stdin, monkeypatch=monkeypatch, capsys=capsys)
        _, slow, _ = run_cli(["gamma-s", "--naive"], stdin_text=stdin,
                             monkeypatch=monkeypatch, capsys=capsys)
        assert fast == slow


class TestSubdivideCommand:
    def test_pipe_composability(self, capsys, monkeypatch):
        base = generate("path", 4)
        code, mid, _ = run_cli(["subdivide", "--k", "2"], stdin_text=emit_graph6(base) + "\n",
                               monkeypatch=monkeypatch, capsys=capsys)
        assert code == 0
        code, out, _ = run_cli(["gamma-s"], stdin_text=mid, monkeypatch=monkeypatch, capsys=capsys)
        assert code == 0
        direct = gamma_s_exact(subdivide(base, 2).derived)
        witness = ",".join(str(v) for v in direct.witness.sorted())
        assert out == f"value={direct.value} status=exact witness={witness}\n"

    def test_labels_in_edges_format(self, capsys, monkeypatch):
        code, out, _ = run_cli(
            ["subdivide", "--k", "3", "--format", "edges", "--labels"],
            stdin_text="p 2\ne 0 1\n", monkeypatch=monkeypatch, capsys=capsys)
        assert code == 0
        assert "# label 2\tInternal(0,1,1)" in out
        assert "# label 0\tOriginal(0)" in out
        # the label comments stay parseable as an edge list
        code, out2, _ = run_cli(["gamma-s", "--format", "edges"], stdin_text=out,
                                monkeypatch=monkeypatch, capsys=capsys)
        assert code == 0 and out2.startswith("value=2 ")

    def test_labels_need_edges_format(self, capsys, monkeypatch):
        code, _, err = run_cli(["subdivide", "--k", "2", "--labels"], stdin_text="A_\n",
                               monkeypatch=monkeypatch, capsys=capsys)
        assert code == 64 and "--labels" in err


class TestCertCommand:
    def test_quarter_on_single_edge(self, capsys, monkeypatch):
        code, out, _ = run_cli(["cert", "--theorem", "quarter"], stdin_text="A_\n",
                               monkeypatch=monkeypatch, capsys=capsys)
        assert code == 0
        assert "theorem=quarter claimed=2 size=2 validated=false" in out
        assert "labels=Internal(0,1,1),Internal(0,1,3)" in out

    def test_half_prints_both(self, capsys, monkeypatch):
        code, out, _ = run_cli(["cert", "--theorem", "half"],
                               stdin_text=emit_graph6(generate("path", 4)) + "\n",
                               monkeypatch=monkeypatch, capsys=capsys)
        assert code == 0
        assert "theorem=half.internal" in out and "theorem=half.original" in out

    def test_star_needs_k(self, capsys, monkeypatch):
        code, _, err = run_cli(["cert", "--theorem", "star"],
                               stdin_text=emit_graph6(generate("star", 4)) + "\n",
                               monkeypatch=monkeypatch, capsys=capsys)
        assert code == 64 and "--k" in err

    def test_general(self, capsys, monkeypatch):
        code, out, _ = run_cli(["cert", "--theorem", "general", "-n", "6"], stdin_text="A_\n",
                               monkeypatch=monkeypatch, capsys=capsys)
        assert code == 0 and "claimed=3 size=3 validated=true" in out

    def test_star_on_non_star_base(self, capsys, monkeypatch):
        code, _, err = run_cli(["cert", "--theorem", "star", "--k", "2"], stdin_text="Ch\n",
                               monkeypatch=monkeypatch, capsys=capsys)
        assert code == 64 and "star" in err


class TestVerifyCommand:
    def test_tsv_with_violation_row(self, capsys, monkeypatch):
        stdin = "A_\nBg\n"
        code, out, _ = run_cli(["verify", "--theorem", "g14", "--corpus", "-"],
                               stdin_text=stdin, monkeypatch=monkeypatch, capsys=capsys)
        assert code == 0
        lines = out.splitlines()
        assert lines[1].split("\t")[:2] == ["A_", "g14"]
        assert "violated" in lines[1]
        assert lines[-1].startswith("# summary:")

    def test_fail_on_violation_exit_code(self, capsys, monkeypatch):
        code, _, _ = run_cli(["verify", "--theorem", "g14", "--fail-on-violation"],
                             stdin_text="A_\n", monkeypatch=monkeypatch, capsys=capsys)
        assert code == 2
        code, _, _ = run_cli(["verify", "--theorem", "g13", "--fail-on-violation"],
                             stdin_text="A_\n", monkeypatch=monkeypatch, capsys=capsys)
        assert code == 0

    def test_comma_separated_theorems(self, capsys, monkeypatch):
        code, out, _ = run_cli(["verify", "--theorem", "g13,g14"], stdin_text="Bg\n",
                               monkeypatch=monkeypatch, capsys=capsys)
        assert code == 0
        assert [line.split("\t")[1] for line in out.splitlines()[1:-1]] == ["g13", "g14"]

    def test_jsonl_output(self, capsys, monkeypatch):
        code, out, _ = run_cli(["verify", "--theorem", "prop1", "--output", "jsonl"],
                               stdin_text="Ch\n", monkeypatch=monkeypatch, capsys=capsys)
        rows = [json.loads(line) for line in out.splitlines()]
        assert code == 0 and rows[0]["status"] in ("holds", "tight")

    def test_unknown_theorem_usage_error(self, capsys, monkeypatch):
        code, _, err = run_cli(["verify", "--theorem", "g99"], stdin_text="A_\n",
                               monkeypatch=monkeypatch, capsys=capsys)
        assert code == 64 and "g99" in err

    def test_g16_needs_n(self, capsys, monkeypatch):
        code, _, err = run_cli(["verify", "--theorem", "g16"], stdin_text="A_\n",
                               monkeypatch=monkeypatch, capsys=capsys)
        assert code == 64 and "-n" in err


class TestErrorsAndExitCodes:
    def test_usage_error_is_64(self, capsys, monkeypatch):
        code, _, _ = run_cli(["gen", "--family", "nope", "--n", "3"], capsys=capsys)
        assert code == 64

    def test_parse_error_is_65_with_line(self, capsys, monkeypatch):
        code, _, err = run_cli(["gamma"], stdin_text="A_\nA__\n",
                               monkeypatch=monkeypatch, capsys=capsys)
        assert code == 65 and "line 2" in err

    def test_missing_file_is_65(self, capsys, monkeypatch):
        code, _, err = run_cli(["verify", "--theorem", "g13", "--corpus", "/no/such/file"],
                               capsys=capsys)
        assert code == 65


class TestSubprocessPipeline:
    def test_shell_pipe_equivalence(self):
        cmd = (f"{sys.executable} -m subsec gen --family path --n 4 | "
               f"{sys.executable} -m subsec subdivide --k 2 | "
               f"{sys.executable} -m subsec gamma-s")
        proc = subprocess.run(["sh", "-c", cmd], capture_output=True, text=True)
        assert proc.returncode == 0
        assert proc.stdout == "value=3 status=exact witness=4,5,6\n"

    def test_thread_env_does_not_change_bytes(self):
        stdin = "\n".join(emit_graph6(generate("path", n)) for n in range(2, 7)) + "\n"
        outs = []
        for threads in ("1", "4"):
            proc = subprocess.run(
                [sys.executable, "-m", "subsec", "verify", "--theorem", "g13,prop1,conj"],
                input=stdin, capture_output=True, text=True,
                env={"PATH": "/usr/bin:/bin", "SUBSEC_THREADS": threads},
            )
            assert proc.returncode == 0, proc.stderr
            outs.append(proc.stdout)
        assert outs[0] == outs[1]

    def test_identical_invocations_byte_identical(self):
        args = [sys.executable, "-m", "subsec", "conjecture"]
        stdin = "Ch\nBw\n"
        a = subprocess.run(args, input=stdin, capture_output=True, text=True)
        b = subprocess.run(args, input=stdin, capture_output=True, text=True)
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout
