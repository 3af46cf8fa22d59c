import json

import pytest

from clawsq.cli import main
from clawsq.corpus import (
    claw,
    cycle,
    default_corpus,
    gen_icosahedron,
    octahedron,
    write_corpus,
    write_dimacs,
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_graph(tmp_path, name, g):
    target = tmp_path / name
    target.write_text(write_dimacs(g), encoding="ascii")
    return str(target)


def strip_timings(text):
    report = json.loads(text)
    report.pop("timings", None)
    return report


class TestAnalyze:
    def test_icosahedron(self, tmp_path, capsys):
        target = write_graph(tmp_path, "ico.col", gen_icosahedron())
        code, out, _ = run_cli(capsys, "analyze", target)
        assert code == 0
        report = json.loads(out)
        assert report["schema"] == "clawsq/1"
        assert report["omega"] == 3
        assert report["claw_free"] is True
        assert set(report["square_degrees"]) == {10}
        assert report["classification"][0]["kind"] == "icosahedron"
        assert report["z_sets"]["0"] == sorted(gen_icosahedron().neighbors(0))

    def test_octahedron_reducible(self, tmp_path, capsys):
        target = write_graph(tmp_path, "oct.col", octahedron())
        code, out, _ = run_cli(capsys, "analyze", target)
        assert code == 0
        cls = json.loads(out)["classification"][0]
        assert cls["kind"] == "reducible"
        assert cls["vertex"] == 0
        assert cls["case"] == "iii"

    def test_claw_reported(self, tmp_path, capsys):
        target = write_graph(tmp_path, "claw.col", claw())
        code, out, _ = run_cli(capsys, "analyze", target)
        assert code == 0
        report = json.loads(out)
        assert report["claw_free"] is False
        assert report["claw"] == {"center": 0, "leaves": [1, 2, 3]}
        assert report["classification"] is None

    def test_claw_fails_under_flag(self, tmp_path, capsys):
        target = write_graph(tmp_path, "claw.col", claw())
        code, _, _ = run_cli(capsys, "analyze", target, "--require-claw-free")
        assert code == 2

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "analyze", "/nonexistent/g.col")
        assert code == 1
        assert "error" in err


class TestColor:
    def test_icosahedron_six(self, tmp_path, capsys):
        target = write_graph(tmp_path, "ico.col", gen_icosahedron())
        code, out, _ = run_cli(capsys, "color", target, "--oracle")
        assert code == 0
        report = json.loads(out)
        assert report["palette"] == 6
        assert report["bound"] == 10
        assert report["verified"] is True
        assert report["oracle"]["chi_square"] == 6
        assert len(report["colors"]) == 12

    def test_c7(self, tmp_path, capsys):
        target = write_graph(tmp_path, "c7.col", cycle(7))
        code, out, _ = run_cli(capsys, "color", target, "--oracle")
        report = json.loads(out)
        assert code == 0
        assert report["palette"] == 4
        assert report["oracle"]["chi_square"] == 4

    def test_claw_exits_two(self, tmp_path, capsys):
        target = write_graph(tmp_path, "claw.col", claw())
        code, out, _ = run_cli(capsys, "color", target)
        assert code == 2
        assert json.loads(out)["claw_free"] is False

    def test_malformed_input_exits_one(self, tmp_path, capsys):
        bad = tmp_path / "bad.col"
        bad.write_text("p edge 3 9\ne 1 2\n")
        code, _, err = run_cli(capsys, "color", str(bad))
        assert code == 1


class TestVerifyLemmas:
    @pytest.fixture()
    def small_manifest(self, tmp_path, corpus):
        return write_corpus(corpus[:10], tmp_path / "corpus")

    def test_clean_corpus_passes(self, small_manifest, capsys):
        code, out, _ = run_cli(capsys, "verify-lemmas", str(small_manifest))
        assert code == 0
        report = json.loads(out)
        assert report["files"] == 10
        assert report["failures"] == []
        assert report["claw_found"] is False

    def test_parallel_jobs_agree(self, small_manifest, capsys):
        code1, out1, _ = run_cli(capsys, "verify-lemmas", str(small_manifest))
        code2, out2, _ = run_cli(
            capsys, "verify-lemmas", str(small_manifest), "--jobs", "2"
        )
        assert code1 == code2 == 0
        assert strip_timings(out1) == strip_timings(out2)

    def test_planted_claw_exits_two(self, small_manifest, capsys, tmp_path):
        directory = small_manifest.parent
        (directory / "planted.col").write_text(write_dimacs(claw()))
        rows = json.loads(small_manifest.read_text())
        rows.append(
            {
                "id": "planted",
                "file": "planted.col",
                "generator": "hand",
                "params": {},
                "seed": None,
                "known": {"claw_free": True, "omega": 2},
            }
        )
        small_manifest.write_text(json.dumps(rows))
        code, out, _ = run_cli(capsys, "verify-lemmas", str(small_manifest))
        assert code == 2
        assert json.loads(out)["claw_found"] is True

    def test_empty_manifest_warns(self, tmp_path, capsys):
        manifest = tmp_path / "empty.json"
        manifest.write_text("[]")
        code, out, err = run_cli(capsys, "verify-lemmas", str(manifest))
        assert code == 0
        assert "empty manifest" in err

    def test_bad_manifest_json(self, tmp_path, capsys):
        manifest = tmp_path / "broken.json"
        manifest.write_text("{nope")
        code, _, err = run_cli(capsys, "verify-lemmas", str(manifest))
        assert code == 1


class TestGenerate:
    def test_blowup(self, tmp_path, capsys):
        out_file = tmp_path / "b.col"
        code, out, _ = run_cli(
            capsys, "generate", "blowup-c5", "--sizes", "2,2,2,2,2", "--out", str(out_file)
        )
        assert code == 0
        report = json.loads(out)
        assert report["n"] == 10 and report["m"] == 20
        assert out_file.read_text().startswith("p edge 10 20")

    def test_icosahedron_inline(self, capsys):
        code, out, _ = run_cli(capsys, "generate", "icosahedron")
        assert code == 0
        report = json.loads(out)
        assert report["n"] == 12
        assert "p edge 12 30" in report["dimacs"]

    def test_line_graph_of_petersen(self, capsys):
        code, out, _ = run_cli(capsys, "generate", "line-graph", "--of", "petersen")
        report = json.loads(out)
        assert code == 0 and report["n"] == 15

    def test_line_graph_of_family(self, capsys):
        code, out, _ = run_cli(capsys, "generate", "line-graph", "--of", "cycle:6")
        report = json.loads(out)
        assert code == 0 and report["n"] == 6

    def test_random_deterministic(self, capsys):
        code1, out1, _ = run_cli(
            capsys, "generate", "random", "--n", "12", "--omega", "4", "--seed", "9"
        )
        code2, out2, _ = run_cli(
            capsys, "generate", "random", "--n", "12", "--omega", "4", "--seed", "9"
        )
        assert code1 == code2 == 0
        assert out1 == out2

    def test_corpus_writes_manifest(self, tmp_path, capsys, monkeypatch):
        # Patch the corpus down to a handful of entries to keep the test fast.
        import clawsq.cli as cli_mod

        small = default_corpus()[:5]
        monkeypatch.setattr(cli_mod, "default_corpus", lambda: small)
        out_dir = tmp_path / "corpus"
        code, out, _ = run_cli(capsys, "generate", "corpus", "--out", str(out_dir))
        assert code == 0
        report = json.loads(out)
        assert report["entries"] == 5
        assert (out_dir / "manifest.json").exists()

    def test_usage_error_exits_one(self, capsys):
        code, _, err = run_cli(capsys, "generate", "blowup-c5")
        assert code == 1
        assert "sizes" in err

    def test_bad_subcommand_exits_one(self, capsys):
        code, _, _ = run_cli(capsys, "generate", "nonsense")
        assert code == 1


class TestDeterminism:
    def test_reports_byte_identical_modulo_timings(self, tmp_path, capsys):
        target = write_graph(tmp_path, "oct.col", octahedron())
        _, out1, _ = run_cli(capsys, "analyze", target)
        _, out2, _ = run_cli(capsys, "analyze", target)
        assert strip_timings(out1) == strip_timings(out2)
        _, out1, _ = run_cli(capsys, "color", target, "--oracle")
        _, out2, _ = run_cli(capsys, "color", target, "--oracle")
        assert strip_timings(out1) == strip_timings(out2)
