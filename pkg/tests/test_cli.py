"""Command-line interface: subcommands, exit codes, determinism."""

import json

import pytest

from coverideals.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def h1_file(tmp_path, capsys):
    path = tmp_path / "h1.graph"
    code, out, _ = run(capsys, "generate", "ht", "1")
    assert code == 0
    path.write_text(out)
    return str(path)


@pytest.fixture
def h2_file(tmp_path, capsys):
    path = tmp_path / "h2.graph"
    code, out, _ = run(capsys, "generate", "ht", "2")
    assert code == 0
    path.write_text(out)
    return str(path)


class TestGenerate:
    def test_ht2(self, capsys):
        code, out, err = run(capsys, "generate", "ht", "2")
        assert code == 0
        assert out.count("vertex ") == 9
        assert out.count("edge ") == 14
        assert err == ""

    def test_odd_cycle(self, capsys):
        code, out, _ = run(capsys, "generate", "odd-cycle", "5")
        assert code == 0
        assert out.count("vertex ") == 5 and out.count("edge ") == 5

    def test_bad_parameter_contract_exit(self, capsys):
        code, out, err = run(capsys, "generate", "ht", "0")
        assert code == 3
        assert out == "" and "error" in err

    def test_out_flag(self, tmp_path, capsys):
        target = tmp_path / "g.graph"
        code, out, _ = run(capsys, "generate", "ht", "1", "--out", str(target))
        assert code == 0 and out == ""
        assert target.read_text().startswith("covergraph 1\n")

    def test_deterministic_bytes(self, capsys):
        _, first, _ = run(capsys, "generate", "ht", "3")
        _, second, _ = run(capsys, "generate", "ht", "3")
        assert first == second


class TestCoverIdeal:
    def test_h1(self, capsys, h1_file):
        code, out, _ = run(capsys, "cover-ideal", "--graph", h1_file)
        assert code == 0
        doc = json.loads(out)
        assert len(doc["result"]["ideal"]["generators"]) == 7
        assert doc["result"]["ideal"]["variables"] == ["x1", "x2", "x3", "x4", "x5", "y1"]

    def test_missing_file_is_parse_error(self, capsys):
        code, _, err = run(capsys, "cover-ideal", "--graph", "/nonexistent.graph")
        assert code == 2 and err

    def test_capacity_exit(self, tmp_path, capsys):
        lines = ["covergraph 1", "name big"]
        lines += [f"vertex v{i} x" for i in range(40)]
        lines += [f"edge v{i} v{i+1}" for i in range(39)]
        path = tmp_path / "big.graph"
        path.write_text("\n".join(lines) + "\n")
        code, _, err = run(capsys, "cover-ideal", "--graph", str(path))
        assert code == 4 and "capacity" in err
        code, out, _ = run(
            capsys, "cover-ideal", "--graph", str(path), "--max-vertices", "64"
        )
        assert code == 0

    def test_malformed_document(self, tmp_path, capsys):
        path = tmp_path / "bad.graph"
        path.write_text("covergraph 1\nvertex a x\nedge a b\n")
        code, _, err = run(capsys, "cover-ideal", "--graph", str(path))
        assert code == 2


class TestPowerAndDecompose:
    def test_power(self, capsys, h1_file):
        code, out, _ = run(capsys, "power", "--graph", h1_file, "--n", "2")
        assert code == 0
        doc = json.loads(out)
        assert len(doc["result"]["ideal"]["generators"]) == 27

    def test_brute_decompose(self, capsys, h1_file):
        code, out, _ = run(capsys, "decompose", "--graph", h1_file, "--n", "2", "--mode", "brute")
        assert code == 0
        doc = json.loads(out)
        assert len(doc["result"]["components"]) == 20

    def test_closed_form(self, capsys, h1_file):
        code, out, _ = run(
            capsys, "decompose", "--graph", h1_file, "--n", "3", "--mode", "closed-form"
        )
        doc = json.loads(out)
        assert doc["result"]["t"] == 1
        assert len(doc["result"]["components"]) == 42

    def test_closed_form_requires_family_graph(self, tmp_path, capsys):
        path = tmp_path / "c5.graph"
        _, out, _ = run(capsys, "generate", "odd-cycle", "5")
        path.write_text(out)
        code, _, err = run(
            capsys, "decompose", "--graph", str(path), "--n", "3", "--mode", "closed-form"
        )
        assert code == 3 and "closed form" in err

    def test_verify_mode(self, capsys, h1_file):
        code, out, _ = run(capsys, "decompose", "--graph", h1_file, "--n", "3", "--mode", "verify")
        doc = json.loads(out)
        assert doc["result"]["equal"] is True
        assert doc["result"]["irredundant"] is True


class TestAssAndScan:
    def test_ass(self, capsys, h1_file):
        code, out, _ = run(capsys, "ass", "--graph", h1_file, "--n", "2")
        doc = json.loads(out)
        assert doc["result"]["count"] == 12

    def test_scan(self, capsys, h1_file):
        code, out, _ = run(capsys, "scan", "--graph", h1_file, "--horizon", "3")
        doc = json.loads(out)
        assert doc["result"]["counts"] == [8, 12, 13]
        assert doc["result"]["first_stable_index"] == 3
        assert doc["result"]["predicted"] == 3

    def test_scan_odd_cycle(self, capsys, tmp_path):
        path = tmp_path / "c5.graph"
        _, out, _ = run(capsys, "generate", "odd-cycle", "5")
        path.write_text(out)
        code, out, _ = run(capsys, "scan", "--graph", str(path), "--horizon", "4")
        doc = json.loads(out)
        assert doc["result"]["counts"] == [5, 6, 6, 6]
        assert doc["result"]["first_stable_index"] == 2


class TestVerifyTheorem:
    def test_h1_n3(self, capsys, h1_file):
        code, out, _ = run(capsys, "verify-theorem", "--graph", h1_file, "--n", "3")
        assert code == 0
        doc = json.loads(out)
        assert doc["result"]["equal"] is True
        assert doc["result"]["components_match_brute"] is True

    def test_rejects_non_family(self, capsys, tmp_path):
        path = tmp_path / "k2.graph"
        path.write_text("covergraph 1\nname k2\nvertex a x\nvertex b x\nedge a b\n")
        code, _, err = run(capsys, "verify-theorem", "--graph", str(path), "--n", "3")
        assert code == 3


class TestExport:
    def test_cover_export(self, capsys, h1_file):
        code, out, _ = run(capsys, "export", "--graph", h1_file)
        assert code == 0
        assert out.startswith("ring x1 x2 x3 x4 x5 y1\nideal\n")
        assert out.count("\n") == 2 + 7

    def test_edge_export(self, capsys, h1_file):
        code, out, _ = run(capsys, "export", "--graph", h1_file, "--ideal", "edge")
        assert "x1*x2" in out

    def test_power_export(self, capsys, h1_file):
        code, out, _ = run(capsys, "export", "--graph", h1_file, "--n", "2")
        assert out.count("\n") == 2 + 27

    def test_deterministic(self, capsys, h2_file):
        _, a, _ = run(capsys, "export", "--graph", h2_file, "--n", "2")
        _, b, _ = run(capsys, "export", "--graph", h2_file, "--n", "2")
        assert a == b


class TestRoundTrips:
    def test_generated_graph_reparses_identically(self, capsys, tmp_path):
        for args in (("ht", "2"), ("odd-cycle", "7")):
            _, out, _ = run(capsys, "generate", *args)
            from coverideals.documents import parse_graph, serialize_graph

            g, name = parse_graph(out)
            assert serialize_graph(g, name) == out

    def test_report_reparses(self, capsys, h1_file):
        _, out, _ = run(capsys, "ass", "--graph", h1_file, "--n", "1")
        from coverideals.documents import parse_report

        doc = parse_report(out)
        assert doc["command"] == "ass"
