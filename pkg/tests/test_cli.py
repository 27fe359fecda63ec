import json

import pytest

from src.cli.main import EXIT_FAILED, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE, build_parser, run
from src.config import BudgetSettings, budget_settings


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestIdealCommands:
    def test_integer_colon(self, capsys):
        assert call(capsys, "ideal", "colon", "<6>", "4") == (EXIT_OK, "<3>\n")

    def test_idealization_annihilator(self, capsys):
        assert call(capsys, "ideal", "ann", "(2; {})", "--ring", "idealization") == (EXIT_OK, "Split(0, full)\n")

    @pytest.mark.parametrize(
        "argv, expected",
        [
            (("ideal", "member", "<4, 6>", "10"), "true\n"),
            (("ideal", "member", "<4, 6>", "3"), "false\n"),
            (("ideal", "intersect", "<4>", "<6>"), "<12>\n"),
            (("ideal", "sum", "<4>", "<6>"), "<2>\n"),
            (("ideal", "colon", "<4>", "2", "--ring", "zmod:12"), "<2>\n"),
        ],
    )
    def test_arithmetic(self, capsys, argv, expected):
        assert call(capsys, *argv) == (EXIT_OK, expected)

    def test_json_result(self, capsys):
        code, out = call(capsys, "ideal", "colon", "<6>", "4", "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out) == {"data": "<3>", "message": "colon", "errors": []}


class TestUsageErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            ("ideal", "colon", "<6", "4"),
            ("ideal", "colon", "<6>", "4", "--ring", "q"),
            ("ideal", "colon", "<6>"),
            ("refute", "fp", "1", "(1; {})"),
            ("chase", "audit", "--exhaustive"),
            ("cert", "find", "<2>", "--sset", "{0}"),
        ],
    )
    def test_exit_two(self, capsys, argv):
        assert run(list(argv)) == EXIT_USAGE
        capsys.readouterr()

    def test_missing_file(self, capsys, tmp_path):
        assert run(["cert", "verify", str(tmp_path / "absent.json")]) == EXIT_USAGE
        assert "scoherent:" in capsys.readouterr().err


class TestCertificates:
    def test_find_then_verify(self, capsys, tmp_path):
        path = tmp_path / "cert.json"
        assert run(["cert", "find", "Split(0, full)", "--ring", "idealization", "--out", str(path)]) == EXIT_OK
        assert json.loads(path.read_text())["s"] == "(2; {})"
        assert call(capsys, "cert", "verify", str(path)) == (EXIT_OK, "s-finite: verified\n")

    def test_tampered_certificate_fails(self, capsys, tmp_path):
        path = tmp_path / "cert.json"
        run(["cert", "find", "Split(0, full)", "--ring", "idealization", "--out", str(path)])
        doc = json.loads(path.read_text())
        doc["s"] = "(1; {})"
        doc["sExponents"] = [0]
        path.write_text(json.dumps(doc))
        code, out = call(capsys, "cert", "verify", str(path))
        assert code == EXIT_FAILED
        assert "s-target-inside-j" in out

    def test_module_presentation(self, capsys):
        code, out = call(capsys, "cert", "find", "<[(2; {})]>", "--ring", "idealization", "--kind", "sfp")
        assert code == EXIT_OK
        assert json.loads(out)["kind"] == "sfp"

    def test_empty_set_is_inconclusive(self, capsys):
        code, _ = call(capsys, "cert", "find", "Split(0, full)", "--ring", "idealization", "--sset", "{}")
        assert code == EXIT_INCONCLUSIVE

    def test_csfp_search_is_inconclusive(self, capsys):
        code, _ = call(
            capsys, "cert", "find", "<[(2; {})]>", "--ring", "idealization", "--kind", "csfp", "--budget", "4"
        )
        assert code == EXIT_INCONCLUSIVE


class TestRefutations:
    def test_not_finitely_presented(self, capsys):
        code, out = call(capsys, "refute", "fp", "1", "(0; {1})")
        assert code == EXIT_OK
        assert out == "refuted via support bound: (0; {2})\n"

    def test_zero_candidate(self, capsys):
        code, out = call(capsys, "refute", "csfp", "<0>", "2", "--format", "json")
        assert code == EXIT_OK
        trace = json.loads(out)
        assert trace["prong"] == "power-escapes"
        assert trace["witness"] == "(8; {})"
        assert trace["refuted"] is True


class TestAudits:
    def test_chase_is_deterministic(self, capsys):
        argv = ("chase", "audit", "--ring", "idealization", "--trials", "15", "--seed", "3", "--format", "json")
        first = call(capsys, *argv)
        assert first[0] == EXIT_OK
        assert call(capsys, *argv) == first

    def test_exhaustive_modular(self, capsys):
        code, out = call(capsys, "chase", "audit", "--ring", "zmod:6", "--exhaustive", "--format", "md")
        assert code == EXIT_OK
        assert out.startswith("## chase audit")

    def test_formula_audit_table(self, capsys):
        code, out = call(capsys, "chase", "formula", "--trials", "5", "--format", "table")
        assert code == EXIT_OK
        assert "contained" in out and "equal" in out

    def test_noetherian_check(self, capsys):
        code, out = call(capsys, "noetherian", "check", "--trials", "20")
        assert code == EXIT_OK
        assert "s-finite: 20/20 certified" in out

    def test_report_rerenders_audit(self, capsys, tmp_path):
        _, out = call(capsys, "noetherian", "check", "--trials", "10", "--format", "json")
        path = tmp_path / "report.json"
        path.write_text(out)
        code, rendered = call(capsys, "report", str(path))
        assert code == EXIT_OK
        assert rendered.startswith("## s-noetherian audit")


class TestDemo:
    def test_demo_and_report(self, capsys, tmp_path):
        code, out = call(capsys, "demo", "example", "--format", "json")
        assert code == EXIT_OK
        path = tmp_path / "demo.json"
        path.write_text(out)
        code, rendered = call(capsys, "report", str(path))
        assert code == EXIT_OK
        assert rendered.startswith("## Example demo")
        assert "| refute-c-s-finitely-presented | yes |" in rendered


class TestBudgetSettings:
    def test_every_budget_reaches_the_cli(self):
        assert set(BudgetSettings.model_fields) == {"EXPONENT_BUDGET", "AUDIT_WORKERS"}

    def test_flag_defaults_follow_settings(self):
        args = build_parser().parse_args(["chase", "audit"])
        assert args.budget == budget_settings.EXPONENT_BUDGET
        assert args.workers == budget_settings.AUDIT_WORKERS

    @pytest.mark.parametrize("budget, expected", [("1", EXIT_INCONCLUSIVE), ("2", EXIT_OK)])
    def test_budget_flag_overrides(self, capsys, budget, expected):
        code, _ = call(capsys, "cert", "find", "Split(0, full)", "--ring", "idealization", "--budget", budget)
        assert code == expected
