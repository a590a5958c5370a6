# test_cli.py
"""
Тесты CLI chargekit: команды, коды завершения, форматы файлов и ошибки разбора
"""
from fractions import Fraction as F

import pytest
from hypothesis import HealthCheck, given, settings

from chargekit import config
from chargekit.errors import ParseError, RangeError
from chargekit.fixtures import DEGENERATE_CONE_FILE
from chargekit.formats import format_charge, format_yan_model, parse_charge_file, parse_rational, parse_set, parse_yan_file
from chargekit.main import execute, run
from strategies import charges

LAMBDA = "charge\npoint 1/2 coeff 3/4\ndensity 0/1 1/2 coeff 1/1\n"
DENSITY = "charge\ndensity 0/1 1/1 coeff 1/1\n"
ESCAPING = "charge\ndensity 0/1 1/1 coeff 1/1\nleftlim 1/1 coeff 1/1\n"
BALANCED = "yan\nspace 2\nlambda 1/2 1/2\nmode cone\ngen 1/1 -1/1\n"


def machine(output: str) -> dict:
    block = output.split("-- machine\n", 1)[1]
    return dict(line.split("=", 1) for line in block.splitlines() if line)


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


class TestMeasureCommands:
    def test_eval(self, write, capsys):
        code = run(["eval", write("lambda.ch", LAMBDA), "[0,1/2)+[1/2,3/4)"])
        values = machine(capsys.readouterr().out)
        assert code == 0
        assert values["value"] == "5/4"
        assert values["set"] == "[0/1,3/4)"

    def test_tv(self, write, capsys):
        path = write("signed.ch", "charge\npoint 1/3 coeff -2/1\ndensity 0/1 1/1 coeff 1/2\n")
        assert run(["tv", path]) == 0
        assert machine(capsys.readouterr().out)["norm"] == "5/2"

    def test_relate_reports_witness_and_split(self, write, capsys):
        point = write("point.ch", "charge\npoint 1/4 coeff 1/1\n")
        assert run(["relate", point, write("density.ch", DENSITY), "--eps", "1/100"]) == 0
        output = capsys.readouterr().out
        values = machine(output)
        assert (values["mu_ac_nu"], values["nu_ac_mu"], values["singular"]) == ("False", "False", "True")
        assert "== witness mu<<nu fails" in output
        assert "splitting_set" in values


class TestStructuralCommands:
    def test_decompose_verifies(self, write, capsys):
        lam = write("mixed.ch", ESCAPING + "point 1/2 coeff 1/1\n")
        assert run(["decompose", lam, "--against", write("density.ch", DENSITY)]) == 0
        output = capsys.readouterr().out
        assert "sum_equals_lambda: OK" in output
        assert "continuous<<aggregate: OK" in output
        assert machine(output)["verified"] == "True"

    def test_decompose_rejects_bad_weights(self, write, capsys):
        code = run(["decompose", write("density.ch", DENSITY), "--against", write("d.ch", DENSITY), "--weights", "1/2"])
        assert code == 3
        assert machine(capsys.readouterr().out)["status"] == "error"

    def test_dominate(self, write, capsys):
        first = write("p.ch", "charge\npoint 1/4 coeff 1/1\n")
        second = write("pd.ch", "charge\npoint 1/4 coeff 1/1\ndensity 0/1 1/1 coeff 1/1\n")
        assert run(["dominate", first, second, "--reference", write("density.ch", DENSITY)]) == 0
        values = machine(capsys.readouterr().out)
        assert values["dominated"] == "True"
        assert values["subfamily"] == "1"

    def test_dominate_respects_family_cap(self, write, capsys, monkeypatch):
        monkeypatch.setattr(config.settings, "MAX_FAMILY", 2)
        paths = [write(f"m{k}.ch", f"charge\npoint {k}/8 coeff 1/1\n") for k in range(5)]
        assert run(["dominate", *paths]) == 3
        assert "CHARGEKIT_MAX_FAMILY=2" in machine(capsys.readouterr().out)["error"]

    def test_exhaust_table(self, write, capsys):
        code = run(["exhaust", write("density.ch", DENSITY), "--sets", "[0,1/2)", "[0,3/4)", "[1/2,1)"])
        output = capsys.readouterr().out
        assert code == 0
        assert "k residual_k\n0 1/1\n1 1/4\n2 0/1\n" in output
        assert machine(output)["steps"] == "2"

    def test_residual_is_measured_inside_union(self, write, capsys):
        code = run(["exhaust", write("density.ch", DENSITY), "--sets", "[0,1/2)"])
        assert code == 0
        assert machine(capsys.readouterr().out)["final_residual"] == "0/1"

    def test_atoms(self, write, capsys):
        lam = write("atoms.ch", "charge\npoint 1/4 coeff 1/1\npoint 3/4 coeff 1/1\ndensity 1/2 5/8 coeff 1/1\n")
        assert run(["atoms", lam]) == 0
        assert machine(capsys.readouterr().out)["atoms"] == "2"


class TestCompleteCommand:
    def test_status_of_closed_interval(self, write, capsys):
        assert run(["complete", write("density.ch", DENSITY), "[1/4,1/2]"]) == 0
        values = machine(capsys.readouterr().out)
        assert (values["inner"], values["outer"], values["member"]) == ("1/4", "1/4", "True")

    def test_constructed_sequence_passes(self, write, capsys):
        code = run(["complete", write("esc.ch", ESCAPING), "--sequence", "--test", "[0,1)", "(1/2,1]", "{1/2}"])
        assert code == 0
        assert machine(capsys.readouterr().out)["sigma_additive"] == "True"

    def test_tail_reports_defect(self, write, capsys):
        code = run(["complete", write("esc.ch", ESCAPING), "--tail", "0/1", "1/1"])
        output = capsys.readouterr().out
        assert code == 1
        assert "[0/1,1/1) 2/1 1/1 1/1" in output
        assert machine(output)["status"] == "violation"


class TestYanCommand:
    def test_certificate(self, write, capsys):
        assert run(["yan", write("balanced.yan", BALANCED)]) == 0
        values = machine(capsys.readouterr().out)
        assert values["result"] == "certificate"
        assert values["p"] == "1/2 1/2"

    def test_witness(self, write, capsys):
        assert run(["yan", write("degenerate.yan", DEGENERATE_CONE_FILE)]) == 1
        assert machine(capsys.readouterr().out)["witness"] == "{0}"

    def test_equivalence(self, write, capsys):
        assert run(["yan", write("balanced.yan", BALANCED), "--equivalence"]) == 0
        assert machine(capsys.readouterr().out)["consistent"] == "True"

    def test_dimension_mismatch_is_semantic_error(self, write, capsys):
        assert run(["yan", write("bad.yan", "yan\nspace 3\nlambda 1/2 1/2\n")]) == 3
        assert "error=" in capsys.readouterr().out


class TestErrors:
    def test_parse_error_reports_position(self, write, capsys):
        path = write("broken.ch", "charge\npoint 1/2 coeff 3/4\ndensity 0/1 x coeff 1/1\n")
        assert run(["tv", path]) == 2
        assert "line 3, column 13" in machine(capsys.readouterr().out)["error"]

    def test_range_error(self, write, capsys):
        assert run(["tv", write("range.ch", "charge\npoint 3/2 coeff 1/1\n")]) == 3
        assert "line 2, column 7" in machine(capsys.readouterr().out)["error"]

    def test_missing_file(self, capsys):
        assert run(["tv", "/nonexistent/lambda.ch"]) == 3
        capsys.readouterr()

    def test_bad_rational_option(self, write, capsys):
        assert run(["relate", write("a.ch", DENSITY), write("b.ch", DENSITY), "--eps", "1/0"]) == 2
        capsys.readouterr()

    def test_range_error_carries_position(self):
        with pytest.raises(RangeError) as info:
            parse_charge_file("charge\ndensity 1/2 1/4 coeff 1/1\n")
        assert (info.value.line, info.value.column) == (2, 9)

    def test_missing_header(self):
        with pytest.raises(ParseError):
            parse_charge_file("point 1/2 coeff 1/1\n")

    def test_selftest_passes(self):
        report = execute(["selftest"])
        assert int(report.exit_code) == 0
        assert dict(report.machine)["failed"] == "0"

    def test_output_is_deterministic(self, write, capsys):
        path = write("lambda.ch", LAMBDA)
        run(["decompose", path, "--against", write("density.ch", DENSITY)])
        first = capsys.readouterr().out
        run(["decompose", path, "--against", write("density.ch", DENSITY)])
        assert capsys.readouterr().out == first


class TestFormats:
    def test_rational_tokens(self):
        assert parse_rational("-3/6") == F(-1, 2)
        assert parse_rational("2") == F(2)
        with pytest.raises(ParseError):
            parse_rational("0.5")

    def test_set_syntax(self):
        assert str(parse_set("[1/4,1/2)+[0,1/4)")) == "[0/1,1/2)"
        assert str(parse_set("empty")) == "empty"
        with pytest.raises(ParseError):
            parse_set("[0,1]")

    def test_yan_file_round_trip(self):
        model = parse_yan_file(BALANCED)
        assert parse_yan_file(format_yan_model(model)) == model

    def test_comments_are_ignored(self):
        text = "# заряд\ncharge\npoint 1/2 coeff 1/1  # атом\n"
        assert parse_charge_file(text) == parse_charge_file("charge\npoint 1/2 coeff 1/1\n")

    @settings(max_examples=50, deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow])
    @given(charges())
    def test_charge_file_round_trip(self, mu):
        assert parse_charge_file(format_charge(mu)) == mu
