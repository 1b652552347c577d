import json
import math

import numpy as np
import pytest

from cpolyapprox.cli import (
    RunConfig,
    main,
    parse_degree_list,
    parse_spec,
    run,
)
from cpolyapprox.construct import (
    ConstantFunction,
    RationalFunction,
    TaylorFunction,
    ZeroFunction,
)
from cpolyapprox.errors import DomainError, ParseError


class TestParseSpec:
    def test_zero(self):
        assert isinstance(parse_spec("zero"), ZeroFunction)

    def test_const_complex(self):
        f = parse_spec("const 0.5+0.25i")
        assert isinstance(f, ConstantFunction)
        assert f.value == 0.5 + 0.25j

    def test_const_negative_imaginary(self):
        assert parse_spec("const 0.5-0.25i").value == 0.5 - 0.25j

    def test_ratio(self):
        f = parse_spec("ratio [1] / [1, -0.5]")
        assert isinstance(f, RationalFunction)
        assert np.array_equal(f.numerator.coeffs, [1])
        assert np.array_equal(f.denominator.coeffs, [1, -0.5])

    def test_coeffs(self):
        f = parse_spec("coeffs [1, 0.5, 0.25]")
        assert isinstance(f, TaylorFunction)
        assert f.series.order == 2

    def test_unknown_kind(self):
        with pytest.raises(ParseError) as err:
            parse_spec("quux [1]")
        assert err.value.position == 0

    def test_malformed_number_has_position(self):
        with pytest.raises(ParseError) as err:
            parse_spec("const 0.5+zzi")
        assert err.value.position > 0

    def test_missing_brackets(self):
        with pytest.raises(ParseError):
            parse_spec("ratio 1 / 2")

    def test_ratio_denominator_vanishing(self):
        from cpolyapprox.errors import DenominatorVanishesInDisk
        with pytest.raises(DenominatorVanishesInDisk):
            parse_spec("ratio [1] / [1, -2]")


class TestParseDegreeList:
    def test_comma_list(self):
        assert parse_degree_list("4,8,20") == [4, 8, 20]

    def test_range_with_step(self):
        assert parse_degree_list("6..12 step 2") == [6, 8, 10, 12]

    def test_range_default_step(self):
        assert parse_degree_list("3..6") == [3, 4, 5, 6]

    def test_bad_text(self):
        with pytest.raises(ParseError):
            parse_degree_list("six")


class TestRunConfig:
    def test_radius_out_of_range(self):
        cfg = RunConfig(function_text="zero", degrees=[4], radius=1.2)
        with pytest.raises(DomainError):
            cfg.validate()

    def test_margin_out_of_range(self):
        cfg = RunConfig(function_text="zero", degrees=[4], radius=0.5,
                        margin=0.6)
        with pytest.raises(DomainError):
            cfg.validate()

    def test_degree_too_small(self):
        cfg = RunConfig(function_text="zero", degrees=[1])
        with pytest.raises(DomainError):
            cfg.validate()

    def test_samples_floor(self):
        cfg = RunConfig(function_text="zero", degrees=[4], samples=64)
        with pytest.raises(DomainError):
            cfg.validate()


class TestRun:
    def test_zero_catalog_passes(self, tmp_path):
        out = tmp_path / "zero.json"
        config = RunConfig(function_text="zero", degrees=[4, 8, 20],
                           out_path=str(out), write_csv=True)
        assert run(config) == 0
        doc = json.loads(out.read_text())
        assert doc["summary"]["all_passed"]
        assert [r["N"] for r in doc["records"]] == [4, 8, 20]
        # each record matches the closed form N a**(N-1) / (1 - a**N)
        for rec in doc["records"]:
            N = rec["N"]
            closed = N * 0.5 ** (N - 1) / (1 - 0.5**N)
            assert rec["sup_error"] == pytest.approx(closed, rel=1e-9)
        assert (tmp_path / "zero.json.error.csv").exists()
        assert (tmp_path / "zero.json.roots.csv").exists()

    def test_ratio_rate_slope(self, tmp_path):
        out = tmp_path / "ratio.json"
        config = RunConfig(function_text="ratio [1] / [1, -0.5]",
                           degrees=list(range(6, 33, 2)), out_path=str(out))
        assert run(config) == 0
        doc = json.loads(out.read_text())
        assert doc["summary"]["rate_slope"] <= math.log(0.7) + 0.05

    def test_invalid_radius_exit_2(self, tmp_path, capsys):
        config = RunConfig(function_text="zero", degrees=[4], radius=1.2,
                           out_path=str(tmp_path / "x.json"))
        assert run(config) == 2
        assert "--a" in capsys.readouterr().err

    def test_construction_failure_recorded(self, tmp_path):
        out = tmp_path / "c.json"
        config = RunConfig(function_text="const 1", degrees=[2, 8],
                           out_path=str(out))
        assert run(config) == 2
        doc = json.loads(out.read_text())
        failed = [r for r in doc["records"] if "error" in r]
        assert len(failed) == 1 and failed[0]["N"] == 2
        assert failed[0]["error"]["type"] == "PartialSumNotZeroFree"
        ok = [r for r in doc["records"] if "error" not in r]
        assert ok and ok[0]["passed"]

    def test_verification_failure_exit_1(self, tmp_path, monkeypatch):
        # force a failing check by shrinking the root tolerance to zero
        out = tmp_path / "v.json"
        config = RunConfig(function_text="ratio [1] / [1, -0.5]", degrees=[8],
                           root_tol=1e-18, out_path=str(out))
        assert run(config) == 1
        doc = json.loads(out.read_text())
        assert not doc["records"][0]["checks"]["roots_on_circle"]

    def test_deterministic_reports(self, tmp_path):
        out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
        for out in (out1, out2):
            run(RunConfig(function_text="ratio [1] / [1, -0.5]",
                          degrees=[8, 12], out_path=str(out), write_csv=True))
        a, b = json.loads(out1.read_text()), json.loads(out2.read_text())
        a["config"].pop("out"); b["config"].pop("out")
        assert a == b
        csv1 = (tmp_path / "a.json.error.csv").read_text()
        csv2 = (tmp_path / "b.json.error.csv").read_text()
        assert csv1 == csv2

    def test_numbers_round_trip(self, tmp_path):
        out = tmp_path / "r.json"
        run(RunConfig(function_text="ratio [1] / [1, -0.5]", degrees=[8],
                      out_path=str(out), write_csv=True))
        doc = json.loads(out.read_text())
        rec = doc["records"][0]
        # JSON floats round-trip exactly through repr-based serialisation
        assert json.loads(json.dumps(rec["sup_error"])) == rec["sup_error"]
        for line in (tmp_path / "r.json.error.csv").read_text().splitlines()[1:3]:
            _, angle, err = line.split(",")
            assert repr(float(angle)) == angle
            assert repr(float(err)) == err


class TestMain:
    def test_end_to_end(self, tmp_path):
        out = tmp_path / "m.json"
        code = main(["--function", "zero", "--N", "4,8", "--a", "0.5",
                     "--out", str(out)])
        assert code == 0
        assert out.exists()

    def test_bad_degree_text(self, capsys):
        assert main(["--function", "zero", "--N", "four"]) == 2
        assert "error" in capsys.readouterr().err

    def test_bad_function_text(self, tmp_path, capsys):
        code = main(["--function", "wat", "--N", "4",
                     "--out", str(tmp_path / "w.json")])
        assert code == 2
