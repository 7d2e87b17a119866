"""Registry integrity, runner semantics, report formats, CLI surface."""

import json
from fractions import Fraction

import pytest

from margulis import report as report_mod
from margulis.claims import (
    Claim,
    ExpectEncloses,
    Mode,
    build_registry,
    section_prefixes,
)
from margulis.cli import load_config, main, parse_scalar_expr
from margulis.report import (
    Status,
    UnknownPrefixError,
    emit_report,
    exit_status,
    run_claims,
)
from margulis.rigor import Interval, exp


@pytest.fixture(scope="module")
def registry():
    return build_registry()


@pytest.fixture(scope="module")
def sphere_results(registry):
    return run_claims(filter_prefix="sphere.", registry=registry)


class TestRegistry:
    def test_ids_unique_and_sorted(self, registry):
        ids = [c.id for c in registry]
        assert ids == sorted(ids)
        assert len(ids) == len(set(ids))

    def test_sections(self, registry):
        assert section_prefixes(registry) == [
            "appendix.",
            "conventions.",
            "cubic.",
            "displacement.",
            "groups.",
            "intro.",
            "quadratic.",
            "sphere.",
            "tube.",
        ]

    def test_check_and_report_marks_known_inconsistencies(self, registry):
        car = {c.id for c in registry if c.mode is Mode.CHECK_AND_REPORT}
        assert "appendix.prose-survivor-list" in car
        assert "appendix.scan-positive-29" in car
        assert "cubic.unit-lemma-stated-poly" in car


class TestRunner:
    def test_sphere_section_all_pass(self, sphere_results):
        assert sphere_results
        assert all(r.status is Status.PASS for r in sphere_results)
        assert exit_status(sphere_results) == 0

    def test_unknown_prefix_lists_valid(self, registry):
        with pytest.raises(UnknownPrefixError) as err:
            run_claims(filter_prefix="bogus.", registry=registry)
        assert "sphere." in str(err.value)

    def test_empty_registry_empty_result(self):
        assert run_claims(filter_prefix="anything.", registry=[]) == []

    def test_results_ordered_by_id(self, sphere_results):
        ids = [r.id for r in sphere_results]
        assert ids == sorted(ids)

    def test_discrepancy_noted_not_failure(self, registry):
        results = run_claims(filter_prefix="appendix.pell-completeness", registry=registry)
        (r,) = results
        assert r.status is Status.DISCREPANCY_NOTED
        assert exit_status(results) == 0

    def test_must_match_failure_sets_exit(self, registry):
        results = run_claims(
            filter_prefix="appendix.pell-count-s29-as-printed", registry=registry
        )
        (r,) = results
        assert r.status is Status.FAIL
        assert r.computed == 22
        assert exit_status(results) == 1

    def test_precision_escalation(self):
        from margulis.rigor import precision as prec_ctx

        with prec_ctx(2048):
            e_reference = exp(Interval.exact(1)).lo_fraction
        needy = Claim(
            id="synthetic.escalates",
            description="needs more than the starting precision",
            paper_location="synthetic",
            compute=lambda: exp(Interval.exact(1)),
            expected=ExpectEncloses(e_reference, Fraction(1, 10**45)),
        )
        (r,) = run_claims(registry=[needy], start_precision=64, precision_cap=1024)
        assert r.status is Status.PASS
        assert r.precision_used > 64

    def test_inconclusive_at_cap(self):
        stuck = Claim(
            id="synthetic.stuck",
            description="can never certify equality of an open gap",
            paper_location="synthetic",
            compute=lambda: Interval.from_endpoints(0, 1),
            expected=ExpectEncloses(Fraction(1, 2), Fraction(1, 10**30)),
        )
        (r,) = run_claims(registry=[stuck], start_precision=64, precision_cap=128)
        assert r.status is Status.INCONCLUSIVE
        assert exit_status([r]) == 0  # inconclusive is not a MustMatch failure


class TestReports:
    def test_json_schema(self, sphere_results):
        doc = json.loads(emit_report(sphere_results, fmt="json", precision_bits=128))
        assert set(doc) == {"version", "precision_bits", "results"}
        assert doc["precision_bits"] == 128
        rec = doc["results"][0]
        assert set(rec) == {"id", "paper_location", "computed", "expected", "status"}
        interval_recs = [r for r in doc["results"] if isinstance(r["computed"], dict)]
        assert any("lo" in r["computed"] for r in interval_recs)

    def test_json_deterministic(self, registry):
        a = emit_report(run_claims(filter_prefix="cubic.", registry=registry), "json")
        b = emit_report(run_claims(filter_prefix="cubic.", registry=registry), "json")
        assert a == b

    def test_int_serialization(self, registry):
        results = run_claims(filter_prefix="groups.gl-order-d2-p2", registry=registry)
        doc = json.loads(emit_report(results, "json"))
        assert doc["results"][0]["computed"] == {"int": "6"}

    def test_markdown_sections(self, sphere_results):
        md = emit_report(sphere_results, fmt="md")
        assert "## sphere" in md
        assert "| claim | computed | expected | status |" in md
        assert "pass" in md

    def test_unknown_format(self, sphere_results):
        with pytest.raises(ValueError):
            emit_report(sphere_results, fmt="xml")


class TestScalarExpr:
    def test_decimal(self):
        assert parse_scalar_expr("0.104").contains(Fraction(104, 1000))

    def test_log3_over_3(self):
        from margulis.rigor import exp as iv_exp

        v = parse_scalar_expr("log3/3")
        assert iv_exp(v * 3).contains(3)

    def test_pi(self):
        from margulis.rigor import pi_interval

        half = parse_scalar_expr("pi/2")
        assert not (half * 2).disjoint_from(pi_interval())

    def test_garbage(self):
        for bad in ["log2/3", "pi/0", "", "banana"]:
            with pytest.raises(ValueError):
                parse_scalar_expr(bad)


class TestCli:
    def test_classify(self, capsys):
        rc = main(["classify", "--poly", "[1,3,-14,11]"])
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["verdict"] == "non-nifty"
        assert doc["witnesses"] == {
            "n_tau": 11,
            "n_tau_minus_1": 1,
            "n_tau_plus_1": 27,
            "n_tau_sq_minus_2": 1,
        }

    def test_classify_human_form(self, capsys):
        rc = main(["classify", "--poly", "x^3+2x^2-3x+1"])
        assert rc == 0
        assert json.loads(capsys.readouterr().out)["verdict"] == "non-nifty"

    def test_classify_reducible_errors(self, capsys):
        rc = main(["classify", "--poly", "[1, 0, -1, 0]"])
        assert rc == 2
        assert "rational root" in capsys.readouterr().err

    def test_pell(self, capsys):
        rc = main(["pell", "--max", "29"])
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["count"] == 22
        assert [1, 0, 1] in doc["solutions"]
        assert [41, 29, -1] in doc["solutions"]

    def test_sl2_summary(self, capsys):
        rc = main(["sl2", "--q", "5", "--check", "summary"])
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc == {
            "q": 5,
            "sl2_order": 120,
            "psl2_order": 60,
            "center_order": 2,
            "simple": True,
            "sylow2_rank": 2,
            "div6": True,
        }

    def test_sl2_trace_orders(self, capsys):
        rc = main(["sl2", "--q", "7", "--check", "trace-orders"])
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["counterexamples"] == []
        assert doc["elements_checked"] == 336

    def test_sl2_sum_squares(self, capsys):
        rc = main(["sl2", "--q", "7", "--check", "sum-squares"])
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        assert (doc["a"], doc["b"]) == (3, 2)

    def test_tube(self, capsys):
        rc = main(["tube", "--length", "0.01", "--mu", "log3/3"])
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        assert "lo" in doc["R"]

    def test_tube_no_tube(self, capsys):
        rc = main(["tube", "--length", "1", "--mu", "0.104"])
        assert rc == 0
        assert json.loads(capsys.readouterr().out)["R"] == "none"

    def test_tube_with_theta(self, capsys):
        rc = main(["tube", "--length", "0.1", "--mu", "log3/3", "--theta", "pi"])
        assert rc == 0
        assert json.loads(capsys.readouterr().out)["zagier_n"] == 2

    def test_enumerate(self, capsys):
        rc = main(["enumerate", "--degree", "2", "--height", "1"])
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        assert len(doc) == 4

    def test_verify_sphere_exit_zero(self, capsys):
        rc = main(["verify", "--claims", "sphere."])
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        assert all(r["status"] == "pass" for r in doc["results"])

    def test_verify_unknown_prefix(self, capsys):
        rc = main(["verify", "--claims", "nope."])
        assert rc == 2
        assert "valid prefixes" in capsys.readouterr().err

    def test_verify_markdown(self, capsys):
        rc = main(["verify", "--claims", "intro.", "--format", "md"])
        assert rc == 0
        assert "# Claim verification report" in capsys.readouterr().out

    def test_bad_flags_exit_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["sl2", "--q", "5", "--check", "everything"])
        assert exc.value.code == 2

    def test_config_file(self, tmp_path, capsys):
        cfg = tmp_path / "settings.cfg"
        cfg.write_text("# settings\nprecision = 96\nprecision_cap = 192\n")
        assert load_config(str(cfg)) == {"precision": 96, "precision_cap": 192}
        rc = main(["verify", "--claims", "intro.", "--config", str(cfg)])
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["precision_bits"] == 96

    def test_config_rejects_unknown_keys(self, tmp_path):
        cfg = tmp_path / "settings.cfg"
        cfg.write_text("colour = blue\n")
        with pytest.raises(ValueError):
            load_config(str(cfg))
