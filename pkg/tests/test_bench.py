from fractions import Fraction

import pytest

from romdom.bench import (
    ExperimentSpec,
    emit,
    format_fixed,
    metric_eta,
    metric_omega,
    run_experiment,
)
from romdom.errors import MetricError, ParameterError


class TestMetrics:
    def test_eta_table_values(self):
        eta = metric_eta(Fraction(17968, 1000), Fraction(2332, 1000), 100)
        assert eta == Fraction(17968, 233200)
        assert abs(float(eta) - 0.0770) < 1e-3
        eta = metric_eta(Fraction(22309, 1000), Fraction(2846, 1000), 100)
        assert abs(float(eta) - 0.0784) < 1e-3

    def test_eta_identity_case(self):
        assert metric_eta(50, 1, 50) == 1

    def test_eta_guards(self):
        with pytest.raises(MetricError):
            metric_eta(10, 0, 5)
        with pytest.raises(MetricError):
            metric_eta(10, 2, 0)

    def test_omega_values(self):
        assert metric_omega(103, 100) == Fraction(3, 100)
        assert metric_omega(7, 7) == 0

    def test_omega_guards(self):
        with pytest.raises(MetricError):
            metric_omega(5, 0)
        with pytest.raises(MetricError, match="negative gap"):
            metric_omega(4, 5)


class TestFormatting:
    def test_fixed_six_places(self):
        assert format_fixed(Fraction(1, 3)) == "0.333333"
        assert format_fixed(Fraction(2, 3)) == "0.666667"
        assert format_fixed(Fraction(77, 1000)) == "0.077000"
        assert format_fixed(Fraction(5, 2)) == "2.500000"

    def test_round_half_even(self):
        assert format_fixed(Fraction(5, 10**7)) == "0.000000"
        assert format_fixed(Fraction(15, 10**7)) == "0.000002"
        assert format_fixed(Fraction(25, 10**7)) == "0.000002"

    def test_negative_values(self):
        assert format_fixed(Fraction(-1, 3)) == "-0.333333"


class TestSpecValidation:
    def test_treedp_requires_tree_model(self):
        with pytest.raises(ParameterError, match="tree models"):
            ExperimentSpec(
                model="er", n_values=(10,), samples=1,
                algos=("gsa", "treedp"), seed=1,
            )

    def test_unknown_algo_rejected(self):
        with pytest.raises(ParameterError):
            ExperimentSpec(
                model="ba", n_values=(10,), samples=1, algos=("magic",), seed=1
            )

    def test_sample_count_positive(self):
        with pytest.raises(ParameterError):
            ExperimentSpec(
                model="ba", n_values=(10,), samples=0, algos=("gsa",), seed=1
            )


def tiny_spec(**overrides):
    base = dict(
        model="rt",
        n_values=(8, 12),
        samples=6,
        algos=("gaa", "gsa", "egsa", "greedy", "treedp"),
        seed=424242,
    )
    base.update(overrides)
    return ExperimentSpec(**base)


class TestRunExperiment:
    def test_rows_and_metrics_present(self):
        result = run_experiment(tiny_spec())
        assert len(result.rows) == 10
        by_key = {(r.n, r.algorithm): r for r in result.rows}
        for n in (8, 12):
            gsa = by_key[(n, "gsa")]
            assert gsa.eta is not None
            assert gsa.omega is not None and gsa.omega >= 0
            assert by_key[(n, "egsa")].mean_weight <= gsa.mean_weight
            assert by_key[(n, "treedp")].omega is None
            assert by_key[(n, "greedy")].mean_rounds_total is None

    def test_verify_flag_runs_clean(self):
        run_experiment(tiny_spec(samples=3, verify=True))

    def test_deterministic_emission(self):
        a = emit(run_experiment(tiny_spec()), "csv")
        b = emit(run_experiment(tiny_spec()), "csv")
        assert a == b
        ja = emit(run_experiment(tiny_spec()), "json")
        jb = emit(run_experiment(tiny_spec()), "json")
        assert ja == jb

    def test_adding_algorithms_keeps_graphs_fixed(self):
        lean = run_experiment(tiny_spec(algos=("gsa",)))
        full = run_experiment(tiny_spec(algos=("gsa", "egsa", "greedy", "treedp")))
        lean_gsa = [r for r in lean.rows if r.algorithm == "gsa"]
        full_gsa = [r for r in full.rows if r.algorithm == "gsa"]
        assert [r.mean_weight for r in lean_gsa] == [r.mean_weight for r in full_gsa]
        assert [r.mean_rounds_total for r in lean_gsa] == [
            r.mean_rounds_total for r in full_gsa
        ]

    def test_restart_column_improves_monotonically(self):
        weights = []
        for k in (0, 5, 20):
            result = run_experiment(
                tiny_spec(algos=("gsa_restarts",), restarts=k, n_values=(12,))
            )
            weights.append(result.rows[0].mean_weight)
        assert weights[0] >= weights[1] >= weights[2]

    def test_error_context_includes_sample(self):
        spec = tiny_spec(model="bat", n_values=(1,), algos=("gsa",))
        with pytest.raises(Exception, match="n=1 sample=0"):
            run_experiment(spec)


class TestEmit:
    def test_header_only_for_empty_rows(self):
        result = run_experiment(tiny_spec(algos=("gsa",), n_values=(8,)))
        object.__setattr__(result, "rows", ())
        text = emit(result, "csv")
        assert text == (
            "model,n,algorithm,samples,mean_weight,mean_rounds_total,"
            "mean_rounds_effective,eta,omega,seed\n"
        )

    def test_inapplicable_cells_empty(self):
        result = run_experiment(tiny_spec(algos=("gsa", "greedy"), n_values=(8,)))
        lines = emit(result, "csv").splitlines()
        greedy_row = next(ln for ln in lines if ",greedy," in ln)
        cells = greedy_row.split(",")
        assert cells[5] == cells[6] == cells[7] == cells[8] == ""

    def test_json_mirrors_fields(self):
        import json

        payload = json.loads(emit(run_experiment(tiny_spec(algos=("gsa",))), "json"))
        assert payload["meta"]["model"] == "rt"
        assert "eta_definition" in payload["meta"]
        row = payload["rows"][0]
        assert set(row) == {
            "model", "n", "algorithm", "samples", "mean_weight",
            "mean_rounds_total", "mean_rounds_effective", "eta", "omega", "seed",
        }

    def test_unknown_format_rejected(self):
        with pytest.raises(ParameterError):
            emit(run_experiment(tiny_spec(algos=("gsa",))), "xml")
