from statistics import mean

import pytest

from rankshift.centrality import CentralityKind, rank
from rankshift.errors import ConfigError, TrialSkipped
from rankshift.experiment import (LayerAssignment, SweepConfig, _derive_seed,
                                  _split_trial_seed, run_sweep, run_trial,
                                  sample_layer)
from rankshift.generators import (ScaleFreeParams, SmallWorldParams,
                                  generate_scale_free)
from rankshift.graph import Graph
from rankshift.metrics import error_pair

from oracles import brute_force_betweenness


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


class TestSampleLayer:
    def test_p_zero_empty(self):
        layer = sample_layer(path_graph(10), 0.0, seed=1)
        assert layer.blue == frozenset()

    def test_p_one_everything(self):
        layer = sample_layer(path_graph(10), 1.0, seed=1)
        assert layer.blue == frozenset(range(10))

    def test_deterministic(self):
        g = path_graph(50)
        assert sample_layer(g, 0.4, seed=9).blue == sample_layer(g, 0.4, seed=9).blue

    def test_concentration(self):
        # binomial concentration at n=10^4: fraction within [0.27, 0.33]
        g = Graph(10_000)
        for seed in range(100):
            frac = len(sample_layer(g, 0.3, seed=seed).blue) / 10_000
            assert 0.27 <= frac <= 0.33

    def test_invalid_probability(self):
        with pytest.raises(ValueError):
            sample_layer(path_graph(3), 1.5, seed=0)


class TestRunTrial:
    def test_empty_layer_zero_error(self):
        g = generate_scale_free(ScaleFreeParams(n=40, seed=5))
        layer = LayerAssignment(blue=frozenset(), p_b=0.0, seed=0)
        for kind in CentralityKind:
            record = run_trial(g, layer, kind)
            assert record.errors.epsilon_raw == 0.0
            assert record.errors.epsilon_n_raw == 0.0
            assert record.n_kept == 40

    def test_star_one_blue_leaf_degree(self):
        # removing one leaf leaves both orderings identical: center first,
        # surviving leaves tied and ID-ordered in both rankings
        g = star_graph(5)
        layer = LayerAssignment(blue=frozenset({5}), p_b=0.2, seed=0)
        record = run_trial(g, layer, CentralityKind.DEGREE)
        assert record.errors.epsilon_norm == 0.0
        assert record.errors.epsilon_n_norm == 0.0

    def test_path4_drop_end_betweenness(self):
        # expected values derived from the path-enumeration oracle on the
        # two graphs, then pinned
        g = path_graph(4)
        layer = LayerAssignment(blue=frozenset({3}), p_b=0.25, seed=0)
        record = run_trial(g, layer, CentralityKind.BETWEENNESS)

        sub_scores = brute_force_betweenness([[1], [0, 2], [1]])
        full_scores = brute_force_betweenness([[1], [0, 2], [1, 3], [2]])
        baseline = rank(sub_scores)
        perturbed = [v for v in rank(full_scores) if v in {0, 1, 2}]
        expected = error_pair(baseline, perturbed)
        assert record.errors == expected
        # frozen: middle node flips ahead of the shared second place
        assert record.errors.epsilon_raw == 2.0
        assert record.errors.epsilon_n_raw == 2.5
        assert record.errors.epsilon_norm == pytest.approx(2 / 3)
        assert record.errors.epsilon_n_norm == pytest.approx(2.5 / 3)

    def test_too_few_kept_nodes_skips(self):
        g = path_graph(4)
        layer = LayerAssignment(blue=frozenset({0, 1}), p_b=0.5, seed=0)
        with pytest.raises(TrialSkipped, match="needs >= 3"):
            run_trial(g, layer, CentralityKind.BETWEENNESS)
        record = run_trial(g, layer, CentralityKind.DEGREE)
        assert record.n_kept == 2

    def test_layer_outside_graph(self):
        layer = LayerAssignment(blue=frozenset({10}), p_b=0.1, seed=0)
        with pytest.raises(ValueError, match="outside"):
            run_trial(path_graph(4), layer, CentralityKind.DEGREE)


def small_config(**overrides):
    defaults = dict(
        models=(ScaleFreeParams(n=30), SmallWorldParams(n=30, k=4, p=0.2)),
        kinds=(CentralityKind.DEGREE,),
        grid_start=0.05, grid_stop=0.25, grid_step=0.1,
        trials_per_point=3, base_seed=77,
    )
    defaults.update(overrides)
    return SweepConfig(**defaults)


class TestSweepConfig:
    def test_grid_values(self):
        config = small_config(grid_start=0.01, grid_stop=0.3, grid_step=0.01)
        values = config.grid_values()
        assert len(values) == 30
        assert values[0] == 0.01
        assert values[-1] == 0.3

    def test_zero_trials_rejected(self):
        with pytest.raises(ConfigError, match="trials_per_point"):
            small_config(trials_per_point=0).validate()

    def test_bad_grid_rejected(self):
        with pytest.raises(ConfigError, match="grid"):
            small_config(grid_start=0.4, grid_stop=0.2).validate()

    def test_model_validation_bubbles_up(self):
        with pytest.raises(ConfigError, match="alpha \\+ beta \\+ gamma"):
            small_config(models=(ScaleFreeParams(n=30, alpha=0.5),)).validate()


class TestRunSweep:
    def test_record_stream_reproducible(self):
        config = small_config()
        records_a, summary_a = run_sweep(config)
        records_b, summary_b = run_sweep(config)
        assert records_a == records_b
        assert summary_a == summary_b

    def test_worker_count_does_not_change_records(self):
        config = small_config()
        records_seq, _ = run_sweep(config, workers=1)
        records_par, _ = run_sweep(config, workers=2)
        assert records_seq == records_par

    def test_canonical_record_order(self):
        config = small_config()
        records, _ = run_sweep(config)
        keys = [(config.models.index(r.model),
                 config.kinds.index(r.centrality), r.p_b) for r in records]
        assert keys == sorted(keys)

    def test_summary_counts(self):
        config = small_config()
        records, summary = run_sweep(config)
        assert len(summary.cells) == 2
        assert sum(c.trials for c in summary.cells) == len(records)
        grid_points = len(config.grid_values())
        for cell in summary.cells:
            assert cell.trials + cell.skips == grid_points * config.trials_per_point
            assert 0.0 <= cell.mean_eps_norm <= 1.0
            assert 0.0 <= cell.mean_eps_n_norm <= 1.0

    def test_p_b_zero_grid_yields_exact_zero_errors(self):
        config = small_config(grid_start=0.0, grid_stop=0.0, grid_step=0.01)
        records, summary = run_sweep(config)
        assert records
        for r in records:
            assert r.errors.epsilon_raw == 0.0
            assert r.errors.epsilon_n_raw == 0.0
        for cell in summary.cells:
            assert cell.mean_eps_norm == 0.0

    def test_record_seed_reproduces_trial(self):
        # the stored seed fully determines the graph and the layer
        config = small_config()
        records, _ = run_sweep(config)
        for record in records[:: max(1, len(records) // 7)]:
            graph_seed, layer_seed = _split_trial_seed(record.seed)
            g = generate_scale_free(
                ScaleFreeParams(**{**record.model.__dict__, "seed": graph_seed})) \
                if record.model.family == "scale_free" else None
            if g is None:
                from rankshift.generators import generate_small_world
                g = generate_small_world(
                    SmallWorldParams(**{**record.model.__dict__, "seed": graph_seed}))
            layer = sample_layer(g, record.p_b, layer_seed)
            layer = LayerAssignment(blue=layer.blue, p_b=layer.p_b, seed=record.seed)
            replay = run_trial(g, layer, record.centrality, model=record.model)
            assert replay == record

    def test_fixed_graph_mode_shares_one_graph_per_model(self):
        config = small_config(fixed_graph=True,
                              models=(ScaleFreeParams(n=25),),
                              grid_start=0.0, grid_stop=0.0, grid_step=0.1,
                              trials_per_point=4)
        records, _ = run_sweep(config)
        # p_b = 0 keeps every node, so n_kept exposes the shared graph size
        assert {r.n_kept for r in records} == {25}
        fixed_seed = _derive_seed(config.base_seed, (1, 0))
        g = generate_scale_free(ScaleFreeParams(n=25, seed=fixed_seed))
        assert g.node_count == 25

    def test_small_world_betweenness_plateau(self):
        # statistical: the error at a tiny layer probability sits below the
        # plateau it reaches for p_b >= 0.1
        model = SmallWorldParams(n=60, k=4, p=0.1)
        low = SweepConfig(models=(model,), kinds=(CentralityKind.BETWEENNESS,),
                          grid_start=0.005, grid_stop=0.005, grid_step=1.0,
                          trials_per_point=20, base_seed=5)
        high = SweepConfig(models=(model,), kinds=(CentralityKind.BETWEENNESS,),
                           grid_start=0.1, grid_stop=0.3, grid_step=0.1,
                           trials_per_point=20, base_seed=5)
        low_records, _ = run_sweep(low)
        high_records, _ = run_sweep(high)
        low_mean = mean(r.errors.epsilon_norm for r in low_records)
        high_mean = mean(r.errors.epsilon_norm for r in high_records)
        assert low_mean < high_mean
