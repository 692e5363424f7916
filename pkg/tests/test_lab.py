# -*- coding: utf-8 -*-
import math
from dataclasses import replace

import pytest

from errors import InvalidInputError
from bondspace import make_model
from theory import CompleteGraphParams
from lab import (
    ExperimentConfig, Laboratory, binomial_stderr, default_distances, fit_delta, pair_box,
    run_cluster_fraction, trial_seed,
)


@pytest.fixture
def connected_model():
    """Her en yakın komşu bağı açık: kutu her zaman bağlı."""
    return make_model(d=1, s=1.5, beta=1.0, nn_prob=1.0)


@pytest.fixture
def lab():
    return Laboratory({'seed': 1, 'threads': 1, 'memory_mb': 512.0, 'lang': 'en'})


# ============================================================================
# YAPILANDIRMA VE YARDIMCILAR
# ============================================================================
def test_binomial_stderr():
    assert binomial_stderr(0.5, 100) == pytest.approx(0.05)
    assert binomial_stderr(0.0, 10) == 0.0
    assert math.isnan(binomial_stderr(0.5, 0))


def test_config_defaults(reference_model):
    config = ExperimentConfig(reference_model, sides=(64, 32, 64))
    assert config.sides == (32, 64)
    assert config.effective_sprime == pytest.approx(1.75)
    info = config.to_dict()
    assert 'workers' not in info and 'out' not in info and 'fmt' not in info
    assert info['sprime'] == pytest.approx(1.75)


@pytest.mark.parametrize("kwargs", [
    {'trials': 0}, {'gamma': 1.0}, {'rho': 0.0}, {'delta': 1.5}, {'ell': 4},
    {'workers': 0}, {'box_factor': 0.5}, {'sprime': 1.2}, {'sides': ()},
])
def test_config_validation(reference_model, kwargs):
    with pytest.raises(InvalidInputError):
        ExperimentConfig(reference_model, **kwargs)


def test_effective_sprime_outside_window():
    config = ExperimentConfig(make_model(d=1, s=2.5))
    assert config.effective_sprime is None


def test_pair_box_geometry():
    box, x, y = pair_box(1, 10)
    assert box.side == 40
    assert x == (14,) and y == (24,)
    box2, x2, y2 = pair_box(2, 10, 2.0)
    assert box2.side == 20
    assert x2 == (4, 9) and y2 == (14, 9)
    assert box2.contains(x2) and box2.contains(y2)
    with pytest.raises(InvalidInputError):
        pair_box(1, 0)


def test_trial_seeds_are_independent_of_order():
    seeds = [trial_seed(7, 64, t) for t in range(5)]
    assert seeds == [trial_seed(7, 64, t) for t in range(5)]
    assert len(set(seeds)) == 5


def test_default_distances_respect_budget(reference_model):
    full = default_distances(reference_model, memory_mb=10 ** 6)
    assert full == [2 ** k for k in range(8, 21)]
    short = default_distances(reference_model, memory_mb=1.0)
    assert short == full[:len(short)]
    assert len(short) < len(full)


def test_fit_delta_recovers_synthetic_slope():
    distances = [2 ** k for k in range(4, 12)]
    medians = [math.log(r) ** 2 for r in distances]
    slope, intercept, residuals = fit_delta(distances, medians)
    assert slope == pytest.approx(2.0)
    assert intercept == pytest.approx(0.0, abs=1e-9)
    assert max(abs(e) for e in residuals) < 1e-9


@pytest.mark.parametrize("distances, medians", [
    ([16, 32], [3, 4]), ([2, 16, 32], [1, 3, 4]), ([8, 16, 32], [0.5, 3, 4]), ([8, 16], [1, 2, 3]),
])
def test_fit_delta_validation(distances, medians):
    with pytest.raises(InvalidInputError):
        fit_delta(distances, medians)


# ============================================================================
# DENEYLER
# ============================================================================
def test_cluster_fraction_on_connected_boxes(lab, connected_model):
    config = ExperimentConfig(connected_model, sides=(16, 32), trials=3, seed=5)
    report = lab.run_cluster_fraction(config)
    assert report.kind == "cluster-fraction"
    assert len(report.rows) == 2 * 3 * 2
    assert report.values("largest_size", 32) == [32, 32, 32]
    assert [row['probability'] for row in report.summary] == [0.0, 0.0]
    assert report.summary[0]['reference_curve'] == pytest.approx(math.exp(-0.3 * 16 ** 0.25))


def test_reports_do_not_depend_on_worker_count(reference_model):
    serial = Laboratory({'seed': 1, 'threads': 1, 'memory_mb': 512.0, 'lang': 'en'})
    config = ExperimentConfig(reference_model, sides=(64, 128), trials=6, seed=9, workers=1)
    parallel_config = ExperimentConfig(reference_model, sides=(64, 128), trials=6, seed=9, workers=8)
    a = serial.run_cluster_fraction(config)
    b = serial.run_cluster_fraction(parallel_config)
    assert a.to_json() == b.to_json()


def test_status_and_trial_events(lab, connected_model):
    messages, finished = [], []
    lab.on_status_updated = messages.append
    lab.trial_finished.connect(lambda slot, result: finished.append(slot))
    lab.run_cluster_fraction(ExperimentConfig(connected_model, sides=(8,), trials=4))
    assert len(messages) == 1 and "L=8" in messages[0]
    assert sorted(finished) == [0, 1, 2, 3]


def test_distance_scaling(lab, connected_model):
    config = ExperimentConfig(connected_model, trials=3, seed=2, box_factor=2.0)
    estimate = lab.run_distance_scaling(config, distances=[16, 32, 64])
    assert estimate.distances == (16, 32, 64)
    assert all(v == 0.0 for v in estimate.dropped.values())
    assert math.isfinite(estimate.slope)
    assert estimate.reference == pytest.approx(2.40942, abs=1e-5)
    for dist, median in zip(estimate.distances, estimate.medians):
        assert 1 <= median <= dist
    report = estimate.report
    assert report.config['distances'] == [16, 32, 64]
    assert len(report.tables['fit']) == 3
    assert report.bounds[0]['quantity'] == 'slope'


def test_distance_scaling_needs_connected_pairs(lab, empty_model):
    config = ExperimentConfig(empty_model, trials=2, box_factor=2.0)
    with pytest.raises(InvalidInputError):
        lab.run_distance_scaling(config, distances=[16, 32, 64])


def test_dense_density_on_connected_boxes(lab, connected_model):
    config = ExperimentConfig(connected_model, sides=(9, 15), trials=2, ell=3, rho=1.0)
    report = lab.run_dense_density(config)
    assert report.values("dense_count", 9) == [9, 9]
    assert report.values("dense_count", 15) == [15, 15]
    assert all(row['mean_fraction'] == 1.0 for row in report.summary)


def test_dense_density_empty_graph(lab, empty_model):
    config = ExperimentConfig(empty_model, sides=(9,), trials=2, ell=3, rho=0.5)
    report = lab.run_dense_density(config)
    assert report.summary[0]['probability'] == 1.0


def test_complete_graph_check(lab):
    params = CompleteGraphParams(5, 0.9, 0.5, 0.5, 0.2)
    report = lab.run_complete_graph_check(params, 1200, 3)
    summary = report.summary[0]
    assert summary['trials'] == 1200
    assert summary['total_variation'] < 0.1
    assert len(report.tables['exact_distribution']) == 6
    assert report.bounds[0]['passes']
    assert len(report.rows) == 3 * 1200


def test_complete_graph_check_is_batch_invariant(lab):
    params = CompleteGraphParams(30, 0.8, 0.2, 0.6, 0.1)
    serial = lab.run_complete_graph_check(params, 1100, 4, workers=1)
    parallel = lab.run_complete_graph_check(params, 1100, 4, workers=3)
    assert serial.to_json() == parallel.to_json()
    assert 'exact_distribution' not in serial.tables


def test_complete_graph_check_validation(lab):
    with pytest.raises(InvalidInputError):
        lab.run_complete_graph_check(CompleteGraphParams(5, 0.9, 0.5, 0.5, 0.2), 0, 1)


def test_block_renorm(lab, full_nn_model):
    config = ExperimentConfig(full_nn_model, sides=(12,), trials=2, K=3, delta=0.5)
    report = lab.run_block_renorm(config)
    assert report.summary[0]['occupancy_rate'] == 1.0
    assert report.summary[0]['blocks'] == 8
    assert report.values("block_edges", 12) == [3, 3]
    rows = report.tables['connections_L12']
    assert rows[0]['distance'] == 1.0 and rows[0]['frequency'] == 1.0


def test_block_renorm_validation(lab, connected_model):
    with pytest.raises(InvalidInputError):
        lab.run_block_renorm(ExperimentConfig(connected_model, sides=(12,)))
    with pytest.raises(InvalidInputError):
        lab.run_block_renorm(ExperimentConfig(connected_model, sides=(10,), K=3))


def test_block_renorm_coupled_beta_sweep(lab):
    model = make_model(d=2, s=3.0, beta=0.5, nn_prob=0.4)
    betas = (0.1, 0.5, 2.0, 8.0)
    config = ExperimentConfig(model, sides=(12,), trials=6, K=3, delta=0.5, betas=betas)
    report = lab.run_block_renorm(config)
    assert report.config['betas'] == list(betas)
    per_trial = [report.values(f"occupancy_rate_beta_{b:g}", 12) for b in betas]
    for low, high in zip(per_trial, per_trial[1:]):
        assert all(a <= b for a, b in zip(low, high))
    swept = [row['occupancy_rate'] for row in report.summary if 'beta' in row]
    assert swept == sorted(swept)
    assert swept[0] < swept[-1]


def test_block_renorm_sweep_is_worker_invariant(full_nn_model):
    config = ExperimentConfig(full_nn_model.with_beta(0.3), sides=(12,), trials=3, K=3, betas=(0.3, 1.0))
    one = Laboratory({'seed': 4, 'threads': 1, 'memory_mb': 512.0, 'lang': 'en'}).run_block_renorm(config)
    many = Laboratory({'seed': 4, 'threads': 1, 'memory_mb': 512.0, 'lang': 'en'}).run_block_renorm(
        replace(config, workers=3))
    assert one.to_json() == many.to_json()


def test_block_renorm_sweep_validation(lab, connected_model):
    with pytest.raises(InvalidInputError):
        ExperimentConfig(connected_model, sides=(12,), K=3, betas=(0.5, -1.0))
    table_model = make_model(d=1, profile="custom-table", table={1.0: 0.5, 2.0: 0.1})
    with pytest.raises(InvalidInputError):
        lab.run_block_renorm(ExperimentConfig(table_model, sides=(12,), K=3), betas=(0.5, 1.0))


def test_hierarchy_audit(lab, connected_model):
    config = ExperimentConfig(connected_model, trials=2, seed=8, box_factor=2.0)
    report = lab.run_hierarchy_audit(config, distances=[20, 40])
    for row in report.summary:
        assert row['audited'] == 2
        assert row['pigeonhole_rate'] == 1.0
        assert row['partition_exact_rate'] == 1.0
        assert row['valid_rate'] == 1.0


def test_diameter_scaling(lab, full_nn_model):
    config = ExperimentConfig(full_nn_model, sides=(10, 20), trials=2)
    report = lab.run_diameter_scaling(config)
    assert report.values("diameter_lower", 10) == [9, 9]
    assert report.summary[1]['median_diameter'] == 19.0
    assert report.summary[1]['regime'] == "d<s<2d"


def test_theory_report(lab):
    report = lab.theory_report(1.5, 1, sprime=1.75)
    assert report.summary[0]['delta'] == pytest.approx(2.40942, abs=1e-5)
    assert len(report.tables['chernoff']) == 36
    assert len(report.tables['scale_sequence']) == 4
    assert {b['quantity'] for b in report.bounds} == {'c0', 'rho_limit'}
    assert lab.theory_report(2.0, 1).summary[0]['delta'] == math.inf


def test_module_level_wrapper(connected_model):
    config = ExperimentConfig(connected_model, sides=(8,), trials=2, memory_mb=64.0)
    assert run_cluster_fraction(config).values("largest_size") == [8, 8]
