# -*- coding: utf-8 -*-
"""
Masaüstü ölçekli Monte Carlo koşuları. Deneme sayıları küçültülmüştür ama
eğilimleri ayırt edecek kadar büyüktür; `pytest -m "not slow"` ile atlanır.
"""
import numpy as np
import pytest

from lattice import BoxSpec
from bondspace import box_connection_probability, make_model, sample_graph
from clusters import label_components
from chemdist import check_pigeonhole, extract_hierarchy, greedy_build, shortest_path, validate_hierarchy
from theory import CompleteGraphParams, delta
from lab import ExperimentConfig, Laboratory

pytestmark = pytest.mark.slow


@pytest.fixture
def lab():
    return Laboratory({'seed': 20240101, 'threads': 4, 'memory_mb': 1024.0, 'lang': 'en'})


# ============================================================================
# KUTU BAĞLANTI OLASILIĞI
# ============================================================================
@pytest.mark.parametrize("gap", [8, 32, 128])
def test_box_connection_matches_monte_carlo(reference_model, gap):
    width, trials = 4, 4000
    B0 = [(i,) for i in range(width)]
    B1 = [(gap + i,) for i in range(width)]
    exact = box_connection_probability(reference_model, B0, B1)

    box = BoxSpec.cornered((0,), gap + width)
    hits = 0
    for seed in range(trials):
        e = sample_graph(reference_model, box, seed).edges
        hits += bool(np.any((e[:, 0] < width) & (e[:, 1] >= gap)))
    freq = hits / trials
    assert abs(freq - exact) <= 4 * np.sqrt(exact * (1 - exact) / trials)


# ============================================================================
# EN BÜYÜK KÜME KUYRUĞU
# ============================================================================
def test_small_cluster_probability_falls_with_side(lab, reference_model):
    config = ExperimentConfig(reference_model, sides=(256, 512, 1024, 2048, 4096), trials=200, rho=0.3)
    report = lab.run_cluster_fraction(config)
    probs = [row['probability'] for row in report.summary]
    errs = [row['stderr'] for row in report.summary]
    for k in range(len(probs) - 1):
        assert probs[k + 1] <= probs[k] + 2 * max(errs[k], errs[k + 1], 1 / 200)
    assert probs[-1] < 0.02
    assert probs[-1] <= probs[0]


# ============================================================================
# KİMYASAL UZAKLIK ÖLÇEKLEMESİ
# ============================================================================
def test_fitted_slopes_follow_delta_ordering(lab):
    distances = [2 ** k for k in range(8, 13)]
    slopes = {}
    for s in (1.2, 1.5, 1.8):
        model = make_model(d=1, s=s, beta=1.0, nn_prob=0.95)
        config = ExperimentConfig(model, trials=30, box_factor=4.0)
        slopes[s] = lab.run_distance_scaling(config, distances=distances).slope
    assert slopes[1.2] < slopes[1.5] < slopes[1.8]
    target = delta(1.5, 1)
    assert 0.5 * target <= slopes[1.5] <= 1.7 * target


# ============================================================================
# HİYERARŞİLER
# ============================================================================
def test_hierarchies_from_sampled_paths(reference_model):
    box = BoxSpec.cornered((0,), 1024)
    checked = 0
    for seed in range(10):
        g = sample_graph(reference_model, box, seed)
        labeling = label_components(g)
        members = labeling.members(labeling.largest)
        rng = np.random.default_rng(seed)
        for _ in range(10):
            a, b = rng.choice(members, size=2, replace=False)
            path = shortest_path(g, box.point_of(int(a)), box.point_of(int(b)))
            assert path is not None
            h = extract_hierarchy(path, 4, g.model.norm)
            validation = validate_hierarchy(h, g)
            assert validation.valid, validation.violations
            assert all(check_pigeonhole(h).values())
            checked += 1
    assert checked == 100


def test_greedy_build_succeeds_on_dense_samples():
    model = make_model(d=1, s=1.5, beta=2.0, nn_prob=0.9)
    box = BoxSpec.cornered((0,), 512)
    # |x−y| = 256, γ = 0.95: ölçekler 256 → 194 → 149 ≤ ℓ, iki seviye
    results = [
        greedy_build(sample_graph(model, box, seed), (128,), (384,), 0.95, 0.3, 151)
        for seed in range(20)
    ]
    assert sum(r.success for r in results) >= 16
    for r in results:
        if r.success:
            assert r.levels_completed == 2
            assert r.hierarchy.depth == 3


# ============================================================================
# TAM GRAF KUYRUK SINIRI
# ============================================================================
@pytest.mark.parametrize("params", [
    CompleteGraphParams(100, 0.9, 0.3, 0.7, 0.15),
    CompleteGraphParams(200, 0.5, 0.1, 0.45, 0.09),
])
def test_tail_bound_dominates(lab, params):
    report = lab.run_complete_graph_check(params, 10000, 7, workers=4)
    row = report.bounds[0]
    assert row['passes'], row
    assert row['empirical'] <= row['bound'] + 3 * row['stderr']
