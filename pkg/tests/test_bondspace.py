# -*- coding: utf-8 -*-
import io
import math

import numpy as np
import pytest
from scipy import stats

from errors import InvalidInputError, ResourceLimitError
from lattice import BoxSpec
from bondspace import (
    BondModel, ConnectionProfile, GraphSample, box_connection_probability, class_count,
    derive_seed, displacement_table, expected_edge_count, make_model, pair_probability,
    q_value, read_edge_list, sample_coupled, sample_graph, sample_graph_naive, write_edge_list,
)


# ============================================================================
# OLASILIK YASASI
# ============================================================================
def test_shifted_power_pair_probability():
    model = make_model(d=1, s=1.5, beta=1.0)
    # q = (1 + 3)^(-1.5) = 1/8
    assert q_value(model, (3,)) == pytest.approx(0.125)
    assert pair_probability(model, (0,), (3,)) == pytest.approx(1 - math.exp(-0.125))


def test_pure_power_profile():
    model = make_model(d=2, s=3.0, beta=2.0, profile="pure-power", norm="sup")
    assert q_value(model, (2, -1)) == pytest.approx(2.0 / 8.0)


def test_nearest_neighbour_overlay(reference_model):
    p = 1 - math.exp(-(2.0 ** -1.5))
    expected = 1 - (1 - p) * (1 - 0.95)
    assert pair_probability(reference_model, (4,), (5,)) == pytest.approx(expected)
    # |z| = 2 adımlarında katman etkisizdir
    assert pair_probability(reference_model, (4,), (6,)) == pytest.approx(1 - math.exp(-(3.0 ** -1.5)))


def test_pair_probability_rejects_equal_sites(reference_model):
    with pytest.raises(InvalidInputError):
        pair_probability(reference_model, (2,), (2,))


def test_custom_table_profile():
    model = make_model(d=1, profile="custom-table", table={1: 0.5, 2: 0.1})
    assert pair_probability(model, (0,), (2,)) == pytest.approx(1 - math.exp(-0.1))
    with pytest.raises(InvalidInputError):
        pair_probability(model, (0,), (3,))


@pytest.mark.parametrize("kwargs", [
    {'beta': -1.0}, {'s': 0.0}, {'nn_prob': 1.5}, {'d': 0}, {'profile': "gaussian"},
])
def test_model_validation(kwargs):
    with pytest.raises((InvalidInputError, ValueError)):
        make_model(**kwargs)


def test_model_description_roundtrip(reference_model):
    assert BondModel.from_description(reference_model.describe()) == reference_model


def test_box_connection_probability_single_pair(reference_model):
    plain = make_model(d=1, s=1.5, beta=1.0)
    assert box_connection_probability(plain, [(0,)], [(3,)]) == pytest.approx(pair_probability(plain, (0,), (3,)))


def test_box_connection_probability_sums_exponents():
    model = make_model(d=1, s=1.5, beta=1.0)
    B0, B1 = [(0,), (1,)], [(5,), (7,)]
    total = sum((1 + abs(a[0] - b[0])) ** -1.5 for a in B0 for b in B1)
    assert box_connection_probability(model, B0, B1) == pytest.approx(1 - math.exp(-total))


def test_box_connection_probability_certain_with_full_overlay():
    model = make_model(d=1, s=1.5, beta=0.0, nn_prob=1.0)
    assert box_connection_probability(model, [(0,)], [(1,), (9,)]) == 1.0


def test_box_connection_probability_requires_disjoint_sets(reference_model):
    with pytest.raises(InvalidInputError):
        box_connection_probability(reference_model, [(0,), (1,)], [(1,)])


# ============================================================================
# YER DEĞİŞTİRME SINIFLARI
# ============================================================================
@pytest.mark.parametrize("d, side", [(1, 7), (2, 3), (2, 6), (3, 3)])
def test_displacement_classes_cover_every_pair(d, side):
    model = make_model(d=d)
    box = BoxSpec.cornered((0,) * d, side)
    table = displacement_table(model, box)
    n = box.site_count
    assert len(table) == class_count(box)
    assert int(table.counts.sum()) == n * (n - 1) // 2
    # her vektörün ilk sıfır olmayan bileşeni pozitif
    first = [next(c for c in v if c != 0) for v in table.vectors.tolist()]
    assert all(c > 0 for c in first)


def test_expected_edge_count_matches_pairwise_sum():
    model = make_model(d=2, s=3.0, beta=0.7, nn_prob=0.2)
    box = BoxSpec.cornered((0, 0), 4)
    sites = list(box.sites())
    direct = math.fsum(
        pair_probability(model, a, b) for i, a in enumerate(sites) for b in sites[i + 1:]
    )
    assert expected_edge_count(model, box) == pytest.approx(direct)


# ============================================================================
# ÖRNEKLEME
# ============================================================================
def test_sampling_is_deterministic(reference_model):
    box = BoxSpec.cornered((0,), 256)
    a = sample_graph(reference_model, box, 42)
    b = sample_graph(reference_model, box, 42)
    assert np.array_equal(a.edges, b.edges)
    assert not np.array_equal(a.edges, sample_graph(reference_model, box, 43).edges)


def test_sampling_independent_of_worker_count():
    model = make_model(d=2, s=3.0, beta=1.0, nn_prob=0.5)
    box = BoxSpec.cornered((0, 0), 24)
    serial = sample_graph(model, box, 7, workers=1)
    parallel = sample_graph(model, box, 7, workers=8)
    assert np.array_equal(serial.edges, parallel.edges)


def test_small_sparse_chunks_stay_worker_independent(monkeypatch):
    import bondspace
    monkeypatch.setattr(bondspace, "SPARSE_CHUNK", 5)
    model = make_model(d=2, s=3.5, beta=0.6)
    box = BoxSpec.cornered((0, 0), 20)
    serial = sample_graph(model, box, 19, workers=1)
    parallel = sample_graph(model, box, 19, workers=6)
    again = sample_graph(model, box, 19, workers=3)
    assert np.array_equal(serial.edges, parallel.edges)
    assert np.array_equal(serial.edges, again.edges)


def test_edges_are_sorted_and_inside_box(reference_model):
    box = BoxSpec.cornered((0,), 128)
    g = sample_graph(reference_model, box, 3)
    assert np.all(g.edges[:, 0] < g.edges[:, 1])
    assert np.all(g.edges >= 0) and np.all(g.edges < box.site_count)
    order = np.lexsort((g.edges[:, 1], g.edges[:, 0]))
    assert np.array_equal(order, np.arange(len(order)))


def test_empty_and_full_overlay(empty_model, full_nn_model):
    box = BoxSpec.cornered((0,), 64)
    assert sample_graph(empty_model, box, 1).edge_count == 0
    path = sample_graph(full_nn_model, box, 1)
    assert path.edge_set() == {(i, i + 1) for i in range(63)}


def test_mean_edge_count_matches_expectation(reference_model):
    box = BoxSpec.cornered((0,), 64)
    expected = expected_edge_count(reference_model, box)
    counts = [sample_graph(reference_model, box, seed).edge_count for seed in range(200)]
    assert abs(np.mean(counts) - expected) < 5 * math.sqrt(expected / 200)


def test_skip_sampler_agrees_with_naive_sampler():
    model = make_model(d=2, s=3.0, beta=1.0)
    box = BoxSpec.cornered((0, 0), 8)
    fast = [sample_graph(model, box, s).edge_count for s in range(150)]
    naive = [sample_graph_naive(model, box, s).edge_count for s in range(150)]
    expected = expected_edge_count(model, box)
    assert abs(np.mean(fast) - expected) < 5 * math.sqrt(expected / 150)
    assert abs(np.mean(naive) - expected) < 5 * math.sqrt(expected / 150)
    assert stats.ks_2samp(fast, naive).pvalue > 0.001


def test_pair_frequency_matches_probability(reference_model):
    box = BoxSpec.cornered((0,), 16)
    p = pair_probability(reference_model, (2,), (9,))
    index = (box.index_of((2,)), box.index_of((9,)))
    hits = sum(index in sample_graph(reference_model, box, s).edge_set() for s in range(2000))
    assert abs(hits / 2000 - p) < 5 * math.sqrt(p * (1 - p) / 2000)


def test_coupled_samples_are_nested():
    low = make_model(d=1, s=1.5, beta=0.4)
    high = make_model(d=1, s=1.5, beta=1.2)
    box = BoxSpec.cornered((0,), 200)
    small, large = sample_coupled([low, high], box, 11)
    assert small.edge_set() <= large.edge_set()
    assert small.edge_count < large.edge_count


def test_naive_sampler_size_limit(reference_model):
    with pytest.raises(InvalidInputError):
        sample_graph_naive(reference_model, BoxSpec.cornered((0,), 10 ** 4 + 1), 0)


def test_memory_budget_is_enforced(reference_model):
    with pytest.raises(ResourceLimitError) as info:
        sample_graph(reference_model, BoxSpec.cornered((0,), 4096), 0, memory_mb=1e-3)
    assert info.value.required_mb > info.value.budget_mb


@pytest.mark.parametrize("seed", [-1, 2 ** 64, 1.0, True])
def test_seed_validation(reference_model, seed):
    with pytest.raises(InvalidInputError):
        sample_graph(reference_model, BoxSpec.cornered((0,), 8), seed)


def test_dimension_mismatch(reference_model):
    with pytest.raises(InvalidInputError):
        sample_graph(reference_model, BoxSpec.cornered((0, 0), 8), 0)


def test_derived_seeds_are_stable_and_distinct():
    assert derive_seed(5, 64, 0) == derive_seed(5, 64, 0)
    seeds = {derive_seed(5, side, t) for side in (32, 64) for t in range(50)}
    assert len(seeds) == 100
    assert all(0 <= s < 2 ** 63 for s in seeds)


# ============================================================================
# GRAF ÖRNEĞİ VE KENAR LİSTESİ
# ============================================================================
def test_from_edges_normalizes_pairs():
    box = BoxSpec.cornered((0,), 5)
    g = GraphSample.from_edges(box, [(3, 1), (1, 3), (0, 4)])
    assert g.edges.tolist() == [[0, 4], [1, 3]]
    assert g.has_edge(3, 1) and not g.has_edge(0, 1)
    assert g.neighbors(4).tolist() == [0]
    assert g.degree(2) == 0


@pytest.mark.parametrize("pairs", [[(0, 0)], [(0, 5)]])
def test_from_edges_rejects_bad_pairs(pairs):
    with pytest.raises(InvalidInputError):
        GraphSample.from_edges(BoxSpec.cornered((0,), 5), pairs)


def test_edge_list_text_roundtrip(reference_model):
    g = sample_graph(reference_model, BoxSpec.cornered((-5,), 40), 9)
    text = write_edge_list(g)
    assert text.startswith("# {")
    assert len(text.splitlines()) == g.edge_count + 1
    back = read_edge_list(io.StringIO(text))
    assert back.edge_set() == g.edge_set()
    assert back.box == g.box
    assert back.model == reference_model
    assert back.seed == 9


def test_edge_list_file(tmp_path, full_nn_model):
    g = sample_graph(full_nn_model, BoxSpec.cornered((0,), 4), 0)
    target = tmp_path / "edges.txt"
    write_edge_list(g, target)
    lines = target.read_text(encoding="utf-8").splitlines()
    assert lines[1:] == ["0\t1", "1\t2", "2\t3"]


def test_edge_list_requires_header():
    with pytest.raises(InvalidInputError):
        read_edge_list(io.StringIO("0\t1\n"))
