# -*- coding: utf-8 -*-
import math

import networkx as nx
import numpy as np
import pytest

from errors import InvalidInputError
from lattice import BoxSpec
from bondspace import make_model, sample_coupled, sample_graph
from chemdist import (
    Hierarchy, PathRecord, audit_hierarchy, binary_strings, bridge_gaps, chemical_distance,
    check_pigeonhole, check_regularity, extract_hierarchy, format_hierarchy, gap_product,
    gap_product_satisfied, graph_diameter, greedy_build, shortest_path, validate_hierarchy,
)

# 1, 4, 1, 1 uzunluklu bağlardan oluşan yol
PATH = PathRecord(((0,), (1,), (5,), (6,), (7,)))


def _path_graph(make_line_graph):
    return make_line_graph(8, [(0, 1), (1, 5), (5, 6), (6, 7)])


def _to_networkx(graph):
    g = nx.Graph()
    g.add_nodes_from(range(graph.site_count))
    g.add_edges_from(graph.edges.tolist())
    return g


def test_binary_strings():
    assert binary_strings(0) == [""]
    assert binary_strings(2) == ["00", "01", "10", "11"]


# ============================================================================
# UZAKLIK VE YOLLAR
# ============================================================================
def test_chemical_distance_uses_shortcut(make_line_graph):
    g = make_line_graph(10, [(i, i + 1) for i in range(9)] + [(0, 6)])
    assert chemical_distance(g, (0,), (9,)) == 4
    assert chemical_distance(g, (3,), (3,)) == 0
    path = shortest_path(g, (0,), (9,))
    assert path.sites == ((0,), (6,), (7,), (8,), (9,))
    assert path.hops == 4
    assert path.bond_lengths() == [6.0, 1.0, 1.0, 1.0]


def test_unreachable_pair(make_line_graph):
    g = make_line_graph(6, [(0, 1)])
    assert chemical_distance(g, (0,), (4,)) is None
    assert shortest_path(g, (0,), (4,)) is None


def test_endpoint_outside_box(make_line_graph):
    with pytest.raises(InvalidInputError):
        chemical_distance(make_line_graph(6, []), (0,), (6,))


@pytest.mark.parametrize("seed", range(3))
def test_distances_match_networkx(seed):
    model = make_model(d=2, s=3.0, beta=1.0, nn_prob=0.6)
    g = sample_graph(model, BoxSpec.cornered((0, 0), 16), seed)
    ng = _to_networkx(g)
    box = g.box
    for x, y in [((0, 0), (15, 15)), ((3, 7), (12, 1)), ((8, 8), (8, 9))]:
        ix, iy = box.index_of(x), box.index_of(y)
        expected = nx.shortest_path_length(ng, ix, iy) if nx.has_path(ng, ix, iy) else None
        assert chemical_distance(g, x, y) == expected
        path = shortest_path(g, x, y)
        if expected is not None:
            assert path.hops == expected
            assert all(g.has_edge(a, b) for a, b in zip(path.indices, path.indices[1:]))


# ============================================================================
# ÇAP
# ============================================================================
def test_diameter_of_a_path(full_nn_model):
    g = sample_graph(full_nn_model, BoxSpec.cornered((0,), 10), 0)
    exact = graph_diameter(g)
    assert (exact.value, exact.is_lower_bound, exact.component_size) == (9, False, 10)
    sweep = graph_diameter(g, mode="two-sweep-lower")
    assert sweep.value == 9 and sweep.is_lower_bound


@pytest.mark.parametrize("seed", range(3))
def test_diameter_matches_networkx(seed):
    model = make_model(d=2, s=3.0, beta=1.0, nn_prob=0.7)
    g = sample_graph(model, BoxSpec.cornered((0, 0), 14), seed)
    ng = _to_networkx(g)
    giant = ng.subgraph(max(nx.connected_components(ng), key=len))
    exact = graph_diameter(g)
    assert exact.value == nx.diameter(giant)
    assert graph_diameter(g, mode="two-sweep-lower").value <= exact.value


def test_diameter_of_isolated_sites(empty_model):
    g = sample_graph(empty_model, BoxSpec.cornered((0,), 5), 0)
    assert graph_diameter(g).value == 0


def test_diameter_mode_validation(make_line_graph):
    with pytest.raises(InvalidInputError):
        graph_diameter(make_line_graph(4, []), mode="approx")


@pytest.mark.parametrize("seed", range(20))
def test_coupled_distances_shrink_with_beta(seed):
    models = [make_model(d=2, s=3.0, beta=b, nn_prob=0.3) for b in (0.2, 0.6, 1.5)]
    samples = sample_coupled(models, BoxSpec.cornered((0, 0), 12), seed)
    for x, y in [((0, 0), (11, 11)), ((3, 7), (9, 2)), ((5, 5), (6, 5))]:
        dists = [chemical_distance(g, x, y) for g in samples]
        dists = [math.inf if dist is None else dist for dist in dists]
        assert dists == sorted(dists, reverse=True)


# ============================================================================
# HİYERARŞİ ÇIKARMA
# ============================================================================
def test_extract_longest_bond_split():
    h = extract_hierarchy(PATH, 3)
    assert h.depth == 3 and not h.truncated
    assert h.site("01") == (1,) and h.site("10") == (5,)
    assert h.site("00") == (0,) and h.site("11") == (7,)
    assert h.gap("0") == ((0,), (1,))
    # eşit uzunlukta bağlar arasında ilki seçilir
    assert h.site("101") == (5,) and h.site("110") == (6,)
    assert h.gap_vectors["1"] == (-2,)


def test_extract_truncates_when_all_segments_collapse():
    h = extract_hierarchy(PATH, 5)
    assert h.depth == 4
    assert h.requested_depth == 5
    assert h.truncated
    assert "[truncated]" in format_hierarchy(h)


def test_extract_depth_one():
    h = extract_hierarchy(PATH, 1)
    assert h.leaves() == [(0,), (7,)]
    assert h.bonds() == []


@pytest.mark.parametrize("depth", [0, -1, 1.5])
def test_extract_rejects_bad_depth(depth):
    with pytest.raises(InvalidInputError):
        extract_hierarchy(PATH, depth)


def test_extract_rejects_degenerate_path():
    with pytest.raises(InvalidInputError):
        extract_hierarchy(PathRecord(((3,),)), 2)


def test_extracted_hierarchy_is_valid(make_line_graph):
    h = extract_hierarchy(PATH, 4)
    result = validate_hierarchy(h, _path_graph(make_line_graph))
    assert result
    assert result.violations == ()


# ============================================================================
# DOĞRULAMA
# ============================================================================
def _manual_sites(**overrides):
    sites = {
        "0": (0,), "1": (3,), "00": (0,), "01": (1,), "10": (2,), "11": (3,),
        "000": (0,), "001": (0,), "010": (0,), "011": (1,),
        "100": (2,), "101": (2,), "110": (2,), "111": (3,),
    }
    sites.update({k.lstrip("z"): v for k, v in overrides.items()})
    return sites


def test_validate_detects_endpoint_mismatch(make_line_graph):
    g = make_line_graph(4, [(0, 1), (1, 2), (2, 3)])
    h = Hierarchy((1,), (3,), 3, _manual_sites(), 3)
    assert validate_hierarchy(h, g).clauses() == [1]


def test_validate_detects_missing_edge(make_line_graph):
    g = make_line_graph(4, [(0, 1), (2, 3)])
    h = Hierarchy((0,), (3,), 3, _manual_sites(), 3)
    result = validate_hierarchy(h, g)
    assert not result
    assert result.clauses() == [3]
    assert result.violations[0].sigma == ""


def test_validate_detects_repeated_bond(make_line_graph):
    g = make_line_graph(4, [(0, 1), (1, 2), (2, 3)])
    h = Hierarchy((0,), (3,), 3, _manual_sites(z001=(1,), z010=(2,), z011=(1,)), 3)
    assert validate_hierarchy(h, g).clauses() == [4]


def test_validate_detects_copy_rule(make_line_graph):
    g = make_line_graph(4, [(0, 1), (1, 2), (2, 3)])
    h = Hierarchy((0,), (3,), 3, _manual_sites(z111=(2,)), 3)
    assert 2 in validate_hierarchy(h, g).clauses()


# ============================================================================
# BOŞLUK ÇARPIMLARI, DÜZENLİLİK, GÜVERCİN YUVASI
# ============================================================================
def test_gap_product():
    h = extract_hierarchy(PATH, 4)
    assert gap_product(h, 1) == pytest.approx(2.0)
    assert gap_product_satisfied(h, 1, 7, 0.1)
    assert not gap_product_satisfied(h, 1, 7, 0.5)
    with pytest.raises(InvalidInputError):
        gap_product(h, 4)


def test_check_regularity():
    h = extract_hierarchy(PATH, 4)
    flags = check_regularity(h, 7, 1.0)
    assert flags[""] and flags["0"] and flags["11"]
    assert not flags["1"]
    with pytest.raises(InvalidInputError):
        check_regularity(h, 2.0, 1.0)


def test_check_pigeonhole():
    h = extract_hierarchy(PATH, 4)
    assert all(check_pigeonhole(h).values())
    manual = Hierarchy((0,), (3,), 3, _manual_sites(), 3)
    with pytest.raises(InvalidInputError):
        check_pigeonhole(manual)


# ============================================================================
# AÇGÖZLÜ KURMA VE KÖPRÜLEME
# ============================================================================
def _shortcut_line(make_line_graph):
    return make_line_graph(61, [(i, i + 1) for i in range(60)] + [(13, 47)])


def test_greedy_build_finds_long_bond(make_line_graph):
    g = _shortcut_line(make_line_graph)
    result = greedy_build(g, (10,), (50,), 0.5, 1.0, 7)
    assert result.success
    assert result.levels_completed == 1
    h = result.hierarchy
    assert h.depth == 2
    assert (h.site("01"), h.site("10")) == ((13,), (47,))
    assert validate_hierarchy(h, g)


def test_greedy_build_reports_failed_gap(make_line_graph):
    g = make_line_graph(61, [(i, i + 1) for i in range(60)])
    result = greedy_build(g, (10,), (50,), 0.5, 1.0, 7)
    assert not result.success
    assert (result.failed_level, result.failed_gap) == (1, "")


def test_greedy_build_validation(make_line_graph):
    g = _shortcut_line(make_line_graph)
    with pytest.raises(InvalidInputError):
        greedy_build(g, (10,), (50,), 1.0, 0.5, 7)
    with pytest.raises(InvalidInputError):
        greedy_build(g, (10,), (10,), 0.5, 0.5, 7)


def test_bridge_gaps(make_line_graph):
    g = _shortcut_line(make_line_graph)
    h = greedy_build(g, (10,), (50,), 0.5, 1.0, 7).hierarchy
    bridged = bridge_gaps(g, h, 7)
    assert bridged.success
    assert bridged.per_gap == {"0": 3, "1": 3}
    assert bridged.total_steps == 6
    assert bridged.walk_length == 7
    assert bridged.loop_erased_length == chemical_distance(g, (10,), (50,))


def test_bridge_gaps_fails_with_tiny_window(make_line_graph):
    g = _shortcut_line(make_line_graph)
    h = greedy_build(g, (10,), (50,), 0.5, 1.0, 7).hierarchy
    bridged = bridge_gaps(g, h, 1)
    assert not bridged.success
    assert bridged.failed_gap == "0"


# ============================================================================
# DENETİM
# ============================================================================
def test_audit_on_hand_built_path(make_line_graph):
    audit = audit_hierarchy(_path_graph(make_line_graph), (0,), (7,), 0.1, 4, exponent=1.0)
    assert audit.path_length == 4
    assert audit.span_total == 0 and audit.bond_count == 4
    assert audit.partition_exact
    assert audit.pigeonhole_holds
    assert not audit.regularity_holds
    info = audit.to_dict()
    assert info['regularity_rate'] == pytest.approx(6 / 7)
    assert info['span_target'] == 16


@pytest.mark.parametrize("seed", range(4))
def test_audit_partition_on_samples(seed):
    model = make_model(d=1, s=1.5, beta=1.0, nn_prob=1.0)
    g = sample_graph(model, BoxSpec.cornered((0,), 400), seed)
    audit = audit_hierarchy(g, (100,), (300,), 0.5, 3)
    assert audit.partition_exact
    assert audit.pigeonhole_holds
    assert audit.exponent == pytest.approx(2.40942, abs=1e-5)
    assert audit.span_total <= audit.path_length


def test_audit_requires_connected_pair(make_line_graph):
    with pytest.raises(InvalidInputError):
        audit_hierarchy(make_line_graph(5, []), (0,), (4,), 0.5, 2)
