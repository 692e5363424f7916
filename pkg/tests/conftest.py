# -*- coding: utf-8 -*-
"""Ortak test donanımları: düz depo kökü sys.path'e eklenir."""

import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

import pytest

from lattice import BoxSpec
from bondspace import GraphSample, make_model


@pytest.fixture
def reference_model():
    """Süperkritik referans yapılandırması: d=1, s=1.5, β=1, nn_prob=0.95"""
    return make_model(d=1, s=1.5, beta=1.0, nn_prob=0.95)


@pytest.fixture
def empty_model():
    return make_model(d=1, s=1.5, beta=0.0, nn_prob=0.0)


@pytest.fixture
def full_nn_model():
    return make_model(d=1, s=1.5, beta=0.0, nn_prob=1.0)


def line_graph(side, pairs, model=None):
    """[0, side) üzerinde elle kurulmuş tek boyutlu graf."""
    return GraphSample.from_edges(BoxSpec.cornered((0,), side), [((a,), (b,)) for a, b in pairs],
                                  model=model, points=True)


@pytest.fixture
def make_line_graph():
    return line_graph
