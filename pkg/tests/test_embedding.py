import math

import numpy as np
import pytest
from hypothesis import given, settings

from cliquecol import Graph, MarginCollapse, embed_graph
from conftest import graphs


@pytest.mark.parametrize("g", [Graph.complete(3), Graph.empty(3), Graph.cycle(5)])
def test_examples_rebuild_exactly(g):
    emb = embed_graph(g)
    assert emb.rebuild() == g
    assert emb.margin > 1e-9


def test_complete_and_empty_distances():
    d = lambda e: np.linalg.norm(e.points[:, None] - e.points[None], axis=2)[np.triu_indices(3, 1)]  # noqa: E731
    assert (d(embed_graph(Graph.complete(3))) < math.sqrt(2)).all()
    assert (d(embed_graph(Graph.empty(3))) > math.sqrt(2)).all()


@settings(max_examples=100)
@given(graphs(min_n=2, max_n=8))
def test_round_trip_and_hyperplane(g):
    emb = embed_graph(g)
    assert emb.rebuild() == g
    assert emb.margin > 1e-9
    assert np.allclose(emb.points.sum(axis=1), 1.0, atol=1e-12)
    # each point stays close to its unit vector
    assert np.abs(emb.points - np.eye(g.n)).max() < 0.1


@settings(max_examples=30)
@given(graphs(min_n=2, max_n=8))
def test_reduced_coordinates(g):
    emb = embed_graph(g, reduce=True)
    assert emb.points.shape == (g.n, g.n - 1)
    assert emb.rebuild() == g


def test_errors():
    with pytest.raises(ValueError):
        embed_graph(Graph.empty(1))
    with pytest.raises(MarginCollapse):
        embed_graph(Graph.cycle(5), target_margin=1.0)
