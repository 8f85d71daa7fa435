import json
import math

import numpy as np
import pytest

from cliquecol import Colouring, Graph, ParseError
from cliquecol.io import (
    eval_regime,
    format_edge_list,
    format_points,
    parse_colouring,
    parse_edge_list,
    parse_points,
    parse_sweep_config,
)


def test_edge_list_round_trip():
    g = Graph.cycle(5)
    assert parse_edge_list(format_edge_list(g)) == g
    assert parse_edge_list("5 0\n") == Graph.empty(5)


@pytest.mark.parametrize("text", ["", "3\n", "3 2\n0 1\n", "3 1\n0 5\n", "2 1\n0 0\n", "a b\n",
                                  "3 2\n0 1\n1 0\n"])
def test_edge_list_errors(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


def test_points_round_trip():
    pts = np.random.default_rng(0).normal(size=(7, 3))
    ps = parse_points(format_points(pts), radius=0.7)
    assert np.array_equal(ps.points, pts) and ps.radius == 0.7


@pytest.mark.parametrize("text", ["0,1\n", "dim=2\n0,1,2\n", "dim=2\n0,x\n", "dim=0\n"])
def test_points_errors(text):
    with pytest.raises(ParseError):
        parse_points(text)


def test_colouring_json():
    c = Colouring((0, 2, 2))
    assert parse_colouring(json.dumps(c.to_json_dict())) == c
    with pytest.raises(ParseError):
        parse_colouring('{"palette": 3, "colours": [0, 1]}')
    with pytest.raises(ParseError):
        parse_colouring('{"colours": [0, -1]}')
    with pytest.raises(ParseError):
        parse_colouring("[]")


def test_regime_expressions():
    assert eval_regime("c*n^{-1/4}", 1e4, 2.0) == pytest.approx(0.2)
    assert eval_regime("n^{-0.6}", 1e5) == pytest.approx(1e-3)
    assert eval_regime("0.4*sqrt(log(n))", 1e4) == pytest.approx(0.4 * math.sqrt(math.log(1e4)))
    assert eval_regime("exp(-1)*pi", 1) == pytest.approx(math.pi / math.e)
    for bad in ("__import__('os')", "n.real", "x+1", "-n", "log(0)", "n^", "[1]"):
        with pytest.raises(ParseError):
            eval_regime(bad, 100)


def test_sweep_config_blocks_and_json():
    text = "# comment\nn=10000\nc=2\nr=c*n^{-1/2}\ntrials=7\nseed=3\n\nn=50\nr=0.25\nmodel=poisson\n"
    a, b = parse_sweep_config(text)
    assert (a.n, a.trials, a.seed) == (10000, 7, 3) and a.r == pytest.approx(0.02)
    assert b.model == "poisson" and b.r == 0.25 and b.trials == 100
    (j,) = parse_sweep_config('{"n": 100, "r": "n^{-1/2}", "trials": 5, "budget": 1000}')
    assert j.r == pytest.approx(0.1) and j.budget.max_cliques == 1000


@pytest.mark.parametrize("text", ["n=10\nr=0.5\ntrials=0\n", "n=10\n", "n=10\nr=zz\n",
                                  "n=10\nr=0.5\nmodel=torus\n", "n=10\nr=0.5\nfoo=1\n",
                                  "n=10\nr\n", "{bad json", "", "n=10\nr=-1\n"])
def test_sweep_config_errors(text):
    with pytest.raises(ParseError):
        parse_sweep_config(text)
