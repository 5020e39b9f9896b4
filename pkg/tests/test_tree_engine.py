"""
Tests for rooted trees, the ratio recursion, pin absorption, interval bounds and depth measures.
"""
import math

import networkx as nx
import numpy as np
import pytest

from ferro2spin.errors import BudgetExceeded, SpinSystemError
from ferro2spin.spin_core import SpinParams, exact_ratio
from ferro2spin.spin_core.generators import system_from_graph
from ferro2spin.thresholds import lambda_c
from ferro2spin.tree_engine import (
    DepthHorizon, FullHorizon, MDepthHorizon, RootedTree, absorb_pins, bounds_recursion, ceil_log, eval_F,
    eval_f, eval_f_prime, eval_f_second, exact_tree_marginal, level_symmetric_ratio, m_based_depth,
    ratio_to_probability,
)
from ferro2spin.tree_engine.depth import ball_sizes
from ferro2spin.tree_engine.generators import random_tree_pair
from ferro2spin.tree_engine.io import (
    build_level_tree, dump_tree, load_tree, parse_tree_spec, tree_from_nested, tree_from_spec, tree_to_nested,
)
from ferro2spin.tree_engine.recursion import node_ratios


# ── Recursion ───────────────────────────────────────────────────────────────


def test_leaf_ratio_is_its_field(ising_like_params):
    assert eval_F(ising_like_params, 1.7, []) == 1.7


def test_pinned_children_limits():
    params = SpinParams(0.5, 3.0)
    assert eval_F(params, 2.0, [math.inf]) == pytest.approx(2.0 * 0.5)
    assert eval_F(params, 2.0, [0.0]) == pytest.approx(2.0 / 3.0)


def test_ratio_to_probability():
    assert ratio_to_probability(0.0) == 0.0
    assert ratio_to_probability(math.inf) == 1.0
    assert ratio_to_probability(3.0) == pytest.approx(0.75)


def test_star_matches_oracle(ising_like_params):
    lam = 1.5
    tree = tree_from_spec('star:4', lam)
    system = system_from_graph(ising_like_params, nx.star_graph(4), lam)
    expected = lam * ((lam + 1) / (lam + 2)) ** 4
    assert exact_tree_marginal(tree, ising_like_params) == pytest.approx(expected, rel=1e-14)
    assert exact_ratio(system, 0) == pytest.approx(expected, rel=1e-12)


def test_level_symmetric_ratio_matches_explicit_tree(symmetric_params):
    degrees = [2, 3, 2]
    tree = build_level_tree(degrees, 0.8)
    assert len(tree) == 1 + 2 + 6 + 12
    assert level_symmetric_ratio(symmetric_params, 0.8, degrees) == pytest.approx(
        exact_tree_marginal(tree, symmetric_params), rel=1e-13)


@pytest.mark.parametrize('d, x', [(3, 0.4), (5.5, 2.0), (7, 11.0)])
def test_symmetric_map_derivatives(ising_like_params, d, x):
    h = 1e-6 * x
    lam = 10.0
    numeric = (eval_f(ising_like_params, lam, d, x + h) - eval_f(ising_like_params, lam, d, x - h)) / (2 * h)
    assert eval_f_prime(ising_like_params, lam, d, x) == pytest.approx(numeric, rel=1e-6)
    numeric2 = (eval_f_prime(ising_like_params, lam, d, x + h)
                - eval_f_prime(ising_like_params, lam, d, x - h)) / (2 * h)
    assert eval_f_second(ising_like_params, lam, d, x) == pytest.approx(numeric2, rel=1e-4, abs=1e-9)


def _tree_with_pins():
    tree = RootedTree.single(1.2)
    tree.add_node(1, 1.0, parent=0, pin=0)
    tree.add_node(2, 1.0, parent=0, pin=1)
    child = tree.add_node(3, 0.7, parent=0)
    tree.add_node(4, 1.0, parent=child, pin=1)
    tree.add_node(5, 2.5, parent=child)
    return tree


def test_absorb_pins_preserves_root_ratio():
    params = SpinParams(0.5, 3.0)
    tree = _tree_with_pins()
    absorbed = absorb_pins(tree, params)
    assert len(absorbed) == 3
    assert all(node.pin is None for node in absorbed.nodes)
    assert absorbed.root.lam == pytest.approx(1.2 * 0.5 / 3.0)
    assert exact_tree_marginal(absorbed, params) == pytest.approx(exact_tree_marginal(tree, params), rel=1e-14)


def test_absorb_pins_keeps_pinned_root(symmetric_params):
    tree = RootedTree.single(1.0, pin=1)
    assert exact_tree_marginal(absorb_pins(tree, symmetric_params), symmetric_params) == 0.0


def _random_pinned_tree(rng, lam_max, size=40, pin_rate=0.4):
    tree = RootedTree.single(rng.uniform(0.1, lam_max))
    free = [0]
    for i in range(1, size):
        parent = free[int(rng.integers(0, len(free)))]
        pin = int(rng.integers(0, 2)) if rng.random() < pin_rate else None
        idx = tree.add_node(i, rng.uniform(0.1, lam_max), parent=parent, pin=pin)
        if pin is None:
            free.append(idx)
    return tree


@pytest.mark.parametrize('seed', range(6))
@pytest.mark.parametrize('beta, gamma', [(0.7, 2.5), (1.0, 2.0), (0.5, 3.0)])
def test_absorb_pins_keeps_fields_below_lambda_c(beta, gamma, seed):
    params = SpinParams(beta, gamma)
    lc = lambda_c(params)
    tree = _random_pinned_tree(np.random.default_rng(seed), lc)
    absorbed = absorb_pins(tree, params)
    assert all(node.pin is None for node in absorbed.nodes)
    fields = {node.vertex: node.lam for node in tree.nodes}
    for node in absorbed.nodes:
        assert 0 < node.lam <= fields[node.vertex] < lc
    assert exact_tree_marginal(absorbed, params) == pytest.approx(exact_tree_marginal(tree, params), rel=1e-12)


@pytest.mark.parametrize('seed', range(6))
@pytest.mark.parametrize('beta, gamma', [(0.7, 2.5), (1.0, 2.0), (0.5, 3.0)])
def test_unpinned_ratios_lie_below_their_fields(beta, gamma, seed):
    params = SpinParams(beta, gamma)
    tree = _random_pinned_tree(np.random.default_rng(seed), 20.0, pin_rate=0.0)
    for node, r in zip(tree.nodes, node_ratios(tree, params)):
        assert 0 < r <= node.lam
        if not node.children:
            assert r == node.lam


def test_exact_recursion_rejects_truncated(symmetric_params):
    tree = RootedTree.single(1.0)
    tree.add_node(1, 1.0, parent=0, truncated=True)
    with pytest.raises(ValueError, match='truncated'):
        exact_tree_marginal(tree, symmetric_params)


# ── Bounds ──────────────────────────────────────────────────────────────────


def test_full_bounds_are_exact(ising_like_params):
    tree = tree_from_spec('regular:3:depth=4', 2.0)
    bounds = bounds_recursion(tree, ising_like_params, FullHorizon())
    assert bounds.gap == 0.0
    assert bounds.lower == exact_tree_marginal(tree, ising_like_params)


def test_truncated_bounds_nest_and_contain(ising_like_params):
    tree = tree_from_spec('alt:2,3:depth=6', 1.3)
    exact = exact_tree_marginal(tree, ising_like_params)
    previous = None
    for t in range(7):
        bounds = bounds_recursion(tree, ising_like_params, DepthHorizon(t))
        assert bounds.contains(exact, rel_tol=1e-12)
        if previous is not None:
            assert previous.contains(bounds.lower, rel_tol=1e-12)
            assert previous.contains(bounds.upper, rel_tol=1e-12)
            assert bounds.gap <= previous.gap * (1 + 1e-12)
        previous = bounds
    assert previous.gap == 0.0


def test_depth_zero_bounds_use_extreme_children(ising_like_params):
    tree = tree_from_spec('star:3', 2.0)
    bounds = bounds_recursion(tree, ising_like_params, DepthHorizon(0))
    assert bounds.lower == pytest.approx(2.0 / 2.0 ** 3)
    assert bounds.upper == pytest.approx(2.0)


# ── Depth measures ──────────────────────────────────────────────────────────


@pytest.mark.parametrize('n, m, expected', [(1, 2, 0), (2, 2, 1), (9, 3, 2), (10, 3, 3), (101, 101, 1)])
def test_ceil_log(n, m, expected):
    assert ceil_log(n, m) == expected


def test_ceil_log_rejects_small_base():
    with pytest.raises(ValueError):
        ceil_log(4, 1)


def test_m_based_depth_ball_sizes():
    tree = tree_from_spec('regular:3:depth=5', 1.0)
    depths = m_based_depth(tree, 4)
    # three children cost ceil(log_4 4) = 1 level each step
    assert max(depths) == 5
    sizes = ball_sizes(depths)
    assert all(size <= 4 ** level for level, size in sizes.items())

    wide = tree_from_spec('star:20', 1.0)
    assert m_based_depth(wide, 4)[1] == ceil_log(21, 4) == 3


def test_m_depth_horizon_admits_one_extra_level():
    tree = tree_from_spec('path:depth=6', 1.0)
    m_based_depth(tree, 2)
    horizon = MDepthHorizon(2, 3)
    admitted = [i for i in range(len(tree)) if horizon.admits(tree, i)]
    assert admitted == [0, 1, 2, 3, 4]


# ── Parsing and generators ──────────────────────────────────────────────────


@pytest.mark.parametrize('spec, degrees', [
    ('regular:3:depth=2', [3, 3]),
    ('alt:5,7:depth=4', [5, 7, 5, 7]),
    ('path:depth=3', [1, 1, 1]),
    ('star:4', [4]),
])
def test_parse_tree_spec(spec, degrees):
    assert parse_tree_spec(spec) == degrees


def test_parse_tree_spec_rejects_garbage():
    with pytest.raises(SpinSystemError, match='unrecognized'):
        parse_tree_spec('binary:depth=3')


def test_level_tree_budget():
    with pytest.raises(BudgetExceeded):
        tree_from_spec('regular:10:depth=8', 1.0)


def test_nested_document_round_trip(tmp_path):
    tree = _tree_with_pins()
    nested = tree_to_nested(tree)
    rebuilt = tree_from_nested(nested)
    params = SpinParams(0.5, 3.0)
    assert len(rebuilt) == len(tree)
    assert exact_tree_marginal(rebuilt, params) == exact_tree_marginal(tree, params)

    path = tmp_path / 'tree.json'
    dump_tree(params, tree, path)
    loaded_params, loaded = load_tree(path)
    assert loaded_params == params
    assert exact_tree_marginal(loaded, params) == exact_tree_marginal(tree, params)


def test_nested_document_of_a_deep_tree():
    tree = tree_from_spec('path:depth=1500', 1.3)
    nested = tree_to_nested(tree)
    assert nested['children'][0]['vertex'] == 1
    rebuilt = tree_from_nested(nested)
    assert len(rebuilt) == 1501
    assert rebuilt.height == 1500
    assert [n.parent for n in rebuilt.nodes] == [n.parent for n in tree.nodes]


def test_tree_pair_shares_prefix():
    rng = np.random.default_rng(3)
    first, second = random_tree_pair(rng, ell=3, lam=1.0, d_max=4, suffix_depth=2)
    for a, b in zip(first.nodes, second.nodes):
        if a.depth > 3 or b.depth > 3:
            break
        assert (a.vertex, a.lam, a.parent) == (b.vertex, b.lam, b.parent)
    assert first.height >= 3 and second.height >= 3


def test_extreme_tree_pair():
    rng = np.random.default_rng(5)
    first, second = random_tree_pair(rng, ell=2, lam=1.0, d_max=3, extreme=True)
    assert second.height == 2
    assert first.height == 3
    assert len(first) - len(second) == 3 * sum(1 for n in second.nodes if n.depth == 2)
