"""
Tests for SAW-tree marginal bounds and the partition-function approximation.
"""
import math

import networkx as nx
import numpy as np
import pytest

from ferro2spin.errors import (
    DegreeTooLarge, ParametersOutOfRange, RegimeViolation, SpinSystemError, VertexPinned,
)
from ferro2spin.fptas import (
    BOUNDED, UNIVERSAL, ApproxRequest, approx_marginal, approx_partition, approx_partition_report,
    bound_marginal_at_depth, gap_profile, select_depth, select_potential,
)
from ferro2spin.potentials import make_phi1
from ferro2spin.spin_core import SpinParams, SpinSystem, exact_marginal, exact_partition
from ferro2spin.spin_core.generators import random_graph, random_regular_graph, system_from_graph


def _within(log_z, exact, eps):
    return abs(log_z - exact) <= math.log1p(eps)


# ── Marginal bounds ─────────────────────────────────────────────────────────


def test_complete_saw_tree_gives_exact_marginal(ising_like_params):
    system = system_from_graph(ising_like_params, nx.path_graph(5), 1.0)
    _, potential = select_potential(system)
    bounds = bound_marginal_at_depth(system, 0, potential, 10)
    assert bounds.complete
    assert bounds.gap == 0.0
    assert bounds.p_lower == pytest.approx(exact_marginal(system, 0), rel=1e-12)


def test_truncated_bounds_contain_marginal(symmetric_params):
    system = system_from_graph(symmetric_params, nx.cycle_graph(4), 1.3)
    exact = exact_marginal(system, 0)
    _, potential = select_potential(system)
    for depth in range(4):
        bounds = bound_marginal_at_depth(system, 0, potential, depth)
        assert bounds.p_lower - 1e-12 <= exact <= bounds.p_upper + 1e-12


def test_approx_marginal_meets_gap(ising_like_params):
    system = system_from_graph(ising_like_params, nx.petersen_graph(), 1.0)
    mode, potential = select_potential(system)
    assert mode == BOUNDED
    bounds = approx_marginal(system, 0, 0.01, potential)
    assert bounds.gap <= 0.01
    exact = exact_marginal(system, 0)
    assert bounds.p_lower - 1e-12 <= exact <= bounds.p_upper + 1e-12


def test_approx_marginal_rejects_pinned_and_missing(triangle):
    _, potential = select_potential(triangle)
    with pytest.raises(VertexPinned):
        approx_marginal(triangle.with_pins({1: 0}), 1, 0.1, potential)
    with pytest.raises(SpinSystemError, match='does not exist'):
        approx_marginal(triangle, 7, 0.1, potential)


def test_gap_profile_shrinks(ising_like_params):
    system = system_from_graph(ising_like_params, nx.petersen_graph(), 1.0)
    _, potential = select_potential(system)
    rows = gap_profile(system, 0, potential, [1, 3, 5])
    assert [r['depth'] for r in rows] == [1, 3, 5]
    gaps = [r['gap'] for r in rows]
    assert gaps[0] > gaps[1] > gaps[2]


# ── Depth selection ─────────────────────────────────────────────────────────


def test_select_depth(ising_like_params):
    potential = make_phi1(ising_like_params, 3, 1.0)
    depths = [select_depth(potential, 1.0, eps, 3) for eps in (1e-1, 1e-3, 1e-6)]
    assert depths == sorted(depths)
    assert depths[-1] > depths[0]
    assert select_depth(potential, 1.0, 1e6, 3) == 0
    with pytest.raises(SpinSystemError, match='positive'):
        select_depth(potential, 1.0, 0.0, 3)


@pytest.mark.parametrize('eps', [1e-2, 1e-3, 1e-5])
def test_halving_eps_adds_log_two_levels(ising_like_params, eps):
    potential = make_phi1(ising_like_params, 3, 1.0)
    per_halving = math.log(2.0) / -math.log(potential.alpha)
    base = select_depth(potential, 1.0, eps, 3)
    assert base > 0
    assert math.floor(per_halving) <= select_depth(potential, 1.0, eps / 2, 3) - base <= math.ceil(per_halving)
    assert abs(select_depth(potential, 1.0, eps / 2 ** 10, 3) - base - 10 * per_halving) <= 1


# ── Requests and modes ──────────────────────────────────────────────────────


@pytest.mark.parametrize('eps, mode', [(0.0, 'auto'), (1.0, 'auto'), (0.1, 'fast')])
def test_request_validation(triangle, eps, mode):
    with pytest.raises(SpinSystemError):
        ApproxRequest(triangle, eps, mode)


def test_auto_mode_falls_back_to_universal(ising_like_params):
    system = system_from_graph(ising_like_params, nx.star_graph(7), 1.0)
    with pytest.raises(DegreeTooLarge):
        select_potential(system, BOUNDED)
    mode, potential = select_potential(system)
    assert mode == UNIVERSAL
    assert potential.is_universal


def test_auto_mode_regime_violation(ising_like_params):
    system = system_from_graph(ising_like_params, nx.star_graph(7), 12.0)
    with pytest.raises(RegimeViolation):
        select_potential(system)


def test_universal_mode_needs_beta_at_most_one(symmetric_params):
    system = system_from_graph(symmetric_params, nx.path_graph(3), 1.0)
    with pytest.raises(ParametersOutOfRange):
        select_potential(system, UNIVERSAL)


def test_potential_override(ising_like_params):
    potential = make_phi1(ising_like_params, 3, 1.0)
    small = system_from_graph(ising_like_params, nx.path_graph(4), 1.0)
    assert select_potential(small, potential=potential) == (BOUNDED, potential)
    with pytest.raises(RegimeViolation, match='field bound'):
        select_potential(system_from_graph(ising_like_params, nx.path_graph(4), 2.0), potential=potential)
    with pytest.raises(DegreeTooLarge):
        select_potential(system_from_graph(ising_like_params, nx.star_graph(5), 1.0), potential=potential)


# ── Partition function ──────────────────────────────────────────────────────


def test_single_vertex(symmetric_params):
    system = SpinSystem(symmetric_params, ((0, 2.0),))
    assert approx_partition(ApproxRequest(system, 0.1)) == pytest.approx(math.log(3.0), rel=1e-12)


def test_triangle(triangle):
    result = approx_partition_report(ApproxRequest(triangle, 0.1))
    assert _within(result.log_z, math.log(28.0), 0.1)
    assert result.mode == BOUNDED
    assert len(result.depths) == 3
    assert result.potential['name'] == 'phi1'


def test_pinned_vertices_are_not_revisited(triangle):
    pinned = triangle.with_pins({0: 0})
    result = approx_partition_report(ApproxRequest(pinned, 0.1))
    assert len(result.depths) == 2
    assert _within(result.log_z, math.log(14.0), 0.1)


def test_universal_mode_on_high_degree(ising_like_params):
    system = system_from_graph(ising_like_params, nx.star_graph(7), 1.0)
    result = approx_partition_report(ApproxRequest(system, 0.2))
    assert result.mode == UNIVERSAL
    assert _within(result.log_z, exact_partition(system), 0.2)


@pytest.mark.parametrize('seed', range(4))
@pytest.mark.parametrize('beta, gamma', [(1.0, 2.0), (0.5, 3.0)])
def test_random_graphs_within_epsilon(beta, gamma, seed):
    rng = np.random.default_rng(seed)
    params = SpinParams(beta, gamma)
    system = system_from_graph(params, random_graph(7, 0.4, rng, max_degree=3), rng.uniform(0.5, 2.0, size=7))
    eps = 0.1
    assert _within(approx_partition(ApproxRequest(system, eps)), exact_partition(system), eps)


def test_approximation_is_deterministic(ising_like_params):
    rng = np.random.default_rng(7)
    graph = random_graph(8, 0.4, rng, max_degree=3)
    system = system_from_graph(ising_like_params, graph, rng.uniform(0.5, 2.0, size=8))
    first = approx_partition_report(ApproxRequest(system, 0.05))
    second = approx_partition_report(ApproxRequest(system, 0.05))
    assert first.log_z.hex() == second.log_z.hex()
    assert first.depths == second.depths
    assert first.nodes_expanded == second.nodes_expanded


def test_four_cycle_at_tight_epsilon():
    system = system_from_graph(SpinParams(1.1, 1.1), nx.cycle_graph(4), 1.0)
    eps = 1e-4
    result = approx_partition_report(ApproxRequest(system, eps))
    assert result.mode == BOUNDED
    assert _within(result.log_z, exact_partition(system), eps)


@pytest.mark.slow
def test_random_cubic_graph_in_universal_mode(ising_like_params):
    rng = np.random.default_rng(11)
    system = system_from_graph(ising_like_params, random_regular_graph(3, 12, rng), 5.0)
    eps = 0.1
    result = approx_partition_report(ApproxRequest(system, eps, UNIVERSAL))
    assert result.mode == UNIVERSAL
    assert result.potential['name'] == 'phi2'
    assert _within(result.log_z, exact_partition(system), eps)


@pytest.mark.slow
@pytest.mark.parametrize('seed', range(3))
def test_fourteen_vertices_with_beta_below_one(seed):
    rng = np.random.default_rng(seed)
    system = system_from_graph(SpinParams(0.8, 2.0), random_graph(14, 0.3, rng, max_degree=3),
                               rng.uniform(0.5, 2.0, size=14))
    eps = 0.05
    assert _within(approx_partition(ApproxRequest(system, eps)), exact_partition(system), eps)
