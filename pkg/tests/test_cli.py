"""
Tests for the command-line surface: reports, formats and exit codes.
"""
import json
import math
import os

import networkx as nx
import pytest

from app import EXIT_INTERNAL, EXIT_OK, EXIT_REGIME, EXIT_USAGE, run
from config import get_config
from ferro2spin.spin_core.generators import system_from_graph
from scripts.regenerate_golden import GOLDEN_RUNS, SLOW_RUNS, check_failures, report_for
from utils.schemas import validate_report


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_thresholds_report(capsys):
    assert run(['thresholds', '--beta', '1', '--gamma', '2']) == EXIT_OK
    report = _json(capsys)
    validate_report(report, 'thresholds')
    assert report['delta_c'] == pytest.approx(5.82843, abs=1e-5)
    assert report['lambda_c'] == pytest.approx(10.6606, abs=1e-4)
    assert report['criticality']['f_prime'] == pytest.approx(1.0)


def test_uniqueness_csv(capsys):
    code = run(['--format', 'csv', 'uniqueness', '--beta', '1', '--gamma', '2', '--lambda', '11.3',
                '--degree', '6', '--degree', '7'])
    assert code == EXIT_OK
    assert capsys.readouterr().out == 'd,verdict\n6,unique\n7,non-unique\n'


def test_composite_fixed_points(capsys):
    assert run(['fixed-points', '--beta', '1', '--gamma', '2', '--lambda', '10.98', '--composite', '5,7']) == EXIT_OK
    assert len(_json(capsys)['points']) == 3


def test_fixed_points_needs_one_form(capsys):
    assert run(['fixed-points', '--beta', '1', '--gamma', '2', '--lambda', '10.98']) == EXIT_USAGE
    assert run(['fixed-points', '--beta', '1', '--gamma', '2', '--lambda', '1', '--composite', '5,x']) == EXIT_USAGE


def test_exact_partition(triangle, write_graph, capsys):
    assert run(['z', 'exact', '--graph', write_graph(triangle)]) == EXIT_OK
    report = _json(capsys)
    assert report['logZ'] == pytest.approx(math.log(28.0), rel=1e-12)
    assert report['free'] == 3


def test_approx_partition(triangle, write_graph, capsys):
    assert run(['z', 'approx', '--graph', write_graph(triangle), '--eps', '0.1']) == EXIT_OK
    report = _json(capsys)
    validate_report(report, 'approx')
    assert abs(report['logZ'] - math.log(28.0)) <= math.log1p(0.1)
    assert report['mode'] == 'bounded'


def test_marginal_with_exact(ising_like_params, write_graph, capsys):
    system = system_from_graph(ising_like_params, nx.cycle_graph(5), 1.5)
    assert run(['marginal', '--graph', write_graph(system), '--vertex', '0', '--eps', '0.01', '--exact']) == EXIT_OK
    report = _json(capsys)
    validate_report(report, 'marginal')
    assert report['gap'] <= 0.01
    assert report['p_lower'] - 1e-12 <= report['p_exact'] <= report['p_upper'] + 1e-12


def test_report_written_to_out(tmp_path, capsys):
    out = tmp_path / 'thresholds.json'
    assert run(['--out', str(out), 'thresholds', '--beta', '2', '--gamma', '2']) == EXIT_OK
    assert capsys.readouterr().out == ''
    assert json.loads(out.read_text())['delta_c'] == pytest.approx(3.0)


def test_five_seven_experiment(capsys):
    assert run(['experiment', 'five-seven', '--ell-max', '10']) == EXIT_OK
    report = _json(capsys)
    validate_report(report, 'five_seven')
    assert report['fixed_point_count'] == 3


def test_landscape_csv_columns(capsys):
    code = run(['--format', 'csv', 'experiment', 'landscape', '--beta', '1', '--gamma', '2',
                '--lambda-min', '11', '--lambda-max', '11.5', '--lambda-steps', '2', '--d-max', '4'])
    assert code == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 'lambda,d,verdict,fixed_points,g0,g1'
    assert len(lines) == 1 + 2 * 3


def test_random_cluster_experiment(capsys):
    assert run(['--seed', '4', 'experiment', 'random-cluster-check', '--beta', '2', '--gamma', '3',
                '--trials', '5', '--n-max', '5']) == EXIT_OK
    assert _json(capsys)['passed']


def test_potential_phi2_base_m(capsys):
    assert run(['potential', '--beta', '1', '--gamma', '2', '--lambda', '10', '--kind', 'phi2']) == EXIT_OK
    report = _json(capsys)
    validate_report(report, 'potential')
    assert report['base_m'] == 68
    assert report['d0'] == 12
    assert report['alpha'] == pytest.approx(0.9685881, abs=1e-7)


def test_potential_phi1(capsys):
    assert run(['potential', '--beta', '1', '--gamma', '2', '--lambda', '1', '--kind', 'phi1',
                '--max-degree', '3']) == EXIT_OK
    report = _json(capsys)
    validate_report(report, 'potential')
    assert report['kind'] == 'good'
    assert report['base_m'] is None


def test_potential_degree_option_only_for_phi1():
    assert run(['potential', '--beta', '1', '--gamma', '2', '--lambda', '1', '--kind', 'phi1']) == EXIT_USAGE
    assert run(['potential', '--beta', '1', '--gamma', '2', '--lambda', '1', '--kind', 'phi2',
                '--max-degree', '3']) == EXIT_USAGE


# ── Exit codes ──────────────────────────────────────────────────────────────


def test_missing_option_is_usage_error():
    assert run(['thresholds', '--beta', '1']) == EXIT_USAGE


def test_regime_violation_exit_code(ising_like_params, write_graph, capsys):
    system = system_from_graph(ising_like_params, nx.star_graph(7), 12.0)
    assert run(['z', 'approx', '--graph', write_graph(system), '--eps', '0.1']) == EXIT_REGIME
    assert 'regime violation' in capsys.readouterr().err
    assert run(['thresholds', '--beta', '3', '--gamma', '2']) == EXIT_REGIME


def test_input_errors(triangle, write_graph, tmp_path, capsys):
    path = write_graph(triangle.with_pins({0: 1}))
    assert run(['marginal', '--graph', path, '--vertex', '0', '--eps', '0.1']) == EXIT_USAGE
    assert run(['marginal', '--graph', path, '--vertex', '1', '--eps', '2']) == EXIT_USAGE
    bad = tmp_path / 'bad.json'
    bad.write_text(json.dumps({'beta': 1.0, 'gamma': 2.0, 'vertices': [{'id': 0}], 'edges': []}))
    assert run(['z', 'exact', '--graph', str(bad)]) == EXIT_USAGE
    assert 'graph document invalid' in capsys.readouterr().err


def test_internal_error_exit_code(monkeypatch, capsys):
    import ferro2spin.thresholds

    def broken(params):
        raise RuntimeError('boom')

    monkeypatch.setattr(ferro2spin.thresholds, 'compute_thresholds', broken)
    assert run(['thresholds', '--beta', '1', '--gamma', '2']) == EXIT_INTERNAL


# ── Golden reports ──────────────────────────────────────────────────────────


def _golden_params():
    return [pytest.param(name, marks=pytest.mark.slow) if name in SLOW_RUNS else name for name in GOLDEN_RUNS]


def test_every_golden_run_has_checks():
    for name in GOLDEN_RUNS:
        path = os.path.join(get_config().GOLDEN_DIR, name)
        assert os.path.exists(path), f"no golden checks at {path}; run scripts/regenerate_golden.py"
        with open(path) as f:
            assert json.load(f), name


@pytest.mark.parametrize('name', _golden_params())
def test_matches_golden_report(name, tmp_path):
    with open(os.path.join(get_config().GOLDEN_DIR, name)) as f:
        checks = json.load(f)
    report = report_for(name, str(tmp_path))
    assert report is not None, f"{name}: command failed"
    assert check_failures(report, checks) == []


def test_golden_checks_report_misses():
    report = {'a': 1.0, 'rows': [{'v': 'x'}], 'n': 3}
    assert check_failures(report, {'a': {'value': 1.0 + 1e-12}, 'rows/0/v': {'equals': 'x'}, 'n': {'min': 3}}) == []
    failures = check_failures(report, {'a': {'value': 1.1, 'rel': 1e-3}, 'n': {'max': 2}, 'b': {'equals': 1}})
    assert len(failures) == 3
    assert 'b: missing' in failures
