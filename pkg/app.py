"""
ferro2spin - Command Line Application
"""
import logging
import sys

import click

from config import get_config
from ferro2spin.errors import (
    BudgetExceeded, InstanceTooLarge, RegimeViolation, SpinSystemError, VertexPinned,
)
from utils.output import dumps_csv, dumps_json, rows_of

logger = logging.getLogger(__name__)

# exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REGIME = 2
EXIT_INTERNAL = 3

INPUT_ERRORS = (SpinSystemError, InstanceTooLarge, BudgetExceeded, VertexPinned)


def emit(ctx: click.Context, report, rows=None, columns=None):
    """Write a report as JSON, or its table as CSV, to --out or standard output."""
    opts = ctx.find_root().obj
    if opts['format'] == 'csv':
        text = dumps_csv(rows if rows is not None else rows_of(report), columns)
    else:
        text = dumps_json(report)
    if opts['out']:
        with open(opts['out'], 'w') as f:
            f.write(text)
        logger.info(f"Report written to {opts['out']}")
    else:
        click.echo(text, nl=False)


def _params(beta, gamma):
    from ferro2spin.spin_core.system import SpinParams
    return SpinParams(beta, gamma)


beta_option = click.option('--beta', type=float, required=True, help='Weight of a (0,0) edge.')
gamma_option = click.option('--gamma', type=float, required=True, help='Weight of a (1,1) edge.')
lambda_option = click.option('--lambda', 'lam', type=float, required=True, help='External field on spin 0.')
graph_option = click.option('--graph', 'graph_path', type=click.Path(exists=True, dir_okay=False), required=True,
                            help='Graph document (schemas/graph.schema.json).')


@click.group()
@click.option('--format', 'fmt', type=click.Choice(['json', 'csv']), default='json', show_default=True)
@click.option('--seed', type=int, default=None, help='Seed for every generator (default from config).')
@click.option('--out', type=click.Path(dir_okay=False), default=None, help='Write the report here.')
@click.option('--jobs', type=int, default=None, help='Worker cap for batch experiments.')
@click.pass_context
def cli(ctx, fmt, seed, out, jobs):
    """Correlation-decay approximation for ferromagnetic 2-spin systems."""
    settings = get_config()
    ctx.obj = {
        'format': fmt,
        'seed': settings.DEFAULT_SEED if seed is None else seed,
        'out': out,
        'jobs': settings.JOBS if jobs is None else max(1, jobs),
    }


@cli.command()
@beta_option
@gamma_option
@click.pass_context
def thresholds(ctx, beta, gamma):
    """Delta_c, lambda_c and its integral variants."""
    from ferro2spin.thresholds import compute_thresholds, criticality_check
    params = _params(beta, gamma)
    report = compute_thresholds(params).to_dict()
    report['criticality'] = criticality_check(params)
    emit(ctx, report)


@cli.command()
@beta_option
@gamma_option
@lambda_option
@click.option('--degree', 'degrees', type=int, multiple=True, help='Tree degree d (repeatable); default 2..12.')
@click.pass_context
def uniqueness(ctx, beta, gamma, lam, degrees):
    """Uniqueness verdict of the infinite d-regular tree per degree."""
    from ferro2spin.thresholds import uniqueness_at_degree
    params = _params(beta, gamma)
    degrees = list(degrees) or list(range(2, 13))
    rows = [{'d': d, 'verdict': uniqueness_at_degree(params, lam, d)} for d in degrees]
    emit(ctx, {'beta': beta, 'gamma': gamma, 'lambda': lam, 'rows': rows}, rows)


@cli.command('fixed-points')
@beta_option
@gamma_option
@lambda_option
@click.option('--degree', type=float, default=None, help='Recursion degree d of f_d.')
@click.option('--composite', default=None, help='Comma-separated degrees of a composed map, e.g. 5,7.')
@click.pass_context
def fixed_points_command(ctx, beta, gamma, lam, degree, composite):
    """Fixed points of f_d, or of a composition f_a o f_b o ..."""
    from ferro2spin.thresholds import composite_fixed_points, fixed_points
    params = _params(beta, gamma)
    if (degree is None) == (composite is None):
        raise click.UsageError('give exactly one of --degree and --composite')
    if composite is not None:
        try:
            degrees = [int(d) for d in composite.split(',')]
        except ValueError:
            raise click.UsageError(f"--composite must be comma-separated integers, got '{composite}'")
        points = composite_fixed_points(params, lam, degrees)
        report = {'beta': beta, 'gamma': gamma, 'lambda': lam, 'degrees': degrees, 'points': points}
    else:
        report = {'beta': beta, 'gamma': gamma, 'lambda': lam, 'degree': degree,
                  **fixed_points(params, lam, degree).to_dict()}
    emit(ctx, report, [{'x': x} for x in report['points']])


@cli.command()
@beta_option
@gamma_option
@lambda_option
@click.option('--kind', type=click.Choice(['phi1', 'phi2', 'phi3']), required=True)
@click.option('--max-degree', type=int, default=None, help='Degree bound D (phi1 only).')
@click.pass_context
def potential(ctx, beta, gamma, lam, kind, max_degree):
    """Constants of one potential; phi2 adds its base M, phi3 its certificate."""
    from ferro2spin.potentials import make_phi1, make_phi2, make_phi3, make_phi3_certificate
    params = _params(beta, gamma)
    if (kind == 'phi1') != (max_degree is not None):
        raise click.UsageError('--max-degree is required for phi1 and only accepted there')
    if kind == 'phi1':
        report = make_phi1(params, max_degree, lam).summary()
    elif kind == 'phi2':
        report = make_phi2(params, lam).summary()
    else:
        certificate = make_phi3_certificate(params, lam)
        report = make_phi3(params, lam, certificate=certificate).summary()
        report['certificate'] = certificate.to_dict()
    report.update({'beta': beta, 'gamma': gamma})
    emit(ctx, report)


@cli.group()
def z():
    """Partition function, exact or approximate."""


@z.command('exact')
@graph_option
@click.pass_context
def z_exact(ctx, graph_path):
    from ferro2spin.spin_core import exact_partition, load_system
    system = load_system(graph_path)
    emit(ctx, {'logZ': exact_partition(system), 'n': system.n, 'free': len(system.free_vertices)})


@z.command('approx')
@graph_option
@click.option('--eps', type=float, required=True, help='Relative error target in (0, 1).')
@click.option('--mode', type=click.Choice(['auto', 'bounded', 'universal']), default='auto', show_default=True)
@click.pass_context
def z_approx(ctx, graph_path, eps, mode):
    from ferro2spin.fptas import ApproxRequest, approx_partition_report
    from ferro2spin.spin_core import load_system
    result = approx_partition_report(ApproxRequest(load_system(graph_path), eps, mode))
    emit(ctx, result.to_dict())


@cli.command()
@graph_option
@click.option('--vertex', type=int, required=True)
@click.option('--eps', type=float, required=True, help='Additive error on the marginal.')
@click.option('--mode', type=click.Choice(['auto', 'bounded', 'universal']), default='auto', show_default=True)
@click.option('--exact/--no-exact', default=False, help='Also report the oracle marginal.')
@click.pass_context
def marginal(ctx, graph_path, vertex, eps, mode, exact):
    """Bounds on P(sigma_v = 0) from the truncated SAW tree."""
    from ferro2spin.fptas import approx_marginal, select_potential
    from ferro2spin.spin_core import exact_marginal, load_system
    system = load_system(graph_path)
    if not 0 < eps < 1:
        raise click.UsageError(f"--eps must lie in (0, 1), got {eps}")
    chosen, potential = select_potential(system, mode)
    report = {'vertex': vertex, 'mode': chosen, **approx_marginal(system, vertex, eps, potential).to_dict()}
    if exact:
        report['p_exact'] = exact_marginal(system, vertex)
    emit(ctx, report)


@cli.group()
def experiment():
    """Reproducible experiments."""


@experiment.command()
@beta_option
@gamma_option
@lambda_option
@click.option('--ell-min', type=int, default=1, show_default=True)
@click.option('--ell-max', type=int, default=14, show_default=True)
@click.option('--trials', type=int, default=32, show_default=True)
@click.option('--d-max', type=int, default=8, show_default=True)
@click.pass_context
def mixing(ctx, beta, gamma, lam, ell_min, ell_max, trials, d_max):
    """Marginal discrepancy of tree pairs sharing their first ell levels."""
    from ferro2spin.experiments import mixing_decay
    opts = ctx.find_root().obj
    run = mixing_decay(_params(beta, gamma), lam, range(ell_min, ell_max + 1), trials=trials, d_max=d_max,
                       seed=opts['seed'], jobs=opts['jobs'])
    emit(ctx, run.to_dict(), run.rows())


@experiment.command('five-seven')
@click.option('--lambda', 'lam', type=float, default=10.98, show_default=True)
@click.option('--ell-max', type=int, default=30, show_default=True)
@click.pass_context
def five_seven(ctx, lam, ell_max):
    """Alternating 5-7 tree: two truncations, two limits."""
    from ferro2spin.experiments import five_seven_demo
    report = five_seven_demo(lam, ell_max)
    rows = [{'ell': ell, 't': a, 't_prime': b}
            for ell, a, b in zip(report['ell'], report['sequence_t'], report['sequence_t_prime'])]
    emit(ctx, report, rows)


@experiment.command('beyond-lambda-c')
@click.option('--graphs', type=int, default=3, show_default=True)
@click.option('--n', type=int, default=10, show_default=True)
@click.option('--eps', type=float, default=0.1, show_default=True)
@click.pass_context
def beyond_lambda_c(ctx, graphs, n, eps):
    """Phi_3 certificate and universal approximation at beta=0.6, gamma=2, lambda=1002762."""
    from ferro2spin.experiments import beyond_lambda_c_demo
    report = beyond_lambda_c_demo(graphs=graphs, n=n, epsilon=eps, seed=ctx.find_root().obj['seed'])
    emit(ctx, report, report['instances'])


@experiment.command()
@beta_option
@gamma_option
@click.option('--lambda-min', type=float, required=True)
@click.option('--lambda-max', type=float, required=True)
@click.option('--lambda-steps', type=int, default=41, show_default=True)
@click.option('--d-max', type=int, default=12, show_default=True)
@click.pass_context
def landscape(ctx, beta, gamma, lambda_min, lambda_max, lambda_steps, d_max):
    """Uniqueness verdicts and fixed-point counts over a (lambda, d) grid."""
    import numpy as np
    from ferro2spin.experiments import LANDSCAPE_COLUMNS, threshold_landscape
    if lambda_steps < 1 or not 0 < lambda_min <= lambda_max:
        raise click.UsageError('need 0 < lambda-min <= lambda-max and lambda-steps >= 1')
    lambdas = np.linspace(lambda_min, lambda_max, lambda_steps)
    rows = threshold_landscape(_params(beta, gamma), lambdas, range(2, d_max + 1),
                               jobs=ctx.find_root().obj['jobs'])
    emit(ctx, {'beta': beta, 'gamma': gamma, 'rows': rows}, rows, LANDSCAPE_COLUMNS)


@experiment.command('marginal-bound-sweep')
@beta_option
@gamma_option
@lambda_option
@click.option('--trials', type=int, default=500, show_default=True)
@click.option('--size-bound', type=int, default=10, show_default=True)
@click.pass_context
def marginal_bound_sweep(ctx, beta, gamma, lam, trials, size_bound):
    """p_v <= lambda/(lambda+1) over random graphs with 1 <= beta <= gamma."""
    from ferro2spin.spin_core import marginal_bound_sweep as sweep
    opts = ctx.find_root().obj
    emit(ctx, sweep(_params(beta, gamma), lam, trials, size_bound, seed=opts['seed'], jobs=opts['jobs']))


@experiment.command('random-cluster-check')
@beta_option
@gamma_option
@click.option('--trials', type=int, default=200, show_default=True)
@click.option('--n-max', type=int, default=8, show_default=True)
@click.pass_context
def random_cluster_check(ctx, beta, gamma, trials, n_max):
    """Z(G) = Z(G-) + (gamma - 1) Z(G+) on random edges."""
    from ferro2spin.spin_core import random_cluster_check as check
    emit(ctx, check(_params(beta, gamma), trials, n_max, seed=ctx.find_root().obj['seed']))


def run(argv=None) -> int:
    """Run the CLI on argv and return the exit code instead of exiting."""
    try:
        result = cli.main(args=argv, prog_name='ferro2spin', standalone_mode=False)
        return result if isinstance(result, int) else EXIT_OK
    except click.exceptions.Abort:
        click.echo('aborted', err=True)
        return EXIT_USAGE
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except INPUT_ERRORS as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_USAGE
    except RegimeViolation as e:
        click.echo(f"regime violation: {e}", err=True)
        return EXIT_REGIME
    except Exception as e:
        logger.exception(f"Internal error: {e}")
        return EXIT_INTERNAL


def main():
    logging.basicConfig(
        level=getattr(logging, get_config().LOG_LEVEL.upper(), logging.INFO),
        format="%(asctime)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    sys.exit(run())


if __name__ == '__main__':
    main()
