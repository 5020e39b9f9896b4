"""
Experiment Celery Tasks

Every task processes one pure cell with JSON-friendly arguments, so a sweep
gives the same answer whether it runs in-process or on workers.
"""
import logging
from typing import Dict, List, Sequence

from celery import group

from celery_worker import celery

logger = logging.getLogger(__name__)


@celery.task(name='ferro2spin.approx_instance')
def approx_instance(payload: Dict) -> Dict:
    """Approximate and exact log Z of one system document."""
    from ferro2spin.experiments.accuracy import approx_instance_cell
    return approx_instance_cell(payload)


@celery.task(name='ferro2spin.mixing_trial')
def mixing_trial(payload: Dict) -> float:
    from ferro2spin.experiments.mixing import mixing_trial_cell
    return mixing_trial_cell(**payload)


@celery.task(name='ferro2spin.landscape_row')
def landscape_row(payload: Dict) -> List[Dict]:
    from ferro2spin.experiments.landscape import landscape_row_cell
    return landscape_row_cell(**payload)


@celery.task(name='ferro2spin.marginal_bound_instance')
def marginal_bound_instance(payload: Dict) -> Dict:
    from ferro2spin.spin_core.cluster import marginal_bound_instance as instance
    from ferro2spin.spin_core.system import SpinParams
    params = SpinParams(payload['beta'], payload['gamma'])
    return instance(params, payload['lam'], payload['n'], payload['p'], payload['seed'],
                    uniform_field=payload.get('uniform_field', True))


@celery.task(name='ferro2spin.run_chunk')
def run_chunk(task_name: str, payloads: List[Dict]) -> List:
    task = celery.tasks[task_name]
    return [task.run(p) for p in payloads]


def dispatch(task, payloads: Sequence[Dict], jobs: int = 1) -> List:
    """
    Results of `task` over `payloads`, in submission order. Eager mode runs
    in-process; otherwise `jobs` ordered chunks go out as one Celery group.
    """
    payloads = list(payloads)
    if not payloads:
        return []
    if celery.conf.task_always_eager or jobs <= 1:
        return [task.run(p) for p in payloads]

    size = -(-len(payloads) // jobs)
    chunks = [payloads[i:i + size] for i in range(0, len(payloads), size)]
    logger.info(f"Dispatching {len(payloads)} {task.name} cells in {len(chunks)} chunks")
    result = group(run_chunk.s(task.name, chunk) for chunk in chunks).apply_async()
    return [value for chunk in result.get() for value in chunk]
