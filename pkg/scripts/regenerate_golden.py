"""
Golden Report Regeneration Script
Each golden file under results/golden holds checks on one CLI report: a path into the
report and either a value with a tolerance ("value" with "rel" or "abs"), an exact
"equals", or a "min"/"max" bound. Regeneration reruns every command and refreshes the
"value" entries; bounds and exact checks are kept as written.
"""
import json
import math
import os
import sys
import tempfile

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app import EXIT_OK, run
from config import get_config

GOLDEN_RUNS = {
    'thresholds_1_2.json': ['thresholds', '--beta', '1', '--gamma', '2'],
    'thresholds_0.6_2.json': ['thresholds', '--beta', '0.6', '--gamma', '2'],
    'five_seven.json': ['experiment', 'five-seven'],
    'landscape_1_2.json': ['experiment', 'landscape', '--beta', '1', '--gamma', '2',
                           '--lambda-min', '10', '--lambda-max', '12', '--lambda-steps', '21', '--d-max', '10'],
    'base_m_1_2_10.json': ['potential', '--beta', '1', '--gamma', '2', '--lambda', '10', '--kind', 'phi2'],
    'certificate_0.6_2.json': ['potential', '--beta', '0.6', '--gamma', '2', '--lambda', '1002762',
                               '--kind', 'phi3'],
    'mixing_1_2_10.json': ['--seed', '0', 'experiment', 'mixing', '--beta', '1', '--gamma', '2', '--lambda', '10'],
    'mixing_1.5_1.5_0.8.json': ['--seed', '0', 'experiment', 'mixing', '--beta', '1.5', '--gamma', '1.5',
                                '--lambda', '0.8'],
}

# runs that take more than a few seconds
SLOW_RUNS = {'certificate_0.6_2.json', 'mixing_1_2_10.json', 'mixing_1.5_1.5_0.8.json'}

DEFAULT_REL = 1e-9


def lookup(report, path: str):
    """Follow a '/'-separated path of keys and list indices."""
    node = report
    for part in path.split('/'):
        node = node[int(part)] if isinstance(node, list) else node[part]
    return node


def check_failures(report, checks) -> list:
    """Messages for every check the report misses; empty when all hold."""
    failures = []
    for path, check in checks.items():
        try:
            actual = lookup(report, path)
        except (KeyError, IndexError, ValueError, TypeError):
            failures.append(f"{path}: missing")
            continue
        if 'equals' in check and actual != check['equals']:
            failures.append(f"{path}: {actual!r} != {check['equals']!r}")
        if 'value' in check:
            ok = isinstance(actual, (int, float)) and math.isclose(
                actual, check['value'], rel_tol=check.get('rel', 0.0 if 'abs' in check else DEFAULT_REL),
                abs_tol=check.get('abs', 0.0))
            if not ok:
                failures.append(f"{path}: {actual!r} not within tolerance of {check['value']!r}")
        if 'min' in check and not actual >= check['min']:
            failures.append(f"{path}: {actual!r} < {check['min']!r}")
        if 'max' in check and not actual <= check['max']:
            failures.append(f"{path}: {actual!r} > {check['max']!r}")
    return failures


def report_for(name: str, workdir: str):
    """Run a golden command and return its JSON report, or None when it fails."""
    out = os.path.join(workdir, name)
    if run(['--out', out] + GOLDEN_RUNS[name]) != EXIT_OK:
        return None
    with open(out) as f:
        return json.load(f)


def _seed_checks(report) -> dict:
    return {key: ({'value': value, 'rel': DEFAULT_REL} if isinstance(value, float) else {'equals': value})
            for key, value in report.items() if isinstance(value, (bool, int, float, str))}


def regenerate(golden_dir=None, names=None):
    """Rerun the golden commands and write fresh values into their check files."""
    golden_dir = golden_dir or get_config().GOLDEN_DIR
    os.makedirs(golden_dir, exist_ok=True)
    print(f"Refreshing golden reports in {golden_dir}...")

    failed = []
    with tempfile.TemporaryDirectory() as workdir:
        for name in names or GOLDEN_RUNS:
            report = report_for(name, workdir)
            if report is None:
                print(f"❌ {name}: command failed")
                failed.append(name)
                continue
            path = os.path.join(golden_dir, name)
            if os.path.exists(path):
                with open(path) as f:
                    checks = json.load(f)
                for key, check in checks.items():
                    if 'value' in check:
                        check['value'] = lookup(report, key)
            else:
                checks = _seed_checks(report)
            with open(path, 'w') as f:
                json.dump(checks, f, indent=2, sort_keys=True)
                f.write('\n')
            bounds = check_failures(report, checks)
            if bounds:
                print(f"❌ {name}: {'; '.join(bounds)}")
                failed.append(name)
            else:
                print(f"✅ {name}")
    return failed


if __name__ == '__main__':
    sys.exit(1 if regenerate(names=sys.argv[1:] or None) else 0)
