"""
Graph JSON documents <-> SpinSystem.
"""
import json
from typing import Dict

from ferro2spin.spin_core.system import SpinParams, SpinSystem
from utils.schemas import validate_document


def system_from_dict(document: Dict) -> SpinSystem:
    validate_document(document, 'graph')
    params = SpinParams(float(document['beta']), float(document['gamma']))
    vertices = tuple((v['id'], v['lambda']) for v in document['vertices'])
    edges = tuple(tuple(e) for e in document['edges'])
    pins = tuple((p['id'], p['spin']) for p in document.get('pins', []))
    return SpinSystem(params, vertices, edges, pins)


def system_to_dict(system: SpinSystem) -> Dict:
    document = {
        'beta': system.params.beta,
        'gamma': system.params.gamma,
        'vertices': [{'id': v, 'lambda': lam} for v, lam in system.vertices],
        'edges': [[a, b] for a, b in system.edges],
    }
    if system.pins:
        document['pins'] = [{'id': v, 'spin': s} for v, s in system.pins]
    return document


def load_system(path) -> SpinSystem:
    with open(path) as f:
        return system_from_dict(json.load(f))


def dump_system(system: SpinSystem, path):
    with open(path, 'w') as f:
        json.dump(system_to_dict(system), f, indent=2)
