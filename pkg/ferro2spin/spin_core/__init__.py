"""
Spin core: instances, weights, the brute-force oracle and the random-cluster identity.
"""
from ferro2spin.spin_core.system import Configuration, SpinParams, SpinSystem, WeightAccumulator, weight
from ferro2spin.spin_core.oracle import exact_marginal, exact_partition, exact_ratio
from ferro2spin.spin_core.cluster import marginal_bound_sweep, random_cluster_check, random_cluster_split
from ferro2spin.spin_core.io import dump_system, load_system, system_from_dict, system_to_dict

__all__ = [
    'Configuration', 'SpinParams', 'SpinSystem', 'WeightAccumulator', 'weight',
    'exact_marginal', 'exact_partition', 'exact_ratio',
    'marginal_bound_sweep', 'random_cluster_check', 'random_cluster_split',
    'dump_system', 'load_system', 'system_from_dict', 'system_to_dict',
]
