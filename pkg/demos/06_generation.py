"""
Random and exhaustive instances
===============================

Seeded generators for names and cluster partitions, plus exhaustive
enumeration of small canonical words.  The greedy count is compared with the
oracle on every instance.
"""

import random

from pancake import GenParams, oracle_min_circular, random_circular_name
from pancake.gen import bell, enumerate_names, random_clusters, set_partitions
from pancake.model import CircularDescriptor

rng = random.Random(7)
params = GenParams(length=(6, 14), alphabet=(2, 5), level="strict")
for _ in range(3):
    name = random_circular_name(params, rng)
    clusters = random_clusters(CircularDescriptor(name), rng)
    print(name, "oracle", oracle_min_circular(name)[0],
          "non-trivial clusters", sorted(sorted(c) for c in clusters.clusters if len(c) > 1))

print([str(w) for w in enumerate_names(4, 3, min_len=4)])
print(bell(4), len(list(set_partitions([1, 2, 3, 4]))))
