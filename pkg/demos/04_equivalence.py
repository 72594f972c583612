"""
Weak outer equivalence
======================

Two descriptors are equivalent when an orientation choice (and, on a circle,
a rotation) makes the words agree and carries clusters onto clusters.  Greedy
decompositions then agree too, provided the traversals correspond.
"""

from pancake import (
    CircularDescriptor,
    SnakeDescriptor,
    decompositions_weak_equiv,
    greedy_circular,
    greedy_linear,
    parse_word,
    weak_equiv,
)
from pancake.model import ClusterData, reverse_orientation

snake8 = parse_word("[abacdbcd]")
rev = reverse_orientation(snake8)
w = weak_equiv(SnakeDescriptor(snake8), SnakeDescriptor(rev))
print(w.describe())

# the two greedy decompositions differ: 2,4,2 against 3,4,1 nodal zones
match = decompositions_weak_equiv(snake8, greedy_linear(snake8), rev, greedy_linear(rev))
print(bool(match), match.reason)
# reading the first snake from its far end fixes that
match = decompositions_weak_equiv(snake8, greedy_linear(snake8, "reflected"), rev, greedy_linear(rev))
print(bool(match), match.reason)

# clusters must correspond
square = parse_word("[abab]", "circular")
paired = CircularDescriptor(square, ClusterData.build(square, [[1, 3], [2, 4]]))
print(weak_equiv(paired, CircularDescriptor(square)))

# the same multiset of sizes in a different cyclic order is not equivalent
ring = parse_word("[abcadcbadeceacd]", "circular")
a, c = greedy_circular(ring, 2), greedy_circular(ring, 1, "reflected")
print(a.sizes, c.sizes, decompositions_weak_equiv(ring, a, ring, c).reason)
