"""
Pancake decompositions
======================

A pancake is a run of nodal zones with pairwise distinct letters.  The greedy
decomposition uses as few pancakes as possible; a brute-force dynamic
program confirms it.
"""

from pancake import (
    NoNodesDescriptor,
    SnakeDescriptor,
    greedy_circular,
    greedy_linear,
    greedy_no_nodes,
    oracle_min_circular,
    oracle_min_linear,
    parse_word,
)
from pancake.decomp import annotate_cut_placement, from_cuts, reduce, verify_minimal
from pancake.model import ClusterData, CircularDescriptor

name = parse_word("[abacdbcd]")
dec = greedy_linear(name)
print(dec.blocks, "sizes", dec.sizes, "oracle", oracle_min_linear(name)[0])

ring = parse_word("[abcadcbadeceacd]", "circular")
print(greedy_circular(ring, 2).sizes, "oracle", oracle_min_circular(ring)[0])

# reduced (no two neighbours can merge) does not mean minimal
abab = parse_word("[abab]")
coarse = reduce(abab, from_cuts(abab, [1, 3]))
print(coarse.blocks, "minimal:", verify_minimal(SnakeDescriptor(abab), coarse))

# merging from every segment cut, leftmost first
fine = reduce(parse_word("[abcab]"), from_cuts(parse_word("[abcab]"), [1, 2, 3, 4]))
print(fine.blocks, "merged at", fine.merges)

# a cut whose segment shares a cluster with the previous cut is one-sided
square = parse_word("[abab]", "circular")
d = CircularDescriptor(square, ClusterData.build(square, [[1, 3]]))
print([n.to_dict() for n in annotate_cut_placement(d, greedy_circular(square))])

# without nodal zones only the multiplicity matters: m + 1 pancakes
print(greedy_no_nodes(NoNodesDescriptor(3)).labels)
