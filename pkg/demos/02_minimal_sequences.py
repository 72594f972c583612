"""
Minimal sequences
=================

The greedy scan cuts a word as soon as the current window repeats a letter.
On a circular name the cut positions, taken modulo m, follow a functional
graph: eventually periodic with a fundamental block that may wind around the
link several times.
"""

from pancake import circular_sequences, minimal_sequence_linear, parse_word
from pancake.seq import SuccessorMap, check_lap_bound, circular_analysis

print(minimal_sequence_linear(parse_word("[abacdbcd]")).indices)   # (0, 2, 6)

# a successor map given by hand: the orbit 1, 4, 8, 12, 16, 20, 24, ...
steps = SuccessorMap.from_steps(10, {1: 3, 4: 4, 8: 4, 2: 4, 6: 4, 10: 4})
a = circular_analysis(steps, 10, 1)
print("fundamental", a.fundamental, "minimal", a.minimal, "t =", a.t)
print("p >= t(q-1)+1:", a.p, ">=", a.t * (a.q - 1) + 1, check_lap_bound(a))

# the same orbit realised by an actual circular name
laps = parse_word("[abcadcedbe]", "circular")
print(circular_sequences(laps).j_prefix)

# the start and the orientation change the cuts but never their number q
fifteen = parse_word("[abcadcbadeceacd]", "circular")
for start, orientation in ((1, "forward"), (2, "forward"), (1, "reflected")):
    a = circular_sequences(fifteen, start, orientation)
    print(start, orientation, "j =", a.j_prefix[:5], "q =", a.q)
