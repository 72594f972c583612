"""
Lifting a circular snake
========================

When the fundamental block winds t times around the link, gluing t copies of
the name unwinds it: on the lifted name the minimal and fundamental sequences
coincide.
"""

from pancake import circular_sequences, parse_word
from pancake.decomp import lift

laps = parse_word("[abcadcedbe]", "circular")
a = circular_sequences(laps)
print("t =", a.t, "fundamental", a.fundamental, "minimal", a.minimal)

big = lift(laps, a.t)
b = circular_sequences(big)
print(big, "m =", big.m)
print("fundamental", b.fundamental, "minimal", b.minimal)
print("mod 10:", [(r - 1) % 10 + 1 for r in b.fundamental])
