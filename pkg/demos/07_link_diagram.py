"""
Link diagrams in DOT
====================

Nodal zones become vertices grouped by node letter, segments become edges,
pancakes are coloured and cut segments dashed.  Pipe the output to
``dot -Tsvg`` to draw it.
"""

from pancake import greedy_linear, parse_word
from pancake.render import render_dot

name = parse_word("[abacdbcd]")
print(render_dot(name, greedy_linear(name)))
