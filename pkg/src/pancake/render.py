"""Graphviz DOT export of a link diagram.

Nodal zones are vertices, grouped into one subgraph cluster per node letter;
segments are edges.  With a decomposition, vertices are coloured by pancake
and edges holding a cut are dashed.
"""

from __future__ import annotations

from .decomp import Decomposition
from .model import CIRCULAR, as_descriptor, format_letters

PALETTE = ("lightblue", "lightsalmon", "palegreen", "khaki", "plum", "lightpink",
           "lightcyan", "wheat", "thistle", "honeydew")


def _letter(x: int) -> str:
    return format_letters([x])[1:-1]


def render_dot(desc, dec: Decomposition | None = None) -> str:
    name = as_descriptor(desc).name
    title = "circular_link" if name.kind == CIRCULAR else "link"
    colour = {}
    if dec is not None:
        for i, block in enumerate(dec.blocks):
            for x in block:
                colour[x] = PALETTE[i % len(PALETTE)]
    cuts = set(dec.cuts) if dec is not None else set()

    lines = [f"graph {title} {{", f'  label="{name}";', "  node [shape=circle];"]
    for letter in sorted(set(name.letters)):
        lines.append(f"  subgraph cluster_{_letter(letter)} {{")
        lines.append(f'    label="{_letter(letter)}";')
        for pos in name.positions:
            if name.letter(pos) == letter:
                style = f', style=filled, fillcolor="{colour[pos]}"' if pos in colour else ""
                lines.append(f'    N_{pos} [label="N_{pos}"{style}];')
        lines.append("  }")
    for seg in name.segments:
        a, b = name.endpoints(seg)
        style = ", style=dashed" if seg in cuts else ""
        lines.append(f'  N_{a} -- N_{b} [label="S_{seg}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
