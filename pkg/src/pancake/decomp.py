"""Pancake decompositions at word level.

A pancake is a block of consecutive nodal zones whose letters are pairwise
distinct (an admissible block).  A decomposition partitions the positions of
a name into admissible blocks; boundaries are placed inside segments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .model import (
    CIRCULAR,
    LINEAR,
    NO_NODES,
    CircularDescriptor,
    CircularName,
    NoNodesDescriptor,
    SnakeDescriptor,
    SnakeName,
    as_descriptor,
    canonicalize,
    require_well_formed,
)
from .seq import (
    FORWARD,
    REFLECTED,
    NoRepeat,
    circular_sequences,
    minimal_sequence_linear,
    traversal_position,
    traversal_segment,
)


@dataclass(frozen=True)
class Decomposition:
    """Ordered pancakes of a snake, circular snake or node-free circular snake.

    Word kinds: ``blocks[i]`` lists nodal-zone positions in traversal order.
    Linear: ``cuts[i]`` separates ``blocks[i]`` and ``blocks[i+1]``.
    Circular: ``blocks[i]`` starts right after ``cuts[i]`` and ends before
    ``cuts[i+1]`` (cyclically).  Node-free: no blocks; ``labels`` names the
    boundary arcs ``λ_0 .. λ_{m+1}`` with ``λ_0 = λ_{m+1}`` the base arc,
    derived from ``m`` on demand.
    """

    kind: str
    m: int
    blocks: tuple[tuple[int, ...], ...] = ()
    cuts: tuple[int, ...] = ()
    start: int | None = None
    orientation: str = FORWARD
    merges: tuple[int, ...] = field(default=(), compare=False)

    @property
    def count(self) -> int:
        if self.kind == NO_NODES:
            return self.m + 1
        return len(self.blocks)

    @property
    def labels(self) -> tuple[str, ...]:
        if self.kind != NO_NODES:
            return ()
        inner = tuple(f"lambda_{i}" for i in range(1, self.m + 1))
        return ("gamma",) + inner + ("gamma",)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "m": self.m, "count": self.count}
        if self.kind == NO_NODES:
            out["labels"] = list(self.labels)
        else:
            out.update(
                blocks=[list(b) for b in self.blocks],
                cuts=list(self.cuts),
                sizes=list(self.sizes),
                orientation=self.orientation,
            )
            if self.start is not None:
                out["start"] = self.start
            if self.merges:
                out["merges"] = list(self.merges)
        return out

    @classmethod
    def from_dict(cls, data: Mapping) -> "Decomposition":
        if data["kind"] == NO_NODES:
            return cls(NO_NODES, data["m"])
        return cls(
            data["kind"],
            data["m"],
            tuple(tuple(b) for b in data["blocks"]),
            tuple(data["cuts"]),
            start=data.get("start"),
            orientation=data.get("orientation", FORWARD),
            merges=tuple(data.get("merges", ())),
        )


def from_cuts(name, cuts: Iterable[int]) -> Decomposition:
    """Decomposition of a name with boundaries in the given segments (forward order)."""
    cuts = sorted(set(cuts))
    if any(c not in name.segments for c in cuts):
        raise ValueError(f"cut outside segments 1..{len(name.segments)}")
    if name.kind == LINEAR:
        bounds = [0] + cuts + [len(name)]
        blocks = tuple(tuple(range(a, b)) for a, b in zip(bounds, bounds[1:]))
        return Decomposition(LINEAR, name.m, blocks, tuple(cuts))
    if len(cuts) < 2:
        raise ValueError("a circular decomposition needs at least two cuts")
    m = name.m
    blocks = []
    for a, b in zip(cuts, cuts[1:] + [cuts[0] + m]):
        blocks.append(tuple((x - 1) % m + 1 for x in range(a, b)))
    return Decomposition(CIRCULAR, m, tuple(blocks), tuple(cuts), start=cuts[0])


def check_decomposition(name, dec: Decomposition) -> None:
    """Raise ValueError unless ``dec`` is a valid admissible decomposition of ``name``."""
    if dec.kind != name.kind:
        raise ValueError(f"{dec.kind} decomposition for a {name.kind} name")
    flat = sorted(x for b in dec.blocks for x in b)
    if flat != list(name.positions):
        raise ValueError("blocks do not partition the nodal zones")
    for b in dec.blocks:
        if len({name.letter(x) for x in b}) != len(b):
            raise ValueError(f"block {b} repeats a letter")
    if name.kind == CIRCULAR and len(dec.blocks) < 2:
        raise ValueError("a circular decomposition needs at least two blocks")
    expected = {frozenset(b) for b in from_cuts(name, dec.cuts).blocks}
    if {frozenset(b) for b in dec.blocks} != expected:
        raise ValueError("cuts do not interleave the blocks")


def greedy_linear(name: SnakeName, orientation: str = FORWARD) -> Decomposition:
    """Greedy decomposition: one pancake per window of the minimal sequence.

    With ``orientation="reflected"`` the scan runs from the far end; positions
    and cuts are still reported in the name's own indexing.
    """
    require_well_formed(name)
    if orientation == FORWARD:
        js = list(minimal_sequence_linear(name).indices) + [len(name)]
        blocks = tuple(tuple(range(a, b)) for a, b in zip(js, js[1:]))
        return Decomposition(LINEAR, name.m, blocks, tuple(js[1:-1]))
    if orientation != REFLECTED:
        raise ValueError(f"unknown orientation {orientation!r}")
    m = name.m
    rev = SnakeName(tuple(reversed(name.letters)))
    js = list(minimal_sequence_linear(rev).indices) + [len(name)]
    blocks = tuple(tuple(m - x for x in range(a, b)) for a, b in zip(js, js[1:]))
    cuts = tuple(m - c + 1 for c in js[1:-1])
    return Decomposition(LINEAR, m, blocks, cuts, orientation=REFLECTED)


def greedy_circular(name: CircularName, start: int = 1,
                    orientation: str = FORWARD) -> Decomposition:
    """q pancakes cut at the segments entering the minimal-sequence nodal zones."""
    a = circular_sequences(name, start, orientation)
    m = name.m
    # unrolled cut u is the (u - start + 1)-th nodal zone met by the traversal
    js = list(a.j_prefix[a.k: a.k + a.q])
    js.append(js[0] + m)
    blocks = []
    cuts = []
    for lo, hi in zip(js, js[1:]):
        cuts.append(traversal_segment(m, start, orientation, lo - start + 1))
        blocks.append(tuple(traversal_position(m, start, orientation, u - start + 1)
                            for u in range(lo, hi)))
    return Decomposition(CIRCULAR, m, tuple(blocks), tuple(cuts),
                         start=start, orientation=orientation)


def greedy_no_nodes(d: NoNodesDescriptor) -> Decomposition:
    """m+1 pancakes around a node-free circular snake of multiplicity m.

    The base arc is a boundary of two pancakes, and no pancake can hold two
    of the m sheets through it, hence 2 + (m - 1).
    """
    m = d.multiplicity
    if m < 2:
        raise ValueError(f"multiplicity must be at least 2, got {m}")
    return Decomposition(NO_NODES, m)


def block_positions(name, lo: int, hi: int) -> list[int]:
    """Positions lo..hi inclusive; circular ranges wrap when hi < lo."""
    if name.kind == CIRCULAR:
        span = (hi - lo) % name.m
        return [name.residue(lo + i) for i in range(span + 1)]
    return list(range(lo, hi + 1))


def is_block_admissible(name, lo: int, hi: int) -> bool:
    letters = [name.letter(x) for x in block_positions(name, lo, hi)]
    return len(set(letters)) == len(letters)


def _min_distinct_segmentation(letters: tuple[int, ...]) -> tuple[int, list[int]]:
    """Fewest blocks of pairwise distinct letters covering ``letters``, with block starts."""
    n = len(letters)
    inf = n + 1
    best = [0] + [inf] * n
    back = [0] * (n + 1)
    for end in range(1, n + 1):
        used = set()
        for begin in range(end - 1, -1, -1):
            if letters[begin] in used:
                break
            used.add(letters[begin])
            if best[begin] + 1 < best[end]:
                best[end] = best[begin] + 1
                back[end] = begin
    starts = []
    end = n
    while end > 0:
        end = back[end]
        starts.append(end)
    return best[n], starts[::-1]


def oracle_min_linear(name: SnakeName) -> tuple[int, Decomposition]:
    """Exact minimum number of admissible blocks by dynamic programming."""
    require_well_formed(name)
    count, starts = _min_distinct_segmentation(name.letters)
    return count, from_cuts(name, starts[1:])


def oracle_min_circular(name: CircularName) -> tuple[int, Decomposition]:
    """Minimum over every anchor segment of the linear optimum of the cut-open word."""
    require_well_formed(name)
    if len(set(name.letters)) == len(name):
        raise NoRepeat(f"{name} has no repeated letter")
    m = name.m
    best = None
    for anchor in range(1, m + 1):
        opened = tuple(name.letter(anchor + i) for i in range(m))
        # some letter repeats, so every cut-open word needs at least two blocks
        count, starts = _min_distinct_segmentation(opened)
        if best is None or count < best[0]:
            best = (count, [name.residue(anchor + s) for s in starts])
    return best[0], from_cuts(name, best[1])


def oracle_count(desc) -> int:
    """Brute-force minimum pancake count for any descriptor kind."""
    if isinstance(desc, NoNodesDescriptor):
        return desc.multiplicity + 1
    name = as_descriptor(desc).name
    if name.kind == LINEAR:
        return oracle_min_linear(name)[0]
    return oracle_min_circular(name)[0]


def verify_minimal(desc, dec: Decomposition) -> bool:
    return dec.count == oracle_count(desc)


def reduce(name, dec: Decomposition) -> Decomposition:
    """Merge adjacent pancakes while some union is admissible.

    The cut removed at each step is the lowest-indexed one whose two
    neighbouring blocks have an admissible union; ``merges`` records them.
    """
    if name.kind == NO_NODES:
        return dec
    cuts = sorted(dec.cuts)
    merges = []
    while True:
        current = from_cuts(name, cuts)
        if name.kind == CIRCULAR and len(cuts) <= 2:
            break
        for i, c in enumerate(cuts):
            if name.kind == LINEAR:
                union = current.blocks[i] + current.blocks[i + 1]
            else:
                union = current.blocks[i - 1] + current.blocks[i]
            if len({name.letter(x) for x in union}) == len(union):
                merges.append(c)
                del cuts[i]
                break
        else:
            break
    out = from_cuts(name, cuts)
    return Decomposition(out.kind, out.m, out.blocks, out.cuts, start=out.start,
                         merges=tuple(merges))


def lift(name: CircularName, t: int) -> CircularName:
    """Circular name made of t consecutive copies of the word."""
    if t < 1:
        raise ValueError("lift needs t >= 1")
    return CircularName(canonicalize(name.letters * t))


@dataclass(frozen=True)
class CutAnnotation:
    """Whether the boundary arc in ``segment`` must be placed on one side.

    Required when the previous cut lies in the same cluster: the boundary
    arc must then avoid the horn around the previous one.
    """

    segment: int
    one_sided: bool

    def to_dict(self) -> dict:
        return {"segment": self.segment, "one_sided": "required" if self.one_sided else "notRequired"}


def annotate_cut_placement(desc, dec: Decomposition) -> list[CutAnnotation]:
    desc = as_descriptor(desc)
    cuts = list(dec.cuts)
    out = []
    for i, c in enumerate(cuts):
        if dec.kind == LINEAR and i == 0:
            out.append(CutAnnotation(c, False))
            continue
        prev = cuts[i - 1]
        out.append(CutAnnotation(c, prev != c and prev in desc.clusters.cluster_of(c)))
    return out


def decomposition_for(desc, start: int | None = None, orientation: str = FORWARD) -> Decomposition:
    """Greedy decomposition of any descriptor kind."""
    if isinstance(desc, NoNodesDescriptor):
        return greedy_no_nodes(desc)
    desc = as_descriptor(desc)
    if isinstance(desc, SnakeDescriptor):
        return greedy_linear(desc.name, orientation)
    if isinstance(desc, CircularDescriptor):
        return greedy_circular(desc.name, start or 1, orientation)
    raise TypeError(f"not a descriptor: {desc!r}")
