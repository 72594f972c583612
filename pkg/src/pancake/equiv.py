"""Weak outer equivalence of snakes, circular snakes and their decompositions.

Two descriptors are weakly equivalent when, after a choice of orientation
(and, for circular names, of the initial nodal zone), their names agree up to
relabelling the nodes and the relabelling carries clusters onto clusters.
The relabelling is forced by first-occurrence canonical form, so the search
space is only orientations times rotations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .decomp import Decomposition
from .model import (
    CIRCULAR,
    LINEAR,
    NO_NODES,
    CircularDescriptor,
    ClusterData,
    NoNodesDescriptor,
    SnakeDescriptor,
    as_descriptor,
    canonicalize,
)
from .seq import FORWARD, REFLECTED


@dataclass(frozen=True)
class EquivWitness:
    """Map from descriptor 1 to descriptor 2.

    ``positions[r]`` is the position of descriptor 1 sent to position ``r``
    of descriptor 2 (keys are the positions of descriptor 2); ``segments``
    sends a segment of descriptor 1 to a segment of descriptor 2.
    """

    kind: str
    flip: bool
    rotation: int | None
    bijection: tuple[int, ...]
    positions: Mapping[int, int]
    segments: Mapping[int, int]

    def map_cuts(self, cuts) -> frozenset[int]:
        return frozenset(self.segments[c] for c in cuts)

    def source_frame(self, start: int = 1, orientation: str = FORWARD) -> tuple[int, str]:
        """Traversal of descriptor 1 matching the given traversal of descriptor 2."""
        if self.flip:
            orientation = REFLECTED if orientation == FORWARD else FORWARD
        if self.kind == LINEAR:
            return 0, orientation
        return self.positions[start], orientation

    def inverse(self) -> "EquivWitness":
        inv_bij = [0] * len(self.bijection)
        for a, b in enumerate(self.bijection):
            inv_bij[b] = a
        rotation = None
        if self.kind == CIRCULAR:
            m = len(self.positions)
            rotation = self.rotation if self.flip else (-self.rotation) % m
        return EquivWitness(
            self.kind, self.flip, rotation, tuple(inv_bij),
            {v: k for k, v in self.positions.items()},
            {v: k for k, v in self.segments.items()},
        )

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "flip": self.flip,
            "rotation": self.rotation,
            "bijection": list(self.bijection),
        }

    def describe(self) -> str:
        from .model import format_letters

        parts = ["orientation " + ("flipped" if self.flip else "kept")]
        if self.rotation is not None:
            parts.append(f"rotation {self.rotation}")
        pairs = ", ".join(
            f"{format_letters([a])[1:-1]}->{format_letters([b])[1:-1]}"
            for a, b in enumerate(self.bijection)
        )
        parts.append(f"letters {pairs}")
        return "; ".join(parts)


def _frame_maps(kind: str, m: int, flip: bool, s: int | None):
    """Position and segment maps (descriptor-2 index -> descriptor-1 index)."""
    if kind == LINEAR:
        pos = {r: (m - r if flip else r) for r in range(m + 1)}
        seg = {r: (m - r + 1 if flip else r) for r in range(1, m + 1)}
        return pos, seg
    if flip:
        pos = {r: (1 - r - s) % m + 1 for r in range(1, m + 1)}
        seg = {r: (2 - r - s) % m + 1 for r in range(1, m + 1)}
    else:
        pos = {r: (r + s - 1) % m + 1 for r in range(1, m + 1)}
        seg = dict(pos)
    return pos, seg


def _letter_at(name, pos: int) -> int:
    return name.letter(pos)


def _candidate(d1, d2, flip: bool, s: int | None) -> EquivWitness | None:
    n1, n2 = d1.name, d2.name
    m = n2.m
    pos, seg = _frame_maps(n1.kind, m, flip, s)
    bij: dict[int, int] = {}
    back: dict[int, int] = {}
    for r in n2.positions:
        a, b = n1.letter(pos[r]), n2.letter(r)
        if bij.setdefault(a, b) != b or back.setdefault(b, a) != a:
            return None
    bijection = tuple(bij[a] for a in range(len(bij)))
    w = EquivWitness(n1.kind, flip, s, bijection, pos, {v: k for k, v in seg.items()})
    return w if cluster_correspondence_check(d1, d2, w) else None


def cluster_correspondence_check(d1, d2, witness: EquivWitness) -> bool:
    """Every cluster of descriptor 1 maps onto a cluster of descriptor 2."""
    target = d2.clusters.clusters
    if len(d1.clusters.clusters) != len(target):
        return False
    return all(frozenset(witness.segments[x] for x in c) in target for c in d1.clusters.clusters)


def witnesses(d1, d2) -> Iterator[EquivWitness]:
    """All witnesses, identity orientation first, rotations in increasing order."""
    d1, d2 = as_descriptor(d1), as_descriptor(d2)
    if d1.kind != d2.kind:
        raise TypeError(f"cannot compare {d1.kind} with {d2.kind}")
    if len(d1.name) != len(d2.name):
        return
    if sorted(map(len, d1.clusters.clusters)) != sorted(map(len, d2.clusters.clusters)):
        return
    rotations = [None] if d1.kind == LINEAR else range(d1.name.m)
    for flip in (False, True):
        for s in rotations:
            w = _candidate(d1, d2, flip, s)
            if w is not None:
                yield w


def snake_weak_equiv(d1: SnakeDescriptor, d2: SnakeDescriptor) -> EquivWitness | None:
    return next(witnesses(d1, d2), None)


def circular_weak_equiv(d1: CircularDescriptor, d2: CircularDescriptor) -> EquivWitness | None:
    return next(witnesses(d1, d2), None)


def no_nodes_weak_equiv(d1: NoNodesDescriptor, d2: NoNodesDescriptor) -> bool:
    return d1.multiplicity == d2.multiplicity


def weak_equiv(d1, d2):
    """Dispatch on kind; returns a witness, None, or a bool for node-free snakes."""
    if isinstance(d1, NoNodesDescriptor) or isinstance(d2, NoNodesDescriptor):
        if not (isinstance(d1, NoNodesDescriptor) and isinstance(d2, NoNodesDescriptor)):
            raise TypeError("cannot compare a node-free snake with a snake name")
        return no_nodes_weak_equiv(d1, d2)
    return next(witnesses(d1, d2), None)


def apply_witness(d1, witness: EquivWitness):
    """The descriptor obtained by transporting descriptor 1 along the witness."""
    d1 = as_descriptor(d1)
    name = d1.name
    order = sorted(witness.positions)
    letters = canonicalize(name.letter(witness.positions[r]) for r in order)
    new_name = type(name)(letters)
    clusters = ClusterData(frozenset(frozenset(witness.segments[x] for x in c)
                                     for c in d1.clusters.clusters))
    return type(d1)(new_name, clusters)


@dataclass(frozen=True)
class DecompositionSignature:
    kind: str
    sizes: tuple[int, ...]

    def rotations(self) -> list[tuple[int, ...]]:
        n = len(self.sizes)
        return [self.sizes[i:] + self.sizes[:i] for i in range(n)]

    def matches(self, other: "DecompositionSignature") -> bool:
        """Equal up to reversal (linear) or up to the dihedral action (circular)."""
        if self.kind != other.kind or len(self.sizes) != len(other.sizes):
            return False
        if self.kind == LINEAR:
            return other.sizes in (self.sizes, self.sizes[::-1])
        rev = DecompositionSignature(self.kind, self.sizes[::-1])
        return other.sizes in self.rotations() or other.sizes in rev.rotations()


def decomposition_signature(dec: Decomposition) -> DecompositionSignature:
    if dec.kind == NO_NODES:
        raise ValueError("node-free decompositions have no nodal-zone counts")
    return DecompositionSignature(dec.kind, dec.sizes)


@dataclass(frozen=True)
class DecompositionMatch:
    equivalent: bool
    reason: str
    witness: EquivWitness | None = None

    def __bool__(self) -> bool:
        return self.equivalent


def decompositions_weak_equiv(d1, dec1: Decomposition, d2, dec2: Decomposition) -> DecompositionMatch:
    """Whether some surface-level witness carries the cuts of dec1 onto those of dec2.

    Only witnesses matching the traversals are admitted: for snakes the
    starting boundary arc of dec2 must correspond to that of dec1, for
    circular snakes the (start, orientation) pairs must correspond.
    """
    if dec1.kind != dec2.kind:
        raise TypeError(f"cannot compare {dec1.kind} with {dec2.kind} decompositions")
    if dec1.kind == NO_NODES:
        same = dec1.m == dec2.m
        return DecompositionMatch(same, "same multiplicity" if same else "multiplicity differs")
    sig1, sig2 = decomposition_signature(dec1), decomposition_signature(dec2)
    if not sig1.matches(sig2):
        return DecompositionMatch(False, f"signatures differ: {sig1.sizes} vs {sig2.sizes}")
    target = frozenset(dec2.cuts)
    frame1 = (dec1.start if dec1.kind == CIRCULAR else 0, dec1.orientation)
    found_any = framed = False
    for w in witnesses(d1, d2):
        found_any = True
        # the witness must carry the traversal of dec2 onto that of dec1
        if w.source_frame(dec2.start or 1, dec2.orientation) != frame1:
            continue
        framed = True
        if w.map_cuts(dec1.cuts) == target:
            return DecompositionMatch(True, "cuts correspond", w)
    if not found_any:
        return DecompositionMatch(False, "surfaces are not weakly equivalent")
    if not framed:
        return DecompositionMatch(False, "no witness matches the traversal frames")
    return DecompositionMatch(False, "no witness carries cuts onto cuts")
