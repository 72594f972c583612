"""Greedy cut sequences.

For a linear name the greedy scan starts a window at position 0 and closes
it at the first position whose letter already occurs in the window; that
position opens the next window.  The positions where windows open form the
minimal sequence ``j_0 = 0 < j_1 < ... < j_p``.

For a circular name the same scan runs over the infinite periodic word.  Each
cut depends only on the residue of the previous one, so the residues of the
cuts trace an orbit of a map on ``1..m`` which is eventually periodic.  The
periodic block is the fundamental sequence; its prefix covering one lap of
the link is the minimal sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .model import CircularName, SnakeName, require_well_formed

FORWARD = "forward"
REFLECTED = "reflected"
ORIENTATIONS = (FORWARD, REFLECTED)


class NoRepeat(ValueError):
    """The cyclic word has pairwise distinct letters, so no greedy cut exists."""


def is_primitive(letters: Iterable) -> bool:
    seen = set()
    for x in letters:
        if x in seen:
            return False
        seen.add(x)
    return True


@dataclass(frozen=True)
class CutSequence:
    indices: tuple[int, ...]

    @property
    def p(self) -> int:
        return len(self.indices) - 1

    @property
    def primitive(self) -> bool:
        """True when the whole word is primitive, i.e. the input is not a snake."""
        return self.p == 0

    def to_dict(self) -> dict:
        return {"indices": list(self.indices), "p": self.p, "primitive": self.primitive}

    @classmethod
    def from_dict(cls, data: Mapping) -> "CutSequence":
        return cls(tuple(data["indices"]))


def minimal_sequence_linear(name: SnakeName) -> CutSequence:
    require_well_formed(name)
    cuts = [0]
    window = {name.letters[0]}
    for pos in range(1, len(name)):
        x = name.letters[pos]
        if x in window:
            cuts.append(pos)
            window = {x}
        else:
            window.add(x)
    return CutSequence(tuple(cuts))


@dataclass(frozen=True)
class SuccessorMap:
    """Residue of the next greedy cut, and the unrolled distance to it.

    ``table[r] = (succ, step)``.  Partial tables are allowed; only residues
    on the orbit being analysed are consulted.
    """

    m: int
    table: Mapping[int, tuple[int, int]]

    def __post_init__(self):
        for r, (succ, step) in self.table.items():
            if not 1 <= r <= self.m or not 1 <= succ <= self.m:
                raise ValueError(f"residue out of range 1..{self.m}: {r} -> {succ}")
            if step < 2:
                raise ValueError(f"step from {r} must be at least 2, got {step}")
            if (r + step - succ) % self.m:
                raise ValueError(f"succ({r}) = {succ} is not {r} + {step} mod {self.m}")

    @classmethod
    def from_steps(cls, m: int, steps: Mapping[int, int]) -> "SuccessorMap":
        return cls(m, {r: ((r + d - 1) % m + 1, d) for r, d in steps.items()})

    def succ(self, r: int) -> int:
        return self.table[r][0]

    def step(self, r: int) -> int:
        return self.table[r][1]


def successor_map(name: CircularName) -> SuccessorMap:
    require_well_formed(name)
    m = name.m
    if is_primitive(name.letters):
        raise NoRepeat(f"{name} has no repeated letter")
    letters = name.letters
    table = {}
    for r in range(1, m + 1):
        window = {letters[r - 1]}
        pos = r + 1
        while letters[(pos - 1) % m] not in window:
            window.add(letters[(pos - 1) % m])
            pos += 1
        table[r] = ((pos - 1) % m + 1, pos - r)
    return SuccessorMap(m, table)


@dataclass(frozen=True)
class CircularAnalysis:
    """Orbit data of the greedy scan on a circular name.

    ``j_prefix`` holds the unrolled cut positions ``j_1 = start, j_2, ...,
    j_{k+p+1}``; the unrolled position ``u`` is the ``(u - start + 1)``-th
    nodal zone met along the traversal, so for a reflected traversal these
    count steps along the reversed link.  ``fundamental`` and ``minimal``
    are nodal-zone residues in the name's own indexing.
    """

    m: int
    k: int
    fundamental: tuple[int, ...]
    q: int
    t: int
    j_prefix: tuple[int, ...]
    start: int = 1
    orientation: str = FORWARD

    @property
    def p(self) -> int:
        return len(self.fundamental)

    @property
    def minimal(self) -> tuple[int, ...]:
        return self.fundamental[: self.q]

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "p": self.p,
            "q": self.q,
            "t": self.t,
            "fundamental": list(self.fundamental),
            "minimal": list(self.minimal),
            "j_prefix": list(self.j_prefix),
            "start": self.start,
            "orientation": self.orientation,
            "lap_bound": check_lap_bound(self),
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "CircularAnalysis":
        return cls(data["m"], data["k"], tuple(data["fundamental"]), data["q"], data["t"],
                   tuple(data["j_prefix"]), data["start"], data["orientation"])


def check_lap_bound(a: CircularAnalysis) -> bool:
    return a.p >= a.t * (a.q - 1) + 1


def circular_analysis(s: SuccessorMap, m: int, start: int = 1) -> CircularAnalysis:
    if s.m != m:
        raise ValueError(f"successor map is for m={s.m}, not {m}")
    # j[i] holds j_{i+1}; first_seen maps a residue to its orbit index
    j = [start]
    residues = [start]
    first_seen = {start: 0}
    while True:
        r = residues[-1]
        nxt = s.succ(r)
        j.append(j[-1] + s.step(r))
        if nxt in first_seen:
            k = first_seen[nxt]
            break
        first_seen[nxt] = len(residues)
        residues.append(nxt)
    p = len(residues) - k
    fundamental = tuple(residues[k:])
    lap, rem = divmod(j[k + p] - j[k], m)
    if rem:
        raise AssertionError("period does not close on a whole number of laps")
    q = next(i for i in range(1, p + 1) if j[k + i] >= j[k] + m)
    a = CircularAnalysis(m, k, fundamental, q, lap, tuple(j))
    if not check_lap_bound(a):
        raise AssertionError(f"lap bound violated: p={p}, q={q}, t={lap}")
    return a


def traversal_position(m: int, start: int, orientation: str, r: int) -> int:
    """Original position of the r-th nodal zone met from ``start``."""
    if orientation == FORWARD:
        return (start - 1 + r - 1) % m + 1
    if orientation == REFLECTED:
        return (start - 1 - (r - 1)) % m + 1
    raise ValueError(f"unknown orientation {orientation!r}")


def traversal_segment(m: int, start: int, orientation: str, r: int) -> int:
    """Original index of the segment entering the r-th nodal zone of a traversal."""
    if orientation == FORWARD:
        return traversal_position(m, start, orientation, r)
    # walking backwards, the segment before the r-th zone follows it in the original order
    return traversal_position(m, start, orientation, r - 1)


def traversal_word(name: CircularName, start: int, orientation: str) -> CircularName:
    """Letters read from ``start`` in the given direction (not relabelled)."""
    return CircularName(tuple(name.letter(traversal_position(name.m, start, orientation, r))
                              for r in name.positions))


def circular_sequences(name: CircularName, start: int = 1,
                       orientation: str = FORWARD) -> CircularAnalysis:
    m = name.m
    if not 1 <= start <= m:
        raise ValueError(f"start must lie in 1..{m}")
    if orientation == FORWARD:
        a = circular_analysis(successor_map(name), m, start)
        return CircularAnalysis(m, a.k, a.fundamental, a.q, a.t, a.j_prefix, start, FORWARD)
    view = traversal_word(name, start, orientation)
    a = circular_analysis(successor_map(view), m, 1)
    back = tuple(traversal_position(m, start, orientation, r) for r in a.fundamental)
    shifted = tuple(j + start - 1 for j in a.j_prefix)
    return CircularAnalysis(m, a.k, back, a.q, a.t, shifted, start, orientation)


def unrolled_from_prefix(m: int, js: Sequence[int]) -> SuccessorMap:
    """Successor table read off a prefix ``j_1, j_2, ...`` of unrolled cuts."""
    table = {}
    for a, b in zip(js, js[1:]):
        r = (a - 1) % m + 1
        entry = ((b - 1) % m + 1, b - a)
        if table.setdefault(r, entry) != entry:
            raise ValueError(f"prefix is not generated by a single successor map at {r}")
    return SuccessorMap(m, table)
