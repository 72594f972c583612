"""Snake names, circular snake names and cluster data.

A snake name is a word of node letters, one letter per nodal zone, read along
the oriented link.  Linear names have positions ``0..m`` and segments
``1..m`` (segment ``i`` joins positions ``i-1`` and ``i``).  Circular names
have positions ``1..m`` and segments ``1..m`` where segment ``i`` joins
positions ``i-1`` and ``i`` modulo ``m`` (so segment 1 joins ``m`` and 1).

Letters are dense integers.  Every name built through :func:`parse_word` or
:meth:`SnakeName.of` is canonical: letters are numbered by first occurrence.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

LINEAR = "linear"
CIRCULAR = "circular"

WELL_FORMED = "wellformed"
STRICT = "strict"
REALIZABLE = "realizable"
LEVELS = (WELL_FORMED, STRICT, REALIZABLE)

# minimum word length (number of nodal zones) for a realizable name
_REALIZABLE_LENGTH = {LINEAR: 5, CIRCULAR: 5}


class WordError(ValueError):
    """Raised for malformed word text or an ill-formed word."""


def canonicalize(letters: Iterable[int]) -> tuple[int, ...]:
    """Relabel letters by order of first occurrence."""
    relabel: dict = {}
    out = []
    for x in letters:
        if x not in relabel:
            relabel[x] = len(relabel)
        out.append(relabel[x])
    return tuple(out)


def format_letters(letters: Sequence[int]) -> str:
    if letters and max(letters) >= 26:
        return "[" + "".join(f"x{x + 1}" for x in letters) + "]"
    return "[" + "".join(chr(ord("a") + x) for x in letters) + "]"


@dataclass(frozen=True)
class SnakeName:
    """Linear snake name ``[x_0 x_1 ... x_m]``."""

    letters: tuple[int, ...]

    kind = LINEAR

    @classmethod
    def of(cls, letters: Iterable[int]) -> "SnakeName":
        return cls(canonicalize(letters))

    @property
    def m(self) -> int:
        """Index of the last nodal zone (= number of segments)."""
        return len(self.letters) - 1

    @property
    def positions(self) -> range:
        return range(len(self.letters))

    @property
    def segments(self) -> range:
        return range(1, len(self.letters))

    def letter(self, pos: int) -> int:
        return self.letters[pos]

    def endpoints(self, seg: int) -> tuple[int, int]:
        """Nodal-zone positions joined by segment ``seg``."""
        if not 1 <= seg <= self.m:
            raise IndexError(f"segment {seg} out of range 1..{self.m}")
        return seg - 1, seg

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_letters(self.letters)


@dataclass(frozen=True)
class CircularName:
    """Circular snake name ``[x_1 ... x_m x_1]``; the closure letter is not stored."""

    letters: tuple[int, ...]

    kind = CIRCULAR

    @classmethod
    def of(cls, letters: Iterable[int]) -> "CircularName":
        return cls(canonicalize(letters))

    @property
    def m(self) -> int:
        return len(self.letters)

    @property
    def positions(self) -> range:
        return range(1, len(self.letters) + 1)

    @property
    def segments(self) -> range:
        return range(1, len(self.letters) + 1)

    def residue(self, i: int) -> int:
        """Representative of ``i`` modulo m in ``1..m``."""
        return (i - 1) % self.m + 1

    def letter(self, pos: int) -> int:
        return self.letters[(pos - 1) % self.m]

    def endpoints(self, seg: int) -> tuple[int, int]:
        if not 1 <= seg <= self.m:
            raise IndexError(f"segment {seg} out of range 1..{self.m}")
        return self.residue(seg - 1), seg

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_letters(self.letters)


Name = SnakeName | CircularName

_TOKEN = re.compile(r"x(\d+)|([a-z])")


def _tokenize(body: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(body):
        if body[pos].isspace():
            pos += 1
            continue
        match = _TOKEN.match(body, pos)
        if match is None:
            raise WordError(f"unexpected character {body[pos]!r} at offset {pos}")
        tokens.append(match.group(0))
        pos = match.end()
    return tokens


def word_tokens(text: str, kind: str = LINEAR) -> list[str]:
    """Letter tokens of a bracketed word, circular closure letter removed."""
    text = text.strip()
    double = text.startswith("[[") and text.endswith("]]")
    if not (text.startswith("[") and text.endswith("]")):
        raise WordError(f"word must be bracketed: {text!r}")
    tokens = _tokenize(text[2:-2] if double else text[1:-1])
    if not tokens:
        raise WordError("empty word")
    if kind == CIRCULAR:
        if double:
            # [[x_1 ... x_m x_1]] always carries the closure letter
            if len(tokens) < 2 or tokens[-1] != tokens[0]:
                raise WordError("closure letter does not match the first letter")
            tokens = tokens[:-1]
        elif len(tokens) > 2 and tokens[-1] == tokens[0]:
            tokens = tokens[:-1]
    elif double:
        raise WordError("double brackets are only used for circular names")
    elif kind != LINEAR:
        raise WordError(f"unknown word kind {kind!r}")
    return tokens


def parse_word(text: str, kind: str = LINEAR, *, strict: bool = True) -> Name:
    """Parse ``[abab]`` or ``[x1x2x1]`` into a canonical name.

    A circular word may repeat its first letter at the end as a closure
    letter; it is stripped (``[[...]]`` requires it).  With ``strict=False``
    adjacent duplicates are kept so that :func:`validate` can report them.
    """
    letters = canonicalize(word_tokens(text, kind))
    cls = SnakeName if kind == LINEAR else CircularName
    name = cls(letters)
    if strict:
        bad = adjacency_violations(name)
        if bad:
            i, j = bad[0]
            raise WordError(f"adjacent duplicate letters at positions {i}-{j}")
        if len(letters) < 2:
            raise WordError("a name needs at least two nodal zones")
    return name


def adjacency_violations(name: Name) -> list[tuple[int, int]]:
    """Pairs of adjacent positions carrying the same letter."""
    if name.kind == LINEAR:
        return [(i - 1, i) for i in name.segments if name.letters[i - 1] == name.letters[i]]
    return [name.endpoints(s) for s in name.segments
            if len(name) > 1 and name.letter(s - 1) == name.letter(s)]


def reverse_orientation(name: SnakeName) -> SnakeName:
    return SnakeName.of(reversed(name.letters))


def rotate(name: CircularName, s: int) -> CircularName:
    """Make old position ``1+s`` the new position 1."""
    s %= name.m
    return CircularName.of(name.letters[s:] + name.letters[:s])


def reflect(name: CircularName) -> CircularName:
    """Reverse the cyclic order, keeping position 1 fixed."""
    first, rest = name.letters[0], name.letters[1:]
    return CircularName.of((first,) + tuple(reversed(rest)))


@dataclass(frozen=True)
class ClusterData:
    """Partition of segment indices into clusters.

    Segments in one cluster are pairwise tangent above the surface exponent;
    every cluster joins a single unordered pair of node letters.  The size
    of a cluster is the multiplicity of its segments.
    """

    clusters: frozenset[frozenset[int]]

    @classmethod
    def singletons(cls, name: Name) -> "ClusterData":
        return cls(frozenset(frozenset([s]) for s in name.segments))

    @classmethod
    def build(cls, name: Name, partitions: Iterable[Iterable[int]] = ()) -> "ClusterData":
        """Clusters from the given blocks; uncovered segments become singletons."""
        blocks = [frozenset(b) for b in partitions]
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise ValueError("empty cluster")
            if seen & b:
                raise ValueError(f"segments {sorted(seen & b)} appear in two clusters")
            seen |= b
        blocks += [frozenset([s]) for s in name.segments if s not in seen]
        data = cls(frozenset(blocks))
        data.check(name)
        return data

    def check(self, name: Name) -> None:
        covered: list[int] = []
        for block in self.clusters:
            pairs = {segment_pair(name, s) for s in block}
            if len(pairs) != 1:
                raise ValueError(f"cluster {sorted(block)} joins more than one node pair")
            covered.extend(block)
        if sorted(covered) != list(name.segments):
            raise ValueError("clusters must partition the segments exactly")

    def cluster_of(self, seg: int) -> frozenset[int]:
        for block in self.clusters:
            if seg in block:
                return block
        raise KeyError(f"unknown segment {seg}")

    def entries(self, name: Name) -> dict[tuple[int, int], list[tuple[int, ...]]]:
        """Cluster partition of each node pair, keyed by sorted letter pair."""
        out: dict[tuple[int, int], list[tuple[int, ...]]] = {}
        for block in sorted(self.clusters, key=min):
            out.setdefault(segment_pair(name, min(block)), []).append(tuple(sorted(block)))
        return out


def segment_pair(name: Name, seg: int) -> tuple[int, int]:
    i, j = name.endpoints(seg)
    a, b = name.letter(i), name.letter(j)
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class SnakeDescriptor:
    name: SnakeName
    clusters: ClusterData = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.clusters is None:
            object.__setattr__(self, "clusters", ClusterData.singletons(self.name))

    @property
    def kind(self) -> str:
        return LINEAR


@dataclass(frozen=True)
class CircularDescriptor:
    name: CircularName
    clusters: ClusterData = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.clusters is None:
            object.__setattr__(self, "clusters", ClusterData.singletons(self.name))

    @property
    def kind(self) -> str:
        return CIRCULAR


NO_NODES = "noNodes"


@dataclass(frozen=True)
class NoNodesDescriptor:
    """Circular snake without nodal zones, known only by its multiplicity."""

    multiplicity: int

    def __post_init__(self):
        if self.multiplicity < 2:
            raise ValueError(f"multiplicity must be at least 2, got {self.multiplicity}")

    @property
    def kind(self) -> str:
        return NO_NODES


Descriptor = SnakeDescriptor | CircularDescriptor


def as_descriptor(obj) -> Descriptor:
    if isinstance(obj, SnakeName):
        return SnakeDescriptor(obj)
    if isinstance(obj, CircularName):
        return CircularDescriptor(obj)
    return obj


@dataclass(frozen=True)
class Violation:
    level: str
    message: str
    positions: tuple[int, ...] = ()

    def __str__(self) -> str:
        where = "-".join(map(str, self.positions))
        return f"[{self.level}] {self.message}" + (f" at {where}" if where else "")


@dataclass(frozen=True)
class ValidationReport:
    requested: str
    achieved: str | None
    violations: tuple[Violation, ...] = field(default=())

    @property
    def ok(self) -> bool:
        if self.achieved is None:
            return False
        return LEVELS.index(self.achieved) >= LEVELS.index(self.requested)

    def to_dict(self) -> dict:
        return {
            "requested": self.requested,
            "achieved": self.achieved,
            "ok": self.ok,
            "violations": [
                {"level": v.level, "message": v.message, "positions": list(v.positions)}
                for v in self.violations
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "ValidationReport":
        return cls(
            data["requested"],
            data["achieved"],
            tuple(Violation(v["level"], v["message"], tuple(v["positions"]))
                  for v in data["violations"]),
        )


def validate(obj, level: str = STRICT) -> ValidationReport:
    """Check a name or descriptor against the nested validation levels.

    Never raises on bad input; every problem ends up in the report.
    """
    if level not in LEVELS:
        raise ValueError(f"unknown level {level!r}")
    if isinstance(obj, NoNodesDescriptor):
        return ValidationReport(level, REALIZABLE)
    desc = as_descriptor(obj)
    name = desc.name
    kind = name.kind
    found: list[Violation] = []

    if len(name) < 2:
        found.append(Violation(WELL_FORMED, "fewer than two nodal zones"))
    for i, j in adjacency_violations(name):
        found.append(Violation(WELL_FORMED, "adjacent duplicate letters", (i, j)))
    if canonicalize(name.letters) != name.letters:
        found.append(Violation(WELL_FORMED, "letters not in first-occurrence order"))
    try:
        desc.clusters.check(name)
    except (ValueError, IndexError) as exc:
        found.append(Violation(WELL_FORMED, f"cluster data: {exc}"))
    well_formed = not found

    counts = Counter(name.letters)
    for letter, n in sorted(counts.items()):
        if n < 2:
            first = name.letters.index(letter) + (1 if kind == CIRCULAR else 0)
            found.append(Violation(STRICT, f"letter {format_letters([letter])[1:-1]} occurs once",
                                   (first,)))
    strict = well_formed and not found

    threshold = _REALIZABLE_LENGTH[kind]
    if len(name) < threshold:
        found.append(Violation(REALIZABLE, f"{kind} names need at least {threshold} nodal zones"))
    realizable = strict and len(found) == 0

    achieved = REALIZABLE if realizable else STRICT if strict else WELL_FORMED if well_formed else None
    return ValidationReport(level, achieved, tuple(found))


def require_well_formed(name: Name) -> None:
    if len(name) < 2 or adjacency_violations(name):
        raise WordError(f"{name} is not a well-formed {name.kind} name")


def segments_between(obj, pair: Iterable[int]) -> list[int]:
    """Segments whose two endpoint letters form the given unordered pair."""
    name = as_descriptor(obj).name
    pair = sorted(set(pair))
    if len(pair) != 2:
        return []
    return [s for s in name.segments if segment_pair(name, s) == tuple(pair)]


def segment_multiplicity(desc: Descriptor, seg: int) -> int:
    if seg not in desc.name.segments:
        raise IndexError(f"segment {seg} out of range")
    return len(desc.clusters.cluster_of(seg))


def letter_pairs(name: Name) -> Iterator[tuple[int, int]]:
    return iter(sorted({segment_pair(name, s) for s in name.segments}))
