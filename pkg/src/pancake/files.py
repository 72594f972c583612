"""JSON descriptor files.

    {"kind": "snake", "word": "[abab]",
     "clusters": [{"nodes": ["a", "b"], "partition": [[1, 3], [2]]}]}
    {"kind": "circular", "word": "[abab]", "start": 2, "orientation": "reflected"}
    {"kind": "circular-no-nodes", "multiplicity": 3}

Node letters in ``clusters`` refer to the word as written.  Segments not
listed in any partition are singleton clusters.  Unknown fields are errors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from .model import (
    CIRCULAR,
    LINEAR,
    CircularDescriptor,
    ClusterData,
    NoNodesDescriptor,
    SnakeDescriptor,
    WordError,
    canonicalize,
    format_letters,
    parse_word,
    segment_pair,
    word_tokens,
)
from .seq import FORWARD, ORIENTATIONS

SNAKE = "snake"
CIRCULAR_FILE = "circular"
NO_NODES_FILE = "circular-no-nodes"

_FIELDS = {
    SNAKE: {"kind", "word", "clusters", "orientation"},
    CIRCULAR_FILE: {"kind", "word", "clusters", "start", "orientation"},
    NO_NODES_FILE: {"kind", "multiplicity"},
}


class DescriptorFileError(ValueError):
    pass


@dataclass(frozen=True)
class DescriptorFile:
    descriptor: SnakeDescriptor | CircularDescriptor | NoNodesDescriptor
    start: int = 1
    orientation: str = FORWARD

    @property
    def kind(self) -> str:
        return self.descriptor.kind


def descriptor_from_dict(data: Mapping, *, strict_word: bool = True) -> DescriptorFile:
    if not isinstance(data, Mapping):
        raise DescriptorFileError("descriptor must be a JSON object")
    kind = data.get("kind")
    if kind not in _FIELDS:
        raise DescriptorFileError(f"unknown kind {kind!r}")
    extra = set(data) - _FIELDS[kind]
    if extra:
        raise DescriptorFileError(f"unknown fields for {kind}: {sorted(extra)}")

    if kind == NO_NODES_FILE:
        m = data.get("multiplicity")
        if not isinstance(m, int) or isinstance(m, bool):
            raise DescriptorFileError("multiplicity must be an integer")
        try:
            return DescriptorFile(NoNodesDescriptor(m))
        except ValueError as exc:
            raise DescriptorFileError(str(exc)) from exc

    word_kind = LINEAR if kind == SNAKE else CIRCULAR
    if not isinstance(data.get("word"), str):
        raise DescriptorFileError("word must be a string")
    try:
        tokens = word_tokens(data["word"], word_kind)
        name = parse_word(data["word"], word_kind, strict=strict_word)
    except WordError as exc:
        raise DescriptorFileError(str(exc)) from exc
    relabel = dict(zip(tokens, canonicalize(tokens)))

    blocks = []
    for entry in data.get("clusters", []):
        if not isinstance(entry, Mapping) or set(entry) != {"nodes", "partition"}:
            raise DescriptorFileError("cluster entries need exactly 'nodes' and 'partition'")
        nodes = entry["nodes"]
        if len(nodes) != 2 or any(x not in relabel for x in nodes):
            raise DescriptorFileError(f"bad node pair {nodes!r}")
        pair = tuple(sorted(relabel[x] for x in nodes))
        for block in entry["partition"]:
            for s in block:
                if s not in name.segments or segment_pair(name, s) != pair:
                    raise DescriptorFileError(f"segment {s} does not join nodes {nodes}")
            blocks.append(block)
    try:
        clusters = ClusterData.build(name, blocks)
    except ValueError as exc:
        raise DescriptorFileError(str(exc)) from exc

    orientation = data.get("orientation", FORWARD)
    if orientation not in ORIENTATIONS:
        raise DescriptorFileError(f"orientation must be one of {ORIENTATIONS}")
    start = data.get("start", 1)
    if kind == CIRCULAR_FILE:
        if not isinstance(start, int) or not 1 <= start <= name.m:
            raise DescriptorFileError(f"start must be a position in 1..{name.m}")
        return DescriptorFile(CircularDescriptor(name, clusters), start, orientation)
    return DescriptorFile(SnakeDescriptor(name, clusters), 1, orientation)


def descriptor_to_dict(df: DescriptorFile | SnakeDescriptor | CircularDescriptor | NoNodesDescriptor) -> dict:
    if not isinstance(df, DescriptorFile):
        df = DescriptorFile(df)
    d = df.descriptor
    if isinstance(d, NoNodesDescriptor):
        return {"kind": NO_NODES_FILE, "multiplicity": d.multiplicity}
    name = d.name
    out: dict = {"kind": SNAKE if name.kind == LINEAR else CIRCULAR_FILE, "word": str(name)}
    entries = []
    for pair, parts in d.clusters.entries(name).items():
        if any(len(p) > 1 for p in parts):
            letters = [format_letters([x])[1:-1] for x in pair]
            entries.append({"nodes": letters, "partition": [list(p) for p in parts]})
    if entries:
        out["clusters"] = entries
    if name.kind == CIRCULAR and df.start != 1:
        out["start"] = df.start
    if df.orientation != FORWARD:
        out["orientation"] = df.orientation
    return out


def load_descriptor(path: str | Path, *, strict_word: bool = True) -> DescriptorFile:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DescriptorFileError(f"{path}: invalid JSON: {exc}") from exc
    return descriptor_from_dict(data, strict_word=strict_word)
