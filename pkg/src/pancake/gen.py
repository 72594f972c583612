"""Random and exhaustive instance generation."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from .model import (
    CIRCULAR,
    LEVELS,
    LINEAR,
    STRICT,
    WELL_FORMED,
    CircularName,
    ClusterData,
    SnakeName,
    as_descriptor,
    segment_pair,
    validate,
)

MAX_TRIES = 10_000


class GenerationError(ValueError):
    pass


def _span(v) -> tuple[int, int]:
    if isinstance(v, int):
        return v, v
    lo, hi = v
    return lo, hi


@dataclass(frozen=True)
class GenParams:
    """Word length (number of nodal zones) and number of distinct letters, as
    an int or an inclusive ``(lo, hi)`` range."""

    length: tuple[int, int] | int
    alphabet: tuple[int, int] | int
    level: str = WELL_FORMED
    seed: int = 0
    max_tries: int = MAX_TRIES

    def __post_init__(self):
        object.__setattr__(self, "length", _span(self.length))
        object.__setattr__(self, "alphabet", _span(self.alphabet))
        if self.level not in LEVELS:
            raise ValueError(f"unknown level {self.level!r}")
        for lo, hi in (self.length, self.alphabet):
            if lo > hi:
                raise ValueError("empty range")

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def _feasible(length: int, k: int, kind: str, level: str) -> bool:
    if k < 2 or k > length:
        return False
    if level != WELL_FORMED and length < 2 * k:
        return False
    if kind == CIRCULAR and k == 2 and length % 2:
        return False
    return True


def _random_word(params: GenParams, kind: str, rng: random.Random | None):
    rng = rng or params.rng()
    cls = SnakeName if kind == LINEAR else CircularName
    shapes = [(n, k)
              for n in range(params.length[0], params.length[1] + 1)
              for k in range(params.alphabet[0], params.alphabet[1] + 1)
              if _feasible(n, k, kind, params.level)]
    if not shapes:
        raise GenerationError(f"no {kind} word satisfies {params}")
    for _ in range(params.max_tries):
        n, k = rng.choice(shapes)
        letters = [rng.randrange(k)]
        for _ in range(n - 1):
            x = rng.randrange(k - 1)
            letters.append(x if x < letters[-1] else x + 1)
        if kind == CIRCULAR and letters[0] == letters[-1]:
            continue
        if len(set(letters)) != k:
            continue
        name = cls.of(letters)
        if validate(name, params.level).ok:
            return name
    raise GenerationError(f"gave up after {params.max_tries} tries for {params}")


def random_snake_name(params: GenParams, rng: random.Random | None = None) -> SnakeName:
    """Rejection-sampled canonical linear name passing ``params.level``.

    Pass ``rng`` to draw many names from one stream; otherwise a fresh
    stream seeded with ``params.seed`` is used.
    """
    return _random_word(params, LINEAR, rng)


def random_circular_name(params: GenParams, rng: random.Random | None = None) -> CircularName:
    return _random_word(params, CIRCULAR, rng)


@lru_cache(maxsize=None)
def bell(n: int) -> int:
    """Number of set partitions of an n-element set."""
    if n == 0:
        return 1
    return sum(comb(n - 1, k) * bell(k) for k in range(n))


def set_partitions(items: Sequence) -> Iterator[list[list]]:
    """All set partitions of ``items``, each exactly once."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def random_set_partition(items: Sequence, rng: random.Random) -> list[list]:
    """Uniform random set partition.

    The block holding the first item has ``j`` other members with
    probability ``C(n-1, j) * B(n-1-j) / B(n)``.
    """
    items = list(items)
    out = []
    while items:
        n = len(items)
        first, rest = items[0], items[1:]
        x = rng.randrange(bell(n))
        j = 0
        while True:
            w = comb(n - 1, j) * bell(n - 1 - j)
            if x < w:
                break
            x -= w
            j += 1
        mates = rng.sample(rest, j)
        out.append([first] + sorted(mates))
        items = [y for y in rest if y not in mates]
    return out


def random_clusters(desc, seed: int | random.Random) -> ClusterData:
    """A uniformly chosen set partition of each node pair's segments."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    name = as_descriptor(desc).name
    groups: dict[tuple[int, int], list[int]] = {}
    for s in name.segments:
        groups.setdefault(segment_pair(name, s), []).append(s)
    blocks = []
    for pair in sorted(groups):
        blocks.extend(random_set_partition(groups[pair], rng))
    return ClusterData.build(name, blocks)


def _canonical_words(n: int, max_alphabet: int, cyclic: bool) -> Iterator[tuple[int, ...]]:
    word: list[int] = []

    def extend(used: int):
        if len(word) == n:
            if not (cyclic and word[0] == word[-1]):
                yield tuple(word)
            return
        for x in range(min(used + 1, max_alphabet)):
            if word and word[-1] == x:
                continue
            word.append(x)
            yield from extend(max(used, x + 1))
            word.pop()

    yield from extend(0)


def enumerate_names(max_len: int, max_alphabet: int, kind: str = LINEAR,
                    min_len: int = 2) -> Iterator:
    """Every canonical well-formed name, ordered by (length, letters)."""
    cls = SnakeName if kind == LINEAR else CircularName
    for n in range(max(min_len, 2), max_len + 1):
        for letters in _canonical_words(n, max_alphabet, kind == CIRCULAR):
            yield cls(letters)


def strict_names(max_len: int, max_alphabet: int, kind: str = LINEAR) -> Iterator:
    return (w for w in enumerate_names(max_len, max_alphabet, kind) if validate(w, STRICT).ok)
