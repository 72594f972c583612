import itertools
import random

import pytest
from hypothesis import given, strategies as st

from pancake.model import (
    CircularDescriptor,
    CircularName,
    ClusterData,
    NoNodesDescriptor,
    SnakeDescriptor,
    SnakeName,
    WordError,
    canonicalize,
    parse_word,
    reflect,
    reverse_orientation,
    rotate,
    segment_multiplicity,
    segments_between,
    validate,
)
from pancake.gen import enumerate_names


def w(text, kind="linear"):
    return parse_word(text, kind)


class TestParse:
    def test_letters(self):
        assert w("[abab]").letters == (0, 1, 0, 1)
        assert w("[abab]").m == 3

    def test_indexed_tokens(self):
        name = w("[x1x2x1x3x2x3]")
        assert len(name) == 6
        assert len(set(name.letters)) == 3
        assert name == w("[abacbc]")

    def test_multi_digit_tokens(self):
        name = w("[x10x2x10x2]")
        assert name.letters == (0, 1, 0, 1)

    def test_circular_closure_stripped(self):
        name = w("[abcabca]", "circular")
        assert name.letters == (0, 1, 2, 0, 1, 2)
        assert name.m == 6

    def test_circular_without_closure(self):
        assert w("[abab]", "circular").m == 4

    def test_double_bracket_requires_closure(self):
        assert w("[[abcabca]]", "circular").m == 6
        with pytest.raises(WordError, match="closure"):
            w("[[abcabcb]]", "circular")

    @pytest.mark.parametrize("text", ["[]", "abab", "[ab1]", "[aab]", "[a]"])
    def test_errors(self, text):
        with pytest.raises(WordError):
            w(text)

    def test_circular_wraparound_duplicate(self):
        assert w("[aba]", "circular").letters == (0, 1)
        # stripping the closure leaves a,b,a whose ends meet
        with pytest.raises(WordError):
            w("[abaa]", "circular")

    def test_lenient_keeps_duplicates(self):
        assert parse_word("[aab]", strict=False).letters == (0, 0, 1)


class TestCanonical:
    def test_relabel(self):
        d, c, b, a = 3, 2, 1, 0
        assert canonicalize([d, c, b, d, c, a, b, a]) == (0, 1, 2, 0, 1, 3, 2, 3)

    def test_identity_and_swap(self):
        assert canonicalize((0, 1, 0, 1)) == (0, 1, 0, 1)
        assert canonicalize((1, 0, 1, 0)) == (0, 1, 0, 1)

    @given(st.lists(st.integers(0, 6), max_size=30))
    def test_idempotent(self, letters):
        once = canonicalize(letters)
        assert canonicalize(once) == once

    def test_idempotent_exhaustive(self):
        for n in range(1, 9):
            for word in itertools.product(range(3), repeat=n):
                assert canonicalize(canonicalize(word)) == canonicalize(word)


class TestOrientation:
    @pytest.mark.parametrize("src, dst", [
        ("[abacdbcd]", "[abcabdcd]"),
        ("[abab]", "[abab]"),
        ("[ab]", "[ab]"),
    ])
    def test_reverse(self, src, dst):
        assert reverse_orientation(w(src)) == w(dst)

    def test_reverse_involution(self):
        for name in enumerate_names(8, 4):
            assert reverse_orientation(reverse_orientation(name)) == name

    def test_rotate(self):
        name = w("[ababab]", "circular")
        assert rotate(name, 1) == name
        assert rotate(name, 0) == name
        assert rotate(name, name.m) == name

    def test_rotate_moves_start(self):
        name = w("[abcadb]", "circular")
        assert rotate(name, 1).letters == canonicalize((1, 2, 0, 3, 1, 0))

    def test_rotate_group_law(self):
        rng = random.Random(3)
        for name in enumerate_names(8, 4, "circular"):
            a, b = rng.randrange(20), rng.randrange(20)
            assert rotate(rotate(name, a), b) == rotate(name, (a + b) % name.m)

    def test_reflect(self):
        assert reflect(w("[abab]", "circular")) == w("[abab]", "circular")
        # a,b,c,a,b,c read backwards from position 1: a,c,b,a,c,b -> relabelled abcabc
        assert reflect(w("[abcabc]", "circular")) == w("[abcabc]", "circular")
        assert reflect(w("[abcadb]", "circular")).letters == canonicalize("abdacb")

    def test_reflect_involution(self):
        for name in enumerate_names(8, 4, "circular"):
            assert reflect(reflect(name)) == name


class TestValidate:
    def test_strict_pass(self):
        assert validate(w("[abacdbcd]"), "strict").ok

    def test_strict_fail(self):
        report = validate(w("[abc]"), "strict")
        assert not report.ok
        assert report.achieved == "wellformed"
        assert sum(v.level == "strict" for v in report.violations) == 3

    def test_adjacent_duplicate(self):
        report = validate(parse_word("[aab]", strict=False), "wellformed")
        assert not report.ok
        assert report.achieved is None
        assert report.violations[0].positions == (0, 1)

    def test_non_canonical(self):
        report = validate(SnakeName((1, 0, 1)), "wellformed")
        assert not report.ok

    def test_realizable_thresholds(self):
        assert validate(w("[abab]"), "realizable").achieved == "strict"
        assert validate(w("[ababa]"), "realizable").ok
        assert validate(w("[abab]", "circular"), "realizable").achieved == "strict"
        assert validate(w("[abcabc]", "circular"), "realizable").ok

    def test_levels_nested(self):
        for name in enumerate_names(7, 4):
            r = validate(name, "realizable")
            if r.achieved == "realizable":
                assert validate(name, "strict").ok and validate(name, "wellformed").ok
            if validate(name, "strict").ok:
                assert validate(name, "wellformed").ok

    def test_no_nodes(self):
        assert validate(NoNodesDescriptor(3), "realizable").ok

    def test_report_roundtrip(self):
        from pancake.model import ValidationReport

        report = validate(w("[abc]"), "strict")
        assert ValidationReport.from_dict(report.to_dict()) == report


class TestSegments:
    def test_between(self):
        assert segments_between(w("[abacdbcd]"), {0, 1}) == [1, 2]
        assert segments_between(w("[abab]"), {0, 1}) == [1, 2, 3]
        assert segments_between(w("[abab]"), {0, 2}) == []
        assert segments_between(w("[abab]"), {0}) == []

    def test_circular_between(self):
        name = w("[abcabc]", "circular")
        # segment 1 joins N_6 (c) and N_1 (a)
        assert segments_between(name, {0, 2}) == [1, 4]

    def test_partition_of_segments(self):
        for kind in ("linear", "circular"):
            for name in enumerate_names(7, 4, kind):
                letters = sorted(set(name.letters))
                hits = []
                for pair in itertools.combinations(letters, 2):
                    hits += segments_between(name, pair)
                assert sorted(hits) == list(name.segments)

    def test_multiplicity(self):
        name = w("[abab]")
        assert segment_multiplicity(SnakeDescriptor(name), 2) == 1
        d = SnakeDescriptor(name, ClusterData.build(name, [[1, 3], [2]]))
        assert segment_multiplicity(d, 1) == 2
        assert segment_multiplicity(d, 2) == 1
        with pytest.raises(IndexError):
            segment_multiplicity(d, 4)


class TestClusters:
    def test_singletons_default(self):
        d = CircularDescriptor(w("[abab]", "circular"))
        assert len(d.clusters.clusters) == 4

    def test_build_fills_singletons(self):
        name = w("[abab]", "circular")
        data = ClusterData.build(name, [[1, 3]])
        assert data.clusters == {frozenset({1, 3}), frozenset({2}), frozenset({4})}

    def test_mixed_pairs_rejected(self):
        name = w("[abacdbcd]")
        with pytest.raises(ValueError, match="node pair"):
            ClusterData.build(name, [[1, 3]])

    def test_overlap_rejected(self):
        name = w("[abab]")
        with pytest.raises(ValueError):
            ClusterData.build(name, [[1, 3], [3]])

    def test_entries(self):
        name = w("[abab]")
        data = ClusterData.build(name, [[1, 3]])
        assert data.entries(name) == {(0, 1): [(1, 3), (2,)]}
