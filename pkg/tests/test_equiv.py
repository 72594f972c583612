import random

import pytest

from pancake.decomp import greedy_circular, greedy_linear, greedy_no_nodes
from pancake.equiv import (
    DecompositionSignature,
    apply_witness,
    circular_weak_equiv,
    cluster_correspondence_check,
    decomposition_signature,
    decompositions_weak_equiv,
    no_nodes_weak_equiv,
    snake_weak_equiv,
    weak_equiv,
    witnesses,
)
from pancake.gen import GenParams, enumerate_names, random_circular_name, random_clusters
from pancake.model import (
    CircularDescriptor,
    ClusterData,
    NoNodesDescriptor,
    SnakeDescriptor,
    parse_word,
    reflect,
    reverse_orientation,
    rotate,
)


def snake(text, parts=()):
    name = parse_word(text)
    return SnakeDescriptor(name, ClusterData.build(name, parts))


def circ(text, parts=()):
    name = parse_word(text, "circular")
    return CircularDescriptor(name, ClusterData.build(name, parts))


class TestSnake:
    def test_identity(self):
        w = snake_weak_equiv(snake("[abacdbcd]"), snake("[abacdbcd]"))
        assert w is not None and not w.flip
        assert w.bijection == (0, 1, 2, 3)

    def test_reversal(self):
        w = snake_weak_equiv(snake("[abacdbcd]"), snake("[abcabdcd]"))
        assert w is not None and w.flip
        # a b a c d b c d read backwards is d c b d c a b a
        assert w.bijection == (3, 2, 1, 0)

    def test_relabel_is_free(self):
        d1 = SnakeDescriptor(parse_word("[abab]"))
        assert snake_weak_equiv(d1, snake("[x7x2x7x2]")) is not None

    def test_different(self):
        assert snake_weak_equiv(snake("[abab]"), snake("[abac]")) is None
        assert snake_weak_equiv(snake("[abab]"), snake("[ababa]")) is None

    def test_clusters(self):
        base = snake("[ababa]")
        merged = snake("[ababa]", [[1, 3]])
        assert snake_weak_equiv(base, merged) is None
        # flipping sends segment 1 to 4 and 3 to 2
        w = snake_weak_equiv(snake("[ababa]", [[1, 3]]), snake("[ababa]", [[2, 4]]))
        assert w is not None and w.flip
        assert snake_weak_equiv(snake("[ababa]", [[1, 3]]), snake("[ababa]", [[1, 3]])).flip is False

    def test_correspondence_check(self):
        d1, d2 = snake("[ababa]", [[1, 3]]), snake("[ababa]", [[2, 4]])
        identity = next(witnesses(SnakeDescriptor(d1.name), SnakeDescriptor(d2.name)))
        assert not cluster_correspondence_check(d1, d2, identity)

    def test_kind_mismatch(self):
        with pytest.raises(TypeError):
            weak_equiv(snake("[abab]"), circ("[abab]"))
        with pytest.raises(TypeError):
            weak_equiv(snake("[abab]"), NoNodesDescriptor(3))


class TestCircular:
    def test_rotation(self):
        d = circ("[abcadb]")
        for s in range(6):
            w = circular_weak_equiv(d, CircularDescriptor(rotate(d.name, s)))
            assert w is not None
            assert apply_witness(d, w) == CircularDescriptor(rotate(d.name, s))

    def test_reflection(self):
        d = circ("[abcadbdc]")
        other = CircularDescriptor(reflect(d.name))
        w = circular_weak_equiv(d, other)
        assert w is not None
        assert apply_witness(d, w) == other

    def test_not_equivalent(self):
        assert circular_weak_equiv(circ("[abab]"), circ("[abcabc]")) is None
        assert circular_weak_equiv(circ("[abcabd]"), circ("[abcadb]")) is None

    def test_clusters_rotate(self):
        d1 = circ("[abab]", [[1, 3]])
        d2 = circ("[abab]", [[2, 4]])
        w = circular_weak_equiv(d1, d2)
        assert w is not None
        assert w.map_cuts({1, 3}) == {2, 4}

    def test_inverse(self):
        d1 = circ("[abcadbdc]", [])
        d2 = CircularDescriptor(rotate(reflect(d1.name), 3))
        w = circular_weak_equiv(d1, d2)
        inv = w.inverse()
        assert apply_witness(d2, inv) == d1
        assert all(inv.segments[w.segments[s]] == s for s in d1.name.segments)

    def test_no_nodes(self):
        assert no_nodes_weak_equiv(NoNodesDescriptor(3), NoNodesDescriptor(3))
        assert not no_nodes_weak_equiv(NoNodesDescriptor(3), NoNodesDescriptor(4))
        assert weak_equiv(NoNodesDescriptor(5), NoNodesDescriptor(5)) is True


class TestLaws:
    def test_reflexive_symmetric_exhaustive(self):
        names = list(enumerate_names(7, 3, "circular"))
        for a in names:
            assert circular_weak_equiv(a, a) is not None
        rng = random.Random(4)
        for _ in range(300):
            a, b = rng.choice(names), rng.choice(names)
            assert (circular_weak_equiv(a, b) is None) == (circular_weak_equiv(b, a) is None)

    def test_classes_are_dihedral_orbits(self):
        names = list(enumerate_names(7, 3, "circular"))
        for a in names:
            orbit = {rotate(x, s) for x in (a, reflect(a)) for s in range(a.m)}
            for b in names:
                if len(b) == len(a):
                    assert (circular_weak_equiv(a, b) is not None) == (b in orbit)

    def test_random_with_clusters(self):
        rng = random.Random(9)
        params = GenParams(length=(4, 12), alphabet=(2, 4), level="strict")
        for _ in range(100):
            name = random_circular_name(params, rng)
            d = CircularDescriptor(name, random_clusters(CircularDescriptor(name), rng))
            s, flip = rng.randrange(name.m), rng.random() < 0.5
            w0 = next(witnesses(CircularDescriptor(name),
                                CircularDescriptor(rotate(reflect(name) if flip else name, s))))
            image = apply_witness(d, w0)
            w = circular_weak_equiv(d, image)
            assert w is not None
            assert apply_witness(d, w) == image


class TestSignatures:
    def test_snake8(self, snake8):
        s1 = decomposition_signature(greedy_linear(snake8))
        s2 = decomposition_signature(greedy_linear(reverse_orientation(snake8)))
        assert (s1.sizes, s2.sizes) == ((2, 4, 2), (3, 4, 1))
        assert not s1.matches(s2)

    def test_linear_reversal(self):
        a = DecompositionSignature("linear", (1, 2, 3))
        assert a.matches(DecompositionSignature("linear", (3, 2, 1)))
        assert not a.matches(DecompositionSignature("linear", (2, 3, 1)))

    def test_dihedral(self):
        a = DecompositionSignature("circular", (3, 5, 3, 4))
        assert a.matches(DecompositionSignature("circular", (5, 3, 4, 3)))
        assert a.matches(DecompositionSignature("circular", (4, 3, 5, 3)))
        assert not a.matches(DecompositionSignature("circular", (3, 3, 5, 4)))
        assert not a.matches(DecompositionSignature("circular", (3, 4, 4, 4)))

    def test_no_nodes(self):
        with pytest.raises(ValueError):
            decomposition_signature(greedy_no_nodes(NoNodesDescriptor(3)))


class TestDecompositions:
    def test_snake8_not_equivalent(self, snake8):
        rev = reverse_orientation(snake8)
        res = decompositions_weak_equiv(snake8, greedy_linear(snake8), rev, greedy_linear(rev))
        assert not res
        assert "signature" in res.reason

    def test_same_decomposition(self, snake8):
        dec = greedy_linear(snake8)
        res = decompositions_weak_equiv(snake8, dec, snake8, dec)
        assert res and res.witness is not None

    def test_reflected_greedy_matches(self, snake8):
        # greedy read from the far end is the reversal's greedy, transported
        rev = reverse_orientation(snake8)
        res = decompositions_weak_equiv(snake8, greedy_linear(snake8, "reflected"),
                                        rev, greedy_linear(rev))
        assert res and res.witness.flip

    def test_boundary_must_be_fixed(self):
        # ab|abc and abc|bc: the flip carries cut S_2 to S_3, but it swaps the
        # boundary arcs, so both forward greedy decompositions are rejected
        w, r = parse_word("[ababc]"), parse_word("[abcbc]")
        assert reverse_orientation(w) == r
        res = decompositions_weak_equiv(w, greedy_linear(w), r, greedy_linear(r))
        assert not res
        assert res.reason == "no witness matches the traversal frames"
        assert decompositions_weak_equiv(w, greedy_linear(w, "reflected"), r, greedy_linear(r))

    def test_circular_frame(self):
        name = parse_word("[abcabd]", "circular")
        a = greedy_circular(name, 2)
        assert decompositions_weak_equiv(name, a, name, greedy_circular(name, 2))
        rotated = rotate(name, 1)
        # position 2 of name becomes position 1 of rotated
        assert decompositions_weak_equiv(name, a, rotated, greedy_circular(rotated, 1))

    def test_fifteen(self, fifteen_word):
        a = greedy_circular(fifteen_word, 2)
        b = greedy_circular(fifteen_word, 1)
        c = greedy_circular(fifteen_word, 1, "reflected")
        assert not decompositions_weak_equiv(fifteen_word, a, fifteen_word, c)
        assert not decompositions_weak_equiv(fifteen_word, b, fifteen_word, c)
        assert decompositions_weak_equiv(fifteen_word, a, fifteen_word, a)

    def test_same_sizes_different_cuts(self):
        name = parse_word("[abcabc]", "circular")
        a, b = greedy_circular(name, 1), greedy_circular(name, 2)
        # rotation by one maps cuts {1,4} onto {2,5}
        res = decompositions_weak_equiv(name, a, name, b)
        assert res and res.witness is not None

    def test_not_equivalent_surfaces(self):
        n1, n2 = parse_word("[abcabd]", "circular"), parse_word("[abcadb]", "circular")
        res = decompositions_weak_equiv(n1, greedy_circular(n1), n2, greedy_circular(n2))
        assert not res

    def test_no_nodes(self):
        d3, d4 = NoNodesDescriptor(3), NoNodesDescriptor(4)
        assert decompositions_weak_equiv(d3, greedy_no_nodes(d3), d3, greedy_no_nodes(d3))
        assert not decompositions_weak_equiv(d3, greedy_no_nodes(d3), d4, greedy_no_nodes(d4))

    def test_kind_mismatch(self, snake8):
        name = parse_word("[abab]", "circular")
        with pytest.raises(TypeError):
            decompositions_weak_equiv(snake8, greedy_linear(snake8), name, greedy_circular(name))
