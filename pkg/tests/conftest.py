import itertools

import pytest

from pancake.model import parse_word


def brute_min_blocks(letters, cyclic=False):
    """Fewest distinct-letter blocks, by trying every set of cut positions.

    Cut ``c`` sits between indices ``c-1`` and ``c`` of ``letters``; for a
    cyclic word cut 0 sits between the last and first letters and at least
    two cuts are required.
    """
    n = len(letters)
    slots = range(n) if cyclic else range(1, n)
    for size in range(0, n + 1):
        if cyclic and size < 2:
            continue
        for cuts in itertools.combinations(slots, size):
            if cyclic:
                bounds = list(cuts) + [cuts[0] + n]
                blocks = [[letters[i % n] for i in range(a, b)] for a, b in zip(bounds, bounds[1:])]
            else:
                bounds = [0, *cuts, n]
                blocks = [letters[a:b] for a, b in zip(bounds, bounds[1:])]
            if all(len(set(b)) == len(b) for b in blocks):
                return size if cyclic else size + 1
    raise AssertionError("unreachable")


def brute_greedy_cuts(letters):
    """Greedy cuts written straight from the definition: the least k past the
    previous cut whose window up to k is not primitive."""
    cuts = [0]
    while True:
        prev = cuts[-1]
        nxt = next((k for k in range(prev + 1, len(letters))
                    if len(set(letters[prev:k + 1])) < k + 1 - prev), None)
        if nxt is None:
            return cuts
        cuts.append(nxt)


@pytest.fixture
def snake8():
    """Snake oriented both ways; pancakes of 2,4,2 and 3,4,1 nodal zones."""
    return parse_word("[abacdbcd]")


@pytest.fixture
def laps_word():
    """m=10 circular name whose greedy orbit from N_1 is 1,4,8,12,16,20,..."""
    return parse_word("[abcadcedbe]", "circular")


@pytest.fixture
def fifteen_word():
    """m=15 circular name: start 2 forward gives 1,5,10,13,17,... relative to
    the start; start 1 forward gives 1,4,8,12,16,...; start 1 reflected gives
    1,4,7,12,16,..."""
    return parse_word("[abcadcbadeceacd]", "circular")


# filled by test_acceptance.py, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
