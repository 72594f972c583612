"""
Snake names: parsing, canonical form and validation
===================================================

A snake name is the word of node letters read along the link.  Letters are
only labels, so every word is stored in first-occurrence form.
"""

from pancake import parse_word, reverse_orientation, validate
from pancake.model import reflect, rotate

# letters a..z, or x1, x2, ... for larger alphabets; both give the same name
name = parse_word("[abacdbcd]")
print(name, name.letters, "m =", name.m)
print(parse_word("[x4x9x4x1x2x9x1x2]") == name)

# reading the snake from the other end gives another word for the same surface
print("reversed:", reverse_orientation(name))

# circular names: a trailing copy of the first letter is the closure and is dropped
ring = parse_word("[abcabca]", "circular")
print(ring, "m =", ring.m)
print("rotated by 1:", rotate(parse_word("[abcadb]", "circular"), 1))
print("reflected:", reflect(parse_word("[abcadb]", "circular")))

# three validation levels; the report never raises
for text in ("[abacdbcd]", "[abc]", "[abab]"):
    report = validate(parse_word(text), "realizable")
    print(text, "->", report.achieved, [str(v) for v in report.violations][:1])
