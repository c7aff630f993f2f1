#!/usr/bin/env python3
"""Recognizing whole stored words with Boolean functions (the CAM view).

A function whose truth set contains the stored word's support drives the
marking-oracle auxiliary to 1 with certainty; a function whose truth set
equals the support pins down the word exactly. Expressions use switching
notation: postfix ' for NOT, juxtaposition for AND, + for OR.
"""

from svmem import cam_match, encode, enumerate_patterns, parse, recognizes

psi = encode("ZZB")  # stores 11000000
names = ["a", "b", "c"]

# a'b' is true exactly on inputs 000 and 001: the support of the word.
f = parse("a'b'", names)
print("stored word:      11000000")
print("function:         a'b'")
print("match certainty:  ", cam_match(psi, f))
print("exact recognition:", recognizes(f, psi))
print()

# A weaker function also matches with certainty but no longer pins the
# word: its truth set strictly contains the support.
weaker = parse("a'", names)
print("function a' matches with p =", cam_match(psi, weaker))
print("but recognizes only-this-word?", recognizes(weaker, psi))
print()

# A near miss: the word 10100000 keeps one stored bit outside the truth
# set of a'b', which costs half the match weight.
other = encode("ZBZ")  # stores bits 0 and 2
print("word 10100000 against a'b': p =", cam_match(other, f))
print()

# Among all 27 three-qubit words, a'b' singles out exactly one.
hits = [p for p in enumerate_patterns(3) if recognizes(f, encode(p))]
print("words recognized by a'b':", [" ".join(t.name for t in p) for p in hits])
