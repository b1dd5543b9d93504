"""Representants that avoid a classical pattern.

With pattern constraints the labeling of the graph suddenly matters, and
uniform extension is no longer available; instead, letter multiplicities are
bounded (a letter of degree >= 2 appears at most twice in any 3-letter-
pattern-avoiding representant), which keeps refutations exhaustive.
"""

from wordrep import (
    contains_pattern,
    count_pattern_avoiding_representants,
    find_pattern_avoiding_word,
    multiplicity_caps,
)
from wordrep import families
from wordrep.graphs import Graph

# the same star, two labelings: with pattern 132 both happen to be
# representable, but the witnesses differ in shape
left = Graph(4, [(1, 2), (1, 3), (1, 4)])   # center carries the smallest label
right = Graph(4, [(4, 1), (4, 2), (4, 3)])  # center carries the largest label
for name, g in (("center-1 star", left), ("center-4 star", right)):
    out = find_pattern_avoiding_word(g, (1, 3, 2))
    print(f"{name}: {out.status}", "".join(map(str, out.witness or ())))
print()

# the 6-star has no 123-avoiding representant at all; the refutation is
# exhaustive because every letter's multiplicity is capped by its degree
star = families.star(6)
caps, complete = multiplicity_caps(star, (1, 2, 3))
out = find_pattern_avoiding_word(star, (1, 2, 3))
print("K_{1,6} with pattern 123:", out.status, "| caps:", caps, "| exhaustive:", complete)
print()

# cycles avoid both patterns; complete graphs have closed-form words
for n in (4, 5, 6):
    w = find_pattern_avoiding_word(families.cycle(n), (1, 2, 3)).witness
    print(f"123-avoiding word for C{n}:", "".join(map(str, w)))
w = families.pattern_avoiding_fixture("cycle", 5, (1, 3, 2))
print("closed-form 132-avoiding word for C5:", "".join(map(str, w)))
w = families.pattern_avoiding_fixture("complete", 5, (1, 2, 3))
print("closed-form 123-avoiding word for K5:", "".join(map(str, w)))
print()

# counting distinct 132-avoiding representants of complete graphs: the
# counts follow a Catalan-number formula
for n, max_len in ((3, 6), (4, 7), (5, 8)):
    c = count_pattern_avoiding_representants(families.complete(n), (1, 3, 2), max_len)
    print(f"K{n} has {c} distinct 132-avoiding representants")
