"""Words, alternation, and the graphs they represent.

A word over {1..n} defines a graph: two letters are joined exactly when they
alternate in the word.  This script walks through alternation, building a
graph from a word, and the uniform-extension procedure.
"""

from wordrep import (
    alternates,
    cyclic_shift,
    extend_to_uniform,
    initial_permutation,
    is_uniform,
    word_to_graph,
)

w = (2, 3, 1, 2, 5, 4, 1, 3, 2, 4, 1, 3, 6, 2)
print("word:", "".join(map(str, w)))
print("2 and 3 alternate:", alternates(w, 2, 3))
print("5 and 6 alternate:", alternates(w, 5, 6))
print("1 and 3 alternate:", alternates(w, 1, 3))
print()

w = (1, 2, 1, 3, 4, 2, 3)
g = word_to_graph(w)
print("word 1213423 represents the graph with edges:", g.edges())
print()

# any permutation gives the complete graph; a palindromic double permutation
# gives the edgeless graph
print("12345 ->", word_to_graph((1, 2, 3, 4, 5)).edges())
print("123454321 has no edges:", word_to_graph((1, 2, 3, 4, 5, 4, 3, 2, 1)).m == 0)
print()

# extending a word until every letter occurs equally often, without changing
# the represented graph
w = (3, 4, 1, 2, 1, 3, 2, 1, 5, 4)
print("word:", "".join(map(str, w)))
print("letters short of the maximum, by first occurrence:", initial_permutation(w))
u = extend_to_uniform(w)
print("uniform extension:", "".join(map(str, u)), "uniform:", is_uniform(u))
print("same graph:", word_to_graph(u) == word_to_graph(w))
print()

# cyclic shifts are harmless on uniform words but not in general
uw = (1, 2, 1, 3, 2, 3)
print("uniform", uw, "->", cyclic_shift(uw), "same graph:",
      word_to_graph(cyclic_shift(uw)) == word_to_graph(uw))
nw = (1, 1, 2)
print("non-uniform 112 shifted twice is 121; graphs equal:",
      word_to_graph(cyclic_shift(cyclic_shift(nw))) == word_to_graph(nw))
