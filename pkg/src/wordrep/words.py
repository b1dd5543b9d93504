"""Words over integer alphabets and their alternation semantics.

A word is any sequence of letters drawn from {1, 2, ...}; functions return
tuples.  Two letters alternate in a word when the projection onto just those
two letters strictly alternates between them; the graph of a word joins
exactly the alternating pairs.
"""

from __future__ import annotations

from collections import Counter

from .graphs import Graph


def as_word(letters):
    w = tuple(int(x) for x in letters)
    if any(x < 1 for x in w):
        raise ValueError("letters must be positive integers")
    return w


def alternates(w, x, y):
    """True iff letters x and y strictly alternate in w."""
    if x == y:
        raise ValueError("letters must be distinct")
    proj = [c for c in w if c in (x, y)]
    if x not in proj:
        raise ValueError(f"letter {x} does not occur")
    if y not in proj:
        raise ValueError(f"letter {y} does not occur")
    return all(a != b for a, b in zip(proj, proj[1:]))


def word_to_graph(w):
    """The graph on {1..n} whose edges are the alternating pairs of w.

    The alphabet of w must be exactly {1..n}; gaps are rejected.
    """
    w = as_word(w)
    if not w:
        raise ValueError("empty word represents no graph")
    alphabet = set(w)
    n = max(alphabet)
    if alphabet != set(range(1, n + 1)):
        missing = sorted(set(range(1, n + 1)) - alphabet)
        raise ValueError(f"alphabet has gaps, missing {missing}")
    # single pass: a pair stops alternating when one letter repeats in the
    # projection, i.e. recurs with no occurrence of the other in between
    last_pos = [-1] * (n + 1)
    prev_pos = [-1] * (n + 1)
    broken = [[False] * (n + 1) for _ in range(n + 1)]
    for i, c in enumerate(w):
        prev = last_pos[c]
        for other in range(1, n + 1):
            if other == c:
                continue
            if last_pos[other] < prev:
                # other did not occur since the previous copy of c
                if prev != -1:
                    broken[c][other] = broken[other][c] = True
        last_pos[c] = i
    edges = [
        (x, y)
        for x in range(1, n + 1)
        for y in range(x + 1, n + 1)
        if not broken[x][y]
    ]
    return Graph(n, edges)


def is_uniform(w, k=None):
    """True iff every letter of w occurs exactly k times (k inferred if omitted)."""
    counts = Counter(w)
    if not counts:
        return True
    values = set(counts.values())
    if k is None:
        return len(values) == 1
    return values == {k}


def initial_permutation(w):
    """The letters of w that occur fewer than the maximum number of times,
    listed in order of their leftmost occurrence.  Empty for uniform words."""
    w = as_word(w)
    counts = Counter(w)
    if not counts:
        return ()
    top = max(counts.values())
    seen = set()
    out = []
    for c in w:
        if counts[c] < top and c not in seen:
            seen.add(c)
            out.append(c)
    return tuple(out)


def extend_to_uniform(w):
    """Prepend initial permutations until every letter occurs equally often.

    The result is k-uniform with k the maximum multiplicity of w, and it
    represents the same graph: prepending one copy of each deficient letter
    in leftmost order preserves every pairwise alternation relation.
    """
    w = as_word(w)
    while True:
        p = initial_permutation(w)
        if not p:
            return w
        w = p + w


def cyclic_shift(w):
    """Move the last letter to the front (for uniform words this preserves
    the represented graph; for non-uniform words it may not)."""
    w = as_word(w)
    if not w:
        return w
    return (w[-1],) + w[:-1]


def delete_letter(w, v):
    """Drop all copies of v (the word of the vertex-deleted subgraph)."""
    return tuple(c for c in as_word(w) if c != v)


# -- classical patterns ------------------------------------------------------


def as_pattern(letters):
    """Validate a classical pattern: a word over {1..k} containing each of
    1..k at least once."""
    t = tuple(int(x) for x in letters)
    if not t:
        raise ValueError("empty pattern")
    k = max(t)
    if set(t) != set(range(1, k + 1)):
        raise ValueError("pattern must use every letter 1..k")
    return t


def contains_pattern(w, pattern):
    """True iff some subsequence of w is order-isomorphic to the pattern.

    Order-isomorphic means the matched letters compare exactly as the
    pattern letters do, including equalities.
    """
    w = tuple(w)
    t = as_pattern(pattern)
    m = len(t)
    if m > len(w):
        return False

    def match(ti, start, chosen):
        if ti == m:
            return True
        for i in range(start, len(w) - (m - ti) + 1):
            c = w[i]
            ok = True
            for tj in range(ti):
                a, b = t[tj], t[ti]
                x = chosen[tj]
                if (a < b) != (x < c) or (a == b) != (x == c):
                    ok = False
                    break
            if ok:
                chosen.append(c)
                if match(ti + 1, i + 1, chosen):
                    return True
                chosen.pop()
        return False

    return match(0, 0, [])


def avoids_pattern(w, pattern):
    return not contains_pattern(w, pattern)
