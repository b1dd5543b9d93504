"""Representant synthesis by pruned exhaustive search.

`find_k_uniform_word` searches the k-uniform words over the graph's alphabet;
its refutations are exhaustive, which makes `representation_number` exact.
The pattern-avoiding search drops uniformity (extending a word to uniform can
introduce pattern occurrences) and instead bounds letter multiplicities:
any word avoiding a length-3 pattern uses a degree>=2 letter at most twice
and a letter adjacent to such a vertex at most three times, and for 132 a
representable graph always has a witness with every letter at most twice.

All searches are deterministic: letters are tried in increasing order.  The
uniform search additionally keeps the word's first-occurrence sequence
lexicographically minimal within the graph's automorphism group, which is
sound because relabeling by an automorphism maps representants to
representants of the same labeled graph (and pruning against any subset of
the group stays sound, so huge groups are capped).
"""

from __future__ import annotations

import math
import time
from itertools import permutations

from .graphs import CeilingExceeded, automorphisms, max_clique_size, _bits
from .outcome import BUDGET_EXHAUSTED, REFUTED, WITNESS, SearchOutcome, _Budget
from .words import as_pattern, word_to_graph

LENGTH_CEILING = 36
AUTOMORPHISM_CAP = 2048


class _OutOfBudget(Exception):
    pass


def _pair_tables(g):
    """last-occurring letter (-1 if none) and broken flag per letter pair."""
    n = g.n
    last = [[-1] * n for _ in range(n)]
    broken = [[False] * n for _ in range(n)]
    return last, broken


class _UniformSearch:
    """Position-by-position search for a k-uniform representant.

    Invariants kept after every placement: every adjacent pair's projection
    still strictly alternates, and every non-adjacent pair can still end up
    non-alternating with the remaining copies.  Reaching full length thus
    guarantees a representant.
    """

    def __init__(self, g, k, budget):
        self.g = g
        self.n = g.n
        self.k = k
        self.adj = g.adj
        self.budget = budget
        self.remaining = [k] * g.n
        self.last, self.broken = _pair_tables(g)
        self.word = []
        auts = automorphisms(g, limit=AUTOMORPHISM_CAP)
        self.auts = [a for a in auts if any(a[i] != i for i in range(g.n))]
        self.active = list(range(len(self.auts)))  # fix word prefix pointwise

    def _placeable(self, x):
        if self.remaining[x] == 0:
            return False
        lx = self.last[x]
        for y in _bits(self.adj[x]):
            if lx[y] == x:
                return False  # adjacent pair would repeat in projection
        return True

    def _feasible_after(self, x):
        rem = self.remaining
        lx = self.last[x]
        bx = self.broken[x]
        for y in range(self.n):
            if y == x:
                continue
            if self.adj[x] >> y & 1:
                if rem[y] == 0 and rem[x] > 0:
                    return False  # no copies of y left to separate future x's
            else:
                if bx[y]:
                    continue
                last = lx[y]
                if last == x:
                    if rem[x] == 0 and rem[y] < 2:
                        return False
                elif last == y:
                    if rem[y] == 0 and rem[x] < 2:
                        return False
                else:  # neither placed yet
                    if not (
                        (rem[x] >= 2 and rem[y] >= 1)
                        or (rem[y] >= 2 and rem[x] >= 1)
                    ):
                        return False
        return True

    def _place(self, x):
        trail = []
        lx = self.last[x]
        bx = self.broken[x]
        adjx = self.adj[x]
        for y in range(self.n):
            if y == x:
                continue
            old = lx[y]
            trail.append((y, old, bx[y]))
            if old == x and not adjx >> y & 1:
                bx[y] = self.broken[y][x] = True
            lx[y] = self.last[y][x] = x
        self.remaining[x] -= 1
        self.word.append(x)
        return trail

    def _unplace(self, x, trail):
        self.word.pop()
        self.remaining[x] += 1
        for y, old, was_broken in reversed(trail):
            self.last[x][y] = self.last[y][x] = old
            self.broken[x][y] = self.broken[y][x] = was_broken

    def search(self, depth=0):
        if not self.budget.tick():
            raise _OutOfBudget
        if depth == self.n * self.k:
            return tuple(c + 1 for c in self.word)
        for x in range(self.n):
            if not self._placeable(x):
                continue
            new_letter = self.remaining[x] == self.k
            saved_active = None
            if new_letter:
                ok = True
                survivors = []
                for ai in self.active:
                    image = self.auts[ai][x]
                    if image < x:
                        ok = False
                        break
                    if image == x:
                        survivors.append(ai)
                if not ok:
                    continue
                saved_active = self.active
                self.active = survivors
            trail = self._place(x)
            if self._feasible_after(x):
                result = self.search(depth + 1)
                if result is not None:
                    return result
            self._unplace(x, trail)
            if new_letter:
                self.active = saved_active
        return None


def find_k_uniform_word(
    g, k, max_nodes=None, max_seconds=None, length_ceiling=LENGTH_CEILING
):
    """Search for a k-uniform word representing the labeled graph g.

    A refuted outcome is exhaustive over all k-uniform words; the
    automorphism symmetry reduction never prunes the last witness.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n * k > length_ceiling:
        raise CeilingExceeded(
            f"word length {g.n * k} exceeds ceiling {length_ceiling}"
        )
    start = time.monotonic()
    if g.n == 0:
        return SearchOutcome(WITNESS, (), 0, 0.0)
    budget = _Budget(max_nodes, max_seconds)
    searcher = _UniformSearch(g, k, budget)
    try:
        witness = searcher.search()
    except _OutOfBudget:
        return SearchOutcome(
            BUDGET_EXHAUSTED, None, budget.nodes, time.monotonic() - start
        )
    elapsed = time.monotonic() - start
    if witness is None:
        return SearchOutcome(REFUTED, None, budget.nodes, elapsed)
    if word_to_graph(witness) != g:
        raise AssertionError("uniform search returned a non-representing word")
    return SearchOutcome(WITNESS, witness, budget.nodes, elapsed)


def representation_number(g, max_nodes=None, max_seconds=None):
    """Least k such that g has a k-uniform representant; math.inf when the
    orientation search refutes representability outright.

    Every non-complete representable graph is 2(n - clique number)-uniform
    representable, so the loop is capped by that bound.
    """
    from .orientation import is_word_representable

    if not is_word_representable(g, max_nodes=max_nodes, max_seconds=max_seconds):
        return math.inf
    bound = max(1, 2 * (g.n - max_clique_size(g)))
    for k in range(1, bound + 1):
        outcome = find_k_uniform_word(
            g, k, max_nodes=max_nodes, max_seconds=max_seconds
        ).require_conclusive()
        if outcome.found:
            return k
    raise AssertionError(
        "representable graph had no witness within the uniform bound"
    )


# -- pattern-avoiding search ---------------------------------------------------


def _ends_with_occurrence(word, t):
    """Does some occurrence of pattern t end at the last letter of word?"""
    m = len(t)
    L = len(word)
    if L < m:
        return False
    z = word[-1]
    if m == 3:
        # specialize the two patterns with completeness guarantees
        if t == (1, 3, 2):
            lo = None
            for j in range(L - 1):
                if lo is not None and lo < z and word[j] > z:
                    return True
                if lo is None or word[j] < lo:
                    lo = word[j]
            return False
        if t == (1, 2, 3):
            lo = None
            for j in range(L - 1):
                if lo is not None and lo < word[j] < z:
                    return True
                if lo is None or word[j] < lo:
                    lo = word[j]
            return False

    def extend(ti, start, chosen):
        if ti == m - 1:
            for tj in range(m - 1):
                a, b = t[tj], t[m - 1]
                x = chosen[tj]
                if (a < b) != (x < z) or (a == b) != (x == z):
                    return False
            return True
        for i in range(start, L - 1):
            c = word[i]
            ok = True
            for tj in range(ti):
                a, b = t[tj], t[ti]
                x = chosen[tj]
                if (a < b) != (x < c) or (a == b) != (x == c):
                    ok = False
                    break
            if ok:
                chosen.append(c)
                if extend(ti + 1, i + 1, chosen):
                    return True
                chosen.pop()
        return False

    return extend(0, 0, [])


def multiplicity_caps(g, t):
    """Per-vertex copy caps for a t-avoiding representant search.

    For a pattern of length m = k+1: a vertex of degree >= k carries at most
    k copies in any t-avoiding representant, and a vertex adjacent to such a
    vertex at most k+1.  For t = 132 every vertex is capped at 2 (a
    132-representable graph always has such a witness).  Vertices covered by
    neither rule get max(3, k+1), and the search is then only complete
    within that cap.
    """
    t = as_pattern(t)
    k = len(t) - 1
    caps = {}
    covered = {}
    for v in g.vertices():
        if g.degree(v) >= k:
            caps[v] = k
            covered[v] = True
        elif any(g.degree(u) >= k for u in g.neighbors(v)):
            caps[v] = k + 1
            covered[v] = True
        else:
            caps[v] = max(3, k + 1)
            covered[v] = False
    if t == (1, 3, 2):
        caps = {v: min(2, c) for v, c in caps.items()}
        covered = {v: True for v in covered}
    return caps, all(covered.values())


class _PatternSearch:
    """Search for a t-avoiding representant within per-letter copy caps.

    No automorphism symmetry breaking here: relabeling letters preserves the
    represented graph but not pattern avoidance (labeling matters), so every
    labeled word within the caps must be considered.
    """

    def __init__(self, g, t, caps, budget):
        self.g = g
        self.n = g.n
        self.t = t
        self.adj = g.adj
        self.budget = budget
        self.caps = [caps[v] for v in g.vertices()]
        self.remaining = list(self.caps)
        self.last, self.broken = _pair_tables(g)
        self.word = []  # 1-indexed letters, so pattern checks read naturally
        self.missing = g.n

    def _is_witness(self):
        if self.missing:
            return False
        for x in range(self.n):
            bx = self.broken[x]
            for y in range(x + 1, self.n):
                if not (self.adj[x] >> y & 1) and not bx[y]:
                    return False
        return True

    def _placeable(self, x):
        if self.remaining[x] == 0:
            return False
        lx = self.last[x]
        for y in _bits(self.adj[x]):
            if lx[y] == x:
                return False
        return True

    def _feasible_after(self):
        # edges never go infeasible here (we may simply stop placing a
        # letter), but a still-alternating non-edge must remain breakable
        rem = self.remaining
        for x in range(self.n):
            lx = self.last[x]
            bx = self.broken[x]
            for y in range(x + 1, self.n):
                if self.adj[x] >> y & 1 or bx[y]:
                    continue
                last = lx[y]
                if last == x:
                    if rem[x] == 0 and rem[y] < 2:
                        return False
                elif last == y:
                    if rem[y] == 0 and rem[x] < 2:
                        return False
                else:
                    if not (
                        (rem[x] >= 2 and rem[y] >= 1)
                        or (rem[y] >= 2 and rem[x] >= 1)
                    ):
                        return False
        return True

    def _place(self, x):
        trail = []
        lx = self.last[x]
        bx = self.broken[x]
        adjx = self.adj[x]
        for y in range(self.n):
            if y == x:
                continue
            old = lx[y]
            trail.append((y, old, bx[y]))
            if not adjx >> y & 1 and old == x:
                bx[y] = self.broken[y][x] = True
            lx[y] = self.last[y][x] = x
        if self.remaining[x] == self.caps[x]:
            self.missing -= 1
        self.remaining[x] -= 1
        self.word.append(x + 1)
        return trail

    def _unplace(self, x, trail):
        self.word.pop()
        self.remaining[x] += 1
        if self.remaining[x] == self.caps[x]:
            self.missing += 1
        for y, old, was_broken in reversed(trail):
            self.last[x][y] = self.last[y][x] = old
            self.broken[x][y] = self.broken[y][x] = was_broken

    def search(self):
        if not self.budget.tick():
            raise _OutOfBudget
        if self._is_witness():
            return tuple(self.word)
        if len(self.word) == sum(self.caps):
            return None
        for x in range(self.n):
            if not self._placeable(x):
                continue
            trail = self._place(x)
            if not _ends_with_occurrence(self.word, self.t) and self._feasible_after():
                result = self.search()
                if result is not None:
                    return result
            self._unplace(x, trail)
        return None


def find_pattern_avoiding_word(g, t, max_nodes=None, max_seconds=None):
    """Search for a t-avoiding word representing the labeled graph g.

    For t in {132, 123} refutations are exhaustive whenever every vertex is
    covered by the multiplicity theorems (always, for 132); the outcome's
    detail records the caps used and whether the refutation is complete.
    """
    t = as_pattern(t)
    start = time.monotonic()
    caps, complete = multiplicity_caps(g, t)
    budget = _Budget(max_nodes, max_seconds)
    searcher = _PatternSearch(g, t, caps, budget)
    detail = {"caps": caps, "exhaustive": complete, "pattern": t}
    try:
        witness = searcher.search()
    except _OutOfBudget:
        return SearchOutcome(
            BUDGET_EXHAUSTED, None, budget.nodes, time.monotonic() - start, detail
        )
    elapsed = time.monotonic() - start
    if witness is None:
        return SearchOutcome(REFUTED, None, budget.nodes, elapsed, detail)
    if word_to_graph(witness) != g:
        raise AssertionError("pattern search returned a non-representing word")
    from .words import contains_pattern

    if contains_pattern(witness, t):
        raise AssertionError("pattern search returned a word containing the pattern")
    return SearchOutcome(WITNESS, witness, budget.nodes, elapsed, detail)


def count_pattern_avoiding_representants(g, t, max_len):
    """Exact number of t-avoiding words of length <= max_len representing the
    labeled graph g."""
    t = as_pattern(t)
    if g.n**max_len > 10**8:
        raise CeilingExceeded("alphabet**length too large for exhaustive count")
    n = g.n
    adj = g.adj
    last, broken = _pair_tables(g)
    word = []
    count = 0

    def is_witness(seen_mask):
        if seen_mask != (1 << n) - 1:
            return False
        for x in range(n):
            bx = broken[x]
            for y in range(x + 1, n):
                if not (adj[x] >> y & 1) and not bx[y]:
                    return False
        return True

    def rec(seen_mask):
        nonlocal count
        if is_witness(seen_mask):
            count += 1
        if len(word) == max_len:
            return
        for x in range(n):
            lx = last[x]
            if any(lx[y] == x for y in _bits(adj[x])):
                continue
            word.append(x + 1)
            if _ends_with_occurrence(word, t):
                word.pop()
                continue
            trail = []
            bx = broken[x]
            for y in range(n):
                if y == x:
                    continue
                old = lx[y]
                trail.append((y, old, bx[y]))
                if not adj[x] >> y & 1 and old == x:
                    bx[y] = broken[y][x] = True
                lx[y] = last[y][x] = x
            rec(seen_mask | 1 << x)
            word.pop()
            for y, old, was_broken in reversed(trail):
                last[x][y] = last[y][x] = old
                broken[x][y] = broken[y][x] = was_broken

    rec(0)
    return count


# -- representation by concatenations of permutations ---------------------------


def permutational_representation_number(g, max_p=3, perm_ceiling=6):
    """Least p such that a concatenation of p permutations of the vertices
    represents g, or a refutation up to max_p.

    A pair alternates in a concatenation of permutations exactly when every
    permutation orders it the same way, so edges must agree with the first
    permutation everywhere and every non-edge must flip somewhere.
    """
    if g.n > perm_ceiling:
        raise CeilingExceeded(f"permutation search supports n <= {perm_ceiling}")
    start = time.monotonic()
    n = g.n
    nodes = 0
    if n == 0:
        return SearchOutcome(WITNESS, (), 0, 0.0, {"permutations": 0})
    edges = [(u - 1, v - 1) for u, v in g.edges()]
    nonedges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if not g.adj[u] >> v & 1
    ]

    def acyclic_topo(relation):
        """Topological order of `relation` arcs, preferring small labels."""
        indeg = [0] * n
        succ = [0] * n
        for a, b in relation:
            succ[a] |= 1 << b
            indeg[b] += 1
        out = []
        avail = [v for v in range(n) if indeg[v] == 0]
        while avail:
            v = min(avail)
            avail.remove(v)
            out.append(v)
            for w in _bits(succ[v]):
                indeg[w] -= 1
                if indeg[w] == 0:
                    avail.append(w)
        return out if len(out) == n else None

    for p in range(1, max_p + 1):
        if p == 1:
            if not nonedges:
                word = tuple(range(1, n + 1))
                return SearchOutcome(
                    WITNESS, word, nodes, time.monotonic() - start,
                    {"permutations": 1},
                )
            continue
        for first in permutations(range(n)):
            nodes += 1
            pos = [0] * n
            for i, v in enumerate(first):
                pos[v] = i
            arcs = [(a, b) if pos[a] < pos[b] else (b, a) for a, b in edges]
            base_order = [(a, b) if pos[a] < pos[b] else (b, a) for a, b in nonedges]

            def extend(perms_used, still_agreeing):
                nonlocal nodes
                remaining_perms = p - perms_used
                if remaining_perms == 0:
                    return [] if not still_agreeing else None
                if remaining_perms == 1:
                    relation = arcs + [(b, a) for a, b in still_agreeing]
                    order = acyclic_topo(relation)
                    if order is None:
                        return None
                    return [tuple(order)]
                # enumerate linear extensions of the edge arcs, classic DFS
                result = None

                def linext(chosen, chosen_mask):
                    nonlocal nodes, result
                    if result is not None:
                        return
                    if len(chosen) == n:
                        nodes += 1
                        cpos = [0] * n
                        for i, v in enumerate(chosen):
                            cpos[v] = i
                        next_agreeing = [
                            (a, b)
                            for a, b in still_agreeing
                            if (cpos[a] < cpos[b]) == (pos[a] < pos[b])
                        ]
                        tail = extend(perms_used + 1, next_agreeing)
                        if tail is not None:
                            result = [tuple(chosen)] + tail
                        return
                    for v in range(n):
                        if chosen_mask >> v & 1:
                            continue
                        if any(
                            not chosen_mask >> a & 1 for a, b in arcs if b == v
                        ):
                            continue
                        chosen.append(v)
                        linext(chosen, chosen_mask | 1 << v)
                        chosen.pop()
                        if result is not None:
                            return

                linext([], 0)
                return result

            tail = extend(1, base_order)
            if tail is not None:
                seq = [first] + tail
                word = tuple(v + 1 for perm in seq for v in perm)
                if word_to_graph(word) != g:
                    raise AssertionError("permutation search verification failed")
                return SearchOutcome(
                    WITNESS, word, nodes, time.monotonic() - start,
                    {"permutations": p},
                )
    return SearchOutcome(
        REFUTED, None, nodes, time.monotonic() - start, {"max_p": max_p}
    )
