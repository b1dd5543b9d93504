"""Orientations of graphs and the semi-transitivity machinery.

An orientation assigns a direction to every edge.  It is semi-transitive when
it is acyclic and, for every arc u->v, the sub-orientation induced by u, v and
all vertices lying on directed u->v paths is transitive; a graph is
word-representable exactly when it admits such an orientation, so the
backtracking searches here double as the representability decision procedure.
Transitive orientations (comparability) and 3-colorings give two cheaper
certificate routes.
"""

from __future__ import annotations

import time

from .graphs import CeilingExceeded, induced_subgraph, _bits
from .outcome import BUDGET_EXHAUSTED, REFUTED, WITNESS, SearchOutcome, _Budget
from .words import word_to_graph

ORIENTATION_CEILING = 12
THREE_COLOR_CEILING = 64


class Orientation:
    """A direction for every edge of a base graph.

    `succ[v]` is the 0-indexed bitmask of out-neighbors of vertex v+1.
    """

    __slots__ = ("graph", "succ")

    def __init__(self, graph, arcs):
        succ = [0] * graph.n
        seen = set()
        for u, v in arcs:
            if not graph.has_edge(u, v):
                raise ValueError(f"arc ({u},{v}) is not an edge of the base graph")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"edge {key} oriented twice")
            seen.add(key)
            succ[u - 1] |= 1 << (v - 1)
        if len(seen) != graph.m:
            raise ValueError("orientation must cover every edge exactly once")
        self.graph = graph
        self.succ = tuple(succ)

    @classmethod
    def _from_succ(cls, graph, succ):
        o = cls.__new__(cls)
        o.graph = graph
        o.succ = tuple(succ)
        return o

    def arcs(self):
        return [(u + 1, v + 1) for u in range(self.graph.n) for v in _bits(self.succ[u])]

    def __eq__(self, other):
        return (
            isinstance(other, Orientation)
            and self.graph == other.graph
            and self.succ == other.succ
        )

    def __hash__(self):
        return hash((self.graph, self.succ))

    def __repr__(self):
        return f"Orientation({self.graph.n}, {self.arcs()!r})"


def topological_order(o):
    """A topological order of the arcs, or None if there is a directed cycle."""
    n = o.graph.n
    indeg = [0] * n
    for u in range(n):
        for v in _bits(o.succ[u]):
            indeg[v] += 1
    stack = [v for v in range(n) if indeg[v] == 0]
    order = []
    while stack:
        v = stack.pop()
        order.append(v)
        for w in _bits(o.succ[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return order if len(order) == n else None


def is_acyclic(o):
    return topological_order(o) is not None


def is_transitive(o):
    """True iff u->v and v->w always imply the arc u->w."""
    for u in range(o.graph.n):
        su = o.succ[u]
        for v in _bits(su):
            if o.succ[v] & ~su:
                return False
    return True


def _closures(succ, order):
    """Descendant and ancestor bitmasks for an acyclic succ table."""
    n = len(succ)
    desc = [0] * n
    for v in reversed(order):
        d = succ[v]
        for w in _bits(succ[v]):
            d |= desc[w]
        desc[v] = d
    anc = [0] * n
    for v in order:
        a = 0
        for u in range(n):
            if succ[u] >> v & 1:
                a |= anc[u] | (1 << u)
        anc[v] = a
    return desc, anc


def is_semi_transitive(o):
    """Acyclicity plus, for every arc u->v, transitivity of the
    sub-orientation induced by u, v and the vertices between them."""
    order = topological_order(o)
    if order is None:
        return False
    return _shortcut_free(o.succ, order)


def _shortcut_free(succ, order):
    n = len(succ)
    desc, anc = _closures(succ, order)
    for u in range(n):
        for v in _bits(succ[u]):
            between = desc[u] & anc[v]
            if not between:
                continue
            scope = between | (1 << u) | (1 << v)
            for a in _bits(scope):
                sa = succ[a] & scope
                for b in _bits(sa):
                    if succ[b] & scope & ~sa:
                        return False
    return True


def word_to_orientation(w):
    """Orient each edge of the word's graph from the letter whose first
    occurrence comes earlier; always semi-transitive for representing words."""
    g = word_to_graph(w)
    first = {}
    for i, c in enumerate(w):
        first.setdefault(c, i)
    succ = [0] * g.n
    for u, v in g.edges():
        if first[u] < first[v]:
            succ[u - 1] |= 1 << (v - 1)
        else:
            succ[v - 1] |= 1 << (u - 1)
    return Orientation._from_succ(g, succ)


# -- backtracking search for a semi-transitive orientation --------------------


class _OrientSearch:
    """Edge-by-edge orientation search with forced-arc propagation.

    Propagation closes directed triangles (the third edge of a triangle with
    a directed 2-path is forced away from a 3-cycle) and completes
    quadrilaterals: for a directed 2-path u->x->v and a common neighbor w of
    u and v, unless both u,v and w,x are adjacent, the only completion that
    avoids cycles and shortcuts is u->w, w->v.  Propagation is conservative;
    each complete assignment is still verified by the full shortcut check.
    """

    def __init__(self, g, budget):
        self.g = g
        self.n = g.n
        self.adj = g.adj
        self.succ = [0] * g.n
        self.pred = [0] * g.n
        self.budget = budget
        deg = [bin(a).count("1") for a in self.adj]
        # branch on edges with high-degree endpoints first
        self.edges = sorted(
            ((u - 1, v - 1) for u, v in g.edges()),
            key=lambda e: -min(deg[e[0]], deg[e[1]]),
        )

    def oriented(self, a, b):
        return (self.succ[a] >> b | self.succ[b] >> a) & 1

    def _reaches(self, src, dst):
        seen = 1 << src
        frontier = seen
        target = 1 << dst
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.succ[v]
            if nxt & target:
                return True
            frontier = nxt & ~seen
            seen |= frontier
        return False

    def _apply(self, a, b, trail):
        """Add arc a->b if consistent; record on trail.  False on conflict."""
        if self.succ[b] >> a & 1:
            return False  # already oriented the other way
        if self.succ[a] >> b & 1:
            return True
        if self._reaches(b, a):
            return False  # would close a directed cycle
        self.succ[a] |= 1 << b
        self.pred[b] |= 1 << a
        trail.append((a, b))
        return True

    def _propagate(self, a, b, trail):
        """Force consequences of arc a->b; False on contradiction."""
        queue = [(a, b)]
        qi = 0
        while qi < len(queue):
            a, b = queue[qi]
            qi += 1
            if self.succ[a] >> b & 1:
                continue  # already applied, consequences already queued
            if not self._apply(a, b, trail):
                return False
            # triangle closure
            for c in _bits(self.adj[a] & self.adj[b]):
                if self.succ[c] >> a & 1:
                    queue.append((c, b))
                if self.succ[b] >> c & 1:
                    queue.append((a, c))
            # quadrilateral completion around every new 2-path through a->b
            for u, x, v in self._two_paths(a, b):
                uv_adjacent = self.adj[u] >> v & 1
                for w in _bits(self.adj[u] & self.adj[v] & ~(1 << x)):
                    if uv_adjacent and self.adj[w] >> x & 1:
                        continue
                    queue.append((u, w))
                    queue.append((w, v))
        return True

    def _two_paths(self, a, b):
        for p in _bits(self.pred[a]):
            yield p, a, b
        for s in _bits(self.succ[b]):
            yield a, b, s

    def search(self):
        """First semi-transitive completion in branch order, else None."""
        return self._extend(0)

    def _extend(self, depth):
        if not self.budget.tick():
            raise _OutOfBudget
        while depth < len(self.edges):
            a, b = self.edges[depth]
            if self.oriented(a, b):
                depth += 1
                continue
            for first, second in ((a, b), (b, a)):
                trail = []
                if self._propagate(first, second, trail):
                    result = self._extend(depth + 1)
                    if result is not None:
                        return result
                for x, y in reversed(trail):
                    self.succ[x] &= ~(1 << y)
                    self.pred[y] &= ~(1 << x)
            return None
        order = topological_order(Orientation._from_succ(self.g, self.succ))
        if order is not None and _shortcut_free(self.succ, order):
            return list(self.succ)
        return None


def find_semi_transitive(g, max_nodes=None, max_seconds=None, ceiling=ORIENTATION_CEILING):
    """Search for a semi-transitive orientation of g.

    Returns a witness Orientation or an exhaustive refutation; a refutation
    outcome means the full branch tree was explored.
    """
    if g.n > ceiling:
        raise CeilingExceeded(f"orientation search supports n <= {ceiling}")
    start = time.monotonic()
    if g.m == 0:
        return SearchOutcome(WITNESS, Orientation._from_succ(g, [0] * g.n), 0, 0.0)
    budget = _Budget(max_nodes, max_seconds)
    searcher = _OrientSearch(g, budget)
    try:
        succ = searcher.search()
    except _OutOfBudget:
        return SearchOutcome(
            BUDGET_EXHAUSTED, None, budget.nodes, time.monotonic() - start
        )
    elapsed = time.monotonic() - start
    if succ is None:
        return SearchOutcome(REFUTED, None, budget.nodes, elapsed)
    o = Orientation._from_succ(g, succ)
    assert is_semi_transitive(o)
    return SearchOutcome(WITNESS, o, budget.nodes, elapsed)


class _OutOfBudget(Exception):
    pass


# -- transitive orientations (comparability) ----------------------------------


class _TransSearch:
    """Backtracking search for a transitive orientation.

    Orienting a->b forces a->c for c adjacent to a but not b, and c->b for c
    adjacent to b but not a; 2-paths close transitively or contradict when
    the closing edge is absent.
    """

    def __init__(self, g, budget):
        self.g = g
        self.n = g.n
        self.adj = g.adj
        self.succ = [0] * g.n
        self.pred = [0] * g.n
        self.budget = budget
        self.edges = [(u - 1, v - 1) for u, v in g.edges()]

    def _apply(self, a, b, trail):
        if self.succ[b] >> a & 1:
            return False
        if self.succ[a] >> b & 1:
            return True
        self.succ[a] |= 1 << b
        self.pred[b] |= 1 << a
        trail.append((a, b))
        return True

    def _propagate(self, a, b, trail):
        queue = [(a, b)]
        qi = 0
        while qi < len(queue):
            a, b = queue[qi]
            qi += 1
            was_new = not (self.succ[a] >> b & 1)
            if not self._apply(a, b, trail):
                return False
            if not was_new:
                continue
            mask_b = self.adj[b] & ~self.adj[a] & ~(1 << a)
            for c in _bits(mask_b):
                queue.append((c, b))
            mask_a = self.adj[a] & ~self.adj[b] & ~(1 << b)
            for c in _bits(mask_a):
                queue.append((a, c))
            for c in _bits(self.succ[b]):
                if not self.adj[a] >> c & 1:
                    return False
                queue.append((a, c))
            for c in _bits(self.pred[a]):
                if not self.adj[c] >> b & 1:
                    return False
                queue.append((c, b))
        return True

    def search(self, depth=0):
        if not self.budget.tick():
            raise _OutOfBudget
        while depth < len(self.edges):
            a, b = self.edges[depth]
            if (self.succ[a] >> b | self.succ[b] >> a) & 1:
                depth += 1
                continue
            for first, second in ((a, b), (b, a)):
                trail = []
                if self._propagate(first, second, trail):
                    result = self.search(depth + 1)
                    if result is not None:
                        return result
                for x, y in reversed(trail):
                    self.succ[x] &= ~(1 << y)
                    self.pred[y] &= ~(1 << x)
            return None
        return list(self.succ)


def find_transitive(g, max_nodes=None, max_seconds=None, ceiling=ORIENTATION_CEILING):
    """Search for a transitive orientation (comparability certificate)."""
    if g.n > ceiling:
        raise CeilingExceeded(f"orientation search supports n <= {ceiling}")
    start = time.monotonic()
    if g.m == 0:
        return SearchOutcome(WITNESS, Orientation._from_succ(g, [0] * g.n), 0, 0.0)
    budget = _Budget(max_nodes, max_seconds)
    searcher = _TransSearch(g, budget)
    try:
        succ = searcher.search()
    except _OutOfBudget:
        return SearchOutcome(
            BUDGET_EXHAUSTED, None, budget.nodes, time.monotonic() - start
        )
    elapsed = time.monotonic() - start
    if succ is None:
        return SearchOutcome(REFUTED, None, budget.nodes, elapsed)
    o = Orientation._from_succ(g, succ)
    assert is_transitive(o) and is_acyclic(o)
    return SearchOutcome(WITNESS, o, budget.nodes, elapsed)


def is_permutationally_representable(g, **kw):
    """A graph is representable by a concatenation of permutations exactly
    when it is a comparability graph."""
    return find_transitive(g, **kw).require_conclusive().found


def neighborhood_filter(g, **kw):
    """Necessary condition: every vertex neighborhood of a word-representable
    graph is a comparability graph.  Returns the first failing vertex or None."""
    for v in g.vertices():
        hood = induced_subgraph(g, g.neighbors(v))
        if not find_transitive(hood, **kw).require_conclusive().found:
            return v
    return None


def is_word_representable(g, max_nodes=None, max_seconds=None, ceiling=ORIENTATION_CEILING):
    """Decide word-representability: fast neighborhood refutation first, then
    the full semi-transitive orientation search."""
    if g.n > ceiling:
        raise CeilingExceeded(f"decision supports n <= {ceiling}")
    if neighborhood_filter(g) is not None:
        return False
    outcome = find_semi_transitive(g, max_nodes, max_seconds, ceiling)
    return outcome.require_conclusive().found


def apex_representability_check(h, **kw):
    """Whether the graph obtained from h by adding an all-adjacent vertex is
    word-representable; equivalent to h being permutationally representable."""
    return is_permutationally_representable(h, **kw)


# -- 3-colorability route ------------------------------------------------------


def three_color(g, max_nodes=None, max_seconds=None):
    """Proper 3-coloring by backtracking (colors 1..3), or refutation.

    Vertices are colored in descending degree order; the first vertex is
    pinned to color 1 and the second color is introduced only once.
    """
    if g.n > THREE_COLOR_CEILING:
        raise CeilingExceeded(f"3-coloring supports n <= {THREE_COLOR_CEILING}")
    start = time.monotonic()
    budget = _Budget(max_nodes, max_seconds)
    order = sorted(range(g.n), key=lambda v: -bin(g.adj[v]).count("1"))
    color = [0] * g.n  # 0 = uncolored

    def assign(i, palette):
        if not budget.tick():
            raise _OutOfBudget
        if i == g.n:
            return True
        v = order[i]
        limit = min(3, palette + 1)
        for c in range(1, limit + 1):
            if any(color[u] == c for u in _bits(g.adj[v])):
                continue
            color[v] = c
            if assign(i + 1, max(palette, c)):
                return True
            color[v] = 0
        return False

    try:
        ok = assign(0, 0)
    except _OutOfBudget:
        return SearchOutcome(
            BUDGET_EXHAUSTED, None, budget.nodes, time.monotonic() - start
        )
    elapsed = time.monotonic() - start
    if not ok:
        return SearchOutcome(REFUTED, None, budget.nodes, elapsed)
    return SearchOutcome(WITNESS, tuple(color), budget.nodes, elapsed)


def orientation_from_coloring(g, coloring):
    """Orient every edge from the smaller to the larger color class.

    For a proper coloring with at most 3 colors the longest directed path has
    three vertices, so the result is semi-transitive.
    """
    colors = set(coloring)
    if len(coloring) != g.n or len(colors) > 3:
        raise ValueError("need a coloring of all vertices with at most 3 colors")
    for u, v in g.edges():
        if coloring[u - 1] == coloring[v - 1]:
            raise ValueError(f"coloring is not proper on edge ({u},{v})")
    succ = [0] * g.n
    for u, v in g.edges():
        if coloring[u - 1] < coloring[v - 1]:
            succ[u - 1] |= 1 << (v - 1)
        else:
            succ[v - 1] |= 1 << (u - 1)
    return Orientation._from_succ(g, succ)
