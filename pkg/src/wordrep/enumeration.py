"""Exhaustive generation of non-isomorphic graphs and the census of
non-word-representable ones.

Generation is orderly: level n is built from level n-1 by attaching a new
vertex with every possible neighborhood and deduplicating on canonical form,
so each isomorphism class appears exactly once.  Representability decisions
are independent per graph and can be distributed over worker processes; a
line-oriented checkpoint file makes long runs resumable.
"""

from __future__ import annotations

import multiprocessing
import os
from dataclasses import dataclass

from .graphs import CeilingExceeded, Graph, canonical_form, is_connected, _from_masks
from .orientation import find_semi_transitive, neighborhood_filter
from .outcome import BudgetExhausted

GENERATION_CEILING = 8


@dataclass
class Corpus:
    """Non-isomorphic graphs on n vertices (connected ones only, if filtered)."""

    n: int
    graphs: list
    provenance: str = "generated"
    connected_only: bool = False

    def __len__(self):
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)


def _augmentations(parent):
    """All graphs made by adding vertex n+1 with any neighborhood subset."""
    n = parent.n
    out = []
    for hood in range(1 << n):
        masks = [parent.adj[v] | ((hood >> v & 1) << n) for v in range(n)]
        masks.append(hood)
        out.append(_from_masks(n + 1, masks))
    return out


def generate(n, connected=True):
    """Corpus of all non-isomorphic graphs on exactly n vertices."""
    if not 1 <= n <= GENERATION_CEILING:
        raise CeilingExceeded(f"generation supports 1 <= n <= {GENERATION_CEILING}")
    level = [Graph(1)]
    for _ in range(n - 1):
        seen = {}
        for parent in level:
            for child in _augmentations(parent):
                key = canonical_form(child)
                if key not in seen:
                    seen[key] = child
        level = [seen[k] for k in sorted(seen)]
    graphs = [g for g in level if is_connected(g)] if connected else level
    return Corpus(n, graphs, "generated", connected)


def corpus_from_graphs(n, graphs, provenance, connected=True):
    """Wrap externally supplied graphs (e.g. a graph6 file) as a corpus,
    verifying vertex count, deduplicating on canonical form."""
    seen = {}
    for g in graphs:
        if g.n != n:
            raise ValueError(f"expected graphs on {n} vertices, got {g.n}")
        if connected and not is_connected(g):
            continue
        seen.setdefault(canonical_form(g), g)
    return Corpus(n, [seen[k] for k in sorted(seen)], provenance, connected)


# -- representability census ---------------------------------------------------


def decide_graph(task):
    """Worker: decide one graph given (n, edges, max_nodes, max_seconds).

    Returns (canonical hex, verdict, nodes) where verdict is "representable",
    "non_representable", or "budget" when inconclusive.
    """
    n, edges, max_nodes, max_seconds = task
    g = Graph(n, edges)
    key = canonical_form(g).hex()
    if neighborhood_filter(g) is not None:
        return key, "non_representable", 0
    outcome = find_semi_transitive(g, max_nodes=max_nodes, max_seconds=max_seconds)
    if not outcome.conclusive:
        return key, "budget", outcome.nodes_expanded
    verdict = "representable" if outcome.found else "non_representable"
    return key, verdict, outcome.nodes_expanded


def _load_checkpoint(path):
    verdicts = {}
    if path and os.path.exists(path):
        with open(path) as fh:
            for line in fh:
                parts = line.rstrip("\n").split("\t")
                if len(parts) >= 2 and parts[1] != "budget":
                    verdicts[parts[0]] = parts[1]
    return verdicts


def census(
    corpus,
    jobs=1,
    checkpoint=None,
    max_nodes=None,
    max_seconds=None,
    progress=None,
):
    """Map every corpus member to a representability verdict.

    Returns {canonical hex: verdict}; order of evaluation never affects the
    result.  With `checkpoint`, verdicts are appended to the file as they
    arrive and already-decided graphs are skipped on resume.  Raises
    BudgetExhausted if any member's search was cut short, since a census
    with budget holes cannot certify counts.
    """
    verdicts = _load_checkpoint(checkpoint)
    todo = []
    keys = []
    for g in corpus:
        key = canonical_form(g).hex()
        keys.append(key)
        if key not in verdicts:
            todo.append((g.n, tuple(g.edges()), max_nodes, max_seconds))
    sink = open(checkpoint, "a") if checkpoint else None
    try:
        if jobs > 1 and len(todo) > 1:
            with multiprocessing.Pool(jobs) as pool:
                results = pool.imap_unordered(decide_graph, todo, chunksize=8)
                for i, (key, verdict, nodes) in enumerate(results):
                    verdicts[key] = verdict
                    if sink:
                        sink.write(f"{key}\t{verdict}\t{nodes}\n")
                        sink.flush()
                    if progress:
                        progress(i + 1, len(todo))
        else:
            for i, task in enumerate(todo):
                key, verdict, nodes = decide_graph(task)
                verdicts[key] = verdict
                if sink:
                    sink.write(f"{key}\t{verdict}\t{nodes}\n")
                    sink.flush()
                if progress:
                    progress(i + 1, len(todo))
    finally:
        if sink:
            sink.close()
    out = {}
    undecided = 0
    for key in keys:
        verdict = verdicts.get(key, "budget")
        if verdict == "budget":
            undecided += 1
        out[key] = verdict
    if undecided:
        raise BudgetExhausted(
            f"{undecided} of {len(keys)} graphs hit the search budget; "
            "counts would not be trustworthy"
        )
    return out


def count_non_representable(corpus, **kw):
    """Number of corpus members that are not word-representable; every
    refutation behind the count is exhaustive."""
    verdicts = census(corpus, **kw)
    return sum(1 for v in verdicts.values() if v == "non_representable")


def non_representable_members(corpus, **kw):
    verdicts = census(corpus, **kw)
    return [
        g for g in corpus if verdicts[canonical_form(g).hex()] == "non_representable"
    ]


def minimal_non_representable(corpus, **kw):
    """Non-representable members all of whose vertex-deleted subgraphs are
    representable."""
    from .graphs import delete_vertex
    from .orientation import is_word_representable

    minimal = []
    for g in non_representable_members(corpus, **kw):
        if all(
            is_word_representable(delete_vertex(g, v)) for v in g.vertices()
        ):
            minimal.append(g)
    return minimal
