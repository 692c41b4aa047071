"""Independent acyclic-orientation counter via the chromatic polynomial.

The number of acyclic orientations of a graph equals the absolute value
of its chromatic polynomial at -1.  Evaluating by deletion-contraction
shares nothing with the direction-by-direction enumerator in
:mod:`ksystems.search`, which makes this a genuine cross-check; it is
used by the test suite and not exposed on the command line.
"""

from __future__ import annotations

from typing import Iterable


def _chi_at_minus_one(
    vertices: frozenset[int],
    edges: frozenset[frozenset[int]],
    memo: dict,
) -> int:
    """Chromatic polynomial at t = -1 by deletion-contraction, memoized.

    Contraction merges the larger endpoint into the smaller; parallel
    edges collapse automatically in the set representation.
    """
    if not edges:
        return (-1) ** len(vertices)
    key = (vertices, edges)
    cached = memo.get(key)
    if cached is not None:
        return cached

    e = min(edges, key=sorted)
    u, v = sorted(e)
    deleted = _chi_at_minus_one(vertices, edges - {e}, memo)
    contracted_edges = set()
    for f in edges - {e}:
        g = frozenset(u if x == v else x for x in f)
        if len(g) == 2:
            contracted_edges.add(g)
    contracted = _chi_at_minus_one(
        vertices - {v}, frozenset(contracted_edges), memo
    )
    result = deleted - contracted
    memo[key] = result
    return result


def acyclic_orientation_count(n: int, edge_list: Iterable[tuple[int, int]]) -> int:
    """|chi(-1)| for the simple graph on vertices 0..n-1."""
    edges = frozenset(frozenset(e) for e in edge_list)
    value = _chi_at_minus_one(frozenset(range(n)), edges, {})
    return abs(value)
