"""Alternating plat diagrams built from billiard-table words.

The diagram lives on three horizontal levels, 1 (bottom), 2 (middle) and
3 (top), and on columns ``0..c``. Crossing ``k`` occupies the slot between
columns ``k-1`` and ``k``: ``S1`` swaps levels 1 and 2, ``S2INV`` swaps
levels 2 and 3, and the third level passes straight through.

Closures: on the left, a cap joins levels 2 and 3 and the open end sits on
level 1. On the right, a final ``S1`` leaves the open end on level 1 with
the cap on 2-3; a final ``S2INV`` leaves it on level 3 with the cap on 1-2.
An outer arc joins the two open ends.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from twobridge.words import RunWord, to_symbols

LEVELS = (1, 2, 3)


class Generator(enum.Enum):
    S1 = "s1"
    S2INV = "s2i"

    @property
    def levels(self) -> tuple[int, int]:
        return (1, 2) if self is Generator.S1 else (2, 3)


# (symbol, run length) -> crossing. Runs alternate +,-,+,... from the left.
GENERATOR_FOR_RUN: dict[tuple[str, int], Generator] = {
    ("+", 1): Generator.S1,
    ("+", 2): Generator.S2INV,
    ("-", 1): Generator.S2INV,
    ("-", 2): Generator.S1,
}


class Crossing(NamedTuple):
    generator: Generator
    run_index: int  # 1-based
    run_length: int
    position: int  # 1-based start of the run in the symbol word


class Node(NamedTuple):
    column: int
    level: int


class Edge(NamedTuple):
    a: Node
    b: Node
    kind: str  # "cross", "pass", "cap", "outer"
    slot: int  # crossing slot for "cross"/"pass", else 0


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class AlternatingDiagram:
    word: RunWord
    crossings: tuple[Crossing, ...]

    @property
    def c(self) -> int:
        return len(self.crossings)

    @property
    def generators(self) -> tuple[Generator, ...]:
        return tuple(x.generator for x in self.crossings)

    @property
    def left_cap(self) -> tuple[int, int]:
        return (2, 3)

    @property
    def left_exit(self) -> int:
        return 1

    @property
    def right_exit(self) -> int:
        return 1 if self.crossings[-1].generator is Generator.S1 else 3

    @property
    def right_cap(self) -> tuple[int, int]:
        return (2, 3) if self.right_exit == 1 else (1, 2)

    @property
    def right_closure(self) -> str:
        return "bottom-exit" if self.right_exit == 1 else "top-exit"


def run_positions(w: RunWord) -> list[tuple[int, int]]:
    out = []
    pos = 1
    for e in w.runs:
        out.append((pos, e))
        pos += e
    return out


def to_alternating(w: RunWord) -> AlternatingDiagram:
    crossings = []
    for i, (pos, e) in enumerate(run_positions(w)):
        symbol = "+" if i % 2 == 0 else "-"
        crossings.append(Crossing(GENERATOR_FOR_RUN[(symbol, e)], i + 1, e, pos))
    return AlternatingDiagram(w, tuple(crossings))


def node_id(node: Node) -> int:
    """Deterministic id: left to right, bottom to top."""
    return 3 * node.column + node.level - 1


def slot_edges(d: AlternatingDiagram, k: int) -> list[Edge]:
    """The three strand segments through slot ``k`` (1-based), bottom level first."""
    lo, hi = d.crossings[k - 1].generator.levels
    edges = []
    for level in LEVELS:
        if level == lo:
            edges.append(Edge(Node(k - 1, lo), Node(k, hi), "cross", k))
        elif level == hi:
            edges.append(Edge(Node(k - 1, hi), Node(k, lo), "cross", k))
        else:
            edges.append(Edge(Node(k - 1, level), Node(k, level), "pass", k))
    return edges


def closure_edges(d: AlternatingDiagram) -> list[Edge]:
    c = d.c
    la, lb = d.left_cap
    ra, rb = d.right_cap
    return [
        Edge(Node(0, la), Node(0, lb), "cap", 0),
        Edge(Node(c, ra), Node(c, rb), "cap", 0),
        Edge(Node(0, d.left_exit), Node(c, d.right_exit), "outer", 0),
    ]


def diagram_edges(d: AlternatingDiagram) -> list[Edge]:
    edges = []
    for k in range(1, d.c + 1):
        edges.extend(slot_edges(d, k))
    edges.extend(closure_edges(d))
    return edges


def _adjacency(edges: list[Edge]) -> dict[Node, list[int]]:
    adj: dict[Node, list[int]] = {}
    for i, e in enumerate(edges):
        adj.setdefault(e.a, []).append(i)
        adj.setdefault(e.b, []).append(i)
    bad = sorted(n for n, ids in adj.items() if len(ids) != 2)
    if bad:
        raise DiagramError(f"malformed closure: nodes {bad} do not have exactly two arcs")
    return adj


def trace_components(d: AlternatingDiagram) -> list[list[tuple[Node, Node, Edge]]]:
    """Walk every closed component of the diagram.

    Each component is a list of directed steps ``(from, to, edge)``. The
    first component starts at the left open end heading into slot 1; later
    ones start at their smallest unvisited node. Crossings are passed
    straight through, never merged.
    """
    edges = diagram_edges(d)
    adj = _adjacency(edges)
    used = [False] * len(edges)
    components = []

    def walk(start: Node, first_edge: int) -> list[tuple[Node, Node, Edge]]:
        steps = []
        node, ei = start, first_edge
        while not used[ei]:
            used[ei] = True
            e = edges[ei]
            nxt = e.b if e.a == node else e.a
            steps.append((node, nxt, e))
            a, b = adj[nxt]
            ei = b if a == ei else a
            node = nxt
        return steps

    start = Node(0, d.left_exit)
    into_slot = next(i for i in adj[start] if edges[i].kind != "outer")
    components.append(walk(start, into_slot))
    for node in sorted(adj, key=node_id):
        for ei in adj[node]:
            if not used[ei]:
                components.append(walk(node, ei))
    return components


def trace_component_count(d: AlternatingDiagram) -> int:
    return len(trace_components(d))


def generator_counts(d: AlternatingDiagram) -> dict[Generator, int]:
    counts = {g: 0 for g in Generator}
    for g in d.generators:
        counts[g] += 1
    return counts


def diagram_to_dict(d: AlternatingDiagram) -> dict:
    return {
        "word": to_symbols(d.word),
        "generators": [g.value for g in d.generators],
        "right_closure": d.right_closure,
    }
