"""Crossing orientations, Seifert smoothing and genus.

A crossing is *horizontal* when both strands through it travel in the same
left/right direction; its oriented smoothing keeps each strand on its own
level. A *vertical* crossing has anti-parallel strands and smooths into two
turn-backs, one on each side of the slot.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from twobridge.diagram import (
    AlternatingDiagram,
    DiagramError,
    Edge,
    Node,
    closure_edges,
    node_id,
    slot_edges,
    to_alternating,
    trace_components,
)
from twobridge.words import RunWord


class Orientation(enum.Enum):
    H = "H"
    V = "V"


@dataclass(frozen=True)
class SeifertState:
    orientations: tuple[Orientation, ...]
    circles: int


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.count = n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
            self.count -= 1


def orient_fast(w: RunWord, d: AlternatingDiagram | None = None) -> list[Orientation]:
    """Orientations read directly off symbol positions in the word.

    A single-symbol run starting at a position ``p`` with ``p % 3 == 1`` is
    horizontal. A double run occupying ``p, p+1`` with ``p % 3 == 2`` is
    horizontal. Everything else is vertical.
    """
    if d is None:
        d = to_alternating(w)
    out = []
    for x in d.crossings:
        wanted = 1 if x.run_length == 1 else 2
        out.append(Orientation.H if x.position % 3 == wanted else Orientation.V)
    return out


def strand_directions(d: AlternatingDiagram) -> dict[tuple[int, int], int]:
    """Direction (+1 right, -1 left) of each slot segment, keyed ``(slot, start level)``.

    Obtained by walking the single component of the closed diagram.
    """
    components = trace_components(d)
    if len(components) != 1:
        raise DiagramError(f"diagram has {len(components)} components; orientation needs a knot")
    directions = {}
    for frm, to, e in components[0]:
        if e.kind in ("cross", "pass"):
            directions[(e.slot, e.a.level)] = 1 if to.column > frm.column else -1
    return directions


def orient_oracle(d: AlternatingDiagram) -> list[Orientation]:
    directions = strand_directions(d)
    out = []
    for k, x in enumerate(d.crossings, start=1):
        lo, hi = x.generator.levels
        same = directions[(k, lo)] == directions[(k, hi)]
        out.append(Orientation.H if same else Orientation.V)
    return out


def left_edge_directions(d: AlternatingDiagram) -> tuple[int, int, int]:
    """Directions of the three strands leaving column 0, bottom level first."""
    directions = strand_directions(d)
    return tuple(directions[(1, level)] for level in (1, 2, 3))


def smoothed_edges(d: AlternatingDiagram, orientations: Sequence[Orientation]) -> list[Edge]:
    edges = []
    for k, (x, o) in enumerate(zip(d.crossings, orientations), start=1):
        lo, hi = x.generator.levels
        for e in slot_edges(d, k):
            if e.kind == "pass":
                edges.append(e)
        if o is Orientation.H:
            edges.append(Edge(Node(k - 1, lo), Node(k, lo), "smooth", k))
            edges.append(Edge(Node(k - 1, hi), Node(k, hi), "smooth", k))
        else:
            edges.append(Edge(Node(k - 1, lo), Node(k - 1, hi), "smooth", k))
            edges.append(Edge(Node(k, lo), Node(k, hi), "smooth", k))
    edges.extend(closure_edges(d))
    return edges


def seifert_circles(d: AlternatingDiagram, orientations: Sequence[Orientation]) -> SeifertState:
    if len(orientations) != d.c:
        raise ValueError(f"expected {d.c} orientations, got {len(orientations)}")
    uf = UnionFind(3 * (d.c + 1))
    for e in smoothed_edges(d, orientations):
        uf.union(node_id(e.a), node_id(e.b))
    s = uf.count
    # Any oriented state has 1 + c - s even; flipping one smoothing breaks that.
    if (1 + d.c - s) % 2:
        raise ValueError("orientations are not consistent with an orientation of the knot")
    return SeifertState(tuple(orientations), s)


def seifert_state(w: RunWord) -> SeifertState:
    d = to_alternating(w)
    return seifert_circles(d, orient_fast(w, d))


def genus_from_circles(c: int, s: int) -> int:
    twice = 1 + c - s
    if twice % 2 or twice < 0:
        raise AssertionError(f"1 + c - s = {twice} is not a nonnegative even number")
    return twice // 2


def genus(w: RunWord) -> int:
    return genus_from_circles(w.c, seifert_state(w).circles)
