"""
Equivariant one-skeleton (moment graph) of G/B.

Vertices are the fixed points W; w and s_α·w are joined by an edge labelled
by the positive root α. Given Levi data, edges with α ∈ Φ′ lie in the fixed
locus of η and the vertices are grouped by coset, one cluster per component.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import graphviz

from patternmap.base.symbolic import LinearForm
from patternmap.pattern.levi import LeviDatum, check_same_ambient
from patternmap.weyl.element import WeylElem
from patternmap.weyl.rootdatum import RootDatum


@dataclass(frozen=True)
class SkeletonEdge:
    source: WeylElem
    target: WeylElem
    root: LinearForm
    fixed: bool = False


@dataclass
class Skeleton:
    datum: RootDatum
    vertices: list[WeylElem]
    edges: list[SkeletonEdge]
    components: list[tuple[WeylElem, tuple[WeylElem, ...]]] = field(default_factory=list)

    def to_dict(self) -> dict:
        data = {
            "group": self.datum.label,
            "vertices": [str(w) for w in self.vertices],
            "edges": [
                {"source": str(e.source), "target": str(e.target), "root": str(e.root), "fixed": e.fixed}
                for e in self.edges
            ],
        }
        if self.components:
            data["components"] = [
                {"rep": str(rep), "members": [str(m) for m in members]} for rep, members in self.components
            ]
        return data

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_graph(self) -> graphviz.Graph:
        graph = graphviz.Graph(name=f"skeleton_{self.datum.label}", comment=f"One-skeleton of {self.datum.label}")
        graph.attr("node", shape="plaintext")
        if self.components:
            for k, (rep, members) in enumerate(self.components):
                with graph.subgraph(name=f"cluster_{k}") as cluster:
                    cluster.attr(label=f"rep {rep}", style="rounded")
                    for member in members:
                        cluster.node(str(member))
        else:
            for w in self.vertices:
                graph.node(str(w))
        for edge in self.edges:
            attrs = {"color": "firebrick", "penwidth": "2"} if edge.fixed else {"color": "gray50"}
            graph.edge(str(edge.source), str(edge.target), label=str(edge.root), **attrs)
        return graph

    def to_dot(self) -> str:
        return self.to_graph().source


def skeleton_export(datum: RootDatum, levi: LeviDatum | None = None) -> Skeleton:
    if levi is not None:
        check_same_ambient(levi, datum)
    edges = []
    for root, s in datum.reflections.items():
        fixed = levi is not None and levi.sub.is_positive(root)
        for w in datum.elements():
            sw = s * w
            if datum.sort_key(w) < datum.sort_key(sw):
                edges.append(SkeletonEdge(w, sw, root, fixed))
    components = [(c.rep, c.members) for c in levi.cosets] if levi is not None else []
    return Skeleton(datum, list(datum.elements()), edges, components)
