"""Named graph families and the landmark side table for the hub constructions.

The two-hub families are the interesting ones:

* ``gprime(l)``: hubs v1, v2 joined by l internally vertex-disjoint paths of
  length 7 (6 internal vertices each), so n = 2 + 6l and m = 7l.
* ``g(l)``: gprime(l), l even, plus a perfect matching on the hub neighbors:
  w_0-w_1, w_2-w_3, ... next to v1 and u_0-u_1, u_2-u_3, ... next to v2,
  adding l edges (m = 8l).

Landmarks expose v1, v2, the hub neighbors w_i / u_i and full path vertex
sequences, all with 0-based path indices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FamilySpecError
from .graphs import Graph, build_graph

FAMILIES = ("star", "path", "cycle", "complete", "gprime", "g")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    param: int

    def validate(self):
        if self.family not in FAMILIES:
            raise FamilySpecError(f"unknown family {self.family!r}")
        p = self.param
        if self.family == "star" and p < 1:
            raise FamilySpecError("star needs t >= 1")
        if self.family in ("path", "complete") and p < 1:
            raise FamilySpecError(f"{self.family} needs n >= 1")
        if self.family == "cycle" and p < 3:
            raise FamilySpecError("cycle needs n >= 3")
        if self.family == "gprime" and p < 2:
            raise FamilySpecError("gprime needs l >= 2")
        if self.family == "g" and (p < 2 or p % 2 != 0):
            raise FamilySpecError("g needs even l >= 2")


@dataclass(frozen=True)
class Landmarks:
    """Side table naming the special vertices of a generated hub graph."""

    family: str
    param: int
    v1: int
    v2: int
    w: tuple[int, ...]  # w[i] = neighbor of v1 on path i
    u: tuple[int, ...]  # u[i] = neighbor of v2 on path i
    paths: tuple[tuple[int, ...], ...]  # internal 6-vertex sequence, w..u

    def as_dict(self):
        return {
            "family": self.family,
            "param": self.param,
            "v1": self.v1,
            "v2": self.v2,
            "w": list(self.w),
            "u": list(self.u),
            "paths": [list(p) for p in self.paths],
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            family=d["family"],
            param=int(d["param"]),
            v1=int(d["v1"]),
            v2=int(d["v2"]),
            w=tuple(int(x) for x in d["w"]),
            u=tuple(int(x) for x in d["u"]),
            paths=tuple(tuple(int(x) for x in p) for p in d["paths"]),
        )


def generate(spec: FamilySpec) -> Graph:
    """Build the requested family member; hub graphs carry landmarks."""
    spec.validate()
    f, p = spec.family, spec.param
    if f == "star":
        return build_graph(p + 1, [(0, i) for i in range(1, p + 1)])
    if f == "path":
        return build_graph(p, [(i, i + 1) for i in range(p - 1)])
    if f == "cycle":
        return build_graph(p, [(i, (i + 1) % p) for i in range(p)])
    if f == "complete":
        return build_graph(p, [(i, j) for i in range(p) for j in range(i + 1, p)])
    return _generate_hub_graph(f, p)


def _generate_hub_graph(family, ell):
    v1, v2 = 0, 1
    edges = []
    paths = []
    for i in range(ell):
        base = 2 + 6 * i
        internal = tuple(range(base, base + 6))
        paths.append(internal)
        edges.append((v1, internal[0]))
        for a, b in zip(internal, internal[1:]):
            edges.append((a, b))
        edges.append((internal[-1], v2))
    w = tuple(p[0] for p in paths)
    u = tuple(p[-1] for p in paths)
    if family == "g":
        for k in range(0, ell, 2):
            edges.append((w[k], w[k + 1]))
            edges.append((u[k], u[k + 1]))
    landmarks = Landmarks(
        family=family, param=ell, v1=v1, v2=v2, w=w, u=u, paths=tuple(paths)
    )
    return build_graph(2 + 6 * ell, edges, landmarks=landmarks)


def parse_family(name, param):
    spec = FamilySpec(name, param)
    spec.validate()
    return spec
