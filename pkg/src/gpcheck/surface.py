"""The ribbon graph of a virtual string and the genus of its closed surface.

Each arrow becomes a 4-valent vertex; the circle arcs between consecutive
endpoints become edges.  Half-edge ``4 * v + r`` is the ``r``-th end at
vertex ``v`` in counterclockwise order.

Rotation, from the disc model of a crossing (both discs oriented
counterclockwise): the arc entering the tail comes up the negative y-axis,
the arc entering the head comes in along the negative x-axis, and the arcs
leaving continue along the positive axes.  Reading the four rays
counterclockwise from south gives in_tail (S), out_head (E), out_tail (N),
in_head (W).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .vstring import HEAD, TAIL, VirtualString

IN_TAIL, OUT_HEAD, OUT_TAIL, IN_HEAD = 0, 1, 2, 3
END_NAMES = ("in_tail", "out_head", "out_tail", "in_head")
_OUT = {TAIL: OUT_TAIL, HEAD: OUT_HEAD}
_IN = {TAIL: IN_TAIL, HEAD: IN_HEAD}


@dataclass(frozen=True)
class RibbonGraph:
    labels: tuple[str, ...]  # vertex v carries arrow labels[v]
    opp: tuple[int, ...]  # half-edge at the other end of the same edge

    @property
    def V(self) -> int:
        return len(self.labels)

    @property
    def E(self) -> int:
        return len(self.opp) // 2

    def face_next(self, h: int) -> int:
        g = self.opp[h]
        return (g & ~3) | ((g + 1) & 3)

    def boundary_cycles(self) -> list[list[int]]:
        seen = [False] * len(self.opp)
        cycles = []
        for h in range(len(self.opp)):
            if seen[h]:
                continue
            cyc = []
            while not seen[h]:
                seen[h] = True
                cyc.append(h)
                h = self.face_next(h)
            cycles.append(cyc)
        return cycles

    def half_edge_name(self, h: int) -> str:
        return f"{self.labels[h // 4]}:{END_NAMES[h % 4]}"


@dataclass(frozen=True)
class SurfaceSummary:
    boundary: int
    euler: int
    genus: int

    @property
    def planar(self) -> bool:
        return self.genus == 0

    def to_dict(self) -> dict:
        return {"genus": self.genus, "boundary": self.boundary, "euler": self.euler}


def build_ribbon(alpha: VirtualString) -> RibbonGraph:
    labels = alpha.labels
    vertex = {t: v for v, t in enumerate(labels)}
    opp = [0] * (4 * len(labels))
    for circle in alpha.circles:
        k = len(circle)
        for s in range(k):
            t1, kind1 = circle[s]
            t2, kind2 = circle[(s + 1) % k]
            h_out = 4 * vertex[t1] + _OUT[kind1]
            h_in = 4 * vertex[t2] + _IN[kind2]
            opp[h_out] = h_in
            opp[h_in] = h_out
    return RibbonGraph(labels, tuple(opp))


def boundary_components(rg: RibbonGraph) -> int:
    return kernels.boundary_count(rg.opp)


def genus(alpha: VirtualString) -> SurfaceSummary:
    rg = build_ribbon(alpha)
    b = boundary_components(rg)
    chi = rg.V - rg.E
    twice = 2 - chi - b
    assert twice >= 0 and twice % 2 == 0, (chi, b)
    return SurfaceSummary(boundary=b, euler=chi, genus=twice // 2)


def embedding_certificate(alpha: VirtualString) -> list[list[str]]:
    """Boundary cycles as lists of named half-edges."""
    rg = build_ribbon(alpha)
    return [[rg.half_edge_name(h) for h in cyc] for cyc in rg.boundary_cycles()]
