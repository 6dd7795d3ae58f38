"""Coding graph whose cliques are exactly the instantly decodable packets.

One vertex per (user, packet) pair the user still wants.  Two vertices are
adjacent when they name the same packet, or when each user already holds
the other's packet.  A set of pairwise adjacent vertices XORs down to a
packet every involved user decodes on reception, and conversely; the two
mappings below are mutual inverses and preserve the user count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .sideinfo import BeneficiarySet, CodedPacket, SideInfoMatrix, is_instantly_decodable


@dataclass(frozen=True, order=True)
class Vertex:
    user: int
    packet: int

    def label(self) -> str:
        return f"u{self.user}p{self.packet}"


@dataclass(frozen=True)
class Clique:
    """A set of pairwise adjacent vertices; validity is checked by the owner graph."""

    vertices: frozenset[Vertex]

    @classmethod
    def of(cls, vertices: Iterable[Vertex]) -> "Clique":
        return cls(frozenset(vertices))

    def users(self) -> frozenset[int]:
        return frozenset(v.user for v in self.vertices)

    def packets(self) -> frozenset[int]:
        return frozenset(v.packet for v in self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)


class IdncGraph:
    """Vertex set plus an adjacency test computed from the matrix on demand.

    Adjacency is two bit probes, so the graph never materializes edge
    lists; solvers work straight off the packed matrix rows.
    """

    def __init__(self, matrix: SideInfoMatrix):
        self.matrix = matrix
        self.vertices: tuple[Vertex, ...] = tuple(
            Vertex(i, j) for (i, j) in matrix.ones()
        )
        self._vertex_set = frozenset(self.vertices)

    def __contains__(self, v: Vertex) -> bool:
        return v in self._vertex_set

    def vertex_count(self) -> int:
        return len(self.vertices)

    def adjacent(self, a: Vertex, b: Vertex) -> bool:
        """Edge test: same packet, or mutual side information."""
        self._check_vertex(a)
        self._check_vertex(b)
        if a == b:
            return False
        if a.user == b.user:
            return False  # implied by the rules; kept explicit
        if a.packet == b.packet:
            return True
        rows = self.matrix.rows
        return (
            not rows[b.user - 1] >> (a.packet - 1) & 1
            and not rows[a.user - 1] >> (b.packet - 1) & 1
        )

    def _check_vertex(self, v: Vertex):
        if v not in self._vertex_set:
            raise ValueError(f"vertex {v.label()} not in graph")


def build_graph(matrix: SideInfoMatrix) -> IdncGraph:
    return IdncGraph(matrix)


def is_clique(graph: IdncGraph, vertices: Iterable[Vertex]) -> bool:
    """True when all pairs are adjacent; empty sets and singletons qualify."""
    vs = list(vertices)
    for v in vs:
        graph._check_vertex(v)
    for i in range(len(vs)):
        for k in range(i + 1, len(vs)):
            if not graph.adjacent(vs[i], vs[k]):
                return False
    return True


def clique_to_packet(graph: IdncGraph, clique: Clique) -> tuple[CodedPacket, BeneficiarySet]:
    """XOR the clique's packets; the clique's users are the served set.

    Adjacency makes each clique user hold every clique packet except its
    own, so vertex (i, j) means user i decodes packet j.  The mapping is
    pair-level: other users may happen to decode the same XOR too, but the
    returned set is the clique's own, keeping this the exact inverse of
    `packet_to_clique`.
    """
    if not clique.vertices:
        raise ValueError("empty clique maps to no transmission")
    if not is_clique(graph, clique.vertices):
        raise ValueError("vertex set is not a clique")
    coded = CodedPacket(clique.packets())
    recovered = {v.user: v.packet for v in clique.vertices}
    return coded, BeneficiarySet(clique.users(), recovered, True)


def packet_to_clique(graph: IdncGraph, coded: CodedPacket, users: Iterable[int]) -> Clique:
    """Inverse mapping: one vertex per user, at the packet that user decodes."""
    users = set(users)
    if not is_instantly_decodable(graph.matrix, coded, users):
        raise ValueError("packet is not instantly decodable for the given users")
    mask = 0
    for j in coded.packets:
        mask |= 1 << (j - 1)
    verts = []
    for i in users:
        wanted = graph.matrix.rows[i - 1] & mask
        verts.append(Vertex(i, wanted.bit_length()))
    return Clique.of(verts)


def to_dot(graph: IdncGraph) -> str:
    """Graphviz rendering for eyeballing small instances."""
    lines = ["graph idnc {"]
    for v in graph.vertices:
        lines.append(f'  "{v.label()}";')
    n = len(graph.vertices)
    for i in range(n):
        for k in range(i + 1, n):
            if graph.adjacent(graph.vertices[i], graph.vertices[k]):
                lines.append(
                    f'  "{graph.vertices[i].label()}" -- "{graph.vertices[k].label()}";'
                )
    lines.append("}")
    return "\n".join(lines) + "\n"
