"""Special pairs of type-II edges and their z-monodromy.

A special pair is a directed path ``v1 -> v2 -> v3`` of type-II edges.  The
two pair edges cut the rotation at ``v2`` into two arcs; the arc that starts
right after ``e1`` in the stored rotation is the ``+`` side.  Labels are

    1 = e1 on the + side    2 = e2 on the + side
    3 = e1 on the - side    4 = e2 on the - side

and the monodromy sends a label to the label at which the zigzag leaving it
first comes back to the pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MonodromyError, StructureError
from .s4 import S, Perm4, classify
from .surface import SurfaceComplex, edge_key
from .zigzags import TYPE_II, ZOrientation, edge_types, enumerate_zigzags, zigzag_step, zigzags_through_edges


@dataclass(frozen=True)
class SpecialPair:
    v1: str
    v2: str
    v3: str
    plus: tuple   # (F1+, F2+)
    minus: tuple  # (F1-, F2-)

    @property
    def e1(self):
        return (self.v1, self.v2)

    @property
    def e2(self):
        return (self.v2, self.v3)

    @property
    def triple(self):
        return (self.v1, self.v2, self.v3)

    @property
    def sides(self):
        """``(F1+, F2+, F1-, F2-)``."""
        return self.plus + self.minus

    def label_edge(self, x):
        return self.e1 if x in (1, 3) else self.e2

    def label_face(self, x):
        return self.sides[x - 1]

    def swapped(self) -> "SpecialPair":
        return SpecialPair(self.v1, self.v2, self.v3, self.minus, self.plus)

    def __str__(self):
        return ",".join(self.triple)


def _sides(c: SurfaceComplex, v1, v2, v3):
    rot = c.vertex_rotation(v2)
    n = len(rot)
    i1 = rot.index(edge_key(v1, v2))
    i2 = rot.index(edge_key(v2, v3))
    plus = (rot[(i1 + 1) % n], rot[(i2 - 1) % n])
    minus = (rot[(i1 - 1) % n], rot[(i2 + 1) % n])
    return plus, minus


def special_pair(c: SurfaceComplex, tau, v1, v2, v3, plus_vertex=None) -> SpecialPair:
    """Build the pair ``v1 -> v2 -> v3``.

    ``plus_vertex`` optionally forces the side whose face along ``e1``
    contains that vertex to be the ``+`` side.
    """
    typing = edge_types(c, tau)
    for e in ((v1, v2), (v2, v3)):
        k = edge_key(*e)
        if typing.types.get(k) != TYPE_II or typing.directions[k] != e:
            raise StructureError(f"{e[0]}->{e[1]} is not a type-II edge in this direction")
    plus, minus = _sides(c, v1, v2, v3)
    pair = SpecialPair(v1, v2, v3, plus, minus)
    if len(set(pair.sides)) != 4:
        raise StructureError(f"side faces of {pair} are not distinct")
    if plus_vertex is not None:
        if plus_vertex in minus[0]:
            pair = pair.swapped()
        elif plus_vertex not in plus[0]:
            raise StructureError(f"{plus_vertex} lies on neither face along {v1}->{v2}")
    return pair


def find_special_pairs(c: SurfaceComplex, tau) -> list:
    typing = edge_types(c, tau)
    out_edges = {}
    for t, h in typing.directions.values():
        out_edges.setdefault(t, []).append(h)
    pairs = []
    for t, h in sorted(typing.directions.values()):
        for w in sorted(out_edges.get(h, ())):
            plus, minus = _sides(c, t, h, w)
            pair = SpecialPair(t, h, w, plus, minus)
            if len(set(pair.sides)) != 4:
                raise StructureError(f"side faces of {pair} are not distinct")
            pairs.append(pair)
    return pairs


def find_pair(c: SurfaceComplex, tau, triple) -> SpecialPair:
    triple = tuple(triple)
    for p in find_special_pairs(c, tau):
        if p.triple == triple:
            return p
    raise StructureError(f"{','.join(triple)} is not a special pair")


def z_monodromy(c: SurfaceComplex, tau, pair: SpecialPair) -> Perm4:
    """First-return permutation of the four labels, computed by walking in ``c``."""
    pair_edges = {edge_key(*pair.e1): 1, edge_key(*pair.e2): 2}
    arrival = {}
    for x in (1, 2, 3, 4):
        prev = (pair.label_edge(x), pair.label_face(x))
        state = zigzag_step(c, prev)
        while edge_key(*state[0]) not in pair_edges:
            prev, state = state, zigzag_step(c, state)
        j = pair_edges[edge_key(*state[0])]
        expected = pair.e1 if j == 1 else pair.e2
        if state[0] != expected:
            raise MonodromyError(f"zigzag from label {x} meets {state[0]} against its direction")
        entry_face = prev[1]
        if entry_face == pair.plus[j - 1]:
            arrival[x] = j
        elif entry_face == pair.minus[j - 1]:
            arrival[x] = j + 2
        else:
            raise MonodromyError(f"zigzag from label {x} enters the pair through an unknown face")
    if sorted(arrival.values()) != [1, 2, 3, 4]:
        raise MonodromyError(f"monodromy of {pair} is not a bijection: {arrival}")
    return Perm4.from_mapping(arrival)


def zigzags_through_pair(c: SurfaceComplex, tau, pair: SpecialPair, monodromy=None) -> int:
    m = monodromy if monodromy is not None else z_monodromy(c, tau, pair)
    k = (S * m).num_cycles()
    direct = zigzags_through_edges(c, tau, [pair.e1, pair.e2])
    if k != direct:
        raise MonodromyError(f"cycles(s*M_P) = {k} but {direct} zigzags pass through {pair}")
    return k


def is_essential(c: SurfaceComplex, tau, pair: SpecialPair) -> bool:
    return zigzags_through_pair(c, tau, pair) == enumerate_zigzags(c).count


@dataclass(frozen=True)
class PairReport:
    pair: SpecialPair
    monodromy: Perm4
    class_id: str
    through: int
    essential: bool

    def as_dict(self):
        return {
            "pair": list(self.pair.triple),
            "monodromy": str(self.monodromy),
            "class": self.class_id,
            "zigzags_through": self.through,
            "essential": self.essential,
            "plus_faces": [list(f) for f in self.pair.plus],
            "minus_faces": [list(f) for f in self.pair.minus],
        }


def pair_report(c: SurfaceComplex, tau, pair: SpecialPair) -> PairReport:
    tau = ZOrientation.parse(tau)
    m = z_monodromy(c, tau, pair)
    k = zigzags_through_pair(c, tau, pair, m)
    return PairReport(pair, m, classify(m).id, k, k == enumerate_zigzags(c).count)
