"""Opening a special pair into a 4-gonal hole and gluing two opened complexes.

Opening the pair ``v1 -> v2 -> v3`` splits ``v2`` into ``v2+`` (faces on the
+ side) and ``v2-`` (faces on the - side) and adds the face
``[v1, v2+, v3, v2-]``.  Its four forward edges carry the labels

    1 = v1 -> v2+    2 = v2+ -> v3    3 = v1 -> v2-    4 = v2- -> v3

Gluing two holes identifies ``v1``, ``v3`` and either ``v2+ ~ v2'+`` (direct)
or ``v2+ ~ v2'-`` (swap), i.e. the label map is the identity or ``s``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import GlueError, MonodromyError, StarViolation, StructureError
from .monodromy import SpecialPair
from .s4 import ID, S, Perm4
from .surface import SurfaceComplex, canonical_face, edge_key
from .zigzags import (
    ZOrientation, edge_types, enumerate_zigzags, is_z_homogeneous,
    orientation_from_directions, zigzag_step, zigzags_through_edges,
)


class SpecialHomeomorphism(enum.Enum):
    DIRECT = "direct"
    SWAP = "swap"

    @property
    def perm(self) -> Perm4:
        return ID if self is SpecialHomeomorphism.DIRECT else S

    @classmethod
    def coerce(cls, g) -> "SpecialHomeomorphism":
        return g if isinstance(g, cls) else cls(str(g).lower())


def _fresh(name, taken):
    while name in taken:
        name += "'"
    return name


@dataclass(frozen=True)
class OpenedComplex:
    complex: SurfaceComplex
    hole: tuple          # canonical 4-gon [v1, v2+, v3, v2-]
    v1: str
    v2p: str
    v2m: str
    v3: str
    labels: dict         # label -> directed edge of the hole
    side_faces: dict     # label -> the other face along that edge

    def hole_edges(self):
        return [self.labels[x] for x in (1, 2, 3, 4)]


def open_pair(c: SurfaceComplex, tau, pair: SpecialPair) -> OpenedComplex:
    v1, v2, v3 = pair.triple
    for e in (pair.e1, pair.e2):
        if edge_types(c, tau).directions.get(edge_key(*e)) != e:
            raise StructureError(f"{e[0]}->{e[1]} is not a type-II edge of the orientation")
    taken = set(c.vertices)
    v2p = _fresh(f"{v2}+", taken)
    v2m = _fresh(f"{v2}-", taken | {v2p})

    rot = c.vertex_rotation(v2)
    n = len(rot)
    i1 = rot.index(edge_key(v1, v2))
    i2 = rot.index(edge_key(v2, v3))
    plus_faces = set()
    i = (i1 + 1) % n
    while i != i2:
        if i % 2:
            plus_faces.add(rot[i])
        i = (i + 1) % n
    if {pair.plus[0], pair.plus[1]} - plus_faces or {pair.minus[0], pair.minus[1]} & plus_faces:
        raise StructureError(f"side faces of {pair} do not match the rotation at {v2}")

    renamed = {}
    for f in c.faces:
        if v2 in f:
            new = v2p if f in plus_faces else v2m
            renamed[f] = canonical_face(tuple(new if x == v2 else x for x in f))
        else:
            renamed[f] = f
    hole = (v1, v2p, v3, v2m)
    opened = SurfaceComplex(list(renamed.values()) + [hole])
    labels = {1: (v1, v2p), 2: (v2p, v3), 3: (v1, v2m), 4: (v2m, v3)}
    side_faces = {x: renamed[pair.label_face(x)] for x in (1, 2, 3, 4)}
    return OpenedComplex(opened, canonical_face(hole), v1, v2p, v2m, v3, labels, side_faces)


def opened_monodromy(o: OpenedComplex) -> Perm4:
    """Monodromy read off by walking inside the opened complex."""
    c = o.complex
    hole_edges = {edge_key(*e) for e in o.labels.values()}
    label_of = {e: x for x, e in o.labels.items()}
    images = {}
    for x in (1, 2, 3, 4):
        state = zigzag_step(c, (o.labels[x], o.side_faces[x]))
        while edge_key(*state[0]) not in hole_edges:
            state = zigzag_step(c, state)
        if state[0] not in label_of:
            raise MonodromyError(f"walk from label {x} reaches the hole backwards at {state[0]}")
        images[x] = label_of[state[0]]
    if sorted(images.values()) != [1, 2, 3, 4]:
        raise MonodromyError(f"hole walk is not a bijection: {images}")
    return Perm4.from_mapping(images)


def check_star(ca: SurfaceComplex, pa: SpecialPair, cb: SurfaceComplex, pb: SpecialPair) -> bool:
    return not ca.has_edge(pa.v1, pa.v3) or not cb.has_edge(pb.v1, pb.v3)


def predicted_merge_count(mp: Perm4, mp2: Perm4, g) -> int:
    gp = SpecialHomeomorphism.coerce(g).perm
    return (gp.inverse() * mp2 * gp * mp).num_cycles()


def _inherited_directions(c, tau, o: OpenedComplex, v2, rename=None):
    """Type-II directions of ``c`` carried over to the opened complex."""
    rename = rename or {}
    opened_edges = set(o.complex.edges)
    out = {}
    for t, h in edge_types(c, tau).directions.values():
        options = [(t, h)]
        if v2 in (t, h):
            options = [tuple(s if x == v2 else x for x in (t, h)) for s in (o.v2p, o.v2m)]
        for d in options:
            if edge_key(*d) in opened_edges:
                d = tuple(rename.get(x, x) for x in d)
                out[edge_key(*d)] = d
    return out


@dataclass(frozen=True)
class SumResult:
    complex: SurfaceComplex
    tau: ZOrientation
    glued_edges: tuple
    vertex_map: dict      # vertices of the second complex -> names in the sum

    def zigzags_through_glued(self) -> int:
        return zigzags_through_edges(self.complex, self.tau, self.glued_edges)


def glue(ca, ta, pa, cb, tb, pb, g="direct", tag=1) -> SumResult:
    g = SpecialHomeomorphism.coerce(g)
    if not check_star(ca, pa, cb, pb):
        raise StarViolation(f"endpoints of both {pa} and {pb} are adjacent")
    oa = open_pair(ca, ta, pa)
    ob = open_pair(cb, tb, pb)

    ident = {ob.v1: oa.v1, ob.v3: oa.v3}
    if g is SpecialHomeomorphism.DIRECT:
        ident.update({ob.v2p: oa.v2p, ob.v2m: oa.v2m})
    else:
        ident.update({ob.v2p: oa.v2m, ob.v2m: oa.v2p})
    taken = set(oa.complex.vertices)
    rename = {}
    for v in ob.complex.vertices:
        if v in ident:
            rename[v] = ident[v]
        else:
            rename[v] = _fresh(f"{v}.{tag}", taken)
            taken.add(rename[v])

    faces = [f for f in oa.complex.faces if f != oa.hole]
    faces += [tuple(rename[x] for x in f) for f in ob.complex.faces if f != ob.hole]
    result = SurfaceComplex(faces)

    directions = _inherited_directions(ca, ta, oa, pa.v2)
    for k, d in _inherited_directions(cb, tb, ob, pb.v2, rename).items():
        if k in directions and directions[k] != d:
            raise GlueError(f"glued edge {k[0]}-{k[1]} inherits opposite directions")
        directions[k] = d
    try:
        tau = orientation_from_directions(result, directions)
    except StructureError as exc:
        raise GlueError(str(exc)) from None
    if edge_types(result, tau).directions != directions:
        raise GlueError("edge types changed in the connected sum")
    if not is_z_homogeneous(result, tau):
        raise GlueError("connected sum is not z-homogeneous")
    return SumResult(result, tau, tuple(oa.hole_edges()), rename)


def connected_sum(ca, ta, pa, cb, tb, pb, g="direct", tag=1):
    r = glue(ca, ta, pa, cb, tb, pb, g, tag)
    return r.complex, r.tau


def untouched_zigzags(c: SurfaceComplex, tau, pair: SpecialPair) -> int:
    """Zigzag pairs of ``c`` that avoid both edges of ``pair``."""
    return enumerate_zigzags(c).count - zigzags_through_edges(c, tau, [pair.e1, pair.e2])
