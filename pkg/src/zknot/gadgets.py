"""Bipyramids, the four-path family, coning of directed-face embeddings, and
the catalog of spherical gadgets used by the knotting driver."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import CatalogError, DomainError, StructureError
from .monodromy import SpecialPair, find_pair, is_essential, z_monodromy
from .s4 import Perm4, classify
from .surface import SurfaceComplex, edge_key
from .zigzags import ZOrientation, edge_types, find_homogeneous_orientations


def bipyramid(n: int) -> SurfaceComplex:
    """Apexes ``a``, ``b`` over the base cycle ``v1 .. vn``."""
    if not isinstance(n, int) or n < 3:
        raise DomainError(f"bipyramid needs n >= 3, got {n}")
    vs = [f"v{i}" for i in range(1, n + 1)]
    faces = []
    for i in range(n):
        faces.append(("a", vs[i], vs[(i + 1) % n]))
        faces.append(("b", vs[(i + 1) % n], vs[i]))
    return SurfaceComplex(faces)


def oriented_bipyramid(n: int):
    """``bipyramid(n)`` with the orientation directing the base ``v1 -> v2 -> ...``."""
    if not isinstance(n, int) or n < 3:
        raise DomainError(f"bipyramid needs n >= 3, got {n}")
    base = [f"v{i}" for i in range(1, n + 1)]
    return triangulate_eulerian([base, base], apex_names=["a", "b"])


def triangulate_eulerian(cycles, apex_names=None):
    """Cone every directed face cycle from a new apex.

    ``cycles`` are the faces of an embedded simple Eulerian digraph, each
    given as a directed vertex cycle.  Every face is a directed cycle, so
    each directed edge borders exactly two faces, and both faces run along
    it in its own direction.

    Returns the triangulation and the unique z-orientation whose type-II
    edges are exactly the input edges with their directions.
    """
    cycles = [tuple(str(v) for v in cyc) for cyc in cycles]
    for cyc in cycles:
        if len(cyc) < 3 or len(set(cyc)) != len(cyc):
            raise StructureError(f"face {list(cyc)} is not a simple directed cycle of length >= 3")
    arcs = Counter((cyc[i], cyc[(i + 1) % len(cyc)]) for cyc in cycles for i in range(len(cyc)))
    indeg, outdeg = Counter(), Counter()
    for (t, h) in arcs:
        outdeg[t] += 1
        indeg[h] += 1
    for v in set(indeg) | set(outdeg):
        if indeg[v] != outdeg[v]:
            raise StructureError(f"vertex {v} has in-degree {indeg[v]} and out-degree {outdeg[v]}")
    for (t, h), mult in arcs.items():
        if (h, t) in arcs:
            raise StructureError(f"edge {t}-{h} is used in both directions")
        if mult != 2:
            raise StructureError(f"directed edge {t}->{h} borders {mult} face(s), expected 2")

    vertices = {v for cyc in cycles for v in cyc}
    if apex_names is None:
        apex_names, i = [], 0
        while len(apex_names) < len(cycles):
            name = f"c{i}"
            if name not in vertices:
                apex_names.append(name)
            i += 1
    apex_names = [str(a) for a in apex_names]
    if len(apex_names) != len(cycles) or len(set(apex_names)) != len(cycles) or vertices & set(apex_names):
        raise StructureError("apex names must be fresh and one per face")

    faces = []
    for apex, cyc in zip(apex_names, cycles):
        n = len(cyc)
        faces.extend((apex, cyc[i], cyc[(i + 1) % n]) for i in range(n))
    c = SurfaceComplex(faces)

    wanted = {edge_key(*a): a for a in arcs}
    matches = []
    for tau in find_homogeneous_orientations(c):
        for cand in (tau, tau.reversed()):
            if edge_types(c, cand).directions == wanted:
                matches.append(cand)
    if len(matches) != 1:
        raise StructureError(f"expected one matching z-orientation, found {len(matches)}")
    return c, matches[0]


PATH_DIRECTIONS = ("ab", "ba", "ab", "ba")
DISKS = ((1, 2), (2, 3), (3, 4), (1, 4))


def gamma(p1: int, p2: int, p3: int, p4: int):
    """Four directed paths between ``a`` and ``b`` with ``p_i`` edges each, coned.

    Paths 1 and 3 run from ``a`` to ``b``, paths 2 and 4 from ``b`` to ``a``.
    Inner path vertices are ``v0, v1, ...`` numbered along the paths in that
    order; the apex of the disk bounded by paths ``i`` and ``j`` is ``vij``.
    """
    ps = (p1, p2, p3, p4)
    if any(not isinstance(p, int) or p < 1 for p in ps):
        raise DomainError(f"path lengths must be positive integers, got {ps}")
    if sum(1 for p in ps if p == 1) > 1:
        raise DomainError("at most one path may be a single edge")
    paths, k = [], 0
    for p, d in zip(ps, PATH_DIRECTIONS):
        inner = [f"v{k + i}" for i in range(p - 1)]
        k += p - 1
        start, end = ("a", "b") if d == "ab" else ("b", "a")
        paths.append([start] + inner + [end])
    cycles = []
    for i, j in DISKS:
        first, second = paths[i - 1], paths[j - 1]
        # the a->b path first, then the b->a path back
        if first[0] != "a":
            first, second = second, first
        cycles.append(first[:-1] + second[:-1])
    return triangulate_eulerian(cycles, apex_names=[f"v{i}{j}" for i, j in DISKS])


@dataclass(frozen=True)
class Gadget:
    name: str
    complex: SurfaceComplex
    tau: ZOrientation
    pair: SpecialPair
    class_id: str
    monodromy: Perm4 = field(compare=False)

    def variant(self, reverse: bool):
        """``(tau, pair, monodromy)`` as-is or with the orientation reversed."""
        if not reverse:
            return self.tau, self.pair, self.monodromy
        return _reversed_variant(self)


@lru_cache(maxsize=None)
def _reversed_variant(g: Gadget):
    tau = g.tau.reversed()
    pair = find_pair(g.complex, tau, g.pair.triple[::-1])
    return tau, pair, z_monodromy(g.complex, tau, pair)


def _bp(n):
    return oriented_bipyramid(n)


CATALOG_SPEC = (
    ("BP6", lambda: _bp(6), ("v1", "v2", "v3"), "K0"),
    ("BP5", lambda: _bp(5), ("v1", "v2", "v3"), "K1"),
    ("BP4", lambda: _bp(4), ("v1", "v2", "v3"), "K2"),
    ("BP7", lambda: _bp(7), ("v1", "v2", "v3"), "K3"),
    ("G2345", lambda: gamma(2, 3, 4, 5), ("v0", "b", "v1"), "K4"),
    ("G2345", lambda: gamma(2, 3, 4, 5), ("a", "v0", "b"), "K5"),
    ("G2434", lambda: gamma(2, 4, 3, 4), ("v0", "b", "v1"), "K6"),
    ("G2434", lambda: gamma(2, 4, 3, 4), ("b", "v1", "v2"), "K9"),
    ("G2434", lambda: gamma(2, 4, 3, 4), ("v1", "v2", "v3"), "K10"),
    ("G2345", lambda: gamma(2, 3, 4, 5), ("b", "v6", "v7"), "K11"),
    ("G2345", lambda: gamma(2, 3, 4, 5), ("b", "v1", "v2"), "K12"),
)


def verify_gadget(g: Gadget):
    def fail(what):
        raise CatalogError(f"gadget {g.name}[{g.pair}]: {what}")

    c = g.complex
    if c.euler_characteristic() != 2:
        fail("not a sphere")
    from .zigzags import is_z_homogeneous
    if not is_z_homogeneous(c, g.tau):
        fail("not z-homogeneous")
    if classify(g.monodromy).id != g.class_id:
        fail(f"monodromy {g.monodromy} is in {classify(g.monodromy).id}, expected {g.class_id}")
    if not is_essential(c, g.tau, g.pair):
        fail("pair is not essential")
    if c.has_edge(g.pair.v1, g.pair.v3):
        fail("pair endpoints are adjacent")


@lru_cache(maxsize=None)
def gadget_catalog() -> tuple:
    out = []
    for name, build, triple, cid in CATALOG_SPEC:
        try:
            c, tau = build()
            pair = find_pair(c, tau, triple)
            m = z_monodromy(c, tau, pair)
        except Exception as exc:  # surface any construction failure as a catalog failure
            raise CatalogError(f"gadget {name}[{','.join(triple)}]: {exc}") from exc
        g = Gadget(f"{name}:{','.join(triple)}", c, tau, pair, cid, m)
        verify_gadget(g)
        out.append(g)
    return tuple(out)
