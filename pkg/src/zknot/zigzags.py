"""Zigzags (Petrie walks), z-orientations and edge/face typing.

A zigzag is handled as an orbit of the *step* permutation on states.  A state
``(e, f)`` is a directed edge ``e`` together with the face ``f`` through which
the walk leaves ``e``; there are ``4 * E`` states.  The step from ``((u, v), f)``
goes to ``((v, w), f')`` where ``w`` follows ``v`` in ``f`` read from ``u`` to
``v`` and ``f'`` is the other face of ``{v, w}``.

Zigzag pairs ``{Z, Z^-1}`` are ordered by their canonical keys.  A
z-orientation is a bit vector against that order: bit ``0`` selects the member
with the smaller key, bit ``1`` the reversed one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import StructureError, TooManyZigzags
from .surface import SurfaceComplex, edge_key, negate, next_in_face

TYPE_I = "I"
TYPE_II = "II"

MAX_ORIENTATION_PAIRS = 20


def zigzag_step(c: SurfaceComplex, state):
    (u, v), f = state
    w = next_in_face(f, u, v)
    return (v, w), c.other_face((v, w), f)


def reverse_state(c: SurfaceComplex, state):
    e, f = state
    return negate(e), c.other_face(e, f)


def all_states(c: SurfaceComplex):
    out = []
    for u, v in c.edges:
        faces = c.faces_of_edge((u, v))
        for d in ((u, v), (v, u)):
            for f in faces:
                out.append((d, f))
    return out


def _min_rotation(seq):
    n = len(seq)
    best = min(range(n), key=lambda i: seq[i:] + seq[:i])
    return best


@dataclass(frozen=True)
class Zigzag:
    states: tuple

    @classmethod
    def from_orbit(cls, states):
        edges = tuple(s[0] for s in states)
        i = _min_rotation(edges)
        return cls(tuple(states[i:]) + tuple(states[:i]))

    @property
    def edges(self) -> tuple:
        return tuple(s[0] for s in self.states)

    @property
    def key(self) -> tuple:
        return self.edges

    @property
    def vertices(self) -> tuple:
        """Tails of the directed edges, i.e. the zigzag as a vertex cycle."""
        return tuple(e[0] for e in self.edges)

    def __len__(self):
        return len(self.states)

    def reversed(self, c: SurfaceComplex) -> "Zigzag":
        return Zigzag.from_orbit([reverse_state(c, s) for s in reversed(self.states)])

    def undirected_edges(self) -> set:
        return {edge_key(*e) for e in self.edges}


def canonical_key(z: Zigzag) -> tuple:
    return z.key


def pair_key(z: Zigzag, c: SurfaceComplex) -> tuple:
    return min(z.key, z.reversed(c).key)


@dataclass(frozen=True)
class ZigzagSet:
    pairs: tuple  # ((Z, Z^-1), ...) with Z.key < Z^-1.key, sorted by Z.key

    @property
    def count(self) -> int:
        return len(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def representatives(self, tau) -> list:
        bits = tau.bits if isinstance(tau, ZOrientation) else tuple(tau)
        if len(bits) != len(self.pairs):
            raise ValueError(f"orientation has {len(bits)} bits, complex has {len(self.pairs)} zigzag pairs")
        return [pair[b] for pair, b in zip(self.pairs, bits)]

    def orientation_of(self, zigzags) -> "ZOrientation":
        """Bits selecting exactly the given zigzags (one per pair)."""
        keys = {z.key for z in zigzags}
        bits = []
        for z, zr in self.pairs:
            if z.key in keys:
                bits.append(0)
            elif zr.key in keys:
                bits.append(1)
            else:
                raise ValueError("zigzag list does not cover every pair")
        return ZOrientation(tuple(bits))


@lru_cache(maxsize=512)
def enumerate_zigzags(c: SurfaceComplex) -> ZigzagSet:
    seen = set()
    orbits = []
    for s0 in all_states(c):
        if s0 in seen:
            continue
        orbit = [s0]
        seen.add(s0)
        s = zigzag_step(c, s0)
        while s != s0:
            orbit.append(s)
            seen.add(s)
            s = zigzag_step(c, s)
        orbits.append(Zigzag.from_orbit(orbit))

    by_key = {z.key: z for z in orbits}
    pairs = {}
    for z in orbits:
        zr = z.reversed(c)
        if zr.key not in by_key:
            raise StructureError("reversed orbit missing from the state decomposition")
        if zr.key == z.key:
            raise StructureError("self-reversed zigzag")
        lo, hi = (z, zr) if z.key < zr.key else (zr, z)
        pairs[lo.key] = (lo, hi)
    return ZigzagSet(tuple(pairs[k] for k in sorted(pairs)))


def is_z_knotted(c: SurfaceComplex) -> bool:
    return enumerate_zigzags(c).count == 1


@dataclass(frozen=True)
class ZOrientation:
    bits: tuple

    @classmethod
    def parse(cls, text) -> "ZOrientation":
        if isinstance(text, ZOrientation):
            return text
        if isinstance(text, str):
            text = text.strip()
            if not text or any(ch not in "01" for ch in text):
                raise ValueError(f"orientation bits must be a 0/1 string, got {text!r}")
            return cls(tuple(int(ch) for ch in text))
        return cls(tuple(int(b) for b in text))

    def reversed(self) -> "ZOrientation":
        return ZOrientation(tuple(1 - b for b in self.bits))

    def __str__(self):
        return "".join(str(b) for b in self.bits)

    def __len__(self):
        return len(self.bits)


@dataclass(frozen=True)
class EdgeTyping:
    types: dict       # edge -> "I" | "II"
    directions: dict  # edge -> directed edge, type II only

    def type_ii(self) -> list:
        return [self.directions[e] for e in sorted(self.directions)]

    def count(self, kind) -> int:
        return sum(1 for t in self.types.values() if t == kind)


def edge_types(c: SurfaceComplex, tau) -> EdgeTyping:
    return _edge_types(c, ZOrientation.parse(tau))


@lru_cache(maxsize=512)
def _edge_types(c, tau):
    traversals = {e: [] for e in c.edges}
    for z in enumerate_zigzags(c).representatives(tau):
        for d in z.edges:
            traversals[edge_key(*d)].append(d)
    types, directions = {}, {}
    for e, ds in traversals.items():
        if len(ds) != 2:
            raise StructureError(f"edge {e} traversed {len(ds)} times by the orientation")
        if ds[0] == ds[1]:
            types[e] = TYPE_II
            directions[e] = ds[0]
        else:
            types[e] = TYPE_I
    return EdgeTyping(types, directions)


def face_types(c: SurfaceComplex, tau) -> dict:
    if not c.is_triangulation():
        raise StructureError("face types are defined for triangulations only")
    typing = edge_types(c, tau)
    out = {}
    for f in c.faces:
        es = [edge_key(f[i], f[(i + 1) % 3]) for i in range(3)]
        second = [e for e in es if typing.types[e] == TYPE_II]
        if len(second) == 1:
            out[f] = TYPE_I
        elif len(second) == 3 and _directed_triangle(typing, f):
            out[f] = TYPE_II
        else:
            raise StructureError(f"face {list(f)} has {len(second)} type-II edges")
    return out


def _directed_triangle(typing, f) -> bool:
    ds = [typing.directions[edge_key(f[i], f[(i + 1) % 3])] for i in range(3)]
    heads = {d[1] for d in ds}
    tails = {d[0] for d in ds}
    return heads == tails == set(f)


def _homogeneous_pattern(kinds) -> bool:
    n = len(kinds)
    if n % 3:
        return False
    return any(all((kinds[j] == TYPE_II) == ((j - o) % 3 == 0) for j in range(n))
               for o in range(3))


def is_z_homogeneous(c: SurfaceComplex, tau) -> bool:
    if not c.is_triangulation():
        return False
    typing = edge_types(c, tau)
    for z in enumerate_zigzags(c).representatives(tau):
        if not _homogeneous_pattern([typing.types[edge_key(*d)] for d in z.edges]):
            return False
    return True


def find_homogeneous_orientations(c: SurfaceComplex, max_pairs=MAX_ORIENTATION_PAIRS) -> list:
    """All z-homogeneous orientations with the first bit fixed to 0."""
    k = enumerate_zigzags(c).count
    if k > max_pairs:
        raise TooManyZigzags(f"{k} zigzag pairs exceed the enumeration guard of {max_pairs}")
    found = []
    for rest in itertools.product((0, 1), repeat=k - 1):
        tau = ZOrientation((0,) + rest)
        if is_z_homogeneous(c, tau):
            found.append(tau)
    return found


@dataclass(frozen=True)
class TypeIIGraph:
    vertices: tuple
    edges: tuple  # directed, sorted

    def out_neighbors(self, v) -> list:
        return [h for t, h in self.edges if t == v]


def type_II_subgraph(c: SurfaceComplex, tau) -> TypeIIGraph:
    typing = edge_types(c, tau)
    edges = tuple(sorted(typing.directions.values()))
    verts = tuple(sorted({v for e in edges for v in e}))
    indeg = dict.fromkeys(verts, 0)
    outdeg = dict.fromkeys(verts, 0)
    adj = {v: set() for v in verts}
    for t, h in edges:
        outdeg[t] += 1
        indeg[h] += 1
        adj[t].add(h)
        adj[h].add(t)
    for v in verts:
        if indeg[v] != outdeg[v]:
            raise StructureError(f"type-II subgraph unbalanced at {v}: in {indeg[v]}, out {outdeg[v]}")
    if verts:
        seen, stack = {verts[0]}, [verts[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(verts):
            raise StructureError("type-II subgraph is not connected")
    return TypeIIGraph(verts, edges)


def zigzags_through_edges(c: SurfaceComplex, tau, edges) -> int:
    """Number of orientation representatives that traverse any of ``edges``."""
    wanted = {edge_key(*e) for e in edges}
    return sum(1 for z in enumerate_zigzags(c).representatives(tau)
               if z.undirected_edges() & wanted)


def orientation_from_directions(c: SurfaceComplex, directions) -> ZOrientation:
    """Pick, per zigzag pair, the member that runs along the given directed edges.

    ``directions`` maps undirected edges to their required direction.  Every
    pair must meet at least one of them and agree (or disagree) with all.
    """
    bits = []
    for z, _ in enumerate_zigzags(c).pairs:
        votes = {d == directions[edge_key(*d)] for d in z.edges if edge_key(*d) in directions}
        if len(votes) != 1:
            what = "no prescribed edge" if not votes else "prescribed edges in both directions"
            raise StructureError(f"zigzag through {z.edges[0]} meets {what}")
        bits.append(0 if votes.pop() else 1)
    return ZOrientation(tuple(bits))
