"""Closed 2-cell embeddings of simple graphs, given as face lists.

A :class:`SurfaceComplex` is built from a list of faces, each face being the
cyclic sequence of its boundary vertices.  Faces carry no preferred
orientation (the surface may be non-orientable), so every face is stored in a
canonical form: the lexicographically smallest of its rotations and
reflections.

Edges are sorted vertex pairs ``(u, v)`` with ``u < v``; directed edges are
plain ``(tail, head)`` tuples.
"""

from __future__ import annotations

import json
from collections import defaultdict, deque
from functools import cached_property
from typing import Iterable, Sequence

from .errors import IncidenceError, ParseError, ValidationError

Vertex = str
Face = tuple  # canonical tuple of vertices
Edge = tuple  # (u, v) with u < v
DirectedEdge = tuple  # (tail, head)


def edge_key(u, v) -> Edge:
    return (u, v) if u < v else (v, u)


def negate(e: DirectedEdge) -> DirectedEdge:
    return (e[1], e[0])


def canonical_face(boundary: Sequence) -> Face:
    """Smallest rotation/reflection of a cyclic vertex sequence."""
    b = tuple(boundary)
    n = len(b)
    r = b[::-1]
    return min(min(b[i:] + b[:i] for i in range(n)),
               min(r[i:] + r[:i] for i in range(n)))


def face_edges(f: Face):
    n = len(f)
    return [edge_key(f[i], f[(i + 1) % n]) for i in range(n)]


def face_contains_edge(f: Face, e) -> bool:
    u, v = e
    if u not in f or v not in f:
        return False
    n = len(f)
    i = f.index(u)
    return f[(i + 1) % n] == v or f[i - 1] == v


def next_in_face(f: Face, u, v):
    """Vertex following ``v`` when ``f`` is read so that ``u`` precedes ``v``."""
    n = len(f)
    i = f.index(u)
    if f[(i + 1) % n] == v:
        return f[(i + 2) % n]
    if f[i - 1] == v:
        return f[i - 2]
    raise IncidenceError(f"({u}, {v}) is not a boundary edge of {list(f)}")


class SurfaceComplex:
    """An immutable, validated closed 2-cell embedding.

    Validation runs in the constructor; the first violated invariant raises
    :class:`ValidationError`.
    """

    def __init__(self, faces: Iterable[Sequence[Vertex]]):
        raw = [tuple(str(v) for v in f) for f in faces]
        for f in raw:
            if len(f) < 3:
                raise ValidationError("face_size", f"face {list(f)} has fewer than 3 vertices")
            if len(set(f)) != len(f):
                raise ValidationError("face_vertices", f"face {list(f)} repeats a vertex")
        canon = [canonical_face(f) for f in raw]
        if len(set(canon)) != len(canon):
            dup = next(f for f in canon if canon.count(f) > 1)
            raise ValidationError("duplicate_face", f"face {list(dup)} occurs twice")
        self._faces = tuple(sorted(canon))

        edge_faces = defaultdict(list)
        for f in self._faces:
            for e in face_edges(f):
                edge_faces[e].append(f)
        self._edge_faces = {e: tuple(fs) for e, fs in sorted(edge_faces.items())}
        self._validate()

    # -- validation ---------------------------------------------------------

    def _validate(self):
        if not self._faces:
            raise ValidationError("empty", "complex has no faces")
        for e, fs in self._edge_faces.items():
            if len(fs) != 2:
                if len(fs) > 2 and len(fs) % 2 == 0:
                    raise ValidationError(
                        "multi_edge", f"vertices {e[0]}, {e[1]} are joined in {len(fs)} face slots")
                raise ValidationError(
                    "edge_face_count", f"edge {e[0]}-{e[1]} lies in {len(fs)} face(s), expected 2")

        adj = self.neighbors
        start = self.vertices[0]
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != len(self.vertices):
            raise ValidationError("disconnected", "underlying graph is not connected")

        for v in self.vertices:
            if len(adj[v]) <= 2:
                raise ValidationError("vertex_degree", f"vertex {v} has degree {len(adj[v])}")

        for v in self.vertices:
            if len(self._walk_rotation(v)) != 2 * len(adj[v]):
                raise ValidationError("vertex_link", f"link of vertex {v} is not a single cycle")

    # -- derived data -------------------------------------------------------

    @property
    def faces(self) -> tuple:
        return self._faces

    @cached_property
    def vertices(self) -> tuple:
        return tuple(sorted({v for f in self._faces for v in f}))

    @property
    def edges(self) -> tuple:
        return tuple(self._edge_faces)

    @cached_property
    def neighbors(self) -> dict:
        adj = defaultdict(set)
        for u, v in self._edge_faces:
            adj[u].add(v)
            adj[v].add(u)
        return {v: tuple(sorted(adj[v])) for v in self.vertices}

    @cached_property
    def vertex_faces(self) -> dict:
        inc = defaultdict(list)
        for f in self._faces:
            for v in f:
                inc[v].append(f)
        return dict(inc)

    def degree(self, v) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u, v) -> bool:
        return edge_key(u, v) in self._edge_faces

    def faces_of_edge(self, e) -> tuple:
        try:
            return self._edge_faces[edge_key(*e)]
        except KeyError:
            raise IncidenceError(f"{e[0]}-{e[1]} is not an edge") from None

    def other_face(self, e, f: Face) -> Face:
        """The second face containing edge ``e``."""
        f = canonical_face(f)
        a, b = self.faces_of_edge(e)
        if f == a:
            return b
        if f == b:
            return a
        raise IncidenceError(f"face {list(f)} does not contain edge {e[0]}-{e[1]}")

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self._edge_faces)

    @property
    def num_faces(self) -> int:
        return len(self._faces)

    def is_triangulation(self) -> bool:
        return all(len(f) == 3 for f in self._faces)

    # -- rotation -----------------------------------------------------------

    def _walk_rotation(self, v):
        e0 = edge_key(v, self.neighbors[v][0])
        f0 = self._edge_faces[e0][0]
        seq = []
        e, f = e0, f0
        while True:
            seq.append(e)
            seq.append(f)
            # the other edge of f at v
            n = len(f)
            i = f.index(v)
            w = f[(i + 1) % n] if edge_key(v, f[i - 1]) == e else f[i - 1]
            e = edge_key(v, w)
            f = self.other_face(e, f)
            if e == e0 and f == f0:
                return seq
            if len(seq) > 2 * len(self._faces) + 2:
                return seq

    def vertex_rotation(self, v) -> list:
        """Alternating cycle ``[edge, face, edge, face, ...]`` around ``v``.

        Starts at the smallest incident edge and its first face, so the result
        is deterministic.
        """
        if v not in self.neighbors:
            raise IncidenceError(f"unknown vertex {v}")
        return self._walk_rotation(v)

    # -- topology -----------------------------------------------------------

    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + self.num_faces

    def is_orientable(self) -> bool:
        """Propagate boundary orientations across shared edges."""
        oriented = {self._faces[0]: self._faces[0]}
        queue = deque([self._faces[0]])
        while queue:
            f = queue.popleft()
            cyc = oriented[f]
            n = len(cyc)
            for i in range(n):
                u, v = cyc[i], cyc[(i + 1) % n]
                g = self.other_face((u, v), f)
                # g must run v -> u
                if g in oriented:
                    if not _runs(oriented[g], v, u):
                        return False
                else:
                    oriented[g] = g if _runs(g, v, u) else g[::-1]
                    queue.append(g)
        return True

    # -- dunder -------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, SurfaceComplex) and self._faces == other._faces

    def __hash__(self):
        return hash(self._faces)

    def __repr__(self):
        return (f"SurfaceComplex(V={self.num_vertices}, E={self.num_edges}, "
                f"F={self.num_faces})")


def _runs(cycle, u, v) -> bool:
    """True if ``cycle`` read in its stored direction has ``u`` right before ``v``."""
    i = cycle.index(u)
    return cycle[(i + 1) % len(cycle)] == v


def euler_characteristic(c: SurfaceComplex) -> int:
    return c.euler_characteristic()


def orientability(c: SurfaceComplex) -> bool:
    return c.is_orientable()


def vertex_rotation(c: SurfaceComplex, v) -> list:
    return c.vertex_rotation(v)


def other_face(c: SurfaceComplex, e, f) -> Face:
    return c.other_face(e, f)


# -- serialization ----------------------------------------------------------

def parse_complex(text: str) -> SurfaceComplex:
    return load_document(text)[0]


def load_document(text: str):
    """Parse a complex file; returns ``(complex, tau_bits or None)``."""
    try:
        data = json.loads(text)
    except (json.JSONDecodeError, TypeError) as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    if not isinstance(data, dict) or "faces" not in data:
        raise ParseError('expected an object with a "faces" array')
    faces = data["faces"]
    if not isinstance(faces, list) or not all(isinstance(f, list) for f in faces):
        raise ParseError('"faces" must be an array of arrays')
    for f in faces:
        if not all(isinstance(v, str) for v in f):
            raise ParseError("vertex tokens must be strings")
    tau = data.get("tau")
    if tau is not None:
        if not isinstance(tau, list) or not all(b in (0, 1) and isinstance(b, int) for b in tau):
            raise ParseError('"tau" must be an array of 0/1 flags')
        tau = tuple(tau)
    return SurfaceComplex(faces), tau


def serialize_complex(c: SurfaceComplex, tau=None) -> str:
    """Canonical, diffable JSON: one face per line, faces sorted."""
    lines = ["{", '  "faces": [']
    body = [f"    {json.dumps(list(f))}" for f in c.faces]
    lines.append(",\n".join(body))
    if tau is None:
        lines.append("  ]")
    else:
        lines.append("  ],")
        lines.append(f'  "tau": {json.dumps([int(b) for b in tau])}')
    lines.append("}")
    return "\n".join(lines) + "\n"
