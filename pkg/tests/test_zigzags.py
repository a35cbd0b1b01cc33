import re

import pytest
from hypothesis import given, settings, strategies as st

from fixtures import RP2_6, TETRAHEDRON, TORUS_7, klein_grid, torus_grid
from zknot import (
    StructureError, SurfaceComplex, TooManyZigzags, ZOrientation, bipyramid, edge_types,
    enumerate_zigzags, face_types, find_homogeneous_orientations, gamma, is_z_homogeneous,
    is_z_knotted, oriented_bipyramid, type_II_subgraph, zigzag_step,
)
from zknot.surface import canonical_face, edge_key
from zknot.zigzags import TYPE_I, TYPE_II, all_states, pair_key, reverse_state


def edges(text):
    """``"av1,v1v2"`` -> ``[("a", "v1"), ("v1", "v2")]`` (single-digit indices only)."""
    return [tuple(re.findall(r"a|b|v\d", tok)) for tok in text.replace(" ", "").split(",")]


def is_rotation(seq, cyc):
    seq, cyc = tuple(seq), tuple(cyc)
    return len(seq) == len(cyc) and any(cyc[i:] + cyc[:i] == seq for i in range(len(cyc)))


def orientation_for(c, wanted):
    """Bits choosing the members that are rotations of the given edge cycles."""
    bits = []
    for z, zr in enumerate_zigzags(c).pairs:
        hits = [b for b, m in ((0, z), (1, zr)) for w in wanted if is_rotation(w, m.edges)]
        assert len(hits) == 1
        bits.append(hits[0])
    return ZOrientation(tuple(bits))


BP5_ZIGZAG = edges(
    "av1,v1v2,v2b,bv3,v3v4,v4a,av5,v5v1,"
    "v1b,bv2,v2v3,v3a,av4,v4v5,v5b,"
    "bv1,v1v2,v2a,av3,v3v4,v4b,bv5,v5v1,"
    "v1a,av2,v2v3,v3b,bv4,v4v5,v5a")
BP6_Z1 = edges("av1,v1v2,v2b,bv3,v3v4,v4a,av5,v5v6,v6b,bv1,v1v2,v2a,av3,v3v4,v4b,bv5,v5v6,v6a")
BP6_Z2 = edges("av2,v2v3,v3b,bv4,v4v5,v5a,av6,v6v1,v1b,bv2,v2v3,v3a,av4,v4v5,v5b,bv6,v6v1,v1a")
BP4_ZIGZAGS = [edges(t) for t in (
    "av1,v1v2,v2b,bv3,v3v4,v4a", "bv1,v1v2,v2a,av3,v3v4,v4b",
    "av2,v2v3,v3b,bv4,v4v1,v1a", "bv2,v2v3,v3a,av4,v4v1,v1b")]

G2345_ZIGZAGS = [s.split() for s in (
    "v14 a v0 v12 b v1 v23 v2 a v12 v0 b v14 v6 v7 v34 v8 v9",
    "v14 v0 b v12 v1 v2 v23 a v3 v34 v4 v5 v23 b v1 v12 v2 a v23 v3 v4 "
    "v34 v5 b v23 v1 v2 v12 a v0 v14 b v6 v34 v7 v8 v14 v9 a v34 v3 v4 "
    "v23 v5 b v34 v6 v7 v14 v8 v9 v34 a v3 v23 v4 v5 v34 b v6 v14 v7 v8 v34 v9 a",
)]
G2434_ZIGZAGS = [s.split() for s in (
    "v14 a v0 v12 b v1 v23 v2 v3 v12 a v0 v14 b v6 v34 v7 v8",
    "v14 v0 b v12 v1 v2 v23 v3 a v12 v0 b v14 v6 v7 v34 v8 a",
    "v23 b v1 v12 v2 v3 v23 a v4 v34 v5 b v23 v1 v2 v12 v3 a v23 v4 v5 "
    "v34 b v6 v14 v7 v8 v34 a v4 v23 v5 b v34 v6 v7 v14 v8 a v34 v4 v5",
)]


# -- stepping -----------------------------------------------------------------

def test_step_examples_bp3():
    c = bipyramid(3)
    s = zigzag_step(c, (("a", "v1"), canonical_face(("a", "v1", "v2"))))
    assert s == (("v1", "v2"), canonical_face(("b", "v2", "v1")))
    s2 = zigzag_step(c, s)
    assert s2[0] == ("v2", "b")
    assert s2[1] == c.other_face(("v2", "b"), canonical_face(("b", "v2", "v1")))


def test_bp5_prefix():
    c = bipyramid(5)
    s = (("a", "v1"), canonical_face(("a", "v1", "v2")))
    seen = [s[0]]
    for _ in range(3):
        s = zigzag_step(c, s)
        seen.append(s[0])
    assert seen == edges("av1,v1v2,v2b,bv3")


def test_step_is_a_bijection():
    c = bipyramid(6)
    states = all_states(c)
    assert len(states) == 4 * c.num_edges
    assert len({zigzag_step(c, s) for s in states}) == len(states)
    for s in states:
        assert reverse_state(c, reverse_state(c, s)) == s


# -- enumeration -------------------------------------------------------------

@pytest.mark.parametrize("n, count", [(3, 1), (4, 4), (5, 1), (6, 2), (7, 1), (8, 4), (9, 1), (10, 2)])
def test_bipyramid_counts(n, count):
    assert enumerate_zigzags(bipyramid(n)).count == count
    assert is_z_knotted(bipyramid(n)) == (count == 1)


def test_bp5_listing():
    (z, zr), = enumerate_zigzags(bipyramid(5)).pairs
    assert is_rotation(BP5_ZIGZAG, z.edges) or is_rotation(BP5_ZIGZAG, zr.edges)


def test_gamma_counts():
    assert enumerate_zigzags(gamma(2, 3, 4, 5)[0]).count == 2
    assert enumerate_zigzags(gamma(2, 4, 3, 4)[0]).count == 3


@pytest.mark.parametrize("build, listing", [(lambda: gamma(2, 3, 4, 5), G2345_ZIGZAGS),
                                            (lambda: gamma(2, 4, 3, 4), G2434_ZIGZAGS)])
def test_gamma_listings_are_the_orientation(build, listing):
    c, tau = build()
    reps = enumerate_zigzags(c).representatives(tau)
    assert sorted(len(z) for z in reps) == sorted(len(w) for w in listing)
    for w in listing:
        assert sum(is_rotation(w, z.vertices) for z in reps) == 1
    assert tau in find_homogeneous_orientations(c) or tau.reversed() in find_homogeneous_orientations(c)


def test_pair_keys():
    c = bipyramid(3)
    (z, zr), = enumerate_zigzags(c).pairs
    assert z.key != zr.key
    assert pair_key(z, c) == pair_key(zr, c) == z.key
    assert z.reversed(c) == zr


# -- typing ---------------------------------------------------------------

def test_bp5_typing():
    c = bipyramid(5)
    tau, = find_homogeneous_orientations(c)
    typing = edge_types(c, tau)
    base = {edge_key(f"v{i}", f"v{i % 5 + 1}") for i in range(1, 6)}
    assert {e for e, t in typing.types.items() if t == TYPE_II} == base
    assert typing.count(TYPE_I) == 10
    assert set(face_types(c, tau).values()) == {TYPE_I}
    g = type_II_subgraph(c, tau)
    assert len(g.edges) == 5 and all(len(g.out_neighbors(v)) == 1 for v in g.vertices)


def test_bp6_orientations():
    c = bipyramid(6)
    tau = orientation_for(c, [BP6_Z1, BP6_Z2])
    assert is_z_homogeneous(c, tau)
    typing = edge_types(c, tau)
    assert all((t == TYPE_II) == (e[0][0] == e[1][0] == "v") for e, t in typing.types.items())
    assert tau in find_homogeneous_orientations(c) or tau.reversed() in find_homogeneous_orientations(c)
    mixed = ZOrientation((tau.bits[0], 1 - tau.bits[1]))
    edge_types(c, mixed)  # the typing still exists
    assert not is_z_homogeneous(c, mixed)


def test_bp4_orientation():
    c = bipyramid(4)
    tau = orientation_for(c, BP4_ZIGZAGS)
    assert is_z_homogeneous(c, tau)
    assert set(face_types(c, tau).values()) == {TYPE_I}
    g = type_II_subgraph(c, tau)
    assert set(g.vertices) == {"v1", "v2", "v3", "v4"} and len(g.edges) == 4


def test_bp4_has_three_homogeneous_orientations():
    found = [str(t) for t in find_homogeneous_orientations(bipyramid(4))]
    assert found == ["0001", "0100", "0111"]


@pytest.mark.parametrize("n", range(3, 10))
def test_bipyramids_homogeneous(n):
    c, tau = oriented_bipyramid(n)
    assert is_z_homogeneous(c, tau)


def test_gamma_type_ii_is_the_paths():
    c, tau = gamma(2, 3, 4, 5)
    g = type_II_subgraph(c, tau)
    paths = [["a", "v0", "b"], ["b", "v1", "v2", "a"], ["a", "v3", "v4", "v5", "b"],
             ["b", "v6", "v7", "v8", "v9", "a"]]
    assert set(g.edges) == {(p[i], p[i + 1]) for p in paths for i in range(len(p) - 1)}


def test_face_types_need_triangles():
    from zknot import find_pair, open_pair
    c, tau = oriented_bipyramid(5)
    opened = open_pair(c, tau, find_pair(c, tau, ("v1", "v2", "v3"))).complex
    with pytest.raises(StructureError):
        face_types(opened, ZOrientation((0,) * enumerate_zigzags(opened).count))


@pytest.mark.parametrize("faces", [TETRAHEDRON, RP2_6, TORUS_7, bipyramid(4).faces, bipyramid(6).faces])
def test_face_types_total_for_every_orientation(faces):
    import itertools
    c = SurfaceComplex(faces)
    k = enumerate_zigzags(c).count
    for bits in itertools.product((0, 1), repeat=k):
        assert set(face_types(c, ZOrientation(bits)).values()) <= {TYPE_I, TYPE_II}


def test_too_many_zigzags_guard():
    c, _ = torus_grid(3, 3)
    with pytest.raises(TooManyZigzags):
        find_homogeneous_orientations(c, max_pairs=4)


# -- properties over fixtures ---------------------------------------------------------------

def fixture_complexes():
    out = [SurfaceComplex(f) for f in (TETRAHEDRON, RP2_6, TORUS_7)]
    out += [bipyramid(n) for n in range(3, 11)]
    out += [gamma(2, 3, 4, 5)[0], gamma(2, 4, 3, 4)[0], gamma(1, 2, 2, 2)[0]]
    out += [torus_grid(3, 3)[0], klein_grid(3, 2)[0]]
    return out


@pytest.mark.parametrize("c", fixture_complexes(), ids=lambda c: f"V{c.num_vertices}E{c.num_edges}")
def test_double_cover_and_no_self_reversal(c):
    zs = enumerate_zigzags(c)
    tau = ZOrientation((0,) * zs.count)
    assert sum(len(z) for z in zs.representatives(tau)) == 2 * c.num_edges
    for z, zr in zs.pairs:
        assert z.key != zr.key
    typing = edge_types(c, tau)
    assert set(typing.types) == set(c.edges)


@pytest.mark.parametrize("c", fixture_complexes(), ids=lambda c: f"V{c.num_vertices}E{c.num_edges}")
def test_homogeneous_divisibility(c):
    for tau in find_homogeneous_orientations(c)[:4]:
        typing = edge_types(c, tau)
        assert typing.count(TYPE_I) == 2 * typing.count(TYPE_II)
        assert all(len(z) % 3 == 0 for z in enumerate_zigzags(c).representatives(tau))
        assert set(face_types(c, tau).values()) == {TYPE_I}
        type_II_subgraph(c, tau)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([bipyramid(4), bipyramid(6), gamma(2, 4, 3, 4)[0], SurfaceComplex(TORUS_7)]),
       st.data())
def test_reversal_negates_type_ii(c, data):
    k = enumerate_zigzags(c).count
    tau = ZOrientation(tuple(data.draw(st.lists(st.integers(0, 1), min_size=k, max_size=k))))
    a, b = edge_types(c, tau), edge_types(c, tau.reversed())
    assert a.types == b.types
    assert {e: d[::-1] for e, d in a.directions.items()} == b.directions
