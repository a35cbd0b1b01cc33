import itertools

import pytest

from fixtures import klein_grid, torus_grid
from zknot import (
    GlueError, Perm4, SpecialHomeomorphism, StarViolation, check_star, connected_sum,
    enumerate_zigzags, find_pair, find_special_pairs, gadget_catalog, glue, is_z_homogeneous,
    open_pair, opened_monodromy, oriented_bipyramid, predicted_merge_count, z_monodromy,
)
from zknot.surgery import untouched_zigzags
from zknot.zigzags import edge_types


def test_open_bp5_counts():
    c, tau = oriented_bipyramid(5)
    o = open_pair(c, tau, find_pair(c, tau, ("v1", "v2", "v3")))
    oc = o.complex
    assert (oc.num_vertices, oc.num_edges, oc.num_faces) == (8, 17, 11)
    assert oc.euler_characteristic() == 2
    assert sorted(len(f) for f in oc.faces) == [3] * 10 + [4]
    assert o.hole_edges() == [("v1", "v2+"), ("v2+", "v3"), ("v1", "v2-"), ("v2-", "v3")]


def test_open_keeps_euler_and_names_fresh():
    c, tau = torus_grid(3, 3)
    for p in find_special_pairs(c, tau)[:6]:
        o = open_pair(c, tau, p)
        assert o.complex.euler_characteristic() == c.euler_characteristic()
        assert o.v2p not in c.vertices and o.v2m not in c.vertices


def _pairs_of(ct):
    c, tau = ct
    return [(c, tau, p) for p in find_special_pairs(c, tau)]


@pytest.mark.parametrize("ct", [oriented_bipyramid(4), oriented_bipyramid(6), oriented_bipyramid(7),
                                klein_grid(3, 2)], ids=["BP4", "BP6", "BP7", "klein"])
def test_opened_walk_matches_monodromy(ct):
    for c, tau, p in _pairs_of(ct)[:12]:
        assert opened_monodromy(open_pair(c, tau, p)) == z_monodromy(c, tau, p)


def test_catalog_opened_walks():
    for g in gadget_catalog():
        assert opened_monodromy(open_pair(g.complex, g.tau, g.pair)) == g.monodromy


def test_check_star():
    b3, t3 = oriented_bipyramid(3)
    p3 = find_pair(b3, t3, ("v1", "v2", "v3"))
    assert not check_star(b3, p3, b3, p3)
    b7 = next(g for g in gadget_catalog() if g.name.startswith("BP7"))
    assert check_star(b3, p3, b7.complex, b7.pair)
    g5 = next(g for g in gadget_catalog() if g.name == "G2345:a,v0,b")
    assert check_star(g5.complex, g5.pair, b3, p3)
    with pytest.raises(StarViolation):
        glue(b3, t3, p3, b3, t3, p3)


@pytest.mark.parametrize("mp, mp2, g, k", [
    ("(13)(24)", "(1234)", "direct", 1),
    ("(234)", "(1234)", "direct", 1),
    ("id", "id", "direct", 4),
    ("(14)(23)", "(24)", "direct", 1),
    ("(12)(34)", "(24)", "direct", 1),
    ("(143)", "(24)", "direct", 1),
])
def test_predicted_merge_count(mp, mp2, g, k):
    assert predicted_merge_count(Perm4.parse(mp), Perm4.parse(mp2), g) == k


def test_swap_conjugates_second_monodromy():
    for a, b in itertools.product((Perm4.parse(x) for x in ("id", "(24)", "(1423)", "(143)")), repeat=2):
        s = Perm4.parse("(13)(24)")
        assert predicted_merge_count(a, b, SpecialHomeomorphism.SWAP) == \
            predicted_merge_count(a, s * b * s, SpecialHomeomorphism.DIRECT)


def _sum_checks(ca, ta, pa, cb, tb, pb, g):
    r = glue(ca, ta, pa, cb, tb, pb, g)
    c = r.complex
    assert c.euler_characteristic() == ca.euler_characteristic() + cb.euler_characteristic() - 2
    assert c.is_orientable() == (ca.is_orientable() and cb.is_orientable())
    assert is_z_homogeneous(c, r.tau)
    predicted = predicted_merge_count(z_monodromy(ca, ta, pa), z_monodromy(cb, tb, pb), g)
    assert r.zigzags_through_glued() == predicted
    assert enumerate_zigzags(c).count == untouched_zigzags(ca, ta, pa) + untouched_zigzags(cb, tb, pb) + predicted
    return r


def test_sum_of_spheres_and_type_preservation():
    a, b = gadget_catalog()[0], gadget_catalog()[5]
    r = _sum_checks(a.complex, a.tau, a.pair, b.complex, b.tau, b.pair, "direct")
    dirs = edge_types(r.complex, r.tau).directions
    # an untouched type-II edge of each summand keeps its direction
    assert dirs[("v4", "v5")] == ("v4", "v5")
    for e, d in edge_types(b.complex, b.tau).directions.items():
        if b.pair.v2 in e:
            continue
        renamed = tuple(r.vertex_map[x] for x in d)
        assert dirs[tuple(sorted(renamed))] == renamed


def test_both_homeomorphisms_on_torus():
    c, tau = torus_grid(3, 3)
    p = find_special_pairs(c, tau)[0]
    g = gadget_catalog()[1]
    counts = {kind: _sum_checks(c, tau, p, g.complex, g.tau, g.pair, kind) for kind in ("direct", "swap")}
    assert all(r.complex.euler_characteristic() == 0 for r in counts.values())


def test_connected_sum_returns_pair():
    c, tau = oriented_bipyramid(6)
    p = find_pair(c, tau, ("v1", "v2", "v3"))
    g = gadget_catalog()[1]
    c2, tau2 = connected_sum(c, tau, p, g.complex, g.tau, g.pair, SpecialHomeomorphism.DIRECT)
    assert enumerate_zigzags(c2).count == 1 and is_z_homogeneous(c2, tau2)


def test_bad_orientation_rejected():
    c, tau = oriented_bipyramid(6)
    p = find_pair(c, tau, ("v1", "v2", "v3"))
    g = gadget_catalog()[1]
    # the gadget pair read against the reversed gadget orientation is not type II forward
    from zknot import StructureError
    with pytest.raises((GlueError, StructureError)):
        glue(c, tau, p, g.complex, g.tau.reversed(), g.pair)
