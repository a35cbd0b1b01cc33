"""Complexes used across the test suite."""

from zknot.gadgets import triangulate_eulerian
from zknot.surface import SurfaceComplex

TETRAHEDRON = [["1", "2", "3"], ["1", "2", "4"], ["1", "3", "4"], ["2", "3", "4"]]

# 6-vertex projective plane (hemi-icosahedron)
RP2_6 = [[str(x) for x in f] for f in (
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
    (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4))]

# 7-vertex torus
TORUS_7 = [[str(i), str((i + 1) % 7), str((i + 3) % 7)] for i in range(7)] + \
          [[str(i), str((i + 2) % 7), str((i + 3) % 7)] for i in range(7)]


def _grid_cycles(name_of, window):
    """Directed triangles of the grid with steps (1,0), (0,1), (-1,-1), mapped by ``name_of``."""
    seen = {}
    for x in range(-window, window):
        for y in range(-window, window):
            for tri in (((x, y), (x + 1, y), (x + 1, y + 1)),
                        ((x, y), (x, y + 1), (x + 1, y + 1))):
                cyc = tuple(name_of(*p) for p in tri)
                i = cyc.index(min(cyc))
                cyc = cyc[i:] + cyc[:i]
                seen[cyc] = True
    return sorted(seen)


def torus_grid(m, n):
    """Coned directed triangular grid on the m x n torus."""
    cycles = _grid_cycles(lambda x, y: f"t{x % m}_{y % n}", max(m, n) + 2)
    assert len(cycles) == 2 * m * n
    return triangulate_eulerian(cycles)


def klein_grid(p, q):
    """Coned directed triangular grid on a Klein bottle.

    The quotient of the plane by the glide reflection (x, y) -> (y + p, x + p)
    and the translation (q, -q); the reflection swaps the steps (1,0) and
    (0,1) and fixes (-1,-1), so every face stays a directed cycle.
    """
    def name_of(x, y):
        u, w = x + y, x - y
        a = (u % (4 * p), w % (2 * q))
        b = ((u + 2 * p) % (4 * p), (-w) % (2 * q))
        return "k{}_{}".format(*min(a, b))

    cycles = _grid_cycles(name_of, 4 * (p + q) + 4)
    assert len(cycles) == 4 * p * q
    return triangulate_eulerian(cycles)


def complex_of(faces):
    return SurfaceComplex(faces)


def named_complexes():
    """Every fixture complex by name; small ones first."""
    from zknot import bipyramid, find_pair, gamma, open_pair, oriented_bipyramid

    out = {"tetrahedron": SurfaceComplex(TETRAHEDRON), "rp2_6": SurfaceComplex(RP2_6),
           "torus_7": SurfaceComplex(TORUS_7)}
    out.update({f"BP{n}": bipyramid(n) for n in range(3, 11)})
    for n in (4, 5):
        c, tau = oriented_bipyramid(n)
        out[f"BP{n}_opened"] = open_pair(c, tau, find_pair(c, tau, ("v1", "v2", "v3"))).complex
    out["G2345"] = gamma(2, 3, 4, 5)[0]
    out["G2434"] = gamma(2, 4, 3, 4)[0]
    out["G1222"] = gamma(1, 2, 2, 2)[0]
    out["torus_grid_3x3"] = torus_grid(3, 3)[0]
    out["klein_grid_3x2"] = klein_grid(3, 2)[0]
    return out


def homogeneous_fixtures():
    """``name -> (complex, tau)`` for the z-homogeneous fixtures."""
    from zknot import gamma, oriented_bipyramid

    out = {f"BP{n}": oriented_bipyramid(n) for n in range(3, 11)}
    out["G2345"] = gamma(2, 3, 4, 5)
    out["G2434"] = gamma(2, 4, 3, 4)
    out["G1222"] = gamma(1, 2, 2, 2)
    out["torus_grid_3x3"] = torus_grid(3, 3)
    out["klein_grid_3x2"] = klein_grid(3, 2)
    return out
