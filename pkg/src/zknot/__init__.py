"""Zigzags, z-monodromy and the knotting construction for triangulated surfaces."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    CatalogError, DomainError, GadgetSearchError, GlueError, IncidenceError, InputError,
    LoopGuard, MonodromyError, ParseError, SelectionError, StarViolation, StructureError,
    TooManyZigzags, ValidationError, ZknotError,
)
from .surface import (  # noqa: E402
    SurfaceComplex, euler_characteristic, load_document, orientability, other_face,
    parse_complex, serialize_complex, vertex_rotation,
)
from .zigzags import (  # noqa: E402
    EdgeTyping, Zigzag, ZigzagSet, ZOrientation, edge_types, enumerate_zigzags, face_types,
    find_homogeneous_orientations, is_z_homogeneous, is_z_knotted, type_II_subgraph, zigzag_step,
)
from .s4 import (  # noqa: E402
    MonodromyClass, Perm4, S, T, classify, orientation_reversal, s4_table, side_swap,
)
from .monodromy import (  # noqa: E402
    SpecialPair, find_pair, find_special_pairs, is_essential, special_pair, z_monodromy,
    zigzags_through_pair,
)
from .gadgets import Gadget, bipyramid, gadget_catalog, gamma, oriented_bipyramid, triangulate_eulerian  # noqa: E402
from .surgery import (  # noqa: E402
    OpenedComplex, SpecialHomeomorphism, check_star, connected_sum, glue, open_pair,
    opened_monodromy, predicted_merge_count,
)
from .knotting import KnottingTrace, knot, select_gadget, select_pair  # noqa: E402
