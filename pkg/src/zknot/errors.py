"""Exception hierarchy.

Input problems (bad files, invalid complexes) derive from :class:`InputError`;
everything else is a :class:`DomainError`-style failure of a construction.
The CLI maps the first group to exit code 2 and the rest to exit code 1.
"""


class ZknotError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ZknotError):
    pass


class ParseError(InputError):
    pass


class ValidationError(InputError):
    """A face list does not describe a valid closed 2-cell embedding.

    ``invariant`` names the first violated condition, e.g. ``"edge_face_count"``,
    ``"multi_edge"``, ``"disconnected"``, ``"vertex_degree"``, ``"vertex_link"``.
    """

    def __init__(self, invariant, message):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


class IncidenceError(ZknotError):
    pass


class StructureError(ZknotError):
    pass


class TooManyZigzags(ZknotError):
    pass


class MonodromyError(ZknotError):
    pass


class DomainError(ZknotError, ValueError):
    pass


class CatalogError(ZknotError):
    pass


class StarViolation(ZknotError):
    pass


class GlueError(ZknotError):
    pass


class SelectionError(ZknotError):
    pass


class GadgetSearchError(ZknotError):
    pass


class LoopGuard(ZknotError):
    pass
