"""Repeated gadget gluing until a z-homogeneous triangulation is z-knotted."""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field

from .errors import DomainError, GadgetSearchError, LoopGuard, SelectionError
from .gadgets import gadget_catalog
from .monodromy import find_special_pairs, z_monodromy, zigzags_through_pair
from .s4 import CLASS_ZIGZAG_COUNT, Perm4, classify
from .surface import SurfaceComplex
from .surgery import SpecialHomeomorphism, glue, predicted_merge_count
from .zigzags import ZOrientation, enumerate_zigzags, is_z_homogeneous

logger = logging.getLogger(__name__)


def select_pair(c: SurfaceComplex, tau):
    """First special pair traversed by at least two zigzags, with its monodromy."""
    if enumerate_zigzags(c).count < 2:
        raise SelectionError("complex is already z-knotted")
    for pair in find_special_pairs(c, tau):
        m = z_monodromy(c, tau, pair)
        if zigzags_through_pair(c, tau, pair, m) >= 2:
            return pair, m
    raise SelectionError("no special pair lies on two or more zigzags")


def select_gadget(mp: Perm4, catalog=None, classes=None):
    """Search gadgets x {direct, swap} x {as-is, reversed} for a 4-cycle merge.

    Returns ``(gadget, g, reversed_flag)``.  ``classes`` restricts the search
    to gadgets of the given class ids.
    """
    cid = classify(mp).id
    if CLASS_ZIGZAG_COUNT[cid] < 2:
        raise DomainError(f"monodromy {mp} ({cid}) lies on a single zigzag; nothing to merge")
    catalog = gadget_catalog() if catalog is None else catalog
    for gadget in catalog:
        if classes is not None and gadget.class_id not in classes:
            continue
        for g in SpecialHomeomorphism:
            for flag in (False, True):
                m2 = gadget.variant(flag)[2]
                if predicted_merge_count(mp, m2, g) == 1:
                    return gadget, g, flag
    raise GadgetSearchError(f"no gadget merges the zigzags of monodromy {mp} ({cid})")


def summary(c: SurfaceComplex, tau) -> dict:
    return {
        "V": c.num_vertices,
        "E": c.num_edges,
        "F": c.num_faces,
        "euler": c.euler_characteristic(),
        "orientable": c.is_orientable(),
        "zigzags": enumerate_zigzags(c).count,
        "homogeneous": is_z_homogeneous(c, tau),
    }


@dataclass
class KnotStep:
    pair: list
    monodromy: str
    class_id: str
    gadget: str
    gadget_pair: list
    g: str
    gadget_tau: str
    before: int
    after: int


@dataclass
class KnottingTrace:
    initial: dict
    steps: list = field(default_factory=list)
    final: dict = field(default_factory=dict)

    def as_dict(self):
        return {"initial": self.initial, "steps": [asdict(s) for s in self.steps], "final": self.final}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2) + "\n"


def knot(c: SurfaceComplex, tau, catalog=None):
    """Glue gadgets onto ``(c, tau)`` until one zigzag pair is left.

    Returns ``(complex, tau, trace)``.
    """
    tau = ZOrientation.parse(tau)
    if not is_z_homogeneous(c, tau):
        raise DomainError("input is not z-homogeneous for the given orientation")
    trace = KnottingTrace(summary(c, tau))
    start = trace.initial
    count = start["zigzags"]
    while count > 1:
        if len(trace.steps) >= start["zigzags"] - 1:
            raise LoopGuard(f"no z-knotted result after {len(trace.steps)} steps")
        pair, m = select_pair(c, tau)
        gadget, g, flag = select_gadget(m, catalog)
        gtau, gpair, _ = gadget.variant(flag)
        r = glue(c, tau, pair, gadget.complex, gtau, gpair, g, tag=len(trace.steps) + 1)
        after = enumerate_zigzags(r.complex).count
        if after >= count:
            raise LoopGuard(f"zigzag count went from {count} to {after}")
        trace.steps.append(KnotStep(
            pair=list(pair.triple), monodromy=str(m), class_id=classify(m).id,
            gadget=gadget.name, gadget_pair=list(gpair.triple), g=g.value,
            gadget_tau="reversed" if flag else "as-is", before=count, after=after,
        ))
        logger.debug("glued %s at %s: %d -> %d zigzags", gadget.name, pair, count, after)
        c, tau, count = r.complex, r.tau, after
    trace.final = summary(c, tau)
    for key in ("euler", "orientable"):
        if trace.final[key] != start[key]:
            raise LoopGuard(f"{key} changed from {start[key]} to {trace.final[key]}")
    if not trace.final["homogeneous"]:
        raise LoopGuard("result lost z-homogeneity")
    return c, tau, trace
