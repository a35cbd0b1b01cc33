"""Permutations of the four labels {1, 2, 3, 4} and the 13 monodromy classes.

Labels 1, 2, 3, 4 stand for the split edges e1+, e2+, e1-, e2- of a special
pair.  Products are read right to left: ``compose(p, q)(x) == p(q(x))``, so
``Perm4.parse("(1234)") * Perm4.parse("(13)(24)")`` is ``(1432)``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator

LABELS = (1, 2, 3, 4)


@dataclass(frozen=True, order=True)
class Perm4:
    images: tuple  # images[x - 1] = p(x)

    def __post_init__(self):
        if sorted(self.images) != [1, 2, 3, 4]:
            raise ValueError(f"not a permutation of 1..4: {self.images}")

    @classmethod
    def identity(cls) -> "Perm4":
        return cls((1, 2, 3, 4))

    @classmethod
    def from_mapping(cls, mapping) -> "Perm4":
        return cls(tuple(mapping[x] for x in LABELS))

    @classmethod
    def parse(cls, text: str) -> "Perm4":
        """Parse cycle notation such as ``"(13)(24)"`` or ``"id"``."""
        text = text.strip()
        images = {x: x for x in LABELS}
        if text in ("id", "()", ""):
            return cls.identity()
        if not re.fullmatch(r"(\([1-4]+\))+", text):
            raise ValueError(f"bad cycle notation: {text!r}")
        # cycles are composed right to left as well
        for cyc in reversed(re.findall(r"\(([1-4]+)\)", text)):
            pts = [int(ch) for ch in cyc]
            if len(set(pts)) != len(pts):
                raise ValueError(f"repeated label in cycle {cyc!r}")
            step = {pts[i]: pts[(i + 1) % len(pts)] for i in range(len(pts))}
            images = {x: step.get(images[x], images[x]) for x in LABELS}
        return cls.from_mapping(images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Perm4") -> "Perm4":
        return Perm4(tuple(self(other(x)) for x in LABELS))

    def inverse(self) -> "Perm4":
        inv = [0] * 4
        for x in LABELS:
            inv[self(x) - 1] = x
        return Perm4(tuple(inv))

    def cycles(self, include_fixed=True) -> list:
        seen, out = set(), []
        for x in LABELS:
            if x in seen:
                continue
            cyc = [x]
            seen.add(x)
            y = self(x)
            while y != x:
                cyc.append(y)
                seen.add(y)
                y = self(y)
            if include_fixed or len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def num_cycles(self) -> int:
        return len(self.cycles())

    def is_four_cycle(self) -> bool:
        return self.num_cycles() == 1

    def __str__(self):
        cyc = self.cycles(include_fixed=False)
        if not cyc:
            return "id"
        return "".join("(" + "".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Perm4({str(self)!r})"


def perm_compose(p: Perm4, q: Perm4) -> Perm4:
    return p * q


def perm_inverse(p: Perm4) -> Perm4:
    return p.inverse()


def perm_cycles(p: Perm4) -> list:
    return p.cycles()


def all_perms() -> Iterator[Perm4]:
    for images in itertools.permutations(LABELS):
        yield Perm4(images)


S = Perm4.parse("(13)(24)")
T = Perm4.parse("(12)(34)")
ST = S * T
ID = Perm4.identity()

CLASS_MEMBERS = {
    "K0": ("id",),
    "K1": ("(1234)",),
    "K2": ("(13)(24)",),
    "K3": ("(1432)",),
    "K4": ("(14)(23)",),
    "K5": ("(12)(34)",),
    "K6": ("(24)", "(13)"),
    "K7": ("(34)", "(12)"),
    "K8": ("(23)", "(14)"),
    "K9": ("(1324)", "(1423)"),
    "K10": ("(1243)", "(1342)"),
    "K11": ("(234)", "(123)", "(124)", "(134)"),
    "K12": ("(243)", "(132)", "(142)", "(143)"),
}

CLASS_IDS = tuple(CLASS_MEMBERS)

# zigzags through a pair whose monodromy lies in the class
CLASS_ZIGZAG_COUNT = {
    "K0": 2, "K1": 1, "K2": 4, "K3": 1, "K4": 2, "K5": 2, "K6": 3,
    "K7": 1, "K8": 1, "K9": 3, "K10": 3, "K11": 2, "K12": 2,
}

_CLASS_OF = {Perm4.parse(m): cid for cid, ms in CLASS_MEMBERS.items() for m in ms}


@dataclass(frozen=True)
class MonodromyClass:
    id: str
    members: frozenset

    @property
    def index(self) -> int:
        return int(self.id[1:])

    def __str__(self):
        return self.id


def monodromy_class(cid: str) -> MonodromyClass:
    return MonodromyClass(cid, frozenset(Perm4.parse(m) for m in CLASS_MEMBERS[cid]))


def classify(p: Perm4) -> MonodromyClass:
    return monodromy_class(_CLASS_OF[p])


def side_swap(p: Perm4) -> Perm4:
    """Monodromy after exchanging the + and - sides."""
    return S * p * S


def orientation_reversal(p: Perm4) -> Perm4:
    """Monodromy after reversing the z-orientation."""
    return T * p.inverse() * T


TABLE_ROWS = (
    "id", "(34)", "(23)", "(234)", "(243)", "(24)", "(12)", "(12)(34)",
    "(123)", "(1234)", "(1243)", "(124)", "(132)", "(1342)", "(13)", "(134)",
    "(13)(24)", "(1324)", "(1432)", "(142)", "(143)", "(14)", "(1423)", "(14)(23)",
)

TABLE_COLUMNS = ("M", "M^-1", "sM", "tM^-1", "stM^-1", "sMs", "tM^-1t", "stM^-1st")


def s4_table() -> list:
    rows = []
    for text in TABLE_ROWS:
        m = Perm4.parse(text)
        mi = m.inverse()
        rows.append((m, mi, S * m, T * mi, ST * mi, S * m * S, T * mi * T, ST * mi * ST))
    return rows


def check_class_table() -> list:
    """Problems found in the class partition, closure, and zigzag-count table."""
    problems = []
    members = [p for ms in CLASS_MEMBERS.values() for p in ms]
    if len(members) != 24 or len(set(members)) != 24:
        problems.append("classes do not partition S4")
    for p in all_perms():
        cid = classify(p).id
        for q in (S * p * S, T * p.inverse() * T, ST * p.inverse() * ST):
            if classify(q).id != cid:
                problems.append(f"{p} in {cid} but {q} in {classify(q).id}")
        if (S * p).num_cycles() != CLASS_ZIGZAG_COUNT[cid]:
            problems.append(f"cycles(s*{p}) = {(S * p).num_cycles()}, table says {CLASS_ZIGZAG_COUNT[cid]}")
    return problems
