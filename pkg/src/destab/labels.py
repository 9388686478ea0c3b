"""Arc labels.

An arc in a chart is identified by its family (``v`` or ``w``), a positive
integer index shared with the forest vertex/edge it came from, and a
component tag.  Single proper arcs have an empty tag.  The two components of
an overpass pair carry tags ``a`` and ``b``.  Transient band-core edges used
inside surgeries carry ``core<N>`` tags and never survive an operation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InconsistentSpec

FAMILY_V = "v"
FAMILY_W = "w"
FAMILIES = (FAMILY_V, FAMILY_W)


@dataclass(frozen=True, order=True)
class ArcLabel:
    family: str  # "v" or "w"
    index: int
    comp: str = ""  # "", "a", "b", or "core<N>"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InconsistentSpec(f"bad family {self.family!r}")
        if self.index < 0:
            raise InconsistentSpec(f"bad index {self.index}")

    @property
    def base(self) -> "BaseLabel":
        return BaseLabel(self.family, self.index)

    @property
    def is_pair_component(self) -> bool:
        return self.comp in ("a", "b")

    @property
    def is_core(self) -> bool:
        return self.comp.startswith("core")

    def __str__(self) -> str:
        s = f"{self.family}{self.index}"
        return f"{s}.{self.comp}" if self.comp else s

    @staticmethod
    def parse(text: str) -> "ArcLabel":
        body, _, comp = text.partition(".")
        if len(body) < 2 or body[0] not in FAMILIES or not body[1:].isdigit():
            raise InconsistentSpec(f"bad arc label {text!r}")
        return ArcLabel(body[0], int(body[1:]), comp)


@dataclass(frozen=True, order=True)
class BaseLabel:
    """Family plus index, ignoring the component tag."""

    family: str
    index: int

    def single(self) -> ArcLabel:
        return ArcLabel(self.family, self.index, "")

    def component(self, comp: str) -> ArcLabel:
        return ArcLabel(self.family, self.index, comp)

    def __str__(self) -> str:
        return f"{self.family}{self.index}"

    @staticmethod
    def parse(text: str) -> "BaseLabel":
        lab = ArcLabel.parse(text)
        return BaseLabel(lab.family, lab.index)


def other_family(family: str) -> str:
    return FAMILY_W if family == FAMILY_V else FAMILY_V
