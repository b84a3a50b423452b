"""Machine-checkable witness records.

Witnesses are plain data; the re-checking logic lives in validate.py
so that certificates are never trusted on the word of the search code
that produced them.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CycleWitness:
    """A closed walk through distinct vertices; consecutive vertices
    (cyclically) must be adjacent in the source graph."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {"cycle": list(self.vertices), "length": self.length}


@dataclass(frozen=True)
class PathWitness:
    """A path through distinct vertices; length counts edges."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def to_json(self) -> dict:
        return {"path": list(self.vertices), "length": self.length}


@dataclass(frozen=True)
class StarWitness:
    """A vertex together with n of its non-neighbors: a star of the
    complement graph."""

    center: int
    leaves: tuple[int, ...]

    def to_json(self) -> dict:
        return {"center": self.center, "leaves": list(self.leaves)}


class BudgetExhausted(RuntimeError):
    """A search ran out of its node budget.

    This is a distinct outcome: callers must report it as
    indeterminate, never as absence.
    """

    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes
