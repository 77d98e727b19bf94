"""Result records shared by the girth checkers."""

from __future__ import annotations

from dataclasses import dataclass, field

#: Method tags a GirthReport can carry.
METHOD_POWER = "power"
METHOD_BFS = "bfs"
METHOD_CONDITIONS = "conditions"
METHOD_CYCLE_SUMS = "cycle-sums"


@dataclass(frozen=True)
class GirthReport:
    """Outcome of one girth computation or certification.

    girth
        The girth (always even; 2 is reserved for inputs with parallel
        edges).  None means no cycle was pinned down: together with
        ``checked_up_to`` it reads as "girth larger than checked_up_to",
        and with ``checked_up_to`` None as "acyclic".
    method
        One of "power", "bfs", "conditions", "cycle-sums".
    checked_up_to
        Largest cycle length the method ruled out (or the certified target
        for condition checks).
    passed
        Condition checks only: whether every condition held.
    witnesses
        Method-specific evidence: a violating (t, block_row, block_col,
        exponent) for the power method, one shortest cycle as a node tuple
        for the graph search, and per-condition collision records for
        condition checks.
    """

    girth: int | None
    method: str
    checked_up_to: int | None = None
    passed: bool | None = None
    witnesses: tuple = field(default_factory=tuple)

    def __str__(self) -> str:
        if self.girth is not None:
            return f"girth {self.girth} [{self.method}]"
        if self.checked_up_to is not None:
            return f"girth > {self.checked_up_to} [{self.method}]"
        return f"acyclic [{self.method}]"
