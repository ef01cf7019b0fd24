"""The one stage/step-budget type shared by every approximation in the
package.  Budgets only ever bound work; raising a budget never changes an
answer from halted/provable to anything else."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class Budget:
    steps: int

    def __post_init__(self):
        if self.steps < 0:
            raise ValueError("budget must be >= 0")

    def __int__(self) -> int:
        return self.steps

    def __index__(self) -> int:
        return self.steps


def steps_of(budget: Budget | int) -> int:
    n = int(budget)
    if n < 0:
        raise ValueError("budget must be >= 0")
    return n
