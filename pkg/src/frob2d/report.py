"""Named exact-identity checks and the reports that collect them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .linalg import Matrix, Rational, ShapeError


@dataclass(frozen=True)
class Witness:
    """First differing entry, in row-major order, of a failed identity."""

    row: int
    col: int
    lhs: Rational
    rhs: Rational


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: Optional[Witness] = None

    def line(self) -> str:
        if self.passed:
            return f"{self.name}: pass"
        if self.witness is None:
            return f"{self.name}: fail"
        w = self.witness
        return f"{self.name}: fail at ({w.row},{w.col}): {w.lhs} != {w.rhs}"


@dataclass(frozen=True)
class AxiomReport:
    """An ordered list of named checks; passes only if every check does."""

    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self) -> bool:
        return self.passed

    def __iter__(self):
        return iter(self.checks)

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failing(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.checks if not c.passed)

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]


def compare(name: str, lhs: Matrix, rhs: Matrix) -> CheckResult:
    """One named check: exact equality of two equally-shaped matrices."""
    if (lhs.rows, lhs.cols) != (rhs.rows, rhs.cols):
        raise ShapeError(
            f"check {name!r} compares {lhs.rows}x{lhs.cols} with {rhs.rows}x{rhs.cols}"
        )
    if lhs.entries == rhs.entries:
        return CheckResult(name, True)
    for index, (x, y) in enumerate(zip(lhs.entries, rhs.entries)):
        if x != y:
            return CheckResult(name, False, Witness(index // lhs.cols, index % lhs.cols, x, y))
    raise AssertionError("unreachable: unequal tuples with equal elements")
