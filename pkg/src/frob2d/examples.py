"""Bundled example algebras.

Four commutative Frobenius algebras over the rationals, plus extended
structures on three of them.  These are the stock test subjects used
throughout the test suite and the bundled data files.
"""

from __future__ import annotations

from .frobenius import ExtendedFrobeniusAlgebra, FrobeniusAlgebra
from .linalg import Matrix


def ground_field() -> FrobeniusAlgebra:
    """The one-dimensional algebra: the field itself, counit(1) = 1."""
    return FrobeniusAlgebra.from_tables(
        "K", ("1",), [[[1]]], [1], [1], [[[1]]]
    )


def dual_numbers() -> FrobeniusAlgebra:
    """K[x]/(x^2) with counit picking the x coefficient.

    Handle operator is multiplication by 2x, so every positive genus kills
    two handles at a time: genus 1 evaluates to 2, all other genera to 0.
    """
    return FrobeniusAlgebra.from_tables(
        "D",
        ("1", "x"),
        [[[1, 0], [0, 1]], [[0, 1], [0, 0]]],
        [1, 0],
        [0, 1],
        [[[0, 1], [1, 0]], [[0, 0], [0, 1]]],
    )


def group_algebra_z2() -> FrobeniusAlgebra:
    """The group algebra on one involution x, counit(1) = 1, counit(x) = 0."""
    return FrobeniusAlgebra.from_tables(
        "Z2",
        ("1", "x"),
        [[[1, 0], [0, 1]], [[0, 1], [1, 0]]],
        [1, 0],
        [1, 0],
        [[[1, 0], [0, 1]], [[0, 1], [1, 0]]],
    )


def split_pair() -> FrobeniusAlgebra:
    """K x K on its idempotent basis, counit summing the coordinates."""
    return FrobeniusAlgebra.from_tables(
        "KxK",
        ("e1", "e2"),
        [[[1, 0], [0, 0]], [[0, 0], [0, 1]]],
        [1, 1],
        [1, 1],
        [[[1, 0], [0, 0]], [[0, 0], [0, 1]]],
    )


def ground_field_extended(point=1) -> ExtendedFrobeniusAlgebra:
    """The ground field with trivial involution and theta = point.

    The cross-cap condition forces point^2 = 1 here, so only 1 and -1
    give a valid structure; the default is the +1 choice.
    """
    return ExtendedFrobeniusAlgebra(
        ground_field(), Matrix(1, 1, [1]), Matrix(1, 1, [point])
    )


def group_algebra_z2_extended() -> ExtendedFrobeniusAlgebra:
    """Z2 with the inversion involution x -> -x and theta = 0."""
    return ExtendedFrobeniusAlgebra(
        group_algebra_z2(), Matrix(2, 2, [1, 0, 0, -1]), Matrix(2, 1, [0, 0])
    )


def split_pair_extended() -> ExtendedFrobeniusAlgebra:
    """K x K with identity involution and theta = e1 - e2."""
    return ExtendedFrobeniusAlgebra(
        split_pair(), Matrix(2, 2, [1, 0, 0, 1]), Matrix(2, 1, [1, -1])
    )


def plain_battery() -> tuple[FrobeniusAlgebra, ...]:
    """All four bundled plain algebras."""
    return (ground_field(), dual_numbers(), group_algebra_z2(), split_pair())


def extended_battery() -> tuple[ExtendedFrobeniusAlgebra, ...]:
    """The three bundled extended structures."""
    return (
        ground_field_extended(),
        group_algebra_z2_extended(),
        split_pair_extended(),
    )
