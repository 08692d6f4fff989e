"""Evaluation of cobordism words against (extended) Frobenius algebras.

A word on an algebra of dimension n becomes a matrix between tensor
powers of the underlying space: each slice is the left-major Kronecker
product of its generator matrices, and consecutive slices compose with
later slices multiplying on the left.  Closed words evaluate to 1x1
matrices whose single entry is the surface invariant.
"""

from __future__ import annotations

import random
from typing import Union

from .cobordism import (
    UNORIENTED_ONLY,
    CobordismWord,
    Generator,
    WordError,
    validate_word,
)
from .frobenius import (
    AnyAlgebra,
    ExtendedFrobeniusAlgebra,
    FrobeniusAlgebra,
    FrobeniusMorphism,
    as_plain,
    tensor,
    tensor_extended,
)
from .linalg import (
    Matrix,
    Rational,
    braiding,
    compose,
    identity,
    interleaver,
    kron,
    tensor_power,
)
from .report import AxiomReport, compare


class ExtendedRequiredError(ValueError):
    """phi or theta was evaluated against a plain Frobenius algebra."""


def _generator_matrix(generator: Generator, algebra: AnyAlgebra) -> Matrix:
    base = as_plain(algebra)
    if generator is Generator.ID:
        return identity(base.dim)
    if generator is Generator.CUP:
        return base.unit
    if generator is Generator.CAP:
        return base.counit
    if generator is Generator.MULT:
        return base.mult
    if generator is Generator.COMULT:
        return base.comult
    if generator is Generator.SWAP:
        return braiding(base.dim, base.dim)
    if not isinstance(algebra, ExtendedFrobeniusAlgebra):
        raise ExtendedRequiredError(
            f"generator '{generator.label}' needs an extended Frobenius algebra, "
            f"but {base.name!r} has no extended structure"
        )
    return algebra.involution if generator is Generator.PHI else algebra.point


def evaluate(word: CobordismWord, algebra: AnyAlgebra) -> Matrix:
    """The matrix of a word; a word with no slices is the identity on 0 circles."""
    source, _ = validate_word(word)
    n = as_plain(algebra).dim
    total = identity(n**source)
    for slice_ in word.slices:
        layer = identity(1)
        for generator in slice_:
            layer = kron(layer, _generator_matrix(generator, algebra))
        total = compose(layer, total)
    return total


def invariant(word: CobordismWord, algebra: AnyAlgebra) -> Rational:
    """Scalar value of a closed word (boundary 0 -> 0)."""
    source, target = validate_word(word)
    if (source, target) != (0, 0):
        raise WordError(
            f"invariants need a closed word, this one has boundary {source} -> {target}"
        )
    return evaluate(word, algebra)[0, 0]


def check_naturality(
    morphism: FrobeniusMorphism, word: CobordismWord, check_name: str = "naturality"
) -> AxiomReport:
    """Exact naturality square of a linear map against one word."""
    source, target = validate_word(word)
    f = morphism.matrix
    lhs = compose(tensor_power(f, target), evaluate(word, morphism.source))
    rhs = compose(evaluate(word, morphism.target), tensor_power(f, source))
    return AxiomReport((compare(check_name, lhs, rhs),))


def naturality_dictionary(morphism: FrobeniusMorphism) -> AxiomReport:
    """Naturality against every single-generator word, one named check each.

    The named checks match the morphism diagrams one-for-one: cup with the
    unit diagram, cap with the counit, mult and comult with theirs, and
    phi/theta (present only when both ends are extended) with involution
    and point compatibility.  id and swap hold for every linear map.
    """
    extended = isinstance(morphism.source, ExtendedFrobeniusAlgebra) and isinstance(
        morphism.target, ExtendedFrobeniusAlgebra
    )
    generators = [
        Generator.ID,
        Generator.CUP,
        Generator.CAP,
        Generator.MULT,
        Generator.COMULT,
        Generator.SWAP,
    ]
    if extended:
        generators += [Generator.PHI, Generator.THETA]
    checks = []
    for g in generators:
        orientation = "unoriented" if g in UNORIENTED_ONLY else "oriented"
        word = CobordismWord(orientation, ((g,),))
        checks.append(check_naturality(morphism, word, check_name=g.label).checks[0])
    return AxiomReport(tuple(checks))


def _tensor_algebras(a: AnyAlgebra, b: AnyAlgebra) -> AnyAlgebra:
    if isinstance(a, ExtendedFrobeniusAlgebra) and isinstance(b, ExtendedFrobeniusAlgebra):
        return tensor_extended(a, b)
    return tensor(as_plain(a), as_plain(b))


def check_monoidal_naturality(word: CobordismWord, a: AnyAlgebra, b: AnyAlgebra) -> AxiomReport:
    """Evaluation against a tensor product vs Kronecker of evaluations.

    The two sides act on differently grouped tensor powers, so source and
    target are matched through the interleaver permutations.
    """
    source, target = validate_word(word)
    na, nb = as_plain(a).dim, as_plain(b).dim
    product = _tensor_algebras(a, b)
    lhs = compose(evaluate(word, product), interleaver(source, na, nb))
    rhs = compose(interleaver(target, na, nb), kron(evaluate(word, a), evaluate(word, b)))
    return AxiomReport((compare("monoidal_naturality", lhs, rhs),))


def check_multiplicativity(word: CobordismWord, a: AnyAlgebra, b: AnyAlgebra) -> AxiomReport:
    """Closed-word invariant of a tensor product vs product of invariants."""
    value = invariant(word, _tensor_algebras(a, b))
    split = invariant(word, a) * invariant(word, b)
    return AxiomReport(
        (compare("multiplicativity", Matrix(1, 1, [value]), Matrix(1, 1, [split])),)
    )


def random_word(
    rng: random.Random,
    *,
    max_slices: int = 6,
    max_strands: int = 4,
    unoriented: bool = False,
) -> CobordismWord:
    """One valid random word; deterministic given the rng state."""
    orientation = "unoriented" if unoriented else "oriented"
    slice_count = rng.randint(1, max_slices)
    arity = rng.randint(0, max_strands)
    slices = []
    for _ in range(slice_count):
        slice_ = _random_slice(rng, arity, max_strands, unoriented)
        slices.append(slice_)
        arity = sum(g.arity_out for g in slice_)
    word = CobordismWord(orientation, tuple(slices))
    validate_word(word)
    return word


def random_words(
    count: int,
    seed: int,
    *,
    max_slices: int = 6,
    max_strands: int = 4,
    unoriented: bool = False,
) -> list[CobordismWord]:
    """Deterministic batch of valid random words for property sweeps."""
    rng = random.Random(seed)
    return [
        random_word(rng, max_slices=max_slices, max_strands=max_strands, unoriented=unoriented)
        for _ in range(count)
    ]


def _random_slice(rng, arity_in, max_strands, unoriented):
    single = [Generator.ID, Generator.CAP, Generator.COMULT]
    births = [Generator.CUP]
    if unoriented:
        single.append(Generator.PHI)
        births.append(Generator.THETA)
    for _ in range(64):
        gens = []
        remaining = arity_in
        while remaining > 0:
            if rng.random() < 0.12:
                gens.append(rng.choice(births))
            pool = single + ([Generator.MULT, Generator.SWAP] if remaining >= 2 else [])
            g = rng.choice(pool)
            gens.append(g)
            remaining -= g.arity_in
        if not gens:
            gens.append(rng.choice(births))
        if sum(g.arity_out for g in gens) <= max_strands:
            return tuple(gens)
    # Rare fallback when every draw overshot the strand bound.
    return tuple([Generator.ID] * arity_in) if arity_in else (Generator.CUP,)
