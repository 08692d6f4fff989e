"""Evaluation functor: invariants, naturality, monoidality, multiplicativity."""

import itertools

import pytest

from frob2d.cobordism import (
    CobordismWord,
    Generator,
    WordError,
    closed_oriented_surface,
    closed_unoriented_surface,
    identity_word,
)
from frob2d.examples import (
    dual_numbers,
    extended_battery,
    ground_field,
    ground_field_extended,
    group_algebra_z2,
    group_algebra_z2_extended,
    plain_battery,
    split_pair,
    split_pair_extended,
)
from frob2d.frobenius import FrobeniusMorphism, tensor, tensor_extended
from frob2d.linalg import Matrix, identity
from frob2d.tqft import (
    ExtendedRequiredError,
    check_monoidal_naturality,
    check_multiplicativity,
    check_naturality,
    evaluate,
    invariant,
    naturality_dictionary,
    random_words,
)

import oracles

CUP, CAP = Generator.CUP, Generator.CAP
MULT, COMULT = Generator.MULT, Generator.COMULT
ID, SWAP = Generator.ID, Generator.SWAP
PHI, THETA = Generator.PHI, Generator.THETA


def word(*slices, orientation="oriented"):
    return CobordismWord(orientation, tuple(tuple(s) for s in slices))


ALGEBRA_TABLES = {
    "K": oracles.K_TABLES,
    "D": oracles.D_TABLES,
    "Z2": oracles.Z2_TABLES,
    "KxK": oracles.KXK_TABLES,
}

EXT_TABLES = {
    "K": oracles.K_EXT_TABLES,
    "Z2": oracles.Z2_EXT_TABLES,
    "KxK": oracles.KXK_EXT_TABLES,
}


def test_sphere_on_dual_numbers_vanishes():
    assert evaluate(closed_oriented_surface(0), dual_numbers()) == Matrix(1, 1, [0])


def test_identity_word_evaluates_to_identity():
    for algebra in plain_battery():
        assert evaluate(identity_word(1), algebra) == identity(algebra.dim)
        assert evaluate(identity_word(2), algebra) == identity(algebra.dim ** 2)


def test_empty_word_is_scalar_identity():
    assert evaluate(word(), ground_field()) == Matrix(1, 1, [1])


def test_theta_then_cap_on_split_pair():
    w = word([THETA], [CAP], orientation="unoriented")
    assert evaluate(w, split_pair_extended()) == Matrix(1, 1, [0])


def test_oriented_genus_tables_frozen():
    expect = {
        "K": [1, 1, 1, 1],
        "D": [0, 2, 0, 0],
        "Z2": [1, 2, 4, 8],
        "KxK": [2, 2, 2, 2],
    }
    for algebra in plain_battery():
        got = [invariant(closed_oriented_surface(g), algebra) for g in range(4)]
        assert got == expect[algebra.name], algebra.name


def test_oriented_genus_tables_match_oracle():
    for algebra in plain_battery():
        tables = ALGEBRA_TABLES[algebra.name]
        for g in range(5):
            assert invariant(closed_oriented_surface(g), algebra) == (
                oracles.surface_invariant(tables, g)
            )


def test_unoriented_tables_frozen():
    expect = {
        "K": [1, 1, 1, 1],
        "Z2": [0, 0, 0, 0],
        "KxK": [0, 2, 0, 2],
    }
    for algebra in extended_battery():
        got = [
            invariant(closed_unoriented_surface(k), algebra) for k in range(1, 5)
        ]
        assert got == expect[algebra.name], algebra.name


def test_unoriented_tables_match_oracle():
    for algebra in extended_battery():
        tables = EXT_TABLES[algebra.name]
        for k in range(1, 5):
            for g in range(3):
                assert invariant(
                    closed_unoriented_surface(k, g), algebra
                ) == oracles.surface_invariant(tables, g, k)


def test_invariant_requires_closed_word():
    with pytest.raises(WordError):
        invariant(word([MULT]), dual_numbers())


def test_phi_theta_need_extended_algebra():
    w = word([THETA], [CAP], orientation="unoriented")
    with pytest.raises(ExtendedRequiredError):
        evaluate(w, split_pair())


def test_evaluation_matches_oracle_route_on_open_words():
    cases = [
        ([["cup"]], 0),
        ([["comult"]], 1),
        ([["mult"]], 2),
        ([["comult"], ["mult"]], 1),
        ([["mult"], ["comult"]], 2),
        ([["id", "cup"], ["swap"], ["mult"]], 1),
        ([["comult"], ["id", "comult"], ["swap", "id"], ["mult", "id"]], 1),
    ]
    by_name = {a.name: a for a in plain_battery()}
    gens = {g.label: g for g in Generator}
    for labels, source in cases:
        w = word(*[[gens[l] for l in s] for s in labels])
        for name, algebra in by_name.items():
            got = evaluate(w, algebra)
            expect = oracles.word_matrix(labels, ALGEBRA_TABLES[name], source)
            for i in range(got.rows):
                for j in range(got.cols):
                    assert got[i, j] == expect[i][j], (labels, name, i, j)


def test_unoriented_evaluation_matches_oracle_route():
    cases = [
        ([["theta"]], 0),
        ([["phi"]], 1),
        ([["theta", "id"], ["mult"], ["phi"]], 1),
        ([["phi"], ["comult"], ["id", "phi"], ["mult"]], 1),
    ]
    by_name = {a.name: a for a in extended_battery()}
    gens = {g.label: g for g in Generator}
    for labels, source in cases:
        w = word(*[[gens[l] for l in s] for s in labels], orientation="unoriented")
        for name, algebra in by_name.items():
            got = evaluate(w, algebra)
            expect = oracles.word_matrix(labels, EXT_TABLES[name], source)
            for i in range(got.rows):
                for j in range(got.cols):
                    assert got[i, j] == expect[i][j], (labels, name, i, j)


def test_swap_then_mult_equals_mult():
    for algebra in plain_battery():
        assert evaluate(word([SWAP], [MULT]), algebra) == evaluate(
            word([MULT]), algebra
        )


def test_double_swap_is_inert():
    plain = word([CUP], [COMULT], [MULT], [CAP])
    padded = word([CUP], [COMULT], [SWAP], [SWAP], [MULT], [CAP])
    for algebra in plain_battery():
        assert evaluate(plain, algebra) == evaluate(padded, algebra)


def test_crosscap_attachment_order_irrelevant():
    left = closed_unoriented_surface(2)
    right = word(
        [THETA], [ID, THETA], [MULT], [CAP], orientation="unoriented"
    )
    for algebra in extended_battery():
        assert invariant(left, algebra) == invariant(right, algebra)


def test_naturality_identity_always_passes():
    torus_halves = word([MULT], [COMULT])
    for algebra in plain_battery():
        f = FrobeniusMorphism(algebra, algebra, identity(algebra.dim))
        assert check_naturality(f, torus_halves).passed


def test_naturality_phi_on_mult():
    e = group_algebra_z2_extended()
    f = FrobeniusMorphism(e, e, e.involution)
    assert check_naturality(f, word([MULT])).passed


def test_naturality_kill_x_fails_on_mult():
    z = group_algebra_z2()
    f = FrobeniusMorphism(z, z, Matrix(2, 2, [1, 0, 0, 0]))
    report = check_naturality(f, word([MULT]))
    assert not report.passed
    witness = report.check("naturality").witness
    assert witness is not None


def test_naturality_dictionary_matches_morphism_checks():
    # the generator dictionary: each single-generator word encodes exactly
    # one morphism diagram
    z = group_algebra_z2()
    passing = FrobeniusMorphism(z, z, Matrix(2, 2, [1, 0, 0, -1]))
    failing = FrobeniusMorphism(z, z, Matrix(2, 2, [1, 0, 0, 0]))
    report = naturality_dictionary(passing)
    assert report.passed
    assert [c.name for c in report] == ["id", "cup", "cap", "mult", "comult", "swap"]
    report = naturality_dictionary(failing)
    assert set(report.failing()) == {"mult", "comult"}


def test_naturality_dictionary_extended_names():
    e = group_algebra_z2_extended()
    f = FrobeniusMorphism(e, e, e.involution)
    report = naturality_dictionary(f)
    assert [c.name for c in report] == [
        "id", "cup", "cap", "mult", "comult", "swap", "phi", "theta",
    ]
    assert report.passed


def test_naturality_dictionary_detects_theta_mismatch():
    plus = ground_field_extended(1)
    minus = ground_field_extended(-1)
    f = FrobeniusMorphism(plus, minus, identity(1))
    report = naturality_dictionary(f)
    assert report.failing() == ("theta",)


def test_monoidal_naturality_frozen_case():
    w = word([MULT], [COMULT])
    report = check_monoidal_naturality(w, dual_numbers(), group_algebra_z2())
    assert report.passed


def test_monoidal_naturality_matches_oracle_product_route():
    labels = [["mult"], ["comult"]]
    w = word([MULT], [COMULT])
    product = tensor(dual_numbers(), group_algebra_z2())
    got = evaluate(w, product)
    product_tables = oracles.tensor_tables(oracles.D_TABLES, oracles.Z2_TABLES)
    expect = oracles.word_matrix(labels, product_tables, 2)
    for i in range(got.rows):
        for j in range(got.cols):
            assert got[i, j] == expect[i][j]


def test_monoidal_naturality_closed_word_reduces_to_multiplicativity():
    torus = closed_oriented_surface(1)
    report = check_monoidal_naturality(torus, dual_numbers(), group_algebra_z2())
    assert report.passed


def test_monoidal_naturality_unoriented_pair():
    w = word([THETA], [COMULT], orientation="unoriented")
    report = check_monoidal_naturality(
        w, group_algebra_z2_extended(), split_pair_extended()
    )
    assert report.passed


def test_multiplicativity_torus_frozen():
    torus = closed_oriented_surface(1)
    d, z = dual_numbers(), group_algebra_z2()
    assert invariant(torus, tensor(d, z)) == 4
    assert check_multiplicativity(torus, d, z).passed


def test_multiplicativity_klein_bottle_frozen():
    klein = closed_unoriented_surface(2)
    k, p = ground_field_extended(1), split_pair_extended()
    assert invariant(klein, tensor_extended(k, p)) == 2
    assert check_multiplicativity(klein, k, p).passed


def test_multiplicativity_sphere_zero_factor():
    sphere = closed_oriented_surface(0)
    for other in plain_battery():
        report = check_multiplicativity(sphere, dual_numbers(), other)
        assert report.passed


def test_random_words_deterministic_and_valid():
    from frob2d.cobordism import validate_word

    batch1 = random_words(20, seed=99)
    batch2 = random_words(20, seed=99)
    assert batch1 == batch2
    for w in batch1:
        validate_word(w)
        assert len(w.slices) <= 6
        assert w.orientation == "oriented"
    unoriented = random_words(20, seed=7, unoriented=True)
    assert any(
        any(g in (PHI, THETA) for g in s) for w in unoriented for s in w.slices
    )
    for w in unoriented:
        validate_word(w)


def test_random_words_respect_strand_bound():
    for w in random_words(50, seed=3, max_strands=4):
        strands = w.source_arity
        for s in w.slices:
            strands = sum(g.arity_out for g in s)
            assert strands <= 4
