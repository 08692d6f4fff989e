"""Commutative (extended) Frobenius algebras with exact axiom checking.

An algebra of dimension n is stored through four structure matrices over
the rationals:

* multiplication  n x n^2      (column ``i * n + j`` holds ``e_i * e_j``)
* unit            n x 1
* comultiplication n^2 x n
* counit          1 x n

with the basis vector ``e_i (x) e_j`` of the tensor square at flat index
``i * n + j``.  An extended algebra adds an involution ``n x n`` and a
distinguished point ``n x 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Union

from .linalg import (
    Matrix,
    ShapeError,
    SingularMatrixError,
    as_rational,
    braiding,
    compose,
    identity,
    inverse,
    kron,
)
from .report import AxiomReport, CheckResult, compare


class DegenerateFormError(ValueError):
    """The pairing counit(e_i * e_j) is singular: no comultiplication exists."""


def _expect_shape(what: str, m: Matrix, rows: int, cols: int) -> None:
    if (m.rows, m.cols) != (rows, cols):
        raise ShapeError(f"{what} must be {rows}x{cols}, got {m.rows}x{m.cols}")


@dataclass(frozen=True)
class FrobeniusAlgebra:
    """Commutative Frobenius algebra given by rational structure constants."""

    name: str
    basis: tuple[str, ...]
    mult: Matrix
    unit: Matrix
    counit: Matrix
    comult: Matrix

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        n = len(self.basis)
        if n < 1:
            raise ValueError("an algebra needs at least one basis vector")
        if len(set(self.basis)) != n:
            raise ValueError(f"duplicate basis labels in {self.basis!r}")
        _expect_shape("mult", self.mult, n, n * n)
        _expect_shape("unit", self.unit, n, 1)
        _expect_shape("counit", self.counit, 1, n)
        _expect_shape("comult", self.comult, n * n, n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def from_tables(cls, name, basis, mult, unit, counit, comult=None) -> "FrobeniusAlgebra":
        """Build an algebra from structure-constant tables.

        ``mult[i][j][k]`` is the coefficient of ``e_k`` in ``e_i * e_j`` and
        ``comult[i][j][k]`` the coefficient of ``e_j (x) e_k`` in the image
        of ``e_i``.  When ``comult`` is omitted it is derived from the
        pairing (see ``derive_comult``).
        """
        basis = tuple(basis)
        n = len(basis)
        mult_m = _cube_matrix("mult", n, mult, n, n * n, lambda i, j, k: (k, i * n + j))
        unit_m = _vector_matrix("unit", n, unit, column=True)
        counit_m = _vector_matrix("counit", n, counit, column=False)
        if comult is not None:
            comult_m = _cube_matrix(
                "comult", n, comult, n * n, n, lambda i, j, k: (j * n + k, i)
            )
        else:
            comult_m = derive_comult(mult_m, unit_m, counit_m)
        return cls(name, basis, mult_m, unit_m, counit_m, comult_m)


def _cube_matrix(what, n, table, rows, cols, placement) -> Matrix:
    if len(table) != n or any(len(plane) != n for plane in table) or any(
        len(line) != n for plane in table for line in plane
    ):
        raise ValueError(f"{what} table must be {n}x{n}x{n}")
    cells = [0] * (rows * cols)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                r, c = placement(i, j, k)
                cells[r * cols + c] = as_rational(table[i][j][k])
    return Matrix(rows, cols, cells)


def _vector_matrix(what, n, values, column: bool) -> Matrix:
    values = list(values)
    if len(values) != n:
        raise ValueError(f"{what} must have {n} entries, got {len(values)}")
    return Matrix(n, 1, values) if column else Matrix(1, n, values)


@dataclass(frozen=True)
class ExtendedFrobeniusAlgebra:
    """A Frobenius algebra together with an involution and a point."""

    base: FrobeniusAlgebra
    involution: Matrix
    point: Matrix

    def __post_init__(self):
        n = self.base.dim
        _expect_shape("involution", self.involution, n, n)
        _expect_shape("point", self.point, n, 1)

    @property
    def name(self) -> str:
        return self.base.name

    @property
    def dim(self) -> int:
        return self.base.dim

    @property
    def basis(self) -> tuple[str, ...]:
        return self.base.basis


AnyAlgebra = Union[FrobeniusAlgebra, ExtendedFrobeniusAlgebra]


def as_plain(algebra: AnyAlgebra) -> FrobeniusAlgebra:
    """The underlying plain Frobenius algebra (identity on plain inputs)."""
    return algebra.base if isinstance(algebra, ExtendedFrobeniusAlgebra) else algebra


@dataclass(frozen=True)
class FrobeniusMorphism:
    """A linear map between algebras, stored target-by-source."""

    source: AnyAlgebra
    target: AnyAlgebra
    matrix: Matrix

    def __post_init__(self):
        t, s = as_plain(self.target).dim, as_plain(self.source).dim
        _expect_shape("morphism matrix", self.matrix, t, s)


def derive_comult(mult: Matrix, unit: Matrix, counit: Matrix) -> Matrix:
    """Reconstruct the comultiplication from multiplication, unit and counit.

    The pairing matrix g[i, j] = counit(e_i * e_j) must be invertible; its
    inverse gives the copairing c = sum c[i, j] e_i (x) e_j, and the
    comultiplication is a |-> (id (x) mult)(c (x) a).
    """
    n = mult.rows
    _expect_shape("mult", mult, n, n * n)
    _expect_shape("unit", unit, n, 1)
    _expect_shape("counit", counit, 1, n)
    pairing = compose(counit, mult)  # 1 x n^2, row-major reshape below
    gram = Matrix(n, n, pairing.entries)
    try:
        gram_inv = inverse(gram)
    except SingularMatrixError as exc:
        raise DegenerateFormError(
            "degenerate Frobenius form: the pairing counit(e_i * e_j) is singular"
        ) from exc
    copairing = Matrix(n * n, 1, gram_inv.entries)
    return compose(kron(identity(n), mult), kron(copairing, identity(n)))


def check_frobenius(algebra: AnyAlgebra) -> AxiomReport:
    """All commutative-Frobenius axioms as named exact matrix identities."""
    a = as_plain(algebra)
    n = a.dim
    i_n = identity(n)
    m, u, e, d = a.mult, a.unit, a.counit, a.comult
    c = braiding(n, n)
    dm = compose(d, m)
    checks = (
        compare("associativity", compose(m, kron(m, i_n)), compose(m, kron(i_n, m))),
        compare("unit_left", compose(m, kron(u, i_n)), i_n),
        compare("unit_right", compose(m, kron(i_n, u)), i_n),
        compare("coassociativity", compose(kron(d, i_n), d), compose(kron(i_n, d), d)),
        compare("counit_left", compose(kron(e, i_n), d), i_n),
        compare("counit_right", compose(kron(i_n, e), d), i_n),
        compare("frobenius_left", compose(kron(i_n, m), kron(d, i_n)), dm),
        compare("frobenius_right", compose(kron(m, i_n), kron(i_n, d)), dm),
        compare("commutativity", compose(m, c), m),
        compare("cocommutativity", compose(c, d), d),
    )
    return AxiomReport(checks)


def check_morphism(f: FrobeniusMorphism) -> AxiomReport:
    """The four structure-preservation diagrams of a Frobenius morphism."""
    a = as_plain(f.source)
    b = as_plain(f.target)
    ff = kron(f.matrix, f.matrix)
    checks = (
        compare("unit", compose(f.matrix, a.unit), b.unit),
        compare("mult", compose(f.matrix, a.mult), compose(b.mult, ff)),
        compare("counit", compose(b.counit, f.matrix), a.counit),
        compare("comult", compose(b.comult, f.matrix), compose(ff, a.comult)),
    )
    return AxiomReport(checks)


def check_extended(algebra: ExtendedFrobeniusAlgebra) -> AxiomReport:
    """Involution and point axioms (the base axioms are checked separately).

    Named checks, in order: involution (phi . phi = id); phi_unit,
    phi_mult, phi_counit, phi_comult (phi is a Frobenius endomorphism);
    theta_multiplication_fixed (multiples of the point are fixed by phi);
    crosscap (theta^2 equals mult . (phi (x) id) . comult . unit); and the
    implied phi_fixes_theta, reported separately for diagnosis.
    """
    base = algebra.base
    n = base.dim
    i_n = identity(n)
    phi, theta = algebra.involution, algebra.point
    m, u, d = base.mult, base.unit, base.comult
    phi_checks = tuple(
        CheckResult("phi_" + c.name, c.passed, c.witness)
        for c in check_morphism(FrobeniusMorphism(base, base, phi)).checks
    )
    times_theta = compose(m, kron(theta, i_n))
    checks = (
        compare("involution", compose(phi, phi), i_n),
        *phi_checks,
        compare("theta_multiplication_fixed", compose(phi, times_theta), times_theta),
        compare("crosscap", compose(m, kron(theta, theta)), compose(m, kron(phi, i_n), d, u)),
        compare("phi_fixes_theta", compose(phi, theta), theta),
    )
    return AxiomReport(checks)


def check_extended_morphism(f: FrobeniusMorphism) -> AxiomReport:
    """Frobenius-morphism diagrams plus point and involution compatibility."""
    if not isinstance(f.source, ExtendedFrobeniusAlgebra) or not isinstance(
        f.target, ExtendedFrobeniusAlgebra
    ):
        raise TypeError("extended morphism checks need extended source and target")
    checks = check_morphism(f).checks + (
        compare("theta", compose(f.matrix, f.source.point), f.target.point),
        compare(
            "phi",
            compose(f.matrix, f.source.involution),
            compose(f.target.involution, f.matrix),
        ),
    )
    return AxiomReport(checks)


def tensor(a: FrobeniusAlgebra, b: FrobeniusAlgebra) -> FrobeniusAlgebra:
    """Tensor-product Frobenius algebra on paired basis labels.

    Multiplication routes the middle factors through the braiding so the
    product of ``x1 (x) y1`` and ``x2 (x) y2`` is ``x1 x2 (x) y1 y2``; the
    comultiplication uses the inverse shuffle.
    """
    na, nb = a.dim, b.dim
    ia, ib = identity(na), identity(nb)
    shuffle_in = kron(ia, kron(braiding(nb, na), ib))  # A.B.A.B -> A.A.B.B
    shuffle_out = kron(ia, kron(braiding(na, nb), ib))  # A.A.B.B -> A.B.A.B
    return FrobeniusAlgebra(
        name=f"{a.name}*{b.name}",
        basis=tuple(f"({x},{y})" for x in a.basis for y in b.basis),
        mult=compose(kron(a.mult, b.mult), shuffle_in),
        unit=kron(a.unit, b.unit),
        counit=kron(a.counit, b.counit),
        comult=compose(shuffle_out, kron(a.comult, b.comult)),
    )


def tensor_extended(
    a: ExtendedFrobeniusAlgebra, b: ExtendedFrobeniusAlgebra
) -> ExtendedFrobeniusAlgebra:
    """Tensor product of extended algebras: involutions and points multiply."""
    return ExtendedFrobeniusAlgebra(
        tensor(a.base, b.base),
        kron(a.involution, b.involution),
        kron(a.point, b.point),
    )


def search_theta(algebra: FrobeniusAlgebra, involution: Matrix, bound: int) -> list[Matrix]:
    """All integer points in [-bound, bound]^dim that extend the algebra.

    Candidates are tried in lexicographic order of their coordinate tuples.
    The search is grid-relative: an empty result only rules out integer
    points within the bound.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    hits = []
    for coords in itertools.product(range(-bound, bound + 1), repeat=algebra.dim):
        point = Matrix(algebra.dim, 1, coords)
        candidate = ExtendedFrobeniusAlgebra(algebra, involution, point)
        if check_extended(candidate).passed:
            hits.append(point)
    return hits
