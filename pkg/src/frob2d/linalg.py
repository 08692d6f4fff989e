"""Exact dense linear algebra over the rationals.

Scalars are Python ints or ``fractions.Fraction`` values and every
operation is exact.  Conventions fixed here and relied on by the whole
package:

* ``compose(f, g)`` is the matrix product ``f . g``; ``g`` acts first on
  column vectors.
* Kronecker products are row-major with the left factor major::

      kron(f, g)[i1 * g.rows + i2, j1 * g.cols + j2] = f[i1, j1] * g[i2, j2]

  so the basis vector ``e_i (x) e_j`` of a tensor-product space sits at
  flat index ``i * dim_right + j``.
* ``braiding(a, b)`` swaps tensor factors and ``interleaver(n, a, b)``
  regroups ``A^(x)n (x) B^(x)n`` as ``(A (x) B)^(x)n``; both are
  permutation matrices.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Rational = Union[int, Fraction]


class ShapeError(ValueError):
    """Matrix dimensions do not fit the requested operation."""


class SingularMatrixError(ValueError):
    """A square matrix with no inverse."""


def as_rational(value) -> Rational:
    """Coerce ints, Fractions and "p/q" strings to an exact rational.

    Integral values come back as plain ints.  Floats are rejected: binary
    floating point would silently break exactness.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rational scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, str):
        return as_rational(Fraction(value))
    raise TypeError(f"expected an exact rational, got {type(value).__name__}: {value!r}")


class Matrix:
    """Immutable dense matrix of exact rationals, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable) -> None:
        if rows < 0 or cols < 0:
            raise ShapeError(f"negative shape {rows}x{cols}")
        cells = tuple(as_rational(x) for x in entries)
        if len(cells) != rows * cols:
            raise ShapeError(
                f"a {rows}x{cols} matrix needs {rows * cols} entries, got {len(cells)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = cells

    @classmethod
    def _raw(cls, rows: int, cols: int, entries: tuple) -> "Matrix":
        # Internal fast path: entries are already canonical rationals.
        m = object.__new__(cls)
        m.rows = rows
        m.cols = cols
        m.entries = entries
        return m

    @classmethod
    def from_rows(cls, rows_of_entries) -> "Matrix":
        rows_of_entries = [list(r) for r in rows_of_entries]
        rows = len(rows_of_entries)
        cols = len(rows_of_entries[0]) if rows else 0
        for r in rows_of_entries:
            if len(r) != cols:
                raise ShapeError("rows have unequal lengths")
        return cls(rows, cols, [x for r in rows_of_entries for x in r])

    @classmethod
    def column(cls, values) -> "Matrix":
        values = list(values)
        return cls(len(values), 1, values)

    @classmethod
    def row_vector(cls, values) -> "Matrix":
        values = list(values)
        return cls(1, len(values), values)

    def __getitem__(self, index: tuple) -> Rational:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index ({i},{j}) out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        if not 0 <= i < self.rows:
            raise IndexError(f"row {i} out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return compose(self, other)

    def __repr__(self) -> str:
        if self.rows * self.cols <= 36:
            body = ", ".join(
                "[" + ", ".join(str(x) for x in self.row(i)) + "]"
                for i in range(self.rows)
            )
            return f"Matrix({self.rows}x{self.cols} [{body}])"
        return f"Matrix({self.rows}x{self.cols})"


@lru_cache(maxsize=None)
def identity(n: int) -> Matrix:
    """The n x n identity matrix."""
    if n < 0:
        raise ShapeError(f"identity needs n >= 0, got {n}")
    cells = [0] * (n * n)
    for i in range(n):
        cells[i * n + i] = 1
    return Matrix._raw(n, n, tuple(cells))


def compose(f: Matrix, g: Matrix, *rest: Matrix) -> Matrix:
    """Matrix product ``f . g`` (g acts first); extra factors keep multiplying on the right."""
    if rest:
        out = compose(f, g)
        for m in rest:
            out = compose(out, m)
        return out
    if f.cols != g.rows:
        raise ShapeError(
            f"cannot compose {f.rows}x{f.cols} with {g.rows}x{g.cols}: {f.cols} != {g.rows}"
        )
    gcols = g.cols
    fe, ge = f.entries, g.entries
    out = [0] * (f.rows * gcols)
    for i in range(f.rows):
        fbase = i * f.cols
        obase = i * gcols
        for k in range(f.cols):
            a = fe[fbase + k]
            if not a:
                continue
            gbase = k * gcols
            if a == 1:
                for j in range(gcols):
                    b = ge[gbase + j]
                    if b:
                        out[obase + j] = out[obase + j] + b
            else:
                for j in range(gcols):
                    b = ge[gbase + j]
                    if b:
                        out[obase + j] = out[obase + j] + a * b
    return Matrix._raw(f.rows, gcols, tuple(out))


def kron(f: Matrix, g: Matrix) -> Matrix:
    """Kronecker product with the left factor major (see module docstring)."""
    rows = f.rows * g.rows
    cols = f.cols * g.cols
    out = [0] * (rows * cols)
    fe, ge = f.entries, g.entries
    for i1 in range(f.rows):
        for j1 in range(f.cols):
            a = fe[i1 * f.cols + j1]
            if not a:
                continue
            unit = a == 1
            for i2 in range(g.rows):
                obase = (i1 * g.rows + i2) * cols + j1 * g.cols
                gbase = i2 * g.cols
                for j2 in range(g.cols):
                    b = ge[gbase + j2]
                    if b:
                        out[obase + j2] = b if unit else a * b
    return Matrix._raw(rows, cols, tuple(out))


def tensor_power(m: Matrix, count: int) -> Matrix:
    """``count``-fold Kronecker power; the 0th power is the 1x1 identity."""
    if count < 0:
        raise ValueError(f"tensor power needs count >= 0, got {count}")
    out = identity(1)
    for _ in range(count):
        out = kron(out, m)
    return out


@lru_cache(maxsize=None)
def braiding(a: int, b: int) -> Matrix:
    """Permutation matrix sending x (x) y to y (x) x for dims a and b.

    Entry convention: ``braiding(a, b)[j * a + i, i * b + j] = 1``.
    """
    if a < 1 or b < 1:
        raise ValueError(f"braiding needs dimensions >= 1, got {a} and {b}")
    size = a * b
    out = [0] * (size * size)
    for i in range(a):
        for j in range(b):
            out[(j * a + i) * size + (i * b + j)] = 1
    return Matrix._raw(size, size, tuple(out))


@lru_cache(maxsize=None)
def interleaver(n: int, a: int, b: int) -> Matrix:
    """Permutation regrouping ``A^(x)n (x) B^(x)n`` as ``(A (x) B)^(x)n``.

    The source index pair with digit strings (i_1..i_n) base a and
    (j_1..j_n) base b goes to the target index with digit string
    ((i_1,j_1)..(i_n,j_n)) base a*b.  Size (a*b)**n; n = 0 gives [1].
    """
    if n < 0:
        raise ValueError(f"strand count must be >= 0, got {n}")
    if a < 1 or b < 1:
        raise ValueError(f"interleaver needs dimensions >= 1, got {a} and {b}")
    size = (a * b) ** n
    bn = b**n
    ab = a * b
    out = [0] * (size * size)
    for idx_a, digits_a in enumerate(itertools.product(range(a), repeat=n)):
        for idx_b, digits_b in enumerate(itertools.product(range(b), repeat=n)):
            tgt = 0
            for i, j in zip(digits_a, digits_b):
                tgt = tgt * ab + i * b + j
            out[tgt * size + idx_a * bn + idx_b] = 1
    return Matrix._raw(size, size, tuple(out))


def inverse(m: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination.

    Raises SingularMatrixError when no inverse exists.
    """
    if m.rows != m.cols:
        raise ShapeError(f"only square matrices invert, got {m.rows}x{m.cols}")
    n = m.rows
    work = [[Fraction(x) for x in m.row(i)] for i in range(n)]
    result = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col]), None)
        if pivot is None:
            raise SingularMatrixError(f"singular {n}x{n} matrix")
        work[col], work[pivot] = work[pivot], work[col]
        result[col], result[pivot] = result[pivot], result[col]
        scale = work[col][col]
        work[col] = [x / scale for x in work[col]]
        result[col] = [x / scale for x in result[col]]
        for r in range(n):
            if r == col or not work[r][col]:
                continue
            factor = work[r][col]
            work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
            result[r] = [x - factor * y for x, y in zip(result[r], result[col])]
    return Matrix(n, n, [x for row in result for x in row])


def is_permutation_matrix(m: Matrix) -> bool:
    """True when m is square with exactly one 1 per row and column, 0 elsewhere."""
    if m.rows != m.cols:
        return False
    seen_cols = set()
    for i in range(m.rows):
        ones = [j for j, x in enumerate(m.row(i)) if x == 1]
        if len(ones) != 1 or any(x not in (0, 1) for x in m.row(i)):
            return False
        seen_cols.add(ones[0])
    return len(seen_cols) == m.rows
