"""Exact dense linear algebra over the rationals, plus determinants of
matrices whose entries are polynomial forms.

Rank and determinant use fraction-free (Bareiss) elimination on an
integer-rescaled copy of the matrix, which keeps intermediate entries as
minors of the input and avoids rational blow-up.  Kernel bases come from a
plain Gauss-Jordan reduction with Fractions; the matrices in this library
never exceed 15 x 18, so clarity wins over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import MatrixShapeError, ResultantInputError
from .forms import Monomial, Scalar, TernaryForm, constant_form, zero_form


class ExactMatrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[Scalar]]):
        rows = len(entries)
        if rows == 0:
            raise MatrixShapeError("matrix needs at least one row")
        cols = len(entries[0])
        if cols == 0 or any(len(row) != cols for row in entries):
            raise MatrixShapeError("rows must be nonempty and equal length")
        frozen = tuple(tuple(Fraction(x) for x in row) for row in entries)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", frozen)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]]) -> "ExactMatrix":
        if not columns:
            raise MatrixShapeError("matrix needs at least one column")
        n = len(columns[0])
        if any(len(col) != n for col in columns):
            raise MatrixShapeError("columns must have equal length")
        return cls([[col[i] for col in columns] for i in range(n)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def multiply_vector(self, v: Sequence[Scalar]) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise MatrixShapeError(f"vector length {len(v)} != cols {self.cols}")
        return tuple(
            sum((row[j] * Fraction(v[j]) for j in range(self.cols)), Fraction(0))
            for row in self.entries
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols})"

    # -- integer rescaling -------------------------------------------------

    def _integer_rows(self) -> tuple[list[list[int]], Fraction]:
        """Scale each row to integers; return rows and the product of the
        scale factors (so det(self) = det(int rows) / product)."""
        scaled: list[list[int]] = []
        scaling = Fraction(1)
        for row in self.entries:
            mult = 1
            for x in row:
                mult = mult * x.denominator // gcd(mult, x.denominator)
            scaling *= mult
            scaled.append([int(x * mult) for x in row])
        return scaled, scaling

    # -- rank / determinant (fraction-free) ---------------------------------

    def _bareiss(self) -> tuple[int, int, int, Fraction]:
        """Fraction-free elimination on the integer-rescaled matrix.

        Returns (rank, last_pivot, sign, row_scaling) where last_pivot is
        the final Bareiss pivot (the determinant of the rank-sized pivot
        minor up to sign) and row_scaling is the factor relating the integer
        copy's determinant to the original's.
        """
        m, scaling = self._integer_rows()
        rows, cols = self.rows, self.cols
        sign = 1
        prev = 1
        rank = 0
        for col in range(cols):
            pivot_row = next(
                (r for r in range(rank, rows) if m[r][col] != 0), None
            )
            if pivot_row is None:
                continue
            if pivot_row != rank:
                m[rank], m[pivot_row] = m[pivot_row], m[rank]
                sign = -sign
            pivot = m[rank][col]
            for r in range(rank + 1, rows):
                factor = m[r][col]
                for c in range(col + 1, cols):
                    m[r][c] = (pivot * m[r][c] - factor * m[rank][c]) // prev
                m[r][col] = 0
            prev = pivot
            rank += 1
            if rank == rows:
                break
        return rank, prev, sign, scaling

    def rank(self) -> int:
        rank, _, _, _ = self._bareiss()
        return rank

    def determinant(self) -> Fraction:
        if self.rows != self.cols:
            raise MatrixShapeError(
                f"determinant needs a square matrix, got {self.rows}x{self.cols}"
            )
        rank, last_pivot, sign, scaling = self._bareiss()
        if rank < self.rows:
            return Fraction(0)
        return Fraction(sign * last_pivot) / scaling

    # -- kernel --------------------------------------------------------------

    def kernel_basis(self) -> list[tuple[Fraction, ...]]:
        """Basis of the right kernel: all v with M*v = 0, exactly.

        Deterministic: one vector per free column, the free variable set to 1
        and pivot variables back-substituted from the reduced echelon form.
        """
        m = [list(row) for row in self.entries]
        rows, cols = self.rows, self.cols
        pivot_cols: list[int] = []
        r = 0
        for col in range(cols):
            pivot_row = next((i for i in range(r, rows) if m[i][col] != 0), None)
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            inv = m[r][col]
            m[r] = [x / inv for x in m[r]]
            for i in range(rows):
                if i != r and m[i][col] != 0:
                    factor = m[i][col]
                    m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
            pivot_cols.append(col)
            r += 1
            if r == rows:
                break
        free_cols = [c for c in range(cols) if c not in pivot_cols]
        basis = []
        for free in free_cols:
            v = [Fraction(0)] * cols
            v[free] = Fraction(1)
            for row_idx, pc in enumerate(pivot_cols):
                v[pc] = -m[row_idx][free]
            basis.append(tuple(v))
        return basis


# -- determinants of form-valued matrices -------------------------------------


def det_form_matrix(rows: Sequence[Sequence[TernaryForm]]) -> TernaryForm:
    """Exact determinant of a square matrix of forms.

    Expands column by column with memoization on the set of unused rows
    (2^n subproblems), which is comfortably fast for the sizes that occur
    here (at most 8x8 Sylvester matrices).  A zero result is returned at
    declared degree 0.
    """
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise MatrixShapeError("form matrix must be square and nonempty")
    space = rows[0][0].space
    memo: dict[frozenset[int], TernaryForm | None] = {}

    def minor(col: int, available: frozenset[int]) -> TernaryForm | None:
        """Determinant of the submatrix on columns col.. and rows available,
        or None when identically zero."""
        if col == n:
            return constant_form(1, space)
        if available in memo:
            return memo[available]
        total: TernaryForm | None = None
        for position, row_idx in enumerate(sorted(available)):
            entry = rows[row_idx][col]
            if entry.is_zero():
                continue
            sub = minor(col + 1, available - {row_idx})
            if sub is None:
                continue
            term = entry * sub
            if position % 2 == 1:
                term = -term
            total = term if total is None else total + term
            if total is not None and total.is_zero():
                total = None
        memo[available] = total
        return total

    result = minor(0, frozenset(range(n)))
    return result if result is not None else zero_form(0, space)


def sylvester_resultant(p: TernaryForm, q: TernaryForm, var: int) -> TernaryForm:
    """Resultant of two forms with respect to one variable.

    Both forms are treated as univariate polynomials in the designated
    variable whose formal degree is the form's total degree (leading
    coefficients may be zero), with coefficients that are forms in the
    remaining variables.  The result is the determinant of the
    (deg p + deg q)-sized Sylvester matrix.

    With this homogeneous convention the determinant vanishes identically
    exactly when the two polynomials share a nonconstant common factor in
    the designated variable, or both formal leading coefficients vanish
    (a shared "root at infinity").  Either way a nonzero result certifies
    that no common zero with the remaining variables not all zero exists,
    which is the direction the smoothness test relies on.
    """
    if var not in (0, 1, 2):
        raise MatrixShapeError(f"variable index must be 0..2, got {var}")
    if p.is_zero() and q.is_zero():
        raise ResultantInputError("resultant of two zero forms is undefined")
    if p.space != q.space:
        raise ResultantInputError("resultant arguments must share a space")
    space = p.space

    def coeffs_desc(f: TernaryForm) -> list[TernaryForm]:
        """Coefficient forms of f in the designated variable, from the
        formal leading coefficient down to the constant term."""
        buckets: list[dict[Monomial, Fraction]] = [
            {} for _ in range(f.degree + 1)
        ]
        for mono, coeff in f.terms.items():
            e = mono[var]
            residual = list(mono)
            residual[var] = 0
            buckets[e][tuple(residual)] = coeff
        return [
            TernaryForm(f.degree - e, buckets[e], space)
            for e in range(f.degree, -1, -1)
        ]

    m, n = p.degree, q.degree
    size = m + n
    if size == 0:
        return constant_form(1, space)
    pc, qc = coeffs_desc(p), coeffs_desc(q)
    matrix: list[list[TernaryForm]] = []
    for shift in range(n):
        row = [zero_form(0, space)] * shift + pc
        row += [zero_form(0, space)] * (size - len(row))
        matrix.append(row)
    for shift in range(m):
        row = [zero_form(0, space)] * shift + qc
        row += [zero_form(0, space)] * (size - len(row))
        matrix.append(row)
    return det_form_matrix(matrix)
