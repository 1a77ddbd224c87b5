"""Exact linear algebra over the rationals.

Matrices are stored row-sparse: a list of {column: Fraction} dicts holding no
explicit zeros. Rank uses forward elimination with leading-column pivoting;
nullspace and constraint extraction go through the fully reduced form. All
arithmetic is fractions.Fraction, so every result is exact, and pivot choice
depends only on the matrix entries, so runs are deterministic.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .sparsevec import Vec, add_scaled

Scalar = Union[int, str, Fraction]

_ONE = Fraction(1)


def parse_scalar(value: Scalar) -> Fraction:
    """Exact rational from an int, a Fraction, or a string like "-3/7" or "5"."""
    if isinstance(value, bool):
        raise TypeError("scalar must be an int, string, or Fraction, not bool")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational scalar: {value!r}") from exc
    raise TypeError(
        f"scalar must be an int, string, or Fraction, not {type(value).__name__}"
    )


def format_scalar(value: Fraction) -> str:
    """Canonical string form: "p/q" in lowest terms, or "n" for integers."""
    return str(value)


def _eliminate(rows: Sequence[Vec], reduce_full: bool) -> Tuple[Dict[int, Vec], List[int]]:
    """Eliminate rows into {pivot column: row with unit pivot}.

    Each incoming row is reduced against the pivots found so far, keyed by its
    current leading (smallest) column; a row that survives becomes a new pivot.
    With reduce_full, back-substitution clears pivot columns from all other
    pivot rows, giving the unique reduced echelon form.
    """
    pivots: Dict[int, Vec] = {}
    for row in rows:
        r = dict(row)
        while r:
            lead = min(r)
            piv = pivots.get(lead)
            if piv is None:
                coeff = r[lead]
                if coeff != _ONE:
                    inv = _ONE / coeff
                    r = {k: v * inv for k, v in r.items()}
                pivots[lead] = r
                break
            add_scaled(r, piv, -r[lead])
    if reduce_full:
        for lead in sorted(pivots, reverse=True):
            piv = pivots[lead]
            for other_lead, other in pivots.items():
                if other_lead < lead and lead in other:
                    add_scaled(other, piv, -other[lead])
    return pivots, sorted(pivots)


class Matrix:
    """Row-sparse matrix of Fractions."""

    __slots__ = ("nrows", "ncols", "rows", "_rank")

    def __init__(self, nrows: int, ncols: int, rows: Optional[List[Vec]] = None):
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if rows is None:
            rows = [dict() for _ in range(nrows)]
        elif len(rows) != nrows:
            raise ValueError(f"expected {nrows} rows, got {len(rows)}")
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows
        self._rank: Optional[int] = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], ncols: Optional[int] = None) -> "Matrix":
        """Build from dense row lists; entries may be ints, strings, or Fractions."""
        dense = [[parse_scalar(x) for x in row] for row in rows]
        if ncols is None:
            ncols = len(dense[0]) if dense else 0
        for row in dense:
            if len(row) != ncols:
                raise ValueError("ragged rows")
        sparse = [{j: x for j, x in enumerate(row) if x} for row in dense]
        return cls(len(dense), ncols, sparse)

    @classmethod
    def from_cols(cls, cols: Sequence[Union[Vec, Sequence[Fraction]]], nrows: int) -> "Matrix":
        """Build from columns, each a sparse {row: value} dict or a dense list."""
        rows: List[Vec] = [dict() for _ in range(nrows)]
        for j, col in enumerate(cols):
            items = col.items() if isinstance(col, dict) else enumerate(col)
            for i, x in items:
                if x:
                    rows[i][j] = Fraction(x)
        return cls(nrows, len(cols), rows)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [{i: _ONE} for i in range(n)])

    def get(self, r: int, c: int) -> Fraction:
        self._check_index(r, c)
        return self.rows[r].get(c, Fraction(0))

    def set(self, r: int, c: int, value: Scalar) -> None:
        self._check_index(r, c)
        v = parse_scalar(value)
        if v:
            self.rows[r][c] = v
        else:
            self.rows[r].pop(c, None)
        self._rank = None

    def _check_index(self, r: int, c: int) -> None:
        if not (0 <= r < self.nrows and 0 <= c < self.ncols):
            raise IndexError(f"({r}, {c}) out of range for {self.nrows}x{self.ncols}")

    @property
    def num_nonzero(self) -> int:
        return sum(len(row) for row in self.rows)

    def is_zero(self) -> bool:
        return all(not row for row in self.rows)

    def to_dense(self) -> List[List[Fraction]]:
        zero = Fraction(0)
        out = []
        for row in self.rows:
            dense = [zero] * self.ncols
            for c, v in row.items():
                dense[c] = v
            out.append(dense)
        return out

    def transpose(self) -> "Matrix":
        rows: List[Vec] = [dict() for _ in range(self.ncols)]
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                rows[j][i] = v
        return Matrix(self.ncols, self.nrows, rows)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise ValueError("hstack needs equal row counts")
        shift = self.ncols
        rows = []
        for a, b in zip(self.rows, other.rows):
            r = dict(a)
            for c, v in b.items():
                r[c + shift] = v
            rows.append(r)
        return Matrix(self.nrows, self.ncols + other.ncols, rows)

    def mul(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(
                f"shape mismatch: {self.nrows}x{self.ncols} times {other.nrows}x{other.ncols}"
            )
        out_rows: List[Vec] = []
        for row in self.rows:
            acc: Vec = {}
            for c, v in row.items():
                add_scaled(acc, other.rows[c], v)
            out_rows.append(acc)
        return Matrix(self.nrows, other.ncols, out_rows)

    def mul_vec(self, vec: Sequence[Fraction]) -> List[Fraction]:
        if len(vec) != self.ncols:
            raise ValueError("vector length must equal column count")
        out = []
        for row in self.rows:
            s = Fraction(0)
            for c, v in row.items():
                s += v * vec[c]
            out.append(s)
        return out

    def rank(self) -> int:
        if self._rank is None:
            pivots, _ = _eliminate(self.rows, reduce_full=False)
            self._rank = len(pivots)
        return self._rank

    def reduced_rows(self) -> List[Tuple[int, Vec]]:
        """Reduced echelon form as (pivot column, row) pairs, pivots ascending.

        Rows are scaled to a unit pivot and cleared above and below, so the
        result is the canonical reduced form of the row space.
        """
        pivots, pivot_cols = _eliminate(self.rows, reduce_full=True)
        self._rank = len(pivot_cols)
        return [(c, dict(pivots[c])) for c in pivot_cols]

    def nullspace(self) -> List[List[Fraction]]:
        """Basis of the right kernel as dense vectors, one per free column.

        The basis vector for free column f has a 1 at f and is supported on
        pivot columns otherwise, so stacking them gives the standard reduced
        parameterization of the solution space.
        """
        pivots, pivot_cols = _eliminate(self.rows, reduce_full=True)
        self._rank = len(pivot_cols)
        pivot_set = set(pivot_cols)
        zero = Fraction(0)
        basis = []
        for fc in range(self.ncols):
            if fc in pivot_set:
                continue
            vec = [zero] * self.ncols
            vec[fc] = _ONE
            for pc in pivot_cols:
                coeff = pivots[pc].get(fc)
                if coeff:
                    vec[pc] = -coeff
            basis.append(vec)
        return basis

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols}, {self.num_nonzero} nonzero)"
