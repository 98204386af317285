"""Exact dense linear algebra over the rationals or a prime field.

Row reduction is deterministic: leftmost pivots, pivots normalized to 1,
full reduction above and below. Kernel bases come out in reduced row
echelon form, so every derived object (annihilators, solved systems) has a
unique representative.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import scalar_inverse, scalar_is_zero


class ExactMatrix:
    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "ExactMatrix":
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def copy(self) -> "ExactMatrix":
        return ExactMatrix(self.rows)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)])

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.nrows == other.nrows
            and self.ncols == other.ncols
            and all(self.rows[i][j] == other.rows[i][j] for i in range(self.nrows) for j in range(self.ncols))
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"dimension mismatch: {self.ncols} vs {other.nrows}")
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                s = 0
                for k in range(self.ncols):
                    s = s + self.rows[i][k] * other.rows[k][j]
                row.append(s)
            out.append(row)
        return ExactMatrix(out)

    def apply(self, vector):
        """Matrix-vector product as a plain list."""
        if len(vector) != self.ncols:
            raise ValueError("vector length mismatch")
        return [sum((self.rows[i][k] * vector[k] for k in range(self.ncols)), start=0) for i in range(self.nrows)]

    def rref(self) -> tuple["ExactMatrix", list[int]]:
        """Reduced row echelon form and the pivot column list."""
        rows = [list(r) for r in self.rows]
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            pivot_row = None
            for i in range(r, len(rows)):
                if not scalar_is_zero(rows[i][c]):
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            inv = scalar_inverse(rows[r][c])
            rows[r] = [v * inv for v in rows[r]]
            for i in range(len(rows)):
                if i != r and not scalar_is_zero(rows[i][c]):
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        return ExactMatrix(rows), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def right_kernel(self) -> "ExactMatrix":
        """Basis of {v : A v = 0}, rows in reduced row echelon form."""
        reduced, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for fc in free:
            v = [0] * self.ncols
            v[fc] = 1
            for i, pc in enumerate(pivots):
                v[pc] = -reduced.rows[i][fc]
            basis.append(v)
        if not basis:
            return ExactMatrix.zero(0, self.ncols)
        return ExactMatrix(basis).rref()[0]

    def row_space_contains(self, vector) -> bool:
        if all(scalar_is_zero(v) for v in vector):
            return True
        stacked = ExactMatrix(self.rows + [list(vector)])
        return stacked.rank() == self.rank()

    def solve_right(self, rhs):
        """One solution x of A x = b, or None."""
        aug = ExactMatrix([list(r) + [b] for r, b in zip(self.rows, rhs)])
        reduced, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        x = [0] * self.ncols
        for i, pc in enumerate(pivots):
            x[pc] = reduced.rows[i][self.ncols]
        return x

    def nonzero_rows(self) -> "ExactMatrix":
        kept = [r for r in self.rows if any(not scalar_is_zero(v) for v in r)]
        return ExactMatrix(kept) if kept else ExactMatrix.zero(0, self.ncols)

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        if n == 0:
            return 1
        rows = [list(r) for r in self.rows]
        sign = 1
        acc = None
        for c in range(n):
            pivot_row = None
            for i in range(c, n):
                if not scalar_is_zero(rows[i][c]):
                    pivot_row = i
                    break
            if pivot_row is None:
                return 0
            if pivot_row != c:
                rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
                sign = -sign
            acc = rows[c][c] if acc is None else acc * rows[c][c]
            inv = scalar_inverse(rows[c][c])
            for i in range(c + 1, n):
                if not scalar_is_zero(rows[i][c]):
                    f = rows[i][c] * inv
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
        return acc * sign

    def to_integer_rows(self) -> "ExactMatrix":
        """Scale each row to a primitive integer vector (rational input)."""
        out = []
        for r in self.rows:
            out.append(integer_primitive(r))
        return ExactMatrix(out)

    def __repr__(self):
        return f"ExactMatrix({self.rows!r})"


def integer_primitive(vector):
    """Scale a rational vector to primitive integers, first nonzero positive."""
    from math import gcd

    fracs = [Fraction(v) for v in vector]
    denom = 1
    for v in fracs:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in fracs]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    for v in ints:
        if v != 0:
            if v < 0:
                ints = [-w for w in ints]
            break
    return ints


def matrix_kernel(m: ExactMatrix) -> ExactMatrix:
    return m.right_kernel()
