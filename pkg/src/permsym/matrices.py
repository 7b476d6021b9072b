"""Dense matrices over PolyScalar with the exact operations used throughout:
multiplication, transpose, conjugate transpose, Kronecker product, direct sum
and the 2x2 star product.  All matrices are immutable.
"""

from __future__ import annotations

from .scalars import ONE, ZERO, PolyScalar, as_scalar


class DimensionError(ValueError):
    pass


class ExactMatrix:
    __slots__ = ("rows", "cols", "_e", "_hash")

    def __init__(self, rows, cols, entries):
        entries = tuple(as_scalar(x) for x in entries)
        if len(entries) != rows * cols:
            raise DimensionError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_e", entries)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, rows):
        """Build from an iterable of rows; entries may be scalars or strings."""
        rows = [list(r) for r in rows]
        if not rows:
            raise DimensionError("matrix needs at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), width, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [ONE if r == c else ZERO for r in range(n) for c in range(n)])

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls(rows, cols, [ZERO] * (rows * cols))

    # -- access --------------------------------------------------------

    def __getitem__(self, key):
        r, c = key
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(f"index {key} out of range for {self.rows}x{self.cols}")
        return self._e[r * self.cols + c]

    def row(self, r):
        return self._e[r * self.cols : (r + 1) * self.cols]

    def entries(self):
        return self._e

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self):
        return self.rows == self.cols

    # -- algebra --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch: {self.shape} + {other.shape}")
        return ExactMatrix(
            self.rows, self.cols, [a + b for a, b in zip(self._e, other._e)]
        )

    def __sub__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch: {self.shape} - {other.shape}")
        return ExactMatrix(
            self.rows, self.cols, [a - b for a, b in zip(self._e, other._e)]
        )

    def __neg__(self):
        return ExactMatrix(self.rows, self.cols, [-a for a in self._e])

    def __mul__(self, scalar):
        s = as_scalar(scalar) if not isinstance(scalar, ExactMatrix) else None
        if s is None:
            return NotImplemented
        return ExactMatrix(self.rows, self.cols, [a * s for a in self._e])

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = as_scalar(scalar)
        return ExactMatrix(self.rows, self.cols, [a / s for a in self._e])

    def __matmul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        n, m, k = self.rows, other.cols, self.cols
        a, b = self._e, other._e
        out = []
        for r in range(n):
            arow = a[r * k : (r + 1) * k]
            for c in range(m):
                acc = ZERO
                for t in range(k):
                    x = arow[t]
                    if x:
                        y = b[t * m + c]
                        if y:
                            acc = acc + x * y
                out.append(acc)
        return ExactMatrix(n, m, out)

    def transpose(self):
        return ExactMatrix(
            self.cols,
            self.rows,
            [self._e[r * self.cols + c] for c in range(self.cols) for r in range(self.rows)],
        )

    def conjugate(self):
        return ExactMatrix(self.rows, self.cols, [a.conjugate() for a in self._e])

    def dagger(self):
        """Conjugate transpose; parameters are treated as real."""
        return self.transpose().conjugate()

    def is_hermitian(self):
        if not self.is_square():
            raise DimensionError("hermiticity is defined for square matrices only")
        n = self.rows
        for r in range(n):
            for c in range(r, n):
                if self._e[r * n + c] != self._e[c * n + r].conjugate():
                    return False
        return True

    def is_permutation_matrix(self):
        """True iff entries are 0/1 with exactly one 1 per row and column."""
        if not self.is_square():
            return False
        n = self.rows
        seen_cols = set()
        for r in range(n):
            ones = [c for c in range(n) if self._e[r * n + c] == ONE]
            if len(ones) != 1:
                return False
            if any(self._e[r * n + c] for c in range(n) if c != ones[0]):
                return False
            seen_cols.add(ones[0])
        return len(seen_cols) == n

    def substitute(self, bindings):
        return ExactMatrix(self.rows, self.cols, [a.substitute(bindings) for a in self._e])

    # -- comparison and rendering ----------------------------------------

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._e == other._e

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.rows, self.cols, self._e))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"<ExactMatrix {self.rows}x{self.cols}>"

    def __str__(self):
        cells = [[str(x) for x in self.row(r)] for r in range(self.rows)]
        widths = [max(len(cells[r][c]) for r in range(self.rows)) for c in range(self.cols)]
        return "\n".join(
            "[" + "  ".join(cells[r][c].rjust(widths[c]) for c in range(self.cols)) + "]"
            for r in range(self.rows)
        )


def matmul(a, b):
    return a @ b


def kron(a, b):
    """Kronecker product, (a.rows*b.rows) x (a.cols*b.cols)."""
    out = []
    for ar in range(a.rows):
        for br in range(b.rows):
            for ac in range(a.cols):
                x = a[ar, ac]
                for bc in range(b.cols):
                    out.append(x * b[br, bc] if x else ZERO)
    return ExactMatrix(a.rows * b.rows, a.cols * b.cols, out)


def direct_sum(a, b):
    """Block-diagonal sum, zeros off the blocks."""
    rows, cols = a.rows + b.rows, a.cols + b.cols
    out = [ZERO] * (rows * cols)
    for r in range(a.rows):
        for c in range(a.cols):
            out[r * cols + c] = a[r, c]
    for r in range(b.rows):
        for c in range(b.cols):
            out[(a.rows + r) * cols + (a.cols + c)] = b[r, c]
    return ExactMatrix(rows, cols, out)


def star2(a, b):
    """Star product of two 2x2 matrices: a on the corners, b in the middle.

    ``star2(A, B)`` is the 4x4 matrix
    ``[[a00, 0, 0, a01], [0, b00, b01, 0], [0, b10, b11, 0], [a10, 0, 0, a11]]``.
    """
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise DimensionError("star product is defined for 2x2 operands only")
    z = ZERO
    return ExactMatrix.from_rows(
        [
            [a[0, 0], z, z, a[0, 1]],
            [z, b[0, 0], b[0, 1], z],
            [z, b[1, 0], b[1, 1], z],
            [a[1, 0], z, z, a[1, 1]],
        ]
    )
