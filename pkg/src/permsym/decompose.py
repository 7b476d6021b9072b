"""Projectors from involutive symmetries and exact invariant-subspace tools.

An involution P yields the projector pair (I+P)/2, (I-P)/2.  Subspace bases
are primitive integer vectors (entry gcd 1, first nonzero entry positive),
which keeps everything inside exact arithmetic; unit-norm versions of such
vectors would only differ by irrational scalar factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .matrices import DimensionError, ExactMatrix
from .scalars import PolyScalar, as_scalar, rational


@dataclass(frozen=True)
class ProjectorPair:
    pi1: ExactMatrix
    pi2: ExactMatrix


class SubspaceBasis:
    """Linearly independent primitive integer column vectors."""

    __slots__ = ("vectors",)

    def __init__(self, vectors):
        vectors = tuple(tuple(int(x) for x in v) for v in vectors)
        if vectors:
            n = len(vectors[0])
            if any(len(v) != n for v in vectors):
                raise ValueError("basis vectors of unequal length")
            if _rank([[Fraction(x) for x in v] for v in vectors]) != len(vectors):
                raise ValueError("basis vectors are linearly dependent")
        object.__setattr__(self, "vectors", vectors)

    def __setattr__(self, name, value):
        raise AttributeError("SubspaceBasis is immutable")

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __eq__(self, other):
        return isinstance(other, SubspaceBasis) and self.vectors == other.vectors

    def __hash__(self):
        return hash(self.vectors)

    def __repr__(self):
        return f"SubspaceBasis({[list(v) for v in self.vectors]})"


def projectors_from_involution(p):
    """Exact (I+P)/2 and (I-P)/2 for a permutation with p*p = identity."""
    if p.order() > 2:
        raise ValueError(f"not an involution: {p} has order {p.order()}")
    n = len(p)
    ident = ExactMatrix.identity(n)
    pm = p.to_matrix()
    half = rational(1, 2)
    return ProjectorPair(pi1=(ident + pm) * half, pi2=(ident - pm) * half)


# -- exact rational elimination helpers ---------------------------------


def _rref(rows):
    """Reduced row echelon form in place; returns the list of pivot columns."""
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c] != 0:
                f = rows[k][c]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def _rank(rows):
    return len(_rref([list(r) for r in rows]))


def _primitive(vec):
    """Scale a rational vector to integers with gcd 1, first nonzero positive."""
    denom_lcm = 1
    for x in vec:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def _constant_fraction_matrix(m):
    """Entries of a parameter-free matrix as Fractions; rejects imaginary parts."""
    out = []
    for r in range(m.rows):
        row = []
        for c in range(m.cols):
            x = m[r, c]
            if not x.is_constant():
                raise ValueError(f"parametric entry at ({r}, {c}): {x}")
            v = x.constant_value()
            if v.im:
                raise ValueError(f"non-real constant entry at ({r}, {c}): {x}")
            row.append(v.re)
        out.append(row)
    return out


def column_space_basis(m):
    """Primitive integer basis of the column space of a constant matrix.

    Deterministic: the basis is the reduced row echelon form of the
    transposed matrix, each row scaled primitive.
    """
    rows = _constant_fraction_matrix(m)
    cols = [[rows[r][c] for r in range(m.rows)] for c in range(m.cols)]
    _rref(cols)
    basis = [_primitive(v) for v in cols if any(v)]
    return SubspaceBasis(basis)


def _monomial_components(vec):
    """Split a PolyScalar vector into per-monomial rational vectors.

    Returns {monomial: (real part vector, imaginary part vector)}.
    """
    comps = {}
    n = len(vec)
    for idx, x in enumerate(vec):
        for mono, coeff in x.terms():
            re, im = comps.setdefault(mono, ([Fraction(0)] * n, [Fraction(0)] * n))
            re[idx] = coeff.re
            im[idx] = coeff.im
    return comps


class _SpanSolver:
    """Answers membership questions against a fixed rational basis."""

    def __init__(self, vectors):
        self.rows = [list(v) for v in vectors]
        self.pivots = _rref(self.rows)
        self.rank = len(self.pivots)

    def contains(self, vec):
        work = self.rows[: self.rank] + [list(vec)]
        return len(_rref(work)) == self.rank


def _apply(h, vec):
    """H @ v for an integer/rational vector, as a list of PolyScalars."""
    n = h.rows
    out = []
    for r in range(n):
        acc = PolyScalar()
        for c in range(n):
            x = h[r, c]
            if x and vec[c]:
                acc = acc + x * Fraction(vec[c])
        out.append(acc)
    return out


def is_invariant_subspace(h, basis):
    """True iff H maps span(basis) into itself.

    Coefficients in the combinations may be polynomials in the parameters;
    membership is decided monomial by monomial over the rationals.
    """
    if not h.is_square():
        raise DimensionError("need a square matrix")
    if len(basis) and len(basis.vectors[0]) != h.rows:
        raise DimensionError(
            f"basis vectors of length {len(basis.vectors[0])} do not match size {h.rows}"
        )
    solver = _SpanSolver([[Fraction(x) for x in v] for v in basis])
    for v in basis:
        image = _apply(h, v)
        for _, (re, im) in _monomial_components(image).items():
            if any(re) and not solver.contains(re):
                return False
            if any(im) and not solver.contains(im):
                return False
    return True


def block_form(h, basis1, basis2):
    """H rewritten in the basis b1 + b2, exactly; blocks sized |b1| and |b2|.

    Raises if the vectors do not form a full basis or the two subspaces are
    not H-invariant.  The result is block diagonal by construction.
    """
    if not h.is_square():
        raise DimensionError("need a square matrix")
    n = h.rows
    vectors = list(basis1) + list(basis2)
    if len(vectors) != n:
        raise ValueError(f"{len(vectors)} basis vectors for dimension {n}: not a full basis")
    if _rank([[Fraction(x) for x in v] for v in vectors]) != n:
        raise ValueError("basis vectors are linearly dependent: not a full basis")
    if not is_invariant_subspace(h, basis1) or not is_invariant_subspace(h, basis2):
        raise ValueError("subspaces are not invariant under the matrix")

    s = ExactMatrix(n, n, [rational(vectors[c][r]) for r in range(n) for c in range(n)])
    s_inv = _invert_rational(vectors, n)
    result = s_inv @ (h @ s)

    k = len(basis1)
    for r in range(n):
        for c in range(n):
            if (r < k) != (c < k):
                assert not result[r, c], f"nonzero off-block entry at ({r}, {c})"
    return result


def _invert_rational(column_vectors, n):
    """Exact inverse of the matrix whose columns are the given vectors."""
    aug = [
        [Fraction(column_vectors[c][r]) for c in range(n)]
        + [Fraction(1 if c == r else 0) for c in range(n)]
        for r in range(n)
    ]
    pivots = _rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return ExactMatrix(n, n, [rational(aug[r][n + c]) for r in range(n) for c in range(n)])


def verify_eigenpair(h, eigenvalue, vector):
    """Exact check that H v == eigenvalue * v for an integer vector v."""
    if not h.is_square():
        raise DimensionError("need a square matrix")
    if len(vector) != h.rows:
        raise DimensionError(f"vector length {len(vector)} does not match size {h.rows}")
    if not any(vector):
        raise ValueError("zero vector is not an eigenvector")
    image = _apply(h, vector)
    lam = as_scalar(eigenvalue)
    return all(image[r] == lam * Fraction(vector[r]) for r in range(h.rows))
