"""Permutations of basis indices and their matrix realization.

A permutation is stored as its image array: ``p.image[u]`` is where index
``u`` goes.  The matrix realization puts a 1 at row ``u``, column
``image[u]``, and composition is defined so that the realization is a
homomorphism: ``(p * q).matrix() == p.matrix() @ q.matrix()``.
"""

from __future__ import annotations

from math import lcm

from .matrices import ExactMatrix
from .scalars import ONE, ZERO


class Perm:
    __slots__ = ("image",)

    def __init__(self, image):
        image = tuple(int(x) for x in image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"not a permutation of 0..{len(image) - 1}: {image}")
        object.__setattr__(self, "image", image)

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def parse(cls, text):
        """Parse the textual form ``j_0,j_1,...,j_{n-1}`` (0-based)."""
        try:
            return cls(int(part) for part in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad permutation {text!r}: {exc}") from None

    def __len__(self):
        return len(self.image)

    def __call__(self, u):
        return self.image[u]

    def __mul__(self, other):
        """Apply self first, then other; matches the matrix product order."""
        if not isinstance(other, Perm):
            return NotImplemented
        if len(self) != len(other):
            raise ValueError(f"length mismatch: {len(self)} vs {len(other)}")
        img = other.image
        return Perm(img[j] for j in self.image)

    def inverse(self):
        inv = [0] * len(self.image)
        for u, j in enumerate(self.image):
            inv[j] = u
        return Perm(inv)

    def is_identity(self):
        return all(j == u for u, j in enumerate(self.image))

    def order(self):
        """Least m >= 1 with p^m = identity (lcm of cycle lengths)."""
        return lcm(*(len(c) for c in self.cycles())) if self.image else 1

    def cycles(self):
        """All cycles, fixed points included, each starting at its least element."""
        seen = [False] * len(self.image)
        out = []
        for start in range(len(self.image)):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            j = self.image[start]
            while j != start:
                cycle.append(j)
                seen[j] = True
                j = self.image[j]
            out.append(tuple(cycle))
        return out

    def cycle_string(self):
        return "".join("(" + " ".join(str(v) for v in c) + ")" for c in self.cycles())

    def to_matrix(self):
        """The 0/1 matrix with a 1 at (u, image[u]) for every u."""
        n = len(self.image)
        entries = [ZERO] * (n * n)
        for u, j in enumerate(self.image):
            entries[u * n + j] = ONE
        return ExactMatrix(n, n, entries)

    matrix = to_matrix

    @classmethod
    def from_matrix(cls, m):
        """Inverse of to_matrix; rejects anything but a permutation matrix."""
        if not m.is_square():
            raise ValueError(f"not a permutation matrix: shape {m.shape}")
        n = m.rows
        image = []
        for u in range(n):
            ones = [c for c in range(n) if m[u, c] == ONE]
            others = [c for c in range(n) if m[u, c] and c not in ones]
            if len(ones) != 1 or others:
                raise ValueError(f"not a permutation matrix: row {u}")
            image.append(ones[0])
        if len(set(image)) != n:
            raise ValueError("not a permutation matrix: duplicate columns")
        return cls(image)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.image == other.image

    def __lt__(self, other):
        return self.image < other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return f"Perm({list(self.image)})"

    def __str__(self):
        return ",".join(str(j) for j in self.image)


def compose(p, q):
    """First p, then q: to_matrix(compose(p, q)) = to_matrix(p) @ to_matrix(q)."""
    return p * q


def inverse(p):
    return p.inverse()


def induced_site_perm(g):
    """Lift a permutation of n sites to the 2^n spin basis indices.

    Basis index bits are ordered with site 0 as the most significant bit.
    The bit sitting at site k moves to site ``g(k)``, which makes the lift a
    group homomorphism compatible with ``compose``.
    """
    n = len(g)
    if n < 1:
        raise ValueError("need at least one site")
    size = 1 << n
    image = [0] * size
    shifts = [(n - 1 - k, n - 1 - g(k)) for k in range(n)]
    for b in range(size):
        c = 0
        for src, dst in shifts:
            if (b >> src) & 1:
                c |= 1 << dst
        image[b] = c
    return Perm(image)
