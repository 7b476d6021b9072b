"""Shared fixtures and independent oracles for the test suite.

Oracles here deliberately avoid the code paths they check: the nested-loop
reference search uses matrix commutation instead of the color-table engine,
subspace questions are answered by generic rational elimination, and group
facts are recomputed by brute force over all pairs.
"""

from fractions import Fraction
from math import gcd

from permsym import ExactMatrix, GaussRational, Perm, PolyScalar, parse
from permsym.scalars import Monomial


# -- random generators (seeded by the caller) ------------------------------

PARAM_NAMES = ("a", "b", "t", "u")


def rand_gauss(rng, span=3):
    re = Fraction(rng.randint(-span, span), rng.randint(1, 3))
    im = Fraction(rng.randint(-span, span), rng.randint(1, 3))
    return GaussRational(re, im if rng.random() < 0.4 else 0)


def rand_monomial(rng, names=PARAM_NAMES, max_degree=3):
    degree = rng.randint(0, max_degree)
    factors = {}
    for _ in range(degree):
        name = rng.choice(names)
        factors[name] = factors.get(name, 0) + 1
    return Monomial(sorted(factors.items()))


def rand_scalar(rng, names=PARAM_NAMES, max_terms=4, max_degree=3):
    n_terms = rng.randint(0, max_terms)
    return PolyScalar(
        [(rand_monomial(rng, names, max_degree), rand_gauss(rng)) for _ in range(n_terms)]
    )


def rand_matrix(rng, n, pool):
    return ExactMatrix(n, n, [rng.choice(pool) for _ in range(n * n)])


def rand_symmetric(rng, n, pool):
    entries = [[None] * n for _ in range(n)]
    for r in range(n):
        for c in range(r, n):
            x = rng.choice(pool)
            entries[r][c] = x
            entries[c][r] = x
    return ExactMatrix.from_rows(entries)


def small_entry_pool():
    """Entry values drawn from a deliberately small set so collisions happen."""
    return [parse(s) for s in ("0", "0", "1", "t", "t", "u", "-t")]


# -- reference search: direct transcription of the nested-loop algorithm ----


def reference_search(h):
    """All permutation symmetries of h, found by the plain nested-loop scan.

    Tests the full matrix commutation P @ H == H @ P at every complete
    permutation.  Returns (list of image tuples in visit order, number of
    candidate values tried).  Exponential; use on small matrices only.
    """
    n = h.rows
    j = [-1] * n
    found = []
    trials = 0
    i = 0
    while i >= 0:
        j[i] += 1
        if j[i] == n:
            j[i] = -1
            i -= 1
            continue
        trials += 1
        if any(j[k] == j[i] for k in range(i)):
            continue
        i += 1
        if i == n:
            p = Perm(j)
            pm = p.to_matrix()
            if pm @ h == h @ pm:
                found.append(tuple(j))
            i -= 1
    return found, trials


# -- exact kernel of a parametric matrix on constant vectors ----------------


def _rref(rows):
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


def constant_kernel_basis(m):
    """Basis of {constant rational v : M v = 0} for a parametric matrix M.

    M v = 0 for a constant vector iff the coefficient matrix of every
    monomial annihilates v, so the kernel is computed by stacking those
    rational matrices and eliminating exactly.
    """
    stacked = []
    for r in range(m.rows):
        per_mono = {}
        for c in range(m.cols):
            for mono, coeff in m[r, c].terms():
                key_re, key_im = per_mono.setdefault(
                    mono, ([Fraction(0)] * m.cols, [Fraction(0)] * m.cols)
                )
                key_re[c] = coeff.re
                key_im[c] = coeff.im
        for re, im in per_mono.values():
            if any(re):
                stacked.append(re)
            if any(im):
                stacked.append(im)
    if not stacked:
        return [
            tuple(1 if k == c else 0 for k in range(m.cols)) for c in range(m.cols)
        ]
    pivots = _rref(stacked)
    rank = len(pivots)
    stacked = stacked[:rank]
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -stacked[r][f]
        denom = 1
        for x in v:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        basis.append(tuple(int(x * denom) for x in v))
    return basis


# -- brute-force group oracles ----------------------------------------------


def conjugacy_classes_bruteforce(perms):
    """Partition a list of Perms into conjugacy classes by trying all pairs."""
    perms = list(perms)
    remaining = set(perms)
    classes = []
    for g in perms:
        if g not in remaining:
            continue
        cls = {x * g * x.inverse() for x in perms}
        remaining -= cls
        classes.append(frozenset(cls))
    return classes


def closure_bruteforce(perms):
    """Closure under composition via repeated all-pairs products."""
    current = set(perms)
    while True:
        nxt = set(current)
        nxt.update(p.inverse() for p in current)
        nxt.update(p * q for p in current for q in current)
        if nxt == current:
            return current
        current = nxt


# -- independent term-merge addition oracle ---------------------------------


def oracle_add(a, b):
    """Polynomial addition recomputed by sorting and grouping term lists."""
    merged = sorted(
        list(a.terms()) + list(b.terms()), key=lambda item: item[0].factors
    )
    out = []
    k = 0
    while k < len(merged):
        mono = merged[k][0]
        coeff = merged[k][1]
        k += 1
        while k < len(merged) and merged[k][0] == mono:
            coeff = coeff + merged[k][1]
            k += 1
        if coeff:
            out.append((mono, coeff))
    return PolyScalar(out)


# -- fixtures shared with the acceptance suite -------------------------------

# 16x16 transverse-field Ising chain on a 4-site ring, entries as printed
ISING4_ROWS = [
    "4*a b b 0 b 0 0 0 b 0 0 0 0 0 0 0",
    "b 0 0 b 0 b 0 0 0 b 0 0 0 0 0 0",
    "b 0 0 b 0 0 b 0 0 0 b 0 0 0 0 0",
    "0 b b 0 0 0 0 b 0 0 0 b 0 0 0 0",
    "b 0 0 0 0 b b 0 0 0 0 0 b 0 0 0",
    "0 b 0 0 b -4*a 0 b 0 0 0 0 0 b 0 0",
    "0 0 b 0 b 0 0 b 0 0 0 0 0 0 b 0",
    "0 0 0 b 0 b b 0 0 0 0 0 0 0 0 b",
    "b 0 0 0 0 0 0 0 0 b b 0 b 0 0 0",
    "0 b 0 0 0 0 0 0 b 0 0 b 0 b 0 0",
    "0 0 b 0 0 0 0 0 b 0 -4*a b 0 0 b 0",
    "0 0 0 b 0 0 0 0 0 b b 0 0 0 0 b",
    "0 0 0 0 b 0 0 0 b 0 0 0 0 b b 0",
    "0 0 0 0 0 b 0 0 0 b 0 0 b 0 0 b",
    "0 0 0 0 0 0 b 0 0 0 b 0 b 0 0 b",
    "0 0 0 0 0 0 0 b 0 0 0 b 0 b b 4*a",
]


def ising4_printed():
    return ExactMatrix.from_rows([row.split() for row in ISING4_ROWS])


# the eight site maps of the 4-site ring's square symmetry, 0-based images
SITE_MAPS = {
    "E": (0, 1, 2, 3),
    "C2": (2, 3, 0, 1),
    "C4": (1, 2, 3, 0),
    "C4^3": (3, 0, 1, 2),
    "sigma_v": (1, 0, 3, 2),
    "sigma_v'": (3, 2, 1, 0),
    "sigma_d": (0, 3, 2, 1),
    "sigma_d'": (2, 1, 0, 3),
}
