"""Group structure of a set of permutations: closure verification,
multiplication table, element orders, conjugacy classes and generators.
"""

from __future__ import annotations

from collections import deque

from .perms import Perm


class GroupError(ValueError):
    """Raised when a set of permutations fails a group axiom.

    ``witness`` holds the offending element or pair, when there is one.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SymmetryGroup:
    """A verified permutation group: ordered elements plus multiplication table.

    ``elements[0]`` is the identity; ``table[a][b]`` is the index of
    ``elements[a] * elements[b]``.
    """

    __slots__ = ("elements", "table", "_index")

    def __init__(self, elements, table):
        object.__setattr__(self, "elements", tuple(elements))
        object.__setattr__(self, "table", tuple(tuple(row) for row in table))
        object.__setattr__(self, "_index", {p: k for k, p in enumerate(self.elements)})

    def __setattr__(self, name, value):
        raise AttributeError("SymmetryGroup is immutable")

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def index_of(self, p):
        return self._index[p]

    def __contains__(self, p):
        return p in self._index

    def inverse_index(self, a):
        row = self.table[a]
        return row.index(0)


def verify_closure(elements):
    """Check the group axioms and return the SymmetryGroup.

    The input order is preserved (identity moved to the front if needed);
    raises GroupError naming the first witness of a failed axiom.
    """
    elements = list(elements)
    if not elements:
        raise GroupError("empty set has no identity")
    n = len(elements[0])
    if any(len(p) != n for p in elements):
        raise GroupError("elements act on different index sets")
    if len(set(elements)) != len(elements):
        raise GroupError("duplicate elements")

    ident = Perm.identity(n)
    if ident not in set(elements):
        raise GroupError("missing identity", witness=ident)
    elements.remove(ident)
    elements.insert(0, ident)

    index = {p: k for k, p in enumerate(elements)}
    table = []
    for a, p in enumerate(elements):
        row = []
        for b, q in enumerate(elements):
            prod = p * q
            k = index.get(prod)
            if k is None:
                raise GroupError(
                    f"not closed: element {a} * element {b} = {prod} is outside the set",
                    witness=(p, q),
                )
            row.append(k)
        table.append(row)
    # a finite set closed under composition always contains its inverses,
    # but keep the explicit check as a guard
    for p in elements:
        if p.inverse() not in index:
            raise GroupError(f"missing inverse of {p}", witness=p)
    return SymmetryGroup(elements, table)


def is_commutative(group):
    t = group.table
    m = len(t)
    return all(t[a][b] == t[b][a] for a in range(m) for b in range(a + 1, m))


def element_orders(group):
    """(index, order) for every element, in element order."""
    return [(k, p.order()) for k, p in enumerate(group.elements)]


def involutions(group):
    """Elements of order exactly 2."""
    return [p for p in group.elements if p.order() == 2]


def conjugacy_classes(group):
    """Partition of element indices under conjugation, classes by least member."""
    m = group.order
    t = group.table
    inv = [group.inverse_index(a) for a in range(m)]
    unassigned = set(range(m))
    classes = []
    for g in range(m):
        if g not in unassigned:
            continue
        cls = {t[t[x][g]][inv[x]] for x in range(m)}
        unassigned -= cls
        classes.append(tuple(sorted(cls)))
    return classes


def generate_from(generators):
    """Closure of the generators under composition, as a SymmetryGroup.

    Breadth-first product saturation; the identity is always included and
    elements are ordered lexicographically.
    """
    generators = list(generators)
    if not generators:
        raise GroupError("need at least one generator")
    n = len(generators[0])
    if any(len(p) != n for p in generators):
        raise GroupError("generators act on different index sets")
    ident = Perm.identity(n)
    seen = {ident}
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for g in generators:
            q = p * g
            if q not in seen:
                seen.add(q)
                queue.append(q)
    # finite closure under products of generators contains all inverses
    return verify_closure(sorted(seen))


def generating_set(group):
    """A small (greedy, not necessarily minimal) generating subset.

    Scans elements in order and keeps each one not generated by the
    elements kept so far; the trivial group yields an empty list.
    """
    gens = []
    generated = {group.elements[0]}
    for p in group.elements[1:]:
        if p in generated:
            continue
        gens.append(p)
        generated = set(generate_from(gens).elements)
        if len(generated) == group.order:
            break
    return gens
