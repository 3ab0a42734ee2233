"""Finite semigroups as index tables, with structure analyses.

A SemigroupTable is an element list plus an n x n product table of
element indices.  Associativity is verified exhaustively up to order
100 and on sampled triples above that.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError, ConsistencyError
from .groups import FiniteGroup

ASSOC_EXHAUSTIVE_LIMIT = 100
ASSOC_SAMPLES = 10_000
ISO_ORDER_LIMIT = 16


@dataclass(eq=False)
class SemigroupTable:
    product: np.ndarray
    elements: list = field(default_factory=list)
    labels: list[str] | None = None
    name: str = ""

    def __post_init__(self):
        p = np.asarray(self.product, dtype=np.int32)
        if p.ndim != 2 or p.shape[0] != p.shape[1]:
            raise ConsistencyError("product table must be square")
        n = p.shape[0]
        if n and (p.min() < 0 or p.max() >= n):
            raise ConsistencyError("product table index out of range")
        self.product = p
        if not self.elements:
            self.elements = list(range(n))
        if len(self.elements) != n:
            raise ConsistencyError("element list does not match the table size")
        if self.labels is not None and len(self.labels) != n:
            raise ConsistencyError("label list does not match the table size")
        self._check_associative()

    @property
    def order(self) -> int:
        return int(self.product.shape[0])

    def mul(self, a: int, b: int) -> int:
        return int(self.product[a, b])

    def label(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        return str(self.elements[i])

    def _check_associative(self) -> None:
        p = self.product
        n = self.order
        if n == 0:
            return
        if n <= ASSOC_EXHAUSTIVE_LIMIT:
            # left[a,b,c] = p[p[a,b],c], right[a,b,c] = p[a,p[b,c]]
            if not np.array_equal(p[p, :], p[:, p]):
                raise ConsistencyError(f"{self.name or 'semigroup'}: product is not associative")
        else:
            rng = random.Random(0xA55)
            for _ in range(ASSOC_SAMPLES):
                a, b, c = (rng.randrange(n) for _ in range(3))
                if p[p[a, b], c] != p[a, p[b, c]]:
                    raise ConsistencyError(f"{self.name or 'semigroup'}: product is not associative")


def from_group(g: FiniteGroup) -> SemigroupTable:
    return SemigroupTable(
        np.array(g.mul, dtype=np.int32),
        elements=list(g.elements()),
        labels=list(g.element_names),
        name=g.name,
    )


def idempotents(t: SemigroupTable) -> list[int]:
    return [i for i in range(t.order) if t.product[i, i] == i]


def right_zeros(t: SemigroupTable) -> list[int]:
    """All z with x*z = z for every x (columns constant at z)."""
    p = t.product
    return [z for z in range(t.order) if np.all(p[:, z] == z)]


def left_zeros(t: SemigroupTable) -> list[int]:
    p = t.product
    return [z for z in range(t.order) if np.all(p[z, :] == z)]


def zero(t: SemigroupTable) -> int | None:
    """The two-sided zero, if one exists (unique when present)."""
    both = set(right_zeros(t)) & set(left_zeros(t))
    if not both:
        return None
    if len(both) > 1:
        raise ConsistencyError("more than one two-sided zero")
    return both.pop()


def is_commutative(t: SemigroupTable) -> tuple[bool, tuple[int, int] | None]:
    """Symmetry of the table, with the least witness pair on failure."""
    p = t.product
    if np.array_equal(p, p.T):
        return True, None
    diff = np.argwhere(p != p.T)
    i, j = min((int(a), int(b)) for a, b in diff)
    return False, (i, j)


def central_elements(t: SemigroupTable) -> list[int]:
    p = t.product
    return [c for c in range(t.order) if np.array_equal(p[c, :], p[:, c])]


def sqrt_of_idempotents(t: SemigroupTable) -> list[int]:
    """All x whose square is idempotent, i.e. x^4 = x^2."""
    p = t.product
    out = []
    for x in range(t.order):
        sq = p[x, x]
        if p[sq, sq] == sq:
            out.append(x)
    return out


def principal_ideal(t: SemigroupTable, a: int) -> frozenset[int]:
    """The least two-sided ideal containing a, by reachability closure."""
    p = t.product
    member = np.zeros(t.order, dtype=bool)
    member[a] = True
    frontier = np.array([a], dtype=np.int32)
    while frontier.size:
        reached = np.concatenate([p[:, frontier].ravel(), p[frontier, :].ravel()])
        fresh = np.unique(reached[~member[reached]])
        member[fresh] = True
        frontier = fresh
    return frozenset(int(i) for i in np.flatnonzero(member))


def minimal_ideal(t: SemigroupTable) -> frozenset[int]:
    """The unique minimal two-sided ideal.

    Small tables follow the direct route: compute every principal ideal
    and assert the inclusion-minimal one is unique.  Larger tables walk
    a strictly descending chain of principal ideals instead, then check
    that every member regenerates the same ideal, which forces it to be
    the minimum (any smaller ideal would regenerate a smaller one).
    """
    if t.order <= ASSOC_EXHAUSTIVE_LIMIT:
        ideals = {principal_ideal(t, a) for a in range(t.order)}
        minimal = [i for i in ideals if not any(j < i for j in ideals)]
        if len(minimal) != 1:
            raise ConsistencyError("minimal ideal is not unique")
        return minimal[0]
    current = principal_ideal(t, 0)
    settled = False
    while not settled:
        settled = True
        for k in current:
            regenerated = principal_ideal(t, k)
            if regenerated != current:
                if not regenerated < current:
                    raise ConsistencyError("principal ideal escaped its generator's ideal")
                current = regenerated
                settled = False
                break
    return current


def subtable(t: SemigroupTable, indices) -> SemigroupTable:
    """The induced table on a product-closed subset of elements."""
    order = sorted(indices)
    pos = {v: i for i, v in enumerate(order)}
    p = t.product
    prod = np.empty((len(order), len(order)), dtype=np.int32)
    for i, a in enumerate(order):
        for j, b in enumerate(order):
            ab = int(p[a, b])
            if ab not in pos:
                raise ConsistencyError("subset is not closed under products")
            prod[i, j] = pos[ab]
    return SemigroupTable(
        prod,
        elements=[t.elements[v] for v in order],
        labels=[t.label(v) for v in order],
        name=f"{t.name}|sub",
    )


def local_monoid(t: SemigroupTable, e: int) -> list[int]:
    """The set e*S*e, which is a monoid with identity e."""
    p = t.product
    return sorted(int(v) for v in np.unique(p[p[e, :], e]))


def maximal_subgroup_at(t: SemigroupTable, e: int) -> SemigroupTable:
    """The group of invertible elements of the local monoid at idempotent e."""
    p = t.product
    if p[e, e] != e:
        raise ConsistencyError(f"element {e} is not idempotent")
    monoid = np.array(local_monoid(t, e), dtype=np.int32)
    block = p[np.ix_(monoid, monoid)]
    invertible = (block == e) & (block.T == e)
    units = [int(monoid[i]) for i in np.flatnonzero(invertible.any(axis=1))]
    pos = {u: i for i, u in enumerate(units)}
    prod = np.array([[pos[int(p[a, b])] for b in units] for a in units], dtype=np.int32)
    return SemigroupTable(
        prod,
        elements=[t.elements[u] for u in units],
        labels=[t.label(u) for u in units],
        name=f"{t.name}|H({e})",
    )


def adjoin_zero(t: SemigroupTable) -> SemigroupTable:
    """Add one absorbing element at index n."""
    n = t.order
    prod = np.full((n + 1, n + 1), n, dtype=np.int32)
    prod[:n, :n] = t.product
    return SemigroupTable(
        prod,
        elements=list(t.elements) + ["0*"],
        labels=(list(t.labels) + ["0*"]) if t.labels is not None else None,
        name=f"{t.name}+zero",
    )


def adjoin_identity(t: SemigroupTable) -> SemigroupTable:
    """Add one external two-sided unit at index n."""
    n = t.order
    prod = np.zeros((n + 1, n + 1), dtype=np.int32)
    prod[:n, :n] = t.product
    prod[n, :] = np.arange(n + 1)
    prod[:, n] = np.arange(n + 1)
    return SemigroupTable(
        prod,
        elements=list(t.elements) + ["1*"],
        labels=(list(t.labels) + ["1*"]) if t.labels is not None else None,
        name=f"{t.name}+unit",
    )


def direct_product(t1: SemigroupTable, t2: SemigroupTable) -> SemigroupTable:
    n1, n2 = t1.order, t2.order
    prod = np.zeros((n1 * n2, n1 * n2), dtype=np.int32)
    for a in range(n1):
        for b in range(n2):
            for c in range(n1):
                for d in range(n2):
                    prod[a * n2 + b, c * n2 + d] = t1.product[a, c] * n2 + t2.product[b, d]
    labels = [f"({t1.label(a)},{t2.label(b)})" for a in range(n1) for b in range(n2)]
    return SemigroupTable(prod, elements=labels, labels=labels, name=f"{t1.name}x{t2.name}")


def _refine_colors(t: SemigroupTable) -> list[int]:
    """Iterated invariant refinement; isomorphic elements share colors."""
    p = t.product
    n = t.order
    colors = [1 if p[x, x] == x else 0 for x in range(n)]
    for _ in range(n):
        sigs = []
        for x in range(n):
            row = sorted((colors[y], colors[int(p[x, y])], colors[int(p[y, x])]) for y in range(n))
            sigs.append((colors[x], tuple(row)))
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if new == colors:
            break
        colors = new
    return colors


def find_isomorphism(t1: SemigroupTable, t2: SemigroupTable) -> list[int] | None:
    """A product-preserving bijection t1 -> t2, or None if none exists.

    Backtracking over elements grouped by refined invariant colors; the
    final candidate map is verified on the full tables.
    """
    n = t1.order
    if n != t2.order:
        return None
    if n > ISO_ORDER_LIMIT:
        raise CapacityError(f"isomorphism search is limited to order {ISO_ORDER_LIMIT}")
    if n == 0:
        return []
    c1 = _refine_colors(t1)
    c2 = _refine_colors(t2)
    if sorted(c1) != sorted(c2):
        return None
    by_color: dict[int, list[int]] = {}
    for y, c in enumerate(c2):
        by_color.setdefault(c, []).append(y)
    order = sorted(range(n), key=lambda x: (len(by_color[c1[x]]), c1[x], x))
    p1, p2 = t1.product, t2.product
    mapping = [-1] * n
    used = [False] * n

    def consistent(x: int, y: int) -> bool:
        for a in range(n):
            fa = mapping[a]
            if fa < 0:
                continue
            img = mapping[int(p1[a, x])]
            if img >= 0 and p2[fa, y] != img:
                return False
            img = mapping[int(p1[x, a])]
            if img >= 0 and p2[y, fa] != img:
                return False
        img = mapping[int(p1[x, x])]
        if img >= 0 and p2[y, y] != img:
            return False
        return True

    def search(i: int) -> bool:
        if i == n:
            return all(
                p2[mapping[a], mapping[b]] == mapping[int(p1[a, b])]
                for a in range(n)
                for b in range(n)
            )
        x = order[i]
        for y in by_color[c1[x]]:
            if used[y] or not consistent(x, y):
                continue
            mapping[x] = y
            used[y] = True
            if search(i + 1):
                return True
            mapping[x] = -1
            used[y] = False
        return False

    if search(0):
        return list(mapping)
    return None
