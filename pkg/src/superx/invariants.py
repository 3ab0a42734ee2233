"""Self-linked subsets and maximal invariant linked systems.

A subset A of a group G is self-linked when A meets every translate xA,
equivalently AA^-1 = G.  Invariant linked families are exactly the
upward closures of cliques in the compatibility graph on self-linked
subsets (A compatible with B iff AB^-1 = G): compatibility is preserved
by shifts and supersets, so maximal cliques are shift- and
superset-closed and correspond one-to-one to the maximal invariant
linked systems.  Both facts are asserted on every enumerated clique.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bitsets import iter_bits, mask_of, subsets_of_size
from .errors import CapacityError, ConsistencyError
from .families import SetFamily, generate_family, majority_family
from .groups import (
    FiniteGroup,
    difference_set,
    enumerate_subgroups,
    is_odd_group,
    subgroup_as_group,
    translate_set,
)

MAX_INVARIANT_ORDER = 8
MAX_INVARIANT_ORDER_LARGE = 10


def is_self_linked(g: FiniteGroup, mask: int) -> bool:
    """True iff the difference set AA^-1 covers the whole group."""
    if mask == 0:
        raise ConsistencyError("the empty set is not self-linked")
    return difference_set(g, mask, mask) == g.full_mask


def sl_lower_bound(n: int) -> int:
    """Smallest k with k^2 - k + 1 >= n (exact integer arithmetic)."""
    k = 1
    while k * k - k + 1 < n:
        k += 1
    return k


def sl(g: FiniteGroup) -> int:
    """Smallest size of a self-linked subset.

    Self-linkedness is shift-invariant, so the search only scans subsets
    containing the identity, from the lower bound upward.
    """
    n = g.order
    full = g.full_mask
    for k in range(sl_lower_bound(n), n + 1):
        for rest in combinations(range(1, n), k - 1):
            mask = 1 | mask_of(rest)
            if difference_set(g, mask, mask) == full:
                return k
    raise ConsistencyError("no self-linked subset found (the full group always is)")


def self_linked_subsets(g: FiniteGroup) -> list[int]:
    """All non-empty self-linked subsets, ascending by mask."""
    full = g.full_mask
    return [m for m in range(1, full + 1) if difference_set(g, m, m) == full]


@dataclass(frozen=True)
class SlBoundReport:
    """Composite bound check for a subgroup H of G."""

    sl_group: int
    sl_subgroup: int
    sl_coset_space: int
    subgroup_order: int
    index: int

    @property
    def product_bound(self) -> int:
        return self.sl_subgroup * self.sl_coset_space

    @property
    def sum_bound(self) -> int:
        return self.subgroup_order + self.index

    @property
    def product_bound_holds(self) -> bool:
        return self.sl_group <= self.product_bound

    @property
    def sum_bound_holds(self) -> bool:
        return self.sl_group < self.sum_bound

    @property
    def coset_half_bound_holds(self) -> bool:
        return self.sl_coset_space <= (self.index + 1 + 1) // 2


def coset_space_sl(g: FiniteGroup, h_mask: int) -> int:
    """Smallest self-linked subset of the coset space G/H.

    A subset of cosets is self-linked when it meets each of its
    translates under the action g.(xH) = (gx)H.
    """
    cosets = []
    seen = 0
    for x in g.elements():
        if seen >> x & 1:
            continue
        coset = translate_set(g, x, h_mask)
        cosets.append(coset)
        seen |= coset
    index = {c: i for i, c in enumerate(cosets)}
    m = len(cosets)
    action = [[index[translate_set(g, x, c)] for c in cosets] for x in g.elements()]
    for k in range(1, m + 1):
        for combo in combinations(range(m), k):
            picked = set(combo)
            if all(any(row[c] in picked for c in combo) for row in action):
                return k
    raise ConsistencyError("coset space has no self-linked subset")


def check_slbound_composite(g: FiniteGroup, h_mask: int) -> SlBoundReport:
    """Evaluate the subgroup bounds on sl numerically."""
    if h_mask not in enumerate_subgroups(g):
        raise ConsistencyError("mask is not a subgroup")
    h_group = subgroup_as_group(g, h_mask)
    h_order = h_mask.bit_count()
    report = SlBoundReport(
        sl_group=sl(g),
        sl_subgroup=sl(h_group),
        sl_coset_space=coset_space_sl(g, h_mask),
        subgroup_order=h_order,
        index=g.order // h_order,
    )
    if not (report.product_bound_holds and report.sum_bound_holds and report.coset_half_bound_holds):
        raise ConsistencyError("a subgroup bound failed numerically")
    return report


def enumerate_half_self_linked(g: FiniteGroup) -> list[int]:
    """Self-linked subsets of size exactly |G|/2, ascending (even order)."""
    n = g.order
    if n % 2:
        raise ConsistencyError("half-size self-linked sets need an even group order")
    full = g.full_mask
    return [m for m in subsets_of_size(n, n // 2) if difference_set(g, m, m) == full]


@dataclass(frozen=True)
class SimClasses:
    """Partition of the half-size self-linked sets.

    Two sets are equivalent when one is a translate of the other or of
    its complement; the class count drives the 2^s invariant-system law.
    """

    classes: tuple[tuple[int, ...], ...]

    @property
    def s(self) -> int:
        return len(self.classes)


def sim_classes(g: FiniteGroup) -> SimClasses:
    sets = enumerate_half_self_linked(g)
    index = {m: i for i, m in enumerate(sets)}
    parent = list(range(len(sets)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj

    full = g.full_mask
    for m in sets:
        comp = full ^ m
        if comp not in index:
            raise ConsistencyError("complement of a half-size self-linked set must be one too")
        for x in g.elements():
            union(index[m], index[translate_set(g, x, m)])
            union(index[m], index[translate_set(g, x, comp)])
    groups: dict[int, list[int]] = {}
    for i, m in enumerate(sets):
        groups.setdefault(find(i), []).append(m)
    classes = tuple(sorted(tuple(sorted(v)) for v in groups.values()))
    return SimClasses(classes)


@dataclass(frozen=True)
class InvariantLinkedSystem:
    """A maximal invariant linked family (not necessarily maximal linked)."""

    family: SetFamily
    group: FiniteGroup

    def is_shift_closed(self) -> bool:
        return all(self.family.shift(self.group, x) == self.family for x in self.group.elements())

    def contains(self, mask: int) -> bool:
        return self.family.contains(mask)


def _compatible(g: FiniteGroup, a: int, b: int) -> bool:
    # A meets every translate of B exactly when AB^-1 = G.
    return difference_set(g, a, b) == g.full_mask


def enumerate_invariant_mls(
    g: FiniteGroup, *, allow_large: bool = False
) -> list[InvariantLinkedSystem]:
    """All maximal invariant linked systems via maximal cliques.

    Vertices are the self-linked subsets, edges join shift-compatible
    pairs, and maximal cliques are enumerated by pivoting backtracking.
    """
    cap = MAX_INVARIANT_ORDER_LARGE if allow_large else MAX_INVARIANT_ORDER
    if g.order > cap:
        raise CapacityError(f"invariant enumeration supports |G| <= {cap}")
    vertices = self_linked_subsets(g)
    nv = len(vertices)
    adj = [0] * nv
    for i, a in enumerate(vertices):
        for j in range(i + 1, nv):
            if _compatible(g, a, vertices[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i

    cliques: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            cliques.append(r)
            return
        pivot_pool = p | x
        pivot = max(iter_bits(pivot_pool), key=lambda u: (p & adj[u]).bit_count())
        for v in iter_bits(p & ~adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, (1 << nv) - 1, 0)

    systems = []
    for clique in cliques:
        members = [vertices[i] for i in iter_bits(clique)]
        member_set = set(members)
        for m in members:
            for x in g.elements():
                if translate_set(g, x, m) not in member_set:
                    raise ConsistencyError("maximal clique is not shift-closed")
            for sup in vertices:
                if sup & m == m and sup not in member_set:
                    raise ConsistencyError("maximal clique is not superset-closed")
        systems.append(InvariantLinkedSystem(generate_family(g.order, members), g))
    systems.sort(key=lambda s: s.family.minimal_sets)
    return systems


def up_majority_count(g: FiniteGroup, systems: list[InvariantLinkedSystem] | None = None) -> int:
    """How many invariant systems contain every majority set; equals 2^s."""
    if g.order % 2:
        raise ConsistencyError("the 2^s law applies to even group orders")
    if systems is None:
        systems = enumerate_invariant_mls(g)
    majority = majority_family(g)
    count = sum(
        1
        for sys_ in systems
        if all(sys_.family.contains(m) for m in majority.minimal_sets)
    )
    if count != 2 ** sim_classes(g).s:
        raise ConsistencyError("invariant-system count above the majority family is not 2^s")
    return count


def partition_condition(g: FiniteGroup) -> tuple[bool, tuple[int, int] | None]:
    """Whether every complementary pair has a side with full difference set.

    Scans the 2^(|G|-1) pairs through the side containing the identity;
    returns the first failing partition as a witness.
    """
    n = g.order
    full = g.full_mask
    for half in range(1 << (n - 1)):
        a = (half << 1) | 1  # the side containing element 0
        b = full ^ a
        if difference_set(g, a, a) == full:
            continue
        if b and difference_set(g, b, b) == full:
            continue
        return False, (a, b)
    return True, None


@dataclass(frozen=True)
class OddEquivalenceReport:
    """Joint evaluation of the odd-order equivalences for one group.

    Fields (1)-(5): right zero exists in the full system semigroup (only
    when a table is supplied), some invariant system is maximal linked,
    all invariant systems are maximal linked, the partition condition,
    and all element orders odd.  They must agree.
    """

    group_name: str
    right_zero_exists: bool | None
    some_invariant_maximal_linked: bool
    all_invariant_maximal_linked: bool
    partition_holds: bool
    odd_group: bool

    @property
    def verdict(self) -> bool:
        return self.odd_group


def odd_equivalence_report(g: FiniteGroup, *, lam_table=None) -> OddEquivalenceReport:
    """Evaluate the equivalent conditions and fail hard on disagreement."""
    from .semigroups import right_zeros  # local import to avoid a cycle

    systems = enumerate_invariant_mls(g)
    flags = [s.family.is_maximal_linked() for s in systems]
    some_ml = any(flags)
    all_ml = bool(flags) and all(flags)
    holds, _ = partition_condition(g)
    odd = is_odd_group(g)
    rz = None
    if lam_table is not None:
        rz = bool(right_zeros(lam_table))
    values = [some_ml, all_ml, holds, odd] + ([] if rz is None else [rz])
    if len(set(values)) != 1:
        raise ConsistencyError(f"{g.name}: odd-order equivalences disagree: {values}")
    return OddEquivalenceReport(g.name, rz, some_ml, all_ml, holds, odd)
