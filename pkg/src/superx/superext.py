"""The extended product on maximal linked systems over a finite group.

For families A, B on a group X the product is

    A o B = {C subset X : {x in X : x^-1 C in B} in A},

which restricted to one-point systems is the group operation itself.
Cayley tables for the full system space are built bit-parallel: each
system is a membership bitmap over all 2^n subsets, the witness sets
{x : x^-1 C in B} are assembled for all systems at once with numpy,
and products are resolved back to element indices by binary search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import CapacityError, ConsistencyError
from .families import (
    MaximalLinkedSystem,
    SetFamily,
    enumerate_mls,
    family_from_bitmap,
)
from .groups import FiniteGroup, inverse_translate_set
from .semigroups import SemigroupTable

MAX_TABLE_GROUND = 7
_ROW_CHUNK = 256
_BITMAP_GROUND_LIMIT = 10


def circ(g: FiniteGroup, fam_a: SetFamily, fam_b: SetFamily) -> SetFamily:
    """The product family, membership decided for every candidate set."""
    n = g.order
    if fam_a.ground_size != n or fam_b.ground_size != n:
        raise ConsistencyError("families must live on the group's ground set")
    members = 0
    if n <= _BITMAP_GROUND_LIMIT:
        bm_a, bm_b = fam_a.bitmap, fam_b.bitmap
        tabs = _translate_tables(g)
        for cand in range(1, 1 << n):
            witness = 0
            for x in g.elements():
                witness |= (bm_b >> tabs[x][cand] & 1) << x
            if bm_a >> witness & 1:
                members |= 1 << cand
    else:
        for cand in range(1, 1 << n):
            witness = 0
            for x in g.elements():
                if fam_b.contains(inverse_translate_set(g, x, cand)):
                    witness |= 1 << x
            if witness and fam_a.contains(witness):
                members |= 1 << cand
    if not members:
        raise ConsistencyError("product family is empty")
    return family_from_bitmap(n, members)


def circ_mls(
    g: FiniteGroup, a: MaximalLinkedSystem, b: MaximalLinkedSystem
) -> MaximalLinkedSystem:
    return MaximalLinkedSystem.from_family(circ(g, a.family, b.family))


@lru_cache(maxsize=32)
def _translate_tables(g: FiniteGroup) -> list[list[int]]:
    """tab[x][c] = mask of x^-1 c for every subset c."""
    n = g.order
    size = 1 << n
    tabs = []
    for x in g.elements():
        xi = g.inverse(x)
        row = g.mul[xi]
        single = [1 << row[a] for a in range(n)]
        tab = [0] * size
        for c in range(1, size):
            low = c & -c
            tab[c] = tab[c ^ low] | single[low.bit_length() - 1]
        tabs.append(tab)
    return tabs


def lambda_elements(g: FiniteGroup, *, allow_large: bool = False) -> list[MaximalLinkedSystem]:
    """The canonical element list of the system space over g."""
    return enumerate_mls(g.order, allow_large=allow_large)


def build_lambda_table(
    g: FiniteGroup,
    *,
    allow_large: bool = False,
    systems: list[MaximalLinkedSystem] | None = None,
) -> SemigroupTable:
    """Cayley table of the extended product over all systems on g.

    Supported up to |G| = 6 (7 behind allow_large, which is far beyond
    desk scale for the full table).  Every product is checked to land
    back in the enumerated element set.
    """
    n = g.order
    if n > MAX_TABLE_GROUND or (n == 7 and not allow_large):
        raise CapacityError("lambda tables are supported for |G| <= 6 (7 behind allow_large)")
    if systems is None:
        systems = lambda_elements(g, allow_large=allow_large)
    size = 1 << n
    bitmaps = [s.family.bitmap for s in systems]
    m = len(systems)
    b = np.array(bitmaps, dtype=np.uint64)
    tabs = _translate_tables(g)
    one = np.uint64(1)

    # witness[c, j] = {x : x^-1 c in system j} for every candidate subset c
    witness = np.zeros((size, m), dtype=np.uint64)
    for c in range(1, size):
        acc = np.zeros(m, dtype=np.uint64)
        for x in range(n):
            acc |= ((b >> np.uint64(tabs[x][c])) & one) << np.uint64(x)
        witness[c] = acc

    sort_idx = np.argsort(b)
    sorted_b = b[sort_idx]
    product = np.empty((m, m), dtype=np.int32)
    for start in range(0, m, _ROW_CHUNK):
        stop = min(start + _ROW_CHUNK, m)
        rows = b[start:stop, None]  # (r, 1)
        result = np.zeros((stop - start, m), dtype=np.uint64)
        for c in range(1, size):
            result |= ((rows >> witness[c][None, :]) & one) << np.uint64(c)
        pos = np.searchsorted(sorted_b, result)
        if pos.max() >= m or not np.array_equal(sorted_b[pos], result):
            raise ConsistencyError("a product left the enumerated system space")
        product[start:stop] = sort_idx[pos]

    labels = [s.serialize() for s in systems]
    return SemigroupTable(product, elements=list(systems), labels=labels, name=f"lambda({g.name})")


def principal_indices(g: FiniteGroup, systems: list[MaximalLinkedSystem]) -> list[int]:
    """Indices of the one-point systems, in group-element order."""
    index = {s.minimal_sets: i for i, s in enumerate(systems)}
    return [index[(1 << x,)] for x in g.elements()]


def shift_orbits(
    g: FiniteGroup, systems: list[MaximalLinkedSystem]
) -> tuple[list[int], list[list[int]]]:
    """Orbits of the left-translation action on the given systems.

    Returns (orbit_of, orbits); orbits are sorted by least element and
    each orbit lists its member indices ascending.
    """
    index = {s.minimal_sets: i for i, s in enumerate(systems)}
    orbit_of = [-1] * len(systems)
    orbits: list[list[int]] = []
    for i, system in enumerate(systems):
        if orbit_of[i] >= 0:
            continue
        members = set()
        for x in g.elements():
            shifted = system.family.shift(g, x)
            j = index.get(shifted.minimal_sets)
            if j is None:
                raise ConsistencyError("translation left the system list")
            members.add(j)
        oid = len(orbits)
        orbits.append(sorted(members))
        for j in members:
            orbit_of[j] = oid
    return orbit_of, orbits


@dataclass
class OrbitQuotient:
    """Orbit decomposition of a lambda table under the group action."""

    orbit_of: list[int]
    orbits: list[list[int]]
    group_is_central: bool
    product: np.ndarray | None

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)

    @property
    def orbit_reps(self) -> list[int]:
        return [members[0] for members in self.orbits]


def orbit_quotient(g: FiniteGroup, table: SemigroupTable) -> OrbitQuotient:
    """Quotient of a lambda table by the translation action.

    The quotient product is only defined when the one-point systems are
    central; it is then validated over all representative pairs.
    """
    systems = table.elements
    orbit_of, orbits = shift_orbits(g, systems)
    p = table.product
    central = all(
        np.array_equal(p[i, :], p[:, i]) for i in principal_indices(g, systems)
    )
    quotient = None
    if central:
        oa = np.array(orbit_of, dtype=np.int32)
        mapped = oa[p]
        k = len(orbits)
        quotient = np.empty((k, k), dtype=np.int32)
        for qa, members_a in enumerate(orbits):
            for qb, members_b in enumerate(orbits):
                cells = mapped[np.ix_(members_a, members_b)]
                val = int(cells[0, 0])
                if not np.all(cells == val):
                    raise ConsistencyError("orbit product is not well-defined")
                quotient[qa, qb] = val
    return OrbitQuotient(orbit_of, orbits, central, quotient)


def quotient_table(q: OrbitQuotient) -> SemigroupTable:
    if q.product is None:
        raise ConsistencyError("quotient product is not defined (group not central)")
    return SemigroupTable(q.product, elements=q.orbit_reps, name="orbit-quotient")


def transversal_subsemigroup_search(
    g: FiniteGroup, table: SemigroupTable
) -> list[int] | None:
    """A subsemigroup meeting every orbit exactly once, or None.

    Depth-first over orbits in size order; each selection propagates
    closure under products, and two selections colliding on one orbit
    prune the branch.  Candidates are tried in ascending element order,
    so a found transversal is deterministic.
    """
    systems = table.elements
    orbit_of, orbits = shift_orbits(g, systems)
    p = table.product
    order = sorted(range(len(orbits)), key=lambda o: (len(orbits[o]), orbits[o][0]))
    chosen: dict[int, int] = {}

    def propagate(fresh: list[int], trail: list[int]) -> bool:
        while fresh:
            a = fresh.pop()
            for b in list(chosen.values()):
                for prod in (int(p[a, b]), int(p[b, a]), int(p[a, a])):
                    o = orbit_of[prod]
                    if o in chosen:
                        if chosen[o] != prod:
                            return False
                    else:
                        chosen[o] = prod
                        trail.append(o)
                        fresh.append(prod)
        return True

    def search(i: int) -> bool:
        while i < len(order) and order[i] in chosen:
            i += 1
        if i == len(order):
            return True
        oid = order[i]
        for cand in orbits[oid]:
            trail = [oid]
            chosen[oid] = cand
            if propagate([cand], trail) and search(i + 1):
                return True
            for o in trail:
                del chosen[o]
        return False

    if search(0):
        picks = sorted(chosen.values())
        members = set(picks)
        if any(int(p[a, b]) not in members for a in picks for b in picks):
            raise ConsistencyError("transversal search returned a non-closed set")
        return picks
    return None


def is_transversal_subsemigroup(
    g: FiniteGroup, table: SemigroupTable, picks: list[int]
) -> bool:
    """Check a candidate: closed under products, one element per orbit."""
    orbit_of, orbits = shift_orbits(g, table.elements)
    if sorted(orbit_of[i] for i in picks) != list(range(len(orbits))):
        return False
    members = set(picks)
    return all(int(table.product[a, b]) in members for a in picks for b in picks)


def right_zero_systems(
    g: FiniteGroup, systems: list[MaximalLinkedSystem]
) -> list[int]:
    """Indices of systems z with x o z = z for every system x.

    Works directly from the product definition with early exit, so it
    does not need the full Cayley table.  Non-identity one-point systems
    are tried first; they disqualify most candidates after one product.
    """
    principals = principal_indices(g, systems)
    identity_idx = principals[0]
    probe_order = [i for i in principals if i != identity_idx]
    probe_order += [i for i in range(len(systems)) if i not in set(principals)]
    probe_order.append(identity_idx)
    out = []
    for j, z in enumerate(systems):
        ok = True
        for i in probe_order:
            if circ(g, systems[i].family, z.family) != z.family:
                ok = False
                break
        if ok:
            out.append(j)
    return out
