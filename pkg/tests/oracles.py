"""Independent brute-force oracles the tests compare against.

Everything here recomputes results from first principles with the
dumbest algorithm available, deliberately sharing no code path with the
package implementations.
"""

from __future__ import annotations

from itertools import combinations


def bits_of(mask):
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def oracle_hitting_family(minimal_sets, n):
    """Minimal hitting sets by full scan plus pairwise minimality."""
    hitting = [
        c for c in range(1, 1 << n) if all(c & s for s in minimal_sets)
    ]
    out = []
    for c in hitting:
        if not any(d != c and d & c == d for d in hitting):
            out.append(c)
    return tuple(sorted(out))


def oracle_upward_closure(sets, n):
    members = set()
    for s in sets:
        for t in range(s, 1 << n):
            if t & s == s:
                members.add(t)
    return members


def oracle_minimal_sets(members):
    return tuple(sorted(s for s in members if not any(t != s and t & s == t for t in members)))


def oracle_all_mls(n):
    """Every maximal linked system on n points, by filtering all antichains.

    Enumerates all subsets of the non-empty subsets, keeps antichains,
    and keeps those whose upward closure equals its hitting family.
    """
    subsets = list(range(1, 1 << n))
    found = []
    for picks in range(1, 1 << len(subsets)):
        chosen = [subsets[i] for i in range(len(subsets)) if picks >> i & 1]
        if any(
            a != b and a & b == a for a in chosen for b in chosen
        ):
            continue
        if oracle_hitting_family(chosen, n) == tuple(sorted(chosen)):
            found.append(tuple(sorted(chosen)))
    return sorted(found)


def oracle_subgroups(mul):
    """All subgroups by scanning every subset containing the identity."""
    n = len(mul)
    out = []
    for mask in range(1, 1 << n):
        if not mask & 1:
            continue
        elems = bits_of(mask)
        if all(mask >> mul[a][b] & 1 for a in elems for b in elems):
            out.append(mask)
    return sorted(out, key=lambda m: (bin(m).count("1"), m))


def oracle_element_order(mul, x):
    k, y = 1, x
    while y != 0:
        y = mul[y][x]
        k += 1
    return k


def oracle_translate(mul, x, mask):
    return sum(1 << mul[x][a] for a in bits_of(mask))


def oracle_shift_closed_maximal_linked_families(g):
    """Maximal invariant linked families by scanning orbit unions.

    Only feasible for tiny groups: every shift-closed monotone family is
    a union of upward-closed shift orbits, so scan all orbit subsets.
    """
    n = g.order
    full = (1 << n) - 1
    orbit_of = {}
    orbits = []
    for s in range(1, full + 1):
        if s in orbit_of:
            continue
        orbit = {oracle_translate(g.mul, x, s) for x in range(n)}
        for m in orbit:
            orbit_of[m] = len(orbits)
        orbits.append(sorted(orbit))

    def family_members(picks):
        base = set()
        for i in picks:
            base.update(orbits[i])
        return oracle_upward_closure(base, n)

    def linked(members):
        return all(a & b for a in members for b in members)

    candidates = []
    for picks in range(1, 1 << len(orbits)):
        chosen = frozenset(i for i in range(len(orbits)) if picks >> i & 1)
        members = family_members(chosen)
        if linked(members):
            candidates.append(frozenset(members))
    maximal = [
        m for m in candidates if not any(o != m and o > m for o in candidates)
    ]
    return sorted({oracle_minimal_sets(m) for m in maximal})


def oracle_self_linked(mul, mask):
    n = len(mul)
    for x in range(n):
        if not mask & oracle_translate(mul, x, mask):
            return False
    return True


def oracle_smallest_self_linked(mul):
    n = len(mul)
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            if oracle_self_linked(mul, sum(1 << c for c in combo)):
                return k
    raise AssertionError("whole group is always self-linked")
