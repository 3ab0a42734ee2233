from __future__ import annotations

import random

import pytest

from superx.bitsets import mask_of, subsets_of_size
from superx.errors import CapacityError, ConsistencyError
from superx.families import (
    MaximalLinkedSystem,
    SetFamily,
    enumerate_mls,
    extend_to_mls,
    generate_family,
    is_invariant_mls,
    majority_family,
    principal_ultrafilter,
    shift_mls,
)
from superx.groups import build_group
from oracles import oracle_all_mls, oracle_hitting_family

MLS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 12, 5: 81, 6: 2646}


def _family(n, *point_lists):
    return generate_family(n, [mask_of(p) for p in point_lists])


def test_family_contains():
    fam = _family(3, [0, 2])
    assert fam.contains(0b111)
    assert fam.contains(0b101)
    assert not fam.contains(0b011)
    assert not fam.contains(0)
    delta = _family(5, [0, 2], [0, 3], [2, 3])
    assert not delta.contains(mask_of([1, 4]))


def test_generate_family_absorption():
    fam = generate_family(2, [0b01, 0b11])
    assert fam.minimal_sets == (0b01,)
    tri = _family(3, [0, 1], [0, 2], [1, 2])
    assert tri.minimal_sets == (0b011, 0b101, 0b110)
    with pytest.raises(ConsistencyError):
        generate_family(3, [])
    with pytest.raises(ConsistencyError):
        generate_family(3, [0])


def test_family_canonical_form_is_idempotent():
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randint(1, 6)
        gens = [rng.randint(1, (1 << n) - 1) for _ in range(rng.randint(1, 6))]
        fam = generate_family(n, gens)
        assert generate_family(n, fam.minimal_sets) == fam


def test_transversal_of_whole_set_is_singletons():
    n = 4
    fam = generate_family(n, [(1 << n) - 1])
    assert fam.transversal().minimal_sets == tuple(1 << i for i in range(n))


def test_transversal_matches_oracle():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(1, 6)
        gens = [rng.randint(1, (1 << n) - 1) for _ in range(rng.randint(1, 5))]
        fam = generate_family(n, gens)
        assert fam.transversal().minimal_sets == oracle_hitting_family(fam.minimal_sets, n)


def test_transversal_involution_exhaustive_small():
    # every antichain on up to 4 points
    for n in range(1, 5):
        subsets = list(range(1, 1 << n))
        for picks in range(1, 1 << len(subsets)):
            chosen = [subsets[i] for i in range(len(subsets)) if picks >> i & 1]
            if any(a != b and a & b == a for a in chosen for b in chosen):
                continue
            fam = SetFamily(n, tuple(sorted(chosen)))
            assert fam.transversal().transversal() == fam


def test_transversal_involution_random():
    rng = random.Random(9)
    for _ in range(1000):
        n = rng.randint(1, 6)
        gens = [rng.randint(1, (1 << n) - 1) for _ in range(rng.randint(1, 6))]
        fam = generate_family(n, gens)
        assert fam.transversal().transversal() == fam


def test_is_linked():
    assert _family(3, [0, 1], [1, 2]).is_linked()
    assert not _family(3, [0], [1]).is_linked()
    assert majority_family(build_group("C5")).is_linked()
    # linked iff contained in own transversal
    rng = random.Random(13)
    for _ in range(200):
        n = rng.randint(1, 6)
        gens = [rng.randint(1, (1 << n) - 1) for _ in range(rng.randint(1, 5))]
        fam = generate_family(n, gens)
        trans_bitmap = fam.transversal().bitmap
        assert fam.is_linked() == (fam.bitmap & ~trans_bitmap == 0)


def test_is_maximal_linked():
    assert majority_family(build_group("C5")).is_maximal_linked()
    four = majority_family(build_group("C4"))
    assert not four.is_maximal_linked()
    assert oracle_hitting_family(four.minimal_sets, 4) != four.minimal_sets
    assert _family(3, [1]).is_maximal_linked()


def test_enumerate_mls_counts():
    for n, want in MLS_COUNTS.items():
        assert len(enumerate_mls(n)) == want


def test_enumerate_mls_matches_bruteforce_oracle():
    for n in range(1, 5):
        got = [s.minimal_sets for s in enumerate_mls(n)]
        assert got == oracle_all_mls(n)


def test_enumerate_mls_canonical_order_and_validity():
    for n in range(1, 6):
        systems = enumerate_mls(n)
        keys = [s.minimal_sets for s in systems]
        assert keys == sorted(keys)
        for s in systems:
            assert s.family.is_maximal_linked()


def test_enumerate_mls_capacity():
    with pytest.raises(CapacityError):
        enumerate_mls(0)
    with pytest.raises(CapacityError):
        enumerate_mls(8)
    with pytest.raises(CapacityError):
        enumerate_mls(7)  # gated behind allow_large


def test_mls_exactly_one_of_each_complementary_pair():
    for n in range(1, 7):
        full = (1 << n) - 1
        for s in enumerate_mls(n):
            bitmap = s.family.bitmap
            for a in range(1 << n):
                assert (bitmap >> a & 1) != (bitmap >> (full ^ a) & 1)


def test_from_family_rejects_non_self_dual():
    with pytest.raises(ConsistencyError):
        MaximalLinkedSystem.from_family(majority_family(build_group("C4")))


def test_principal_ultrafilter():
    g = build_group("C3")
    u = principal_ultrafilter(g, 0)
    assert u.minimal_sets == (1,)
    c5 = build_group("C5")
    u0 = principal_ultrafilter(c5, 0)
    assert u0.contains(0b00001) and not u0.contains(0b00010)


def test_majority_family_examples():
    c5 = build_group("C5")
    assert majority_family(c5).minimal_sets == tuple(subsets_of_size(5, 3))
    c3 = build_group("C3")
    assert majority_family(c3) == _family(3, [0, 1], [0, 2], [1, 2])


def test_shift_identity_and_inverse():
    g = build_group("C5")
    systems = enumerate_mls(5)
    for s in systems[:20]:
        assert shift_mls(g, 0, s) == s
        for x in g.elements():
            assert shift_mls(g, g.inv[x], shift_mls(g, x, s)) == s


def test_shift_example_on_c5():
    g = build_group("C5")
    delta = MaximalLinkedSystem.from_family(_family(5, [0, 2], [0, 3], [2, 3]))
    shifted = shift_mls(g, 1, delta)
    assert shifted.family == _family(5, [1, 3], [1, 4], [3, 4])


def test_shift_is_bijection():
    for name in ("C1", "C2", "C3", "C4", "C2xC2", "C5"):
        g = build_group(name)
        systems = enumerate_mls(g.order)
        keys = {s.minimal_sets for s in systems}
        for x in g.elements():
            images = {shift_mls(g, x, s).minimal_sets for s in systems}
            assert images == keys


def test_is_invariant_mls():
    c3 = build_group("C3")
    assert is_invariant_mls(c3, MaximalLinkedSystem.from_family(majority_family(c3)))
    assert not is_invariant_mls(c3, principal_ultrafilter(c3, 0))


def test_extend_to_mls():
    g = build_group("C4")
    fam = _family(4, [0, 1])
    ext = extend_to_mls(fam)
    assert ext.family.is_maximal_linked()
    assert all(ext.contains(m) for m in fam.minimal_sets)
    with pytest.raises(ConsistencyError):
        extend_to_mls(_family(4, [0], [1]))
    # deterministic
    assert extend_to_mls(fam) == extend_to_mls(fam)


def test_serialization_round_trip():
    for s in enumerate_mls(4):
        text = s.serialize()
        assert MaximalLinkedSystem.deserialize(4, text) == s
