"""Tests for finitely generated abelian groups and the four functors.

The heavy artillery is in _census.py: censuses of honestly enumerated
finite groups.  Everything the library computes for finite groups is
checked against element counting; the free-rank behaviour is pinned by
hand-derived identities.
"""

import random

import numpy as np
import pytest

from cwbrauer.abgroup import (
    FgAbGroup, GroupHom, Z, brauer_of_k_g_2, exterior_square,
    ext1, h2_of_abelian_group, hom, tensor, tor1,
)
from cwbrauer.errors import SemanticError
from cwbrauer.intlin import IntMatrix

from _census import (
    BruteTable, N, all_multisets, brute_census, census_from_invariants,
    check_functor_pair, order_multiset,
)

FUNCS = {"hom": hom, "ext": ext1, "tensor": tensor, "tor": tor1}

MULTISETS = all_multisets(max_factors=3, max_order=12)


def distinct_classes():
    """The distinct isomorphism classes hit by MULTISETS, as factor tuples."""
    return sorted({FgAbGroup.from_cyclic_orders(m).invariant_factors
                   for m in MULTISETS})


# -- canonical form ------------------------------------------------------------


def test_canonical_form_shape():
    for ms in MULTISETS:
        g = FgAbGroup.from_cyclic_orders(ms)
        assert g.free_rank == 0
        for d in g.invariant_factors:
            assert d >= 2
        for a, b in zip(g.invariant_factors, g.invariant_factors[1:]):
            assert b % a == 0, (ms, g)


def test_canonical_form_census():
    # The canonical form of + Z/n_i must contain exactly the same number
    # of elements killed by each d as the group itself, elementwise.
    for ms in MULTISETS:
        g = FgAbGroup.from_cyclic_orders(ms)
        assert np.array_equal(
            brute_census(ms),
            census_from_invariants(g.invariant_factors)), ms


def test_canonical_form_order_multisets():
    # Stronger spot check: the multiset of element orders is preserved.
    rng = random.Random(20260814)
    for ms in rng.sample(MULTISETS, 40):
        g = FgAbGroup.from_cyclic_orders(ms)
        assert order_multiset(ms) == order_multiset(g.cyclic_orders()), ms


def test_from_cyclic_orders_frozen_examples():
    cases = {
        (): (0, ()),
        (0, 0): (2, ()),
        (1, 1, 5): (0, (5,)),
        (2, 3): (0, (6,)),
        (4, 6): (0, (2, 12)),
        (2, 3, 5): (0, (30,)),
        (6, 10, 15): (0, (30, 30)),
        (4, 8, 12): (0, (4, 4, 24)),
        (0, 8, 2, 0, 1): (2, (2, 8)),
    }
    for orders, (free, factors) in cases.items():
        assert FgAbGroup.from_cyclic_orders(orders) == FgAbGroup(free, factors)


def test_from_cyclic_orders_rejects_negative():
    with pytest.raises(SemanticError):
        FgAbGroup.from_cyclic_orders((2, -3))


def test_constructor_rejects_bad_invariants():
    with pytest.raises(SemanticError):
        FgAbGroup(0, (3, 4))      # 3 does not divide 4
    with pytest.raises(SemanticError):
        FgAbGroup(0, (1, 2))      # trivial factor listed
    with pytest.raises(SemanticError):
        FgAbGroup(-1, ())


def test_basic_accessors():
    g = FgAbGroup.from_cyclic_orders((0, 4, 6))
    assert str(g) == "Z + Z/2 + Z/12"
    assert g.cyclic_orders() == (0, 2, 12)
    assert g.order() is None
    assert g.torsion_part() == FgAbGroup(0, (2, 12))
    assert g.free_quotient() == FgAbGroup(1, ())
    assert g.torsion_part().order() == 24
    assert g.exponent() == 12
    assert FgAbGroup.trivial().order() == 1
    assert FgAbGroup.trivial().exponent() == 1
    assert str(FgAbGroup.trivial()) == "0"
    assert FgAbGroup.cyclic(0) == Z
    assert FgAbGroup.cyclic(1) == FgAbGroup.trivial()
    assert FgAbGroup.cyclic(7) == FgAbGroup(0, (7,))


def test_from_presentation():
    # Z^2 / <(2, 0), (0, 3)> = Z/2 + Z/3 = Z/6
    rel = IntMatrix([[2, 0], [0, 3]])
    assert FgAbGroup.from_presentation(rel) == FgAbGroup(0, (6,))
    # Z^2 / <(2, 4)> = Z + Z/2
    rel = IntMatrix([[2], [4]])
    assert FgAbGroup.from_presentation(rel) == FgAbGroup(1, (2,))


# -- the four functors against element counting --------------------------------


def test_functors_on_all_small_pairs():
    """Hom/Ext^1/tensor/Tor_1 match element-level computation for every
    pair of groups with at most 3 cyclic factors of order <= 12.

    Functor values only depend on the isomorphism class, and
    test_canonical_form_census pins the multiset -> class step, so
    checking each pair of *distinct* classes once covers all pairs.
    """
    classes = distinct_classes()
    for factors in classes:
        for d in factors:
            assert N % d == 0  # guard for the census machinery
    failures = []
    for b_factors in classes:
        table = BruteTable(b_factors)
        for a_factors in classes:
            failures.extend(check_functor_pair(FUNCS, a_factors, table))
    assert not failures, failures[:10]


def test_functor_free_rank_identities():
    rng = random.Random(99)
    for _ in range(120):
        free = rng.randint(0, 3)
        k = rng.randint(0, 3)
        t = FgAbGroup.from_cyclic_orders(
            [rng.randint(2, 30) for _ in range(k)])
        a = FgAbGroup(free, t.invariant_factors)
        b_free = rng.randint(0, 3)
        b = FgAbGroup.from_cyclic_orders(
            [0] * b_free + [rng.randint(2, 30) for _ in range(rng.randint(0, 3))])

        # Hom(Z^r + T, B) = B^r + Hom(T, B); Hom(T, Z^s) = 0 for finite T.
        assert hom(Z, b) == b
        assert hom(a, Z) == FgAbGroup.free(a.free_rank)
        # Ext^1(Z, B) = 0 and Ext^1 ignores the free part of the source.
        assert ext1(FgAbGroup.free(free), b).is_trivial
        assert ext1(a, b) == ext1(a.torsion_part(), b)
        # Z (x) B = B; Tor_1 vanishes when either side is free.
        assert tensor(Z, b) == b
        assert tor1(FgAbGroup.free(free), b).is_trivial
        assert tor1(a, FgAbGroup.free(b_free)).is_trivial


def test_functor_symmetries():
    # Tensor and Tor_1 are symmetric; Hom is symmetric on finite groups.
    rng = random.Random(7)
    for _ in range(200):
        a = FgAbGroup.from_cyclic_orders(
            [rng.randint(2, 24) for _ in range(rng.randint(0, 3))])
        b = FgAbGroup.from_cyclic_orders(
            [rng.randint(2, 24) for _ in range(rng.randint(0, 3))])
        assert tensor(a, b) == tensor(b, a)
        assert tor1(a, b) == tor1(b, a)
        assert hom(a, b) == hom(b, a)


def test_ext_into_z_is_torsion():
    """Ext^1(A, Z) = torsion(A) for 200 random finitely generated A."""
    rng = random.Random(20260814)
    for _ in range(200):
        free = rng.randint(0, 3)
        torsion = [rng.randint(2, 40) for _ in range(rng.randint(0, 4))]
        a = FgAbGroup.from_cyclic_orders([0] * free + torsion)
        assert ext1(a, Z) == a.torsion_part()
        # and the finite piece is honest: Ext^1(Z/n, Z) = Z/n elementwise
        assert tor1(a, Z).is_trivial


# -- exterior square ------------------------------------------------------------


def _exterior_square_presentation(g: FgAbGroup) -> FgAbGroup:
    """Independent presentation oracle for Lambda^2(g).

    For g = + C_i with generators e_i, Lambda^2 is generated by the
    wedges e_i ^ e_j (i < j); the relation d*e_i = 0 wedges to
    d*(e_i ^ e_j) = 0 on every pair containing i, and e_i ^ e_i = 0
    kills nothing further for cyclic pieces.  So the presentation has
    one generator per pair and, for each pair (i, j), one relation
    column for each finite order among d_i, d_j.
    """
    orders = g.cyclic_orders()
    pairs = [(i, j) for i in range(len(orders))
             for j in range(i + 1, len(orders))]
    cols = []
    for p, (i, j) in enumerate(pairs):
        for d in (orders[i], orders[j]):
            if d:
                col = [0] * len(pairs)
                col[p] = d
                cols.append(col)
    if not cols:
        return FgAbGroup.free(len(pairs))
    mat = IntMatrix([[col[r] for col in cols] for r in range(len(pairs))])
    return FgAbGroup.from_presentation(mat)


def test_exterior_square_against_presentation():
    rng = random.Random(5)
    seen = [FgAbGroup.trivial(), Z, FgAbGroup.free(3),
            FgAbGroup.from_cyclic_orders((0, 0, 2, 6))]
    for _ in range(150):
        orders = [rng.choice([0, 0, 2, 3, 4, 5, 8, 9, 12, 16])
                  for _ in range(rng.randint(0, 4))]
        seen.append(FgAbGroup.from_cyclic_orders(orders))
    for g in seen:
        assert exterior_square(g) == _exterior_square_presentation(g), g


def test_exterior_square_frozen_examples():
    assert exterior_square(FgAbGroup.free(2)) == Z
    assert exterior_square(FgAbGroup.free(4)) == FgAbGroup.free(6)
    assert exterior_square(FgAbGroup.cyclic(12)).is_trivial
    assert (exterior_square(FgAbGroup.from_cyclic_orders((4, 6)))
            == FgAbGroup.cyclic(2))
    assert (exterior_square(FgAbGroup.from_cyclic_orders((2, 4, 8)))
            == FgAbGroup.from_cyclic_orders((2, 2, 4)))
    assert h2_of_abelian_group(FgAbGroup.from_cyclic_orders((2, 4, 8))) \
        == FgAbGroup.from_cyclic_orders((2, 2, 4))


# -- second Eilenberg-MacLane spaces -------------------------------------------


def test_brauer_of_k_g_2():
    for n in range(2, 13):
        data = brauer_of_k_g_2(FgAbGroup.cyclic(n))
        assert data.br_prime == FgAbGroup.cyclic(n)
        assert data.br.is_trivial
        assert data.strict
    free_case = brauer_of_k_g_2(FgAbGroup.free(3))
    assert free_case.br_prime.is_trivial
    assert not free_case.strict
    mixed = brauer_of_k_g_2(FgAbGroup.from_cyclic_orders((0, 4, 6)))
    assert mixed.br_prime == FgAbGroup.from_cyclic_orders((4, 6))
    assert mixed.strict


# -- explicit homomorphisms ------------------------------------------------------


def test_group_hom_validation():
    z4, z8 = FgAbGroup.cyclic(4), FgAbGroup.cyclic(8)
    # x -> 2x is a homomorphism Z/4 -> Z/8 (4*2 = 8 = 0 mod 8) ...
    h = GroupHom.scalar(z4, z8, 2)
    assert h.apply((1,)) == (2,)
    assert h.apply((3,)) == (6,)
    # ... but x -> x is not (4*1 != 0 mod 8).
    with pytest.raises(SemanticError):
        GroupHom.scalar(z4, z8, 1)
    with pytest.raises(SemanticError):
        GroupHom(z4, z8, [[1]])
    # Shape mismatches are rejected.
    with pytest.raises(SemanticError):
        GroupHom(z4, z8, [[1, 0]])


def test_group_hom_compose_and_reduce():
    z4, z8 = FgAbGroup.cyclic(4), FgAbGroup.cyclic(8)
    down = GroupHom.scalar(z8, z4, 1)    # reduction mod 4
    up = GroupHom.scalar(z4, z8, 2)
    round_trip = down.compose(up)        # Z/4 -> Z/4, x -> 2x
    assert round_trip.apply((1,)) == (2,)
    assert round_trip.apply((2,)) == (0,)
    assert GroupHom.identity(z8).apply((5,)) == (5,)
    assert GroupHom.zero(z8, z4).is_zero()
    # Matrix entries are stored reduced mod the codomain orders.
    assert GroupHom.scalar(z8, z4, 5) == GroupHom.scalar(z8, z4, 1)


def test_group_hom_on_mixed_group():
    g = FgAbGroup.from_cyclic_orders((0, 2))   # Z + Z/2
    h = GroupHom.identity(g)
    assert h.apply((7, 1)) == (7, 1)
    # A map Z -> Z/2 is unconstrained; Z/2 -> Z must be zero.
    GroupHom(g, g, [[3, 0], [1, 0]])
    with pytest.raises(SemanticError):
        GroupHom(g, g, [[0, 1], [0, 1]])
