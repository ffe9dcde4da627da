"""Tests for towers, lim^1 certificates, directed systems, symbolic
colimits, and the symbolic Ext^1 / Ulm / torsion-free-quotient tables."""

import pytest

from cwbrauer.abgroup import FgAbGroup, GroupHom, ext1
from cwbrauer.errors import SemanticError, UnsupportedComputation
from cwbrauer.limits import (
    Atom, ConstantStrand, DirectedSystem, Lim1Certificate,
    MultiplicationStrand, PruferStrand, SymbolicGroup, Tower, colimit_symbolic,
    continuum_q_vector_atom, cyclic_atom, ext1_symbolic, first_ulm, free_atom,
    lim1_certificate, localized_atom, opaque_ext_atom, padic_atom,
    phantom_of_telescope, prufer_atom, rationals_atom, torsion_free_quotient,
)

Z = FgAbGroup.cyclic(0)


def zmod(n):
    return FgAbGroup.cyclic(n)


# -- atoms and symbolic groups -------------------------------------------------------


def test_atom_describe():
    assert free_atom(1).describe() == "Z"
    assert free_atom(3).describe() == "Z^3"
    assert cyclic_atom(12).describe() == "Z/12"
    assert localized_atom([3, 2, 2]).describe() == "Z[1/2,1/3]"
    assert prufer_atom(5).describe() == "Z(5^oo)"
    assert rationals_atom().describe() == "Q"
    assert padic_atom(7).describe() == "Zhat_7"
    assert "continuum" in continuum_q_vector_atom().describe()
    op = opaque_ext_atom("Ext^1(Z[1/2], Z)", divisible=True, torsion=False,
                         torsion_free=False, nonzero=True)
    assert op.describe() == "Ext^1(Z[1/2], Z)"


def test_atom_flags():
    assert prufer_atom(3).divisible and prufer_atom(3).torsion
    assert free_atom(2).torsion_free and not free_atom(2).divisible
    assert rationals_atom().divisible and rationals_atom().torsion_free
    with pytest.raises(SemanticError):
        Atom("free", (1,), (True, True, True, True))  # fixed-kind flags
    with pytest.raises(SemanticError):
        Atom("opaque_ext", ("x",))                    # needs explicit flags
    with pytest.raises(SemanticError):
        Atom("mystery")


def test_symbolic_group_flags_and_describe():
    g = SymbolicGroup.from_fg(FgAbGroup.from_cyclic_orders((0, 0, 2, 6)))
    assert g.describe() == "Z^2 + Z/2 + Z/6"
    assert not g.torsion and not g.torsion_free and g.nonzero
    assert SymbolicGroup.zero().describe() == "0"
    assert not SymbolicGroup.zero().nonzero
    assert SymbolicGroup.zero().torsion        # vacuous
    both = SymbolicGroup((prufer_atom(2),)).plus(SymbolicGroup((free_atom(1),)))
    assert both.describe() == "Z(2^oo) + Z"
    assert not both.divisible


def test_torsion_free_quotient():
    g = SymbolicGroup((free_atom(2), cyclic_atom(4), localized_atom([5]),
                       prufer_atom(3)))
    assert torsion_free_quotient(g).describe() == "Z^2 + Z[1/5]"
    mixed = SymbolicGroup((opaque_ext_atom(
        "E", divisible=True, torsion=False, torsion_free=False, nonzero=True),))
    with pytest.raises(UnsupportedComputation):
        torsion_free_quotient(mixed)


def test_ext1_symbolic_table():
    assert ext1_symbolic(SymbolicGroup((free_atom(5),))).is_zero
    assert ext1_symbolic(SymbolicGroup((cyclic_atom(9),))).describe() == "Z/9"
    assert ext1_symbolic(SymbolicGroup((prufer_atom(3),))).describe() \
        == "Zhat_3"
    q = ext1_symbolic(SymbolicGroup((rationals_atom(),)))
    assert q.atoms[0].kind == "continuum_q_vector"
    loc = ext1_symbolic(SymbolicGroup((localized_atom([2, 3]),)))
    assert loc.atoms[0].describe() == "Ext^1(Z[1/2,1/3], Z)"
    assert loc.divisible and loc.nonzero and not loc.torsion_free
    with pytest.raises(UnsupportedComputation):
        ext1_symbolic(SymbolicGroup((padic_atom(2),)))


def test_ext1_symbolic_matches_exact_on_fg_groups():
    for orders in [(0,), (4,), (0, 2, 6), (2, 4, 8), (0, 0, 0), ()]:
        g = FgAbGroup.from_cyclic_orders(orders)
        sym = ext1_symbolic(g)
        exact = ext1(g, Z)
        assert sorted(a.params[0] for a in sym.atoms) \
            == sorted(exact.invariant_factors)
        assert all(a.kind == "cyclic" for a in sym.atoms)


def test_first_ulm():
    assert first_ulm(FgAbGroup.from_cyclic_orders((0, 4))).is_zero
    g = SymbolicGroup((prufer_atom(2), free_atom(1), rationals_atom()))
    assert first_ulm(g).describe() == "Z(2^oo) + Q"


# -- towers --------------------------------------------------------------------------


def finite_tower():
    z4, z8 = zmod(4), zmod(8)
    return Tower(block_groups=(z4, z8),
                 block_maps=(GroupHom.scalar(z4, z8, 2),
                             GroupHom.scalar(z8, z4, 1)))


def test_tower_indexing():
    z2, z4, z8 = zmod(2), zmod(4), zmod(8)
    t = Tower(prefix_groups=(z2, z8),
              prefix_maps=(GroupHom.scalar(z8, z2, 1),),
              block_groups=(z4, z8),
              block_maps=(GroupHom.scalar(z4, z8, 2),
                          GroupHom.scalar(z8, z4, 1)))
    assert [t.group(i) for i in range(6)] == [z2, z8, z4, z8, z4, z8]
    assert t.map(1).codomain == z2
    assert t.map(2).domain == z4 and t.map(2).codomain == z8
    comp = t.composite(4, 1)
    assert comp.domain == z4 and comp.codomain == z8
    assert t.composite(3, 3).matrix == GroupHom.identity(z8).matrix


def test_tower_validation():
    z4, z8 = zmod(4), zmod(8)
    with pytest.raises(SemanticError):
        Tower(block_groups=(), block_maps=())
    with pytest.raises(SemanticError):
        Tower(block_groups=(z4,), block_maps=())
    with pytest.raises(SemanticError):
        Tower(prefix_maps=(GroupHom.scalar(z4, z4, 1),),
              block_groups=(z4,),
              block_maps=(GroupHom.scalar(z4, z4, 1),))
    with pytest.raises(SemanticError):   # block map 0 must land in the LAST group
        Tower(block_groups=(z4, z8),
              block_maps=(GroupHom.scalar(z4, z4, 1),
                          GroupHom.scalar(z8, z4, 1)))
    with pytest.raises(SemanticError):   # seam: last prefix != last block group
        Tower(prefix_groups=(z4,), prefix_maps=(),
              block_groups=(z4, z8),
              block_maps=(GroupHom.scalar(z4, z8, 2),
                          GroupHom.scalar(z8, z4, 1)))


def test_lim1_jensen_finite():
    cert = lim1_certificate(finite_tower())
    assert cert.verdict == "VANISHES"
    assert cert.reason == "JensenFinite"
    assert "finite" in cert.witness


def test_lim1_mittag_leffler():
    t = Tower(block_groups=(Z,), block_maps=(GroupHom.identity(Z),))
    cert = lim1_certificate(t)
    assert (cert.verdict, cert.reason) == ("VANISHES", "MittagLeffler")

    # projection/inclusion period: composites are the identity on Z
    z2 = FgAbGroup.from_cyclic_orders((0, 0))
    incl = GroupHom(Z, z2, [[1], [0]])
    proj = GroupHom(z2, Z, [[1, 0]])
    t = Tower(block_groups=(Z, z2), block_maps=(incl, proj))
    assert lim1_certificate(t).reason == "MittagLeffler"


def test_lim1_inconclusive_for_p_adic_style_tower():
    t = Tower(block_groups=(Z,), block_maps=(GroupHom.scalar(Z, Z, 2),))
    cert = lim1_certificate(t)
    assert cert.verdict == "INCONCLUSIVE"
    assert cert.reason is None
    assert "not assert nonvanishing" in cert.witness


def test_lim1_certificate_invariants():
    with pytest.raises(SemanticError):
        Lim1Certificate("MAYBE", None, "x")
    with pytest.raises(SemanticError):
        Lim1Certificate("VANISHES", None, "x")
    with pytest.raises(SemanticError):
        Lim1Certificate("INCONCLUSIVE", "JensenFinite", "x")


# -- directed systems ----------------------------------------------------------------


def test_strand_validation():
    with pytest.raises(SemanticError):
        MultiplicationStrand(())
    with pytest.raises(SemanticError):
        PruferStrand(1)
    with pytest.raises(SemanticError):
        ConstantStrand(Z)


def test_colimit_symbolic():
    assert colimit_symbolic(DirectedSystem.telescope_z(6)).describe() \
        == "Z[1/2,1/3]"
    assert colimit_symbolic(DirectedSystem.telescope_z(1)).describe() == "Z"
    assert colimit_symbolic(DirectedSystem.telescope_z(-1)).describe() == "Z"
    assert colimit_symbolic(DirectedSystem.telescope_z(0)).is_zero
    two_step = DirectedSystem((MultiplicationStrand((2, -3)),))
    assert colimit_symbolic(two_step).describe() == "Z[1/2,1/3]"
    assert colimit_symbolic(DirectedSystem.prufer(5)).describe() == "Z(5^oo)"
    assert colimit_symbolic(DirectedSystem.constant(zmod(6))).describe() \
        == "Z/6"
    mixed = DirectedSystem((MultiplicationStrand((2,)), PruferStrand(3),
                            ConstantStrand(zmod(4))))
    assert colimit_symbolic(mixed).describe() == "Z[1/2] + Z(3^oo) + Z/4"


def test_phantom_of_telescope():
    ph = phantom_of_telescope(DirectedSystem.telescope_z(6), 2)
    assert ph.nonzero and ph.divisible
    assert ph.atoms[0].describe() == "Ext^1(Z[1/2,1/3], Z)"
    assert phantom_of_telescope(DirectedSystem.telescope_z(1), 2).is_zero
    assert phantom_of_telescope(DirectedSystem.prufer(3), 2).is_zero
    assert phantom_of_telescope(DirectedSystem.constant(zmod(9)), 5).is_zero
    with pytest.raises(SemanticError):
        phantom_of_telescope(DirectedSystem.telescope_z(2), 0)
