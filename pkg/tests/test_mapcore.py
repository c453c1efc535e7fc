import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagmaps import (Perm, RootedMap, automorphism_group,
                      build_degenerate, build_slightly_degenerate, canonicalize,
                      cells, cells_and_surface, du, genus_symbol, is_reflexible,
                      isomorphism, load_map, pe, reroot, save_map,
                      simple_reroots, triality_class)
from flagmaps.mapcore import (MapFormatError, MapInvariantError,
                              triality_composites)
from flagmaps.perm import LabeledGenerators, congruent_labeled_groups

from .conftest import random_rooted_map

DM9_LOOKING_TEXT = """flags 4
T 1 0 3 2
L 2 3 0 1
R 0 1 2 3
root 0
"""


def test_load_four_flag_map_is_dm9():
    m = load_map(DM9_LOOKING_TEXT)
    assert m.n_flags == 4
    # R = id forces e3 = 1: this is the DM9 row (not DM12, whose R = TL)
    lg = LabeledGenerators(("t", "l", "r"), m.generators())
    dm9 = build_degenerate(9)
    assert congruent_labeled_groups(lg, LabeledGenerators(("t", "l", "r"),
                                                          dm9.generators()))
    assert isomorphism(m, dm9, mode="generalized") is not None


def test_load_rejects_non_bijective_images():
    text = DM9_LOOKING_TEXT.replace("T 1 0 3 2", "T 1 1 3 2")
    with pytest.raises(MapFormatError):
        load_map(text)


def test_load_rejects_broken_commutation():
    # t=(0 1), l=(1 2) gives (tl) of order 3
    with pytest.raises(MapInvariantError) as err:
        RootedMap(Perm.from_cycles(3, [(0, 1)]),
                  Perm.from_cycles(3, [(1, 2)]),
                  Perm.identity(3))
    assert "(TL)^2" in str(err.value)


def test_load_rejects_intransitive():
    with pytest.raises(MapInvariantError) as err:
        RootedMap(Perm.identity(2), Perm.identity(2), Perm.identity(2))
    assert "transitive" in str(err.value)


def test_load_rejects_non_involution():
    with pytest.raises(MapInvariantError) as err:
        RootedMap(Perm.from_cycles(3, [(0, 1, 2)]), Perm.identity(3),
                  Perm.identity(3))
    assert "T not an involution" in str(err.value)


def test_save_load_round_trip(tetrahedron):
    text = save_map(tetrahedron)
    again = load_map(text)
    assert save_map(again) == text
    assert isomorphism(again, tetrahedron, mode="rooted") is not None


def test_canonicalize_is_stable(c4_sphere):
    c = canonicalize(c4_sphere)
    assert c.root == 0
    assert canonicalize(c) == c


def test_cells_tetrahedron(tetrahedron):
    info = cells_and_surface(tetrahedron)
    assert len(info.cells.vertices) == 4
    assert len(info.cells.edges) == 6
    assert len(info.cells.faces) == 4
    assert info.euler_characteristic == 2
    assert info.orientability == "orientable"
    assert info.signed_genus == 0


def test_surface_delta2():
    info = cells_and_surface(build_slightly_degenerate("delta", 2))
    assert info.orientability == "non-orientable"
    assert info.signed_genus == -1


def test_surface_boundary_degenerate():
    # DM9 has R = id: fixed points everywhere
    info = cells_and_surface(build_degenerate(9))
    assert info.orientability == "boundary-degenerate"
    assert info.genus_advisory


def test_edge_orbit_sizes(tetrahedron, fig3_quotient, random_maps):
    for m in [tetrahedron, fig3_quotient] + random_maps[:10]:
        for block in cells(m).edges:
            assert len(block) in (1, 2, 4)


def test_dual_preserves_euler_and_petrie(tetrahedron, c4_sphere, random_maps):
    for m in [tetrahedron, c4_sphere] + random_maps[:10]:
        d = du(m)
        assert (cells_and_surface(d).euler_characteristic
                == cells_and_surface(m).euler_characteristic)
        # Du swaps vertices and faces, and keeps Petrie circuits
        cm, cd = cells(m), cells(d)
        assert sorted(cm.vertices) == sorted(cd.faces)
        assert sorted(cm.faces) == sorted(cd.vertices)
        assert sorted(cm.petrie_circuits) == sorted(cd.petrie_circuits)


def test_genus_symbol_tetrahedron(tetrahedron):
    sym = genus_symbol(tetrahedron)
    assert sym.genera == (0, 0, -1, -1, -1, -1)
    assert sym.iso_symbol == (1, 1, 3, 3, 5, 5)
    assert sym.hexagonal_number == 3


def test_du_is_involution(tetrahedron, c4_sphere, fig3_quotient):
    for m in (tetrahedron, c4_sphere, fig3_quotient):
        assert isomorphism(du(du(m)), m, mode="generalized") is not None


def test_triality_relations(random_maps):
    for m in random_maps[:8]:
        assert isomorphism(du(du(m)), m, mode="generalized") is not None
        assert isomorphism(pe(pe(m)), m, mode="generalized") is not None
        dp = lambda x: du(pe(x))
        assert isomorphism(dp(dp(dp(m))), m, mode="generalized") is not None
        assert len(triality_class(m)) in (1, 2, 3, 6)


def test_rooted_isomorphism_self(tetrahedron):
    image = isomorphism(tetrahedron, tetrahedron, mode="rooted")
    assert image == list(range(tetrahedron.n_flags))


def test_eps3_delta3_not_isomorphic():
    eps3 = build_slightly_degenerate("epsilon", 3)
    delta3 = build_slightly_degenerate("delta", 3)
    assert isomorphism(eps3, delta3, mode="rooted") is None
    assert isomorphism(eps3, delta3, mode="generalized") is None


def test_petrie_of_eps3_is_delta3():
    eps3 = build_slightly_degenerate("epsilon", 3)
    delta3 = build_slightly_degenerate("delta", 3)
    assert isomorphism(pe(eps3), delta3, mode="generalized") is not None


def test_automorphisms_tetrahedron(tetrahedron):
    aut = automorphism_group(tetrahedron)
    assert aut.order() == tetrahedron.n_flags == 24
    assert is_reflexible(tetrahedron)


def test_automorphisms_fig3_quotient(fig3_quotient):
    aut = automorphism_group(fig3_quotient)
    assert not is_reflexible(fig3_quotient)
    assert aut.order() == 4
    assert len(aut.orbits()) == 2


def test_automorphisms_dm1():
    dm1 = build_degenerate(1)
    assert dm1.n_flags == 1
    assert automorphism_group(dm1).order() == 1
    assert is_reflexible(dm1)


def test_aut_semiregular_and_divides(tetrahedron, fig3_quotient, random_maps):
    for m in [tetrahedron, fig3_quotient] + random_maps[:10]:
        aut = automorphism_group(m)
        assert m.n_flags % aut.order() == 0
        # the automorphism to a given flag is unique
        seen = {}
        for a in aut.elements():
            image = a.images[m.root]
            assert image not in seen
            seen[image] = a


def test_monautreg_chain(tetrahedron, fig3_quotient, random_maps):
    for m in [tetrahedron, fig3_quotient] + random_maps[:10]:
        aut_order = automorphism_group(m).order()
        mon_order = m.monodromy_group().order()
        assert aut_order <= m.n_flags <= mon_order
        regular = aut_order == m.n_flags
        assert regular == (mon_order == m.n_flags)
        assert regular == is_reflexible(m)


def test_reroot_identity(tetrahedron):
    assert reroot(tetrahedron, tetrahedron.root) == tetrahedron


def test_reroots_of_reflexible_isomorphic(tetrahedron):
    for f in range(0, tetrahedron.n_flags, 5):
        assert isomorphism(reroot(tetrahedron, f), tetrahedron,
                           mode="rooted") is not None


def test_reroots_in_distinct_orbits_not_isomorphic(fig3_quotient):
    aut = automorphism_group(fig3_quotient)
    orbits = aut.orbits()
    assert len(orbits) == 2
    a = reroot(fig3_quotient, orbits[0][0])
    b = reroot(fig3_quotient, orbits[1][0])
    assert isomorphism(a, b, mode="rooted") is None
    # same orbit: isomorphic
    c = reroot(fig3_quotient, orbits[0][-1])
    assert isomorphism(a, c, mode="rooted") is not None


def test_simple_reroots_order(tetrahedron):
    m = tetrahedron
    roots = [x.root for x in simple_reroots(m)]
    x = m.root
    assert roots == [x, m.t(x), m.l(x), m.l(m.t(x))]


@settings(deadline=None, max_examples=25)
@given(st.integers(0, 10_000), st.integers(1, 4))
def test_random_maps_satisfy_bookkeeping(seed, n_edges):
    import random as _random
    m = random_rooted_map(_random.Random(seed), n_edges)
    blocks = cells(m).edges
    assert sum(len(b) for b in blocks) == m.n_flags
    assert len(blocks) == n_edges
    info = cells_and_surface(m)
    assert info.euler_characteristic == (len(info.cells.vertices)
                                         - len(info.cells.edges)
                                         + len(info.cells.faces))


def test_genus_symbol_order_matches_composites(c4_sphere):
    composites = triality_composites(c4_sphere)
    sym = genus_symbol(c4_sphere)
    for i, c in enumerate(composites):
        assert cells_and_surface(c).signed_genus == sym.genera[i]


def test_petersen_map_row():
    # the reflexible Petersen-graph map in the projective plane: order 60,
    # monolithic, and its triality class meets non-orientable genus 5
    from .conftest import map_from_vector
    m = map_from_vector((2, 2, 2, 2, 3, 5, 5))
    assert m.n_flags == 60
    sym = genus_symbol(m)
    assert sym.genera == (-1, -1, -1, -5, -1, -5)
    assert sym.iso_symbol == (1, 2, 1, 4, 2, 4)
    assert sym.hexagonal_number == 3
    from flagmaps import decomposability_reflexible
    assert decomposability_reflexible(m).decomposable is False
