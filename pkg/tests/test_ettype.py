import pytest

from flagmaps import (LabeledGenerators, Perm, PermGroup,
                      build_slightly_degenerate, classify_type,
                      construct_from_group, du, is_edge_transitive,
                      isomorphism, k_quotient, map_symbol,
                      named_automorphisms_present, partial_order, pe,
                      type_transforms)
from flagmaps.ettype import (NAMED_AUTOMORPHISM_WORDS, TYPE_LABELS, TYPE_TABLE,
                             DegenerateSymbolAdvisory, LabelMismatch,
                             RelationViolation)

from .conftest import map_from_vector


def test_reflexible_has_all_thirteen(tetrahedron):
    assert named_automorphisms_present(tetrahedron) == \
        frozenset(NAMED_AUTOMORPHISM_WORDS)


def test_classify_tetrahedron(tetrahedron):
    label, rooted = classify_type(tetrahedron)
    assert label == "1"


def test_classify_eps5():
    label, _ = classify_type(build_slightly_degenerate("epsilon", 5))
    assert label == "1"


def test_classify_fig3_quotient(fig3_quotient):
    # the 8-flag path map is edge-transitive of type 2 at every rooting
    assert is_edge_transitive(fig3_quotient)
    label, rooted = classify_type(fig3_quotient)
    assert label == "2"
    assert named_automorphisms_present(rooted) == TYPE_TABLE["2"]


def test_classify_non_edge_transitive(tetrahedron):
    K = PermGroup(tetrahedron.n_flags, [tetrahedron.r])
    quotient, _ = k_quotient(tetrahedron, K)
    assert classify_type(quotient) is None


def test_map_symbol_tetrahedron(tetrahedron):
    assert str(map_symbol(tetrahedron)) == "<3; 3; 4>"


def test_map_symbol_k44_torus():
    k44 = map_from_vector((2, 2, 2, 2, 4, 4, 4))
    sym = map_symbol(k44)
    assert (sym.a, sym.b, sym.c) == ((4,), (4,), (4,))


def test_map_symbol_fig3(fig3_quotient):
    sym = map_symbol(fig3_quotient)
    assert len(sym.a) == 2  # two vertex orbits (type 2 shape)
    assert len(sym.b) == 1 and len(sym.c) == 1
    assert sym.b[0] % 2 == 0 and sym.c[0] % 2 == 0


def test_map_symbol_rejects_degenerate():
    from flagmaps import build_degenerate
    with pytest.raises(DegenerateSymbolAdvisory):
        map_symbol(build_degenerate(9))


def test_type_transforms_table():
    assert type_transforms("2") == ("2*", "2")
    assert type_transforms("2*") == ("2", "2P")
    assert type_transforms("2P") == ("2P", "2*")
    assert type_transforms("1") == ("1", "1")
    assert type_transforms("3") == ("3", "3")
    assert type_transforms("2*ex") == ("2ex", "2Pex")
    assert type_transforms("4P") == ("4P", "4*")
    assert type_transforms("5") == ("5*", "5")


def test_type_transforms_are_involutions():
    for label in TYPE_LABELS:
        du_label, pe_label = type_transforms(label)
        assert type_transforms(du_label)[0] == label
        assert type_transforms(pe_label)[1] == label


def test_partial_order_against_type_one():
    for label in TYPE_LABELS:
        assert partial_order(label, "1")
    assert partial_order("5", "2")
    assert not partial_order("2", "5")
    assert not partial_order("2", "2*")


def regular_rep_labeled(m, labels=("tau", "lambda", "theta1")):
    return LabeledGenerators(labels, m.generators())


def test_construct_type1_round_trip(tetrahedron):
    result, report = construct_from_group("1", regular_rep_labeled(tetrahedron))
    assert result.n_flags == 24
    assert report.exact and report.detected == "1"
    assert isomorphism(result, tetrahedron, mode="generalized") is not None


def test_construct_type2_s3_example():
    g = LabeledGenerators(
        ("tau", "theta1", "theta2"),
        (Perm.from_cycles(3, [(0, 1)]), Perm.from_cycles(3, [(0, 1)]),
         Perm.from_cycles(3, [(1, 2)])))
    result, report = construct_from_group("2", g)
    assert result.n_flags == 12  # |S3| x |Z2|
    assert report.requested == "2"
    assert report.detected is not None  # record: the report is the contract


def test_construct_type3_flag_count():
    gens = (Perm.from_cycles(4, [(0, 1)]), Perm.from_cycles(4, [(1, 2)]),
            Perm.from_cycles(4, [(2, 3)]), Perm.from_cycles(4, [(0, 3)]))
    g = LabeledGenerators(("theta1", "theta2", "theta3", "theta4"), gens)
    result, report = construct_from_group("3", g)
    assert result.n_flags == 4 * g.group().order()


def test_construct_type5_no_relations_needed():
    g = LabeledGenerators(
        ("sigma_x1", "sigma_x2"),
        (Perm.from_cycles(3, [(0, 1, 2)]), Perm.from_cycles(3, [(0, 1)])))
    result, report = construct_from_group("5", g)
    assert result.n_flags == 4 * 6


def test_construct_label_mismatch(tetrahedron):
    with pytest.raises(LabelMismatch):
        construct_from_group("2", regular_rep_labeled(tetrahedron))


def test_construct_relation_violation():
    g = LabeledGenerators(
        ("tau", "theta1", "theta2"),
        (Perm.from_cycles(3, [(0, 1, 2)]),  # tau not an involution
         Perm.from_cycles(3, [(0, 1)]), Perm.from_cycles(3, [(1, 2)])))
    with pytest.raises(RelationViolation):
        construct_from_group("2", g)


def test_constructed_group_acts_regularly_on_blocks():
    g = LabeledGenerators(
        ("tau", "theta1", "theta2"),
        (Perm.from_cycles(3, [(0, 1)]), Perm.from_cycles(3, [(0, 1)]),
         Perm.from_cycles(3, [(1, 2)])))
    result, _ = construct_from_group("2", g)
    order = g.group().order()
    s_size = result.n_flags // order
    blocks = [tuple(range(i * s_size, (i + 1) * s_size))
              for i in range(order)]
    # left translations by group elements are automorphisms permuting the
    # blocks; regularity: block 0 reaches every block exactly once
    elements = list(g.group().elements())
    index = {e: i for i, e in enumerate(elements)}
    reached = set()
    for h in elements:
        images = [0] * result.n_flags
        for ei, e in enumerate(elements):
            target = index[h * e]
            for offset in range(s_size):
                images[ei * s_size + offset] = target * s_size + offset
        translation = Perm(images)
        for gen in result.generators():
            assert translation * gen == gen * translation
        reached.add(images[0] // s_size)
    assert reached == set(range(order))


def test_du_pe_conversion_on_samples(tetrahedron, fig3_quotient):
    for m in (tetrahedron, fig3_quotient,
              build_slightly_degenerate("epsilon", 3)):
        label, rooted = classify_type(m)
        du_label, pe_label = type_transforms(label)
        assert classify_type(du(rooted))[0] == du_label
        assert classify_type(pe(rooted))[0] == pe_label


def test_smallest_cover_of_edge_transitive_shares_monodromy(fig3_quotient):
    # product of the 4 simple re-rootings is reflexible with congruent Mon
    from flagmaps import simple_reroots
    from flagmaps.product import fold_parallel_product
    from flagmaps import is_reflexible, congruent_labeled_groups
    n = fold_parallel_product(simple_reroots(fig3_quotient))
    assert is_reflexible(n)
    assert congruent_labeled_groups(
        LabeledGenerators(("t", "l", "r"), n.generators()),
        LabeledGenerators(("t", "l", "r"), fig3_quotient.generators()))


@pytest.fixture(scope="module")
def type4_map():
    g = LabeledGenerators(
        ("sigma_x1", "theta2", "theta4"),
        (Perm.from_cycles(4, [(0, 1, 2, 3)]),
         Perm.from_cycles(4, [(0, 1)]),
         Perm.from_cycles(4, [(1, 3)])))
    return construct_from_group("4", g)


def test_construct_type4_exact(type4_map):
    result, report = type4_map
    assert result.n_flags == 96
    assert report.exact and report.detected == "4"
    assert not report.extra_automorphisms


def test_type4_symbol_side_conditions(type4_map):
    result, _ = type4_map
    label, rooted = classify_type(result)
    sym = map_symbol(rooted, label)
    assert len(sym.a) == 2 and all(x % 2 == 0 for x in sym.a)
    assert len(sym.b) == 1 and sym.b[0] % 4 == 0
    assert len(sym.c) == 1 and sym.c[0] % 4 == 0


def test_type4_duality_conversion(type4_map):
    result, _ = type4_map
    _, rooted = classify_type(result)
    assert classify_type(du(rooted))[0] == "4*"
    assert classify_type(pe(rooted))[0] == "4"
    assert classify_type(pe(du(rooted)))[0] == "4P"


def test_construct_collapse_is_reported():
    # extra automorphisms may appear; the report records the collapse
    g = LabeledGenerators(
        ("tau", "sigma_f1"),
        (Perm.from_cycles(4, [(0, 1)]), Perm.from_cycles(4, [(0, 1, 2, 3)])))
    _, report = construct_from_group("2ex", g)
    assert report.detected == "1"
    assert not report.exact
    assert report.extra_automorphisms
