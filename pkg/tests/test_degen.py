import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagmaps import (ContextVector, build_degenerate,
                      build_slightly_degenerate, cells_and_surface,
                      classify_degeneracy, context_vector, du,
                      isomorphism, lcm_vector_predict, parallel_product, pe)
from flagmaps.degen import (classify_vector, dm_group_order, dm_vector,
                            slightly_degenerate_presentation)
from flagmaps.fpres import evaluate_word
from flagmaps.perm import LabeledGenerators


def test_context_vector_dm6_5():
    assert context_vector(build_degenerate(6, 5)).orders == (2, 1, 2, 2, 5, 2, 5)


def test_context_vector_eps4(c4_sphere):
    assert context_vector(c4_sphere).orders == (2, 2, 2, 2, 2, 4, 4)


def test_context_vector_dm1():
    assert context_vector(build_degenerate(1)).orders == (1,) * 7


def test_context_vector_validation():
    with pytest.raises(ValueError):
        ContextVector((3, 2, 2, 2, 2, 2, 2))  # e1 > 2
    with pytest.raises(ValueError):
        ContextVector((1, 2, 2, 1, 2, 2, 2))  # e4 = 1 but e1 != e2


def test_classify_degenerate():
    assert classify_degeneracy(build_degenerate(9)) == "degenerate"


def test_classify_slightly_degenerate():
    assert classify_degeneracy(build_slightly_degenerate("delta", 6)) == \
        "slightly-degenerate"


def test_classify_non_degenerate(tetrahedron):
    assert context_vector(tetrahedron).orders == (2, 2, 2, 2, 3, 3, 4)
    assert classify_degeneracy(tetrahedron) == "non-degenerate"


def test_build_dm8_7():
    m = build_degenerate(8, 7)
    assert m.n_flags == 14
    assert context_vector(m).orders == (2, 2, 2, 1, 7, 7, 2)


def test_build_dm10():
    m = build_degenerate(10)
    assert m.n_flags == 4
    assert context_vector(m).orders == (2, 2, 2, 2, 1, 2, 2)


def test_build_degenerate_parameter_validation():
    with pytest.raises(ValueError):
        build_degenerate(6)
    with pytest.raises(ValueError):
        build_degenerate(2, 3)
    with pytest.raises(ValueError):
        build_degenerate(13)


def test_build_eps3():
    m = build_slightly_degenerate("epsilon", 3)
    assert m.n_flags == 12
    lg = LabeledGenerators(("t", "l", "r"), m.generators())
    for text in slightly_degenerate_presentation("epsilon", 3).relators:
        assert evaluate_word(lg, text).is_identity()
    assert context_vector(m).orders[5] == 3  # (LR)^3 is the exact order
    assert context_vector(m).orders[6] == 6


def test_build_delta4():
    m = build_slightly_degenerate("delta", 4)
    assert m.n_flags == 16
    lg = LabeledGenerators(("t", "l", "r"), m.generators())
    relators = slightly_degenerate_presentation("delta", 4).relators
    assert any(w[0] == ("t", 1) and len(w) > 1 for w in relators)
    for w in relators:
        assert evaluate_word(lg, w).is_identity()


def test_build_eps2_sphere():
    m = build_slightly_degenerate("epsilon", 2)
    assert m.n_flags == 8
    info = cells_and_surface(m)
    assert info.orientability == "orientable"
    assert info.signed_genus == 0


def test_build_slightly_degenerate_validation():
    with pytest.raises(ValueError):
        build_slightly_degenerate("epsilon", 1)
    with pytest.raises(ValueError):
        build_slightly_degenerate("zeta", 3)


def test_lcm_vector_idempotent():
    v = context_vector(build_degenerate(7, 4))
    assert lcm_vector_predict(v, v) == v


def test_lcm_vector_dm7():
    v = context_vector(build_degenerate(7, 4))
    w = context_vector(build_degenerate(7, 6))
    assert lcm_vector_predict(v, w).orders == (1, 2, 2, 2, 2, 12, 12)
    assert lcm_vector_predict(v, w) == dm_vector(7, 12)


def test_lcm_vector_dm2_dm3():
    v = context_vector(build_degenerate(2))
    w = context_vector(build_degenerate(3))
    assert lcm_vector_predict(v, w).orders == (2, 1, 2, 2, 2, 2, 2)
    assert lcm_vector_predict(v, w) == dm_vector(6, 2)


def families_with_order_at_most(limit):
    maps = []
    for index in (6, 7, 8):
        for k in range(1, 13):
            if 2 * k <= limit:
                maps.append((f"DM{index}({k})", build_degenerate(index, k)))
    for family in ("epsilon", "delta"):
        for k in range(2, 13):
            if 4 * k <= limit:
                maps.append((f"{family}_{k}", build_slightly_degenerate(family, k)))
    return maps


def test_lcm_property_spot_pairs():
    samples = families_with_order_at_most(24)
    for name_m, m in samples[:6]:
        for name_n, n in samples[6:12]:
            product = parallel_product(m, n).product
            assert context_vector(product) == \
                lcm_vector_predict(context_vector(m), context_vector(n)), \
                (name_m, name_n)


@pytest.mark.parametrize("k", [3, 5, 7])
def test_petrie_of_eps_is_delta_odd(k):
    eps = build_slightly_degenerate("epsilon", k)
    delta = build_slightly_degenerate("delta", k)
    assert isomorphism(pe(eps), delta, mode="generalized") is not None


def test_triality_permutes_vector(tetrahedron, c4_sphere):
    for m in (tetrahedron, c4_sphere, build_degenerate(6, 4)):
        e = context_vector(m).orders
        assert context_vector(du(m)).orders == \
            (e[1], e[0], e[2], e[3], e[5], e[4], e[6])
        assert context_vector(pe(m)).orders == \
            (e[0], e[3], e[2], e[1], e[4], e[6], e[5])


def test_degenerate_families_exhaustive_at_small_scale(default_census):
    """All degenerate reflexible maps with |Mon| <= 24 are DM family rows."""
    expected = set()
    for index in (1, 2, 3, 4, 5, 9, 10, 11, 12):
        expected.add(dm_vector(index).orders)
    for index in (6, 7, 8):
        for k in range(1, 13):
            expected.add(dm_vector(index, k).orders)
    census_degenerate = {
        entry.vector for entry in default_census.entries
        if entry.group_order <= 24 and classify_vector(
            ContextVector(entry.vector)) == "degenerate"}
    expected_in_range = {v for v in expected
                         if dm_order_of_vector(v) <= 24}
    assert census_degenerate == expected_in_range


def dm_order_of_vector(v):
    for index in (1, 2, 3, 4, 5, 9, 10, 11, 12):
        if dm_vector(index).orders == v:
            return dm_group_order(index)
    for index in (6, 7, 8):
        for k in range(1, 13):
            if dm_vector(index, k).orders == v:
                return dm_group_order(index, k)
    raise AssertionError(f"unexpected degenerate vector {v}")


@settings(deadline=None, max_examples=20)
@given(st.sampled_from([6, 7, 8]), st.integers(1, 8))
def test_dm_families_have_table_order(index, k):
    m = build_degenerate(index, k)
    assert m.n_flags == 2 * k
    assert context_vector(m) == dm_vector(index, k)


def test_one_cycle_embeddings_are_dm11_dm12():
    # the 1-cycle in the sphere is DM11; in the projective plane it is DM12
    dm11 = build_degenerate(11)
    info = cells_and_surface(dm11)
    assert info.orientability == "orientable"
    assert info.signed_genus == 0
    dm12 = build_degenerate(12)
    info = cells_and_surface(dm12)
    assert info.orientability == "non-orientable"
    assert info.signed_genus == -1
