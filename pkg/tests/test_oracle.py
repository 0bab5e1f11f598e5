from itertools import permutations

import numpy as np
import pytest

from basechar import oracle
from basechar.errors import CapacityError, ConsistencyError, InputError
from basechar.oracle import (InducedAction, act_on_subsets,
                             act_on_uniform_partitions, alternating_group,
                             base_size_bruteforce, closure, compose,
                             distinguishing_number, format_cycles,
                             identity_perm, inverse, is_base_controlling,
                             kernel_order, label_homomorphism_spot_check,
                             natural_action, orbit_counts_bruteforce,
                             parse_cycles, parse_group_spec, perm_sign, pgl2,
                             product_action_wreath, regular_orbits_on_tuples,
                             symmetric_group, trivial_group, with_sign_labels)
from reference_impls import blind_orbit_data


def test_perm_primitives():
    p = (1, 2, 0, 4, 3)
    assert compose(p, inverse(p)) == identity_perm(5)
    assert compose((1, 0, 2), (0, 2, 1)) == (2, 0, 1)  # left factor first
    assert perm_sign((1, 0, 2, 3)) == -1
    assert perm_sign((1, 2, 0)) == 1
    assert perm_sign(identity_perm(6)) == 1


def test_parse_and_format_cycles():
    assert parse_cycles("(1,2)(3,4)", 5) == (1, 0, 3, 2, 4)
    assert parse_cycles("()", 3) == (0, 1, 2)
    assert parse_cycles(" (1, 3) ", 3) == (2, 1, 0)
    assert format_cycles((1, 0, 3, 2, 4)) == "(1,2)(3,4)"
    assert format_cycles(identity_perm(4)) == "()"
    for text in ("(1,2", "(1,a)", "(1,1)", "(1,2)(2,3)", "(9)"):
        with pytest.raises(InputError):
            parse_cycles(text, 4)


def test_closure_labeled_s4():
    transposition = parse_cycles("(1,2)", 4)
    four_cycle = parse_cycles("(1,2,3,4)", 4)
    group = closure([transposition, four_cycle], labels=[-1, -1])
    assert group.order == 24
    assert sum(1 for x in group.labels if x == 1) == 12
    assert set(group.elements) == set(permutations(range(4)))


def test_closure_trivial_and_errors():
    assert closure([], degree=5).order == 1
    assert trivial_group(5).order == 1
    with pytest.raises(InputError):
        closure([])
    with pytest.raises(InputError):
        closure([(0, 1, 2), (1, 0)])  # mixed degrees
    with pytest.raises(InputError):
        closure([(0, 2, 1)], labels=[-1, 1])  # label count mismatch
    with pytest.raises(InputError):
        closure([(0, 2, 1)], labels=[2])
    with pytest.raises(CapacityError):
        closure([parse_cycles("(1,2)", 6), parse_cycles("(1,2,3,4,5,6)", 6)],
                max_order=50)


def test_closure_inconsistent_labels():
    # (1,2,3) = (1,2)(1,3) is even; labeling it -1 cannot be a homomorphism
    gens = [parse_cycles("(1,2)", 3), parse_cycles("(1,2,3)", 3)]
    with pytest.raises(InputError):
        closure(gens, labels=[-1, -1])


def test_symmetric_and_alternating():
    s4 = symmetric_group(4)
    assert s4.order == 24
    assert s4.labels == tuple(perm_sign(e) for e in s4.elements)
    a4 = alternating_group(4)
    assert a4.order == 12
    assert a4.labels is None
    assert all(perm_sign(e) == 1 for e in a4.elements)
    with pytest.raises(CapacityError):
        symmetric_group(11)  # 11! is past the order bound
    with pytest.raises(InputError):
        symmetric_group(0)


def test_index_two_kernel_of_sign_labels():
    for group in (symmetric_group(4), symmetric_group(5), pgl2(5)):
        assert sum(1 for x in group.labels if x == 1) * 2 == group.order


def test_pgl2_examples():
    g7 = pgl2(7)
    assert g7.degree == 8
    assert g7.order == 336
    assert sum(1 for x in g7.labels if x == 1) == 168  # PSL_2(7)
    ident_index = g7.elements.index(identity_perm(8))
    assert g7.labels[ident_index] == 1
    g3 = pgl2(3)
    assert g3.degree == 4
    assert g3.order == 24
    assert set(g3.elements) == set(symmetric_group(4).elements)
    label_homomorphism_spot_check(g7, samples=100, seed=1)
    for q in (2, 9, 37):
        with pytest.raises(InputError):
            pgl2(q)


def test_spot_check_catches_tampered_labels():
    s4 = symmetric_group(4)
    labels = list(s4.labels)
    labels[5] = -labels[5]
    broken = oracle.LabeledGroup(4, s4.elements, tuple(labels))
    with pytest.raises(ConsistencyError):
        label_homomorphism_spot_check(broken, samples=200, seed=0)
    with pytest.raises(InputError):
        label_homomorphism_spot_check(alternating_group(4))


def test_act_on_subsets():
    action = act_on_subsets(symmetric_group(4), 2)
    assert action.degree == 6
    assert action.order == 24
    assert action.point_names[0] == "{1,2}"
    assert kernel_order(action) == 1
    with pytest.raises(InputError):
        act_on_subsets(symmetric_group(4), 5)


def test_act_on_uniform_partitions():
    action = act_on_uniform_partitions(symmetric_group(6), 3, 2)
    assert action.degree == 15
    assert "12|34|56" in action.point_names
    small = act_on_uniform_partitions(symmetric_group(4), 2, 2)
    assert small.degree == 3
    assert small.point_names == ("12|34", "13|24", "14|23")
    swap = small.table[symmetric_group(4).elements.index((1, 0, 2, 3))]
    assert swap.tolist() == [0, 2, 1]  # (1 2) swaps 13|24 and 14|23
    assert kernel_order(small) == 4  # the double transpositions act trivially
    with pytest.raises(InputError):
        act_on_uniform_partitions(symmetric_group(6), 4, 2)


def test_wreath_product_action():
    wreath = product_action_wreath(symmetric_group(3), 2)
    assert wreath.degree == 9
    assert wreath.order == 72
    assert wreath.labels is not None
    assert int((wreath.labels == 1).sum()) * 2 == wreath.order
    assert kernel_order(wreath) == 1
    # explicit trivial top group: just the direct square
    square = product_action_wreath(symmetric_group(3), 2,
                                   top_generators=[identity_perm(2)])
    assert square.order == 36
    with pytest.raises(InputError):
        product_action_wreath(symmetric_group(3), 0)


def test_wreath_rows_are_permutations():
    wreath = product_action_wreath(symmetric_group(3), 2)
    for row in wreath.table:
        assert sorted(row.tolist()) == list(range(9))
    assert len({tuple(row.tolist()) for row in wreath.table}) == 72


def test_capacity_errors_on_induced_actions():
    with pytest.raises(CapacityError):
        product_action_wreath(symmetric_group(5), 3)  # order 120^3 * 6
    with pytest.raises(CapacityError):
        product_action_wreath(trivial_group(10), 5)  # degree 10^5
    with pytest.raises(CapacityError):
        act_on_subsets(symmetric_group(10), 2)  # order 10! past the bound


def test_regular_orbits_examples():
    s3 = natural_action(symmetric_group(3))
    assert regular_orbits_on_tuples(s3, 2) == 1
    g7 = natural_action(pgl2(7))
    assert [regular_orbits_on_tuples(g7, l) for l in (1, 2, 3)] == [0, 0, 1]
    with pytest.raises(InputError):
        regular_orbits_on_tuples(s3, -1)


def test_base_size_examples():
    assert base_size_bruteforce(natural_action(symmetric_group(4))) == 3
    assert base_size_bruteforce(natural_action(pgl2(7))) == 3
    assert base_size_bruteforce(natural_action(alternating_group(5))) == 3
    assert base_size_bruteforce(
        act_on_uniform_partitions(symmetric_group(6), 3, 2)) == 4
    with pytest.raises(InputError):
        base_size_bruteforce(act_on_uniform_partitions(symmetric_group(4), 2, 2))


def test_base_size_invariant_under_point_relabeling():
    action = act_on_subsets(symmetric_group(5), 2)
    rng = np.random.default_rng(3)
    relabel = rng.permutation(action.degree)
    table = np.empty_like(action.table)
    table[:, relabel] = relabel[action.table]
    shuffled = InducedAction(action.degree, table, action.labels,
                             tuple(action.point_names[i]
                                   for i in np.argsort(relabel)),
                             action.description)
    assert base_size_bruteforce(shuffled) == base_size_bruteforce(action)


def test_orbit_counts_examples():
    s3 = natural_action(symmetric_group(3))
    assert orbit_counts_bruteforce(s3, 2) == (2, 3)
    assert orbit_counts_bruteforce(s3, 0) == (1, 1)
    assert orbit_counts_bruteforce(s3, 1) == (1, 1)
    with pytest.raises(InputError):
        orbit_counts_bruteforce(natural_action(alternating_group(4)), 1)


def test_orbit_counts_sandwich():
    # each full-group orbit is one or two kernel orbits
    for action in (natural_action(symmetric_group(4)),
                   act_on_subsets(symmetric_group(5), 2),
                   natural_action(pgl2(5))):
        for l in range(4):
            o, o_k = orbit_counts_bruteforce(action, l)
            assert o <= o_k <= 2 * o


def test_pruned_search_equals_blind_enumeration():
    actions = (natural_action(symmetric_group(3)),
               natural_action(symmetric_group(4)),
               natural_action(alternating_group(4)),
               act_on_uniform_partitions(symmetric_group(4), 2, 2))
    for action in actions:
        for l in range(4):
            data = blind_orbit_data(action.table, l)
            o = oracle._tree_counts(action.table, l,
                                    np.arange(action.order))[0]
            assert o == len(data)
            regular = sum(1 for _, stab in data if stab == 1)
            assert regular_orbits_on_tuples(action, l) == regular


def test_is_base_controlling_subsets():
    for n, k in ((5, 1), (5, 2), (6, 2), (7, 2)):
        action = act_on_subsets(symmetric_group(n), k)
        assert is_base_controlling(action).controlling
    big = act_on_subsets(symmetric_group(7), 3)
    assert is_base_controlling(big, max_degree=40).controlling
    with pytest.raises(CapacityError):
        is_base_controlling(big)  # degree 35 past the default subset bound


def test_is_base_controlling_pgl2_and_wreath():
    assert is_base_controlling(natural_action(pgl2(7))).controlling
    assert is_base_controlling(natural_action(pgl2(5))).controlling
    wreath = product_action_wreath(symmetric_group(3), 2)
    verdict = is_base_controlling(wreath)
    # (g_1, g_2; sigma) labels ignore sigma, so the coordinate swap is an
    # unlabeled stabilizer element: the product labeling cannot control bases
    assert not verdict.controlling


def test_is_base_controlling_counterexample_shape():
    action = act_on_uniform_partitions(symmetric_group(4), 2, 2)
    # the action kernel V_4 is all even, so any set pinning down the image
    # group leaves a nontrivial all-plus stabilizer
    verdict = is_base_controlling(action)
    assert not verdict.controlling
    assert verdict.label_image == (1,)
    assert verdict.stabilizer_order >= 4
    assert isinstance(verdict.counterexample, tuple)


def test_is_base_controlling_degenerate_inputs():
    s4 = symmetric_group(4)
    all_plus = InducedAction(4, s4.table(),
                             np.ones(24, dtype=np.int8),
                             tuple("1234"), "all-plus labels")
    with pytest.raises(InputError):
        is_base_controlling(all_plus)
    with pytest.raises(InputError):
        is_base_controlling(natural_action(alternating_group(4)))
    lopsided = InducedAction(4, s4.table(),
                             np.array([1] * 23 + [-1], dtype=np.int8),
                             tuple("1234"), "non-homomorphism labels")
    with pytest.raises(InputError):
        is_base_controlling(lopsided)


def test_distinguishing_numbers():
    for r in (2, 3, 4):
        assert distinguishing_number(symmetric_group(r)) == r
    assert distinguishing_number(trivial_group(5)) == 1
    swap = closure([parse_cycles("(1,2)", 2)])
    assert distinguishing_number(swap) == 2
    assert distinguishing_number(alternating_group(4)) == 3
    with pytest.raises(CapacityError):
        distinguishing_number(trivial_group(13))


def test_kernel_order():
    assert kernel_order(natural_action(symmetric_group(3))) == 1
    assert kernel_order(
        act_on_uniform_partitions(symmetric_group(4), 2, 2)) == 4


def test_parse_group_spec_forms():
    parsed = parse_group_spec("sn:6/subsets:2")
    assert parsed.action.degree == 15
    assert parsed.base_kind == "sn"
    assert parsed.base_param == 6
    assert parsed.action_tags == ("subsets:2",)

    natural = parse_group_spec("sn:4")
    assert natural.action.degree == 4
    assert natural.action_tags == ()

    assert parse_group_spec("an:5").action.labels is None
    assert parse_group_spec("pgl2:7").action.degree == 8

    partitions = parse_group_spec("sn:6/partitions:3x2")
    assert partitions.action.degree == 15

    wreath = parse_group_spec("sn:3/wreath:2")
    assert wreath.action.degree == 9
    assert wreath.action.order == 72

    nested = parse_group_spec("sn:3/subsets:1/wreath:2")
    assert nested.action.degree == 9


def test_parse_group_spec_gens():
    parsed = parse_group_spec("gens:(1,2)(3,4);(1,2,3,4,5)")
    assert parsed.action.degree == 5
    assert parsed.action.order == 60  # both generators even: alternating
    signed = parse_group_spec("gens:!(1,2);(1,2,3)")
    assert signed.action.order == 6
    group = signed.base_group
    assert group.labels == tuple(perm_sign(e) for e in group.elements)


def test_parse_group_spec_errors():
    for spec in ("zz:3", "sn:x", "sn:4/cubes:2", "sn:4/partitions:22",
                 "gens:", "gens:(1,2", "sn:3/wreath:2/subsets:2",
                 "sn:3/wreath:2/partitions:3x1"):
        with pytest.raises(InputError):
            parse_group_spec(spec)
    with pytest.raises(InputError):
        parse_group_spec("sn:5", labels_mode="weird")
