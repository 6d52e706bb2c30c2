import random

import pytest

from unicyclic_eds.graph import Graph, GraphError, build_graph, eds, max_degree, relabel, wiener
from unicyclic_eds.matching import matching_number_unicyclic
from unicyclic_eds.families import (
    AttachmentSpec,
    BroomSpec,
    make_broom_graph,
    make_cycle,
    make_hnk,
    make_named,
)
from unicyclic_eds.enumeration import (
    UnicyclicCode,
    brute_force_isomorphic,
    code_matching_number,
    code_max_degree,
    code_to_graph,
    codes_for_size,
    dihedral_min,
    enumerate_rooted_trees,
    enumerate_unicyclic,
    graph6_decode,
    graph6_encode,
    labeled_oracle_enumerate,
    parse_code_text,
    rooted_tree_code,
    unicyclic_canonical_code,
)

# rooted-tree class counts on 1..10 vertices
ROOTED_TREE_COUNTS = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719]
# unicyclic class counts on 3..10 vertices
UNICYCLIC_COUNTS = [1, 2, 5, 13, 33, 89, 240, 657]


def test_rooted_tree_code_examples():
    single = Graph(1, [])
    assert rooted_tree_code(single, 0) == "()"
    path3 = build_graph(3, [(0, 1), (1, 2)])
    assert rooted_tree_code(path3, 0) == "((()))"
    cherry = build_graph(3, [(0, 1), (0, 2)])
    assert rooted_tree_code(cherry, 0) == "(()())"


def test_rooted_tree_code_detects_cycles():
    with pytest.raises(GraphError, match="cycle"):
        rooted_tree_code(make_cycle(4), 0)


def test_rooted_tree_class_counts():
    for size, expected in enumerate(ROOTED_TREE_COUNTS, start=1):
        assert len(codes_for_size(size)) == expected
    assert len(list(enumerate_rooted_trees(5))) == 9


def test_rooted_tree_codes_are_well_formed():
    for code in codes_for_size(7):
        assert len(code) == 14
        depth = 0
        for ch in code:
            depth += 1 if ch == "(" else -1
            assert depth >= 0
        assert depth == 0


def test_dihedral_min_reflection_convention():
    # reflection about position 0 maps (t0, t1, t2, t3) to (t0, t3, t2, t1)
    assert dihedral_min(("a", "c", "d", "b")) == ("a", "b", "d", "c")
    assert dihedral_min(("a", "c", "b")) == ("a", "b", "c")


def test_canonical_code_examples():
    assert unicyclic_canonical_code(make_cycle(5)) == UnicyclicCode(5, ("()",) * 5)
    u63 = make_named("U", 6, 3)
    sibling = make_broom_graph(
        BroomSpec(6, 4, (AttachmentSpec(1), AttachmentSpec(1), AttachmentSpec())))
    assert unicyclic_canonical_code(u63) != unicyclic_canonical_code(sibling)


def test_canonical_code_is_relabeling_invariant():
    rng = random.Random(991)
    pool = []
    for n in range(5, 11):
        pool.extend(g for _, g in enumerate_unicyclic(n, girth=rng.choice((3, 4, 5))))
    rng.shuffle(pool)
    trials = 0
    for g in pool:
        if trials >= 200:
            break
        base = unicyclic_canonical_code(g)
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert unicyclic_canonical_code(relabel(g, perm)) == base
        trials += 1
    assert trials == 200


def test_code_to_graph_round_trip():
    for n in range(4, 9):
        for code, g in enumerate_unicyclic(n):
            assert unicyclic_canonical_code(g) == code
            assert g.n == code.order


def test_code_text_round_trip():
    code = unicyclic_canonical_code(make_named("U", 9, 4))
    assert parse_code_text(code.text()) == code
    with pytest.raises(GraphError, match="canonical"):
        parse_code_text("3:(()),(),(())")   # rotated form is not minimal


def test_enumeration_counts():
    for n, expected in zip(range(3, 11), UNICYCLIC_COUNTS):
        assert sum(1 for _ in enumerate_unicyclic(n)) == expected


def test_enumeration_examples():
    assert sum(1 for _ in enumerate_unicyclic(4)) == 2
    assert sum(1 for _ in enumerate_unicyclic(5)) == 5
    assert sum(1 for _ in enumerate_unicyclic(6)) == 13


def test_enumeration_is_deterministic():
    first = [code.text() for code, _ in enumerate_unicyclic(9)]
    second = [code.text() for code, _ in enumerate_unicyclic(9)]
    assert first == second
    ks = [code.cycle_len for code, _ in enumerate_unicyclic(8)]
    assert ks == sorted(ks)


def test_enumeration_filters():
    for code, g in enumerate_unicyclic(9, girth=5):
        assert code.cycle_len == 5
    for code, g in enumerate_unicyclic(9, matching=3):
        assert matching_number_unicyclic(g) == 3
    for code, g in enumerate_unicyclic(9, max_degree=4):
        assert max_degree(g) == 4
    full = {code for code, _ in enumerate_unicyclic(8)}
    by_matching = {code for m in range(1, 5)
                   for code, _ in enumerate_unicyclic(8, matching=m)}
    assert by_matching == full


def test_code_filter_helpers_agree_with_direct_computation():
    for n in range(4, 10):
        for code, g in enumerate_unicyclic(n):
            assert code_matching_number(code.cycle_len, code.trees) == \
                matching_number_unicyclic(g)
            assert code_max_degree(code.cycle_len, code.trees) == max_degree(g)


def test_labeled_oracle_counts_and_fingerprints():
    for n in range(3, 7):
        oracle = labeled_oracle_enumerate(n)
        mine = list(enumerate_unicyclic(n))
        assert len(oracle) == len(mine)
        oracle_fp = sorted((eds(g), wiener(g), matching_number_unicyclic(g))
                           for g in oracle)
        mine_fp = sorted((eds(g), wiener(g), matching_number_unicyclic(g))
                         for _, g in mine)
        assert oracle_fp == mine_fp


def test_canonical_completeness_against_oracle():
    # distinct codes <=> non-isomorphic, certified by the brute-force tester
    for n in (5, 6, 7):
        reps = labeled_oracle_enumerate(n)
        codes = [unicyclic_canonical_code(g) for g in reps]
        assert len(set(codes)) == len(codes)
        for i, g in enumerate(reps):
            for j in range(i + 1, len(reps)):
                assert not brute_force_isomorphic(g, reps[j])


def test_brute_force_isomorphic():
    g1 = make_named("U", 8, 3)
    perm = [3, 5, 7, 0, 2, 4, 6, 1]
    assert brute_force_isomorphic(g1, relabel(g1, perm))
    assert not brute_force_isomorphic(g1, make_named("U1", 8, 3))


def test_graph6_round_trip():
    for g in [make_cycle(5), make_named("U", 10, 5), make_hnk(12, 7),
              build_graph(1, []), build_graph(2, [(0, 1)])]:
        assert graph6_decode(graph6_encode(g)).edges == g.edges
    assert graph6_encode(make_cycle(4)) == "Cl"


def test_graph6_large_order_header():
    g = make_hnk(70, 5)
    back = graph6_decode(graph6_encode(g))
    assert back.n == 70 and back.edges == g.edges


def test_graph6_rejects_garbage():
    with pytest.raises(GraphError):
        graph6_decode("")
    with pytest.raises(GraphError):
        graph6_decode("D")   # truncated body
