import pytest

from unicyclic_eds.graph import eds, max_degree
from unicyclic_eds.matching import matching_number_unicyclic
from unicyclic_eds.families import (
    AttachmentSpec,
    BroomSpec,
    CycleSpec,
    FamilyError,
    FamilySyntaxError,
    HnkSpec,
    NamedSpec,
    SunSpec,
    UnkSpec,
    build_family,
    format_family_spec,
    make_broom_graph,
    make_cycle,
    make_hnk,
    make_named,
    make_sun,
    make_unk,
    parse_family_spec,
)
from unicyclic_eds.formulas import FormulaId, eval_formula
from unicyclic_eds.enumeration import unicyclic_canonical_code


def test_basic_constructors():
    assert eds(make_hnk(6, 3)) == 91
    assert eds(make_unk(5, 3)) == 80
    assert eds(make_cycle(6)) == 162


def test_constructor_ranges():
    with pytest.raises(FamilyError):
        make_hnk(5, 2)
    with pytest.raises(FamilyError):
        make_unk(5, 4)   # needs k <= n - 2
    with pytest.raises(FamilyError):
        make_cycle(2)


def test_broom_graph_examples():
    pent = make_broom_graph(BroomSpec(8, 5, (AttachmentSpec(1),) * 3))
    assert eds(pent) == 373
    u63 = make_broom_graph(
        BroomSpec(6, 3, (AttachmentSpec(1, (1,)), AttachmentSpec(), AttachmentSpec())))
    assert eds(u63) == 148
    pent92 = make_broom_graph(
        BroomSpec(9, 5, (AttachmentSpec(1), AttachmentSpec(2), AttachmentSpec(1))))
    assert eds(pent92) == 492


def test_broom_graph_validation():
    with pytest.raises(FamilyError, match="budget"):
        make_broom_graph(BroomSpec(12, 3, (AttachmentSpec(3, (1, 1)), AttachmentSpec(),
                                           AttachmentSpec())))
    with pytest.raises(FamilyError, match="position"):
        make_broom_graph(BroomSpec(8, 3, (AttachmentSpec(1), AttachmentSpec(0, (1,)),
                                          AttachmentSpec())))
    with pytest.raises(FamilyError, match="position"):
        make_broom_graph(BroomSpec(9, 5, (AttachmentSpec(0, (1,)), AttachmentSpec(),
                                          AttachmentSpec())))


def test_named_values():
    assert eds(make_named("U", 10, 5)) == 672
    assert eds(make_named("U1", 12, 6)) == 1112
    assert eds(make_named("U", 8, 4)) == 377
    assert eds(make_named("Ustar", 6, 3)) == 141
    assert eds(make_named("U2", 6, 3)) == 148
    assert eds(make_named("U2star", 6, 3)) == 191
    assert eds(make_named("U3star", 6, 3)) == 192


def test_named_matching_and_degree():
    # hub family attains degree n-m+1, the five siblings attain n-m
    for n, m in [(8, 4), (10, 5), (11, 4), (12, 3)]:
        g = make_named("U", n, m)
        assert matching_number_unicyclic(g) == m
        assert max_degree(g) == n - m + 1
    for tag in ("U1", "U2", "Ustar", "U2star", "U3star"):
        for n, m in [(10, 4), (11, 5), (12, 3)]:
            g = make_named(tag, n, m)
            assert matching_number_unicyclic(g) == m, (tag, n, m)
            assert max_degree(g) == n - m, (tag, n, m)


def test_every_construction_is_connected_unicyclic_of_declared_order():
    from unicyclic_eds.graph import is_connected
    graphs = [
        (make_cycle(9), 9),
        (make_hnk(11, 6), 11),
        (make_unk(10, 5), 10),
        (make_sun(7), 14),
        (make_named("U", 13, 5), 13),
        (make_named("U1", 14, 6), 14),
        (make_named("U3star", 12, 4), 12),
        (build_family(parse_family_spec("H(14,3;[1^3 2^2 S{3}],[1^0],[1^0])")), 14),
    ]
    for g, n in graphs:
        assert g.n == n
        assert len(g.edges) == n
        assert is_connected(g)


def test_named_parameter_validation():
    with pytest.raises(FamilyError):
        make_named("U1", 8, 2)     # needs m >= 3
    with pytest.raises(FamilyError):
        make_named("U", 5, 4)      # exponents negative
    with pytest.raises(FamilyError, match="degenerates"):
        make_named("U", 7, 4)      # builds, but matching number is 3
    with pytest.raises(FamilyError, match="unknown"):
        make_named("Uother", 8, 3)


def test_named_small_m_coincidences():
    code = unicyclic_canonical_code
    assert code(make_named("U", 9, 2)) == code(make_hnk(9, 3))
    assert code(make_named("U2star", 9, 2)) == code(make_hnk(9, 4))
    assert code(make_named("U2star", 4, 2)) == code(make_cycle(4))


def test_sun_values_match_closed_forms():
    for m in range(5, 13):
        fid = FormulaId.SUN_EVEN if m % 2 == 0 else FormulaId.SUN_ODD
        assert eds(make_sun(m)) == eval_formula(fid, m=m)
    assert eds(make_sun(6)) == 1596
    assert eds(make_sun(5)) == 755


def test_parse_round_trip():
    texts = [
        "C(7)", "Hnk(10,4)", "Unk(9,5)", "Sun(6)", "U(10,5)", "U1(12,6)",
        "Ustar(8,3)", "U2star(9,2)", "U3star(10,4)",
        "H(8,5;[1^1],[1^1],[1^1])",
        "H(14,3;[1^3 2^2 S{3}],[1^0],[1^0])",
    ]
    for text in texts:
        spec = parse_family_spec(text)
        assert parse_family_spec(format_family_spec(spec)) == spec


def test_parse_examples():
    assert parse_family_spec("U(10,5)") == NamedSpec("U", 10, 5)
    assert parse_family_spec("Hnk(10,4)") == HnkSpec(10, 4)
    assert parse_family_spec("C(5)") == CycleSpec(5)
    assert parse_family_spec("Sun(7)") == SunSpec(7)
    assert parse_family_spec("Unk(9,4)") == UnkSpec(9, 4)
    spec = parse_family_spec("H(6,3;[1^1 2^1],[1^0],[1^0])")
    assert spec == BroomSpec(6, 3, (AttachmentSpec(1, (1,)), AttachmentSpec(),
                                    AttachmentSpec()))
    assert parse_family_spec(" U( 10 , 5 ) ") == NamedSpec("U", 10, 5)


def test_parse_normalizes_brooms():
    spec = parse_family_spec("H(12,3;[1^0 S{3,1,2}],[1^0],[1^0])")
    assert spec.attachments[0].brooms == (1, 2, 3)
    assert format_family_spec(spec) == "H(12,3;[1^0 2^1 S{2,3}],[1^0],[1^0])"


def test_parse_syntax_errors_carry_positions():
    with pytest.raises(FamilySyntaxError) as err:
        parse_family_spec("U(10;5)")
    assert err.value.position == 4
    with pytest.raises(FamilySyntaxError):
        parse_family_spec("B(3)")
    with pytest.raises(FamilySyntaxError):
        parse_family_spec("U(10,5) trailing")
    with pytest.raises(FamilySyntaxError):
        parse_family_spec("H(6,3;[2^1],[1^0],[1^0])")   # attachment must open with 1^


def test_parse_budget_error():
    # declared 12 vertices, construction only has 10
    with pytest.raises(FamilyError, match="budget"):
        parse_family_spec("H(12,3;[1^3 2^2],[1^0],[1^0])")


def test_build_family_dispatch():
    assert eds(build_family(parse_family_spec("U(10,5)"))) == 672
    assert eds(build_family(parse_family_spec("C(5)"))) == 60
    assert eds(build_family(parse_family_spec("Sun(6)"))) == 1596
