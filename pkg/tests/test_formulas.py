import pytest

from unicyclic_eds.graph import eds, transmission, wiener
from unicyclic_eds.families import (
    CycleSpec,
    HnkSpec,
    NamedSpec,
    build_family,
    make_cycle,
    make_unk,
)
from unicyclic_eds.formulas import (
    FormulaError,
    FormulaId,
    eds_cycle,
    eval_formula,
    predicted_extremal,
)


def test_eval_examples():
    assert eval_formula(FormulaId.G1, m=5) == 672
    assert eval_formula(FormulaId.F1, n=9, m=4) == 484
    assert eval_formula(FormulaId.EQ22_K3, n=5) == 80


def test_eval_rejects_bad_parameters():
    with pytest.raises(FormulaError):
        eval_formula(FormulaId.G1)
    with pytest.raises(FormulaError):
        eval_formula(FormulaId.EQ21_EVEN, n=6, k=5)     # odd k
    with pytest.raises(FormulaError):
        eval_formula(FormulaId.EQ22_EVEN, n=5, k=4)     # needs n >= k + 2
    with pytest.raises(FormulaError):
        eval_formula(FormulaId.EQ22_ODD, n=9, k=3)      # odd branch starts at 5


def test_general_forms_collapse_to_perfect_matching_forms():
    for m in range(2, 51):
        assert eval_formula(FormulaId.F1, n=2 * m, m=m) == eval_formula(FormulaId.G1, m=m)
        assert eval_formula(FormulaId.F2, n=2 * m, m=m) == eval_formula(FormulaId.G2, m=m)


def test_cycle_formulas_match_direct_computation():
    for k in range(3, 21):
        cycle = make_cycle(k)
        assert eval_formula(FormulaId.EQ23_W, k=k) == wiener(cycle)
        assert eval_formula(FormulaId.EQ23_D, k=k) == transmission(cycle, 0)
        assert eds_cycle(k) == eds(cycle)


def test_cycle_eds_closed_forms():
    for m in range(2, 11):
        assert eds_cycle(2 * m) == 2 * m**4
        assert eds_cycle(2 * m + 1) == 2 * m**4 + 3 * m**3 + m * m


def test_second_minimal_girth_form_agrees_everywhere():
    for n in range(5, 13):
        for k in range(3, n - 1):
            if k == 3:
                value = eval_formula(FormulaId.EQ22_K3, n=n)
            elif k % 2 == 0:
                value = eval_formula(FormulaId.EQ22_EVEN, n=n, k=k)
            else:
                value = eval_formula(FormulaId.EQ22_ODD, n=n, k=k)
            assert value == eds(make_unk(n, k)), (n, k)


def test_minimal_girth_form_known_discrepancies():
    assert eval_formula(FormulaId.EQ21_EVEN, n=6, k=4) == 140
    assert eval_formula(FormulaId.EQ21_ODD, n=5, k=3) == 57


def test_prediction_examples():
    pred = predicted_extremal(10, 3, 1)
    assert pred.value == 496 and pred.families == (NamedSpec("U", 10, 3),)
    pred = predicted_extremal(13, 4, 2)
    assert pred.value == 1088
    assert build_family(pred.families[0]).n == 13
    pred = predicted_extremal(5, 2, 2)
    assert pred.value == 60 and pred.families == (CycleSpec(5),)


def test_prediction_regime_splits():
    assert predicted_extremal(9, 3, 1).value == 388     # small-n branch
    assert predicted_extremal(10, 3, 1).value == 496    # large-n branch
    assert predicted_extremal(15, 4, 2).families[0].cycle_len == 5
    assert predicted_extremal(16, 4, 2).families == (NamedSpec("U1", 16, 4),)
    assert predicted_extremal(5, 2, 2).families == (CycleSpec(5),)
    assert predicted_extremal(6, 2, 2).families == (HnkSpec(6, 4),)
    assert predicted_extremal(8, 4, 1).value == 373
    assert predicted_extremal(9, 4, 1).families == (NamedSpec("U", 9, 4),)


def test_prediction_uncovered_regimes():
    assert predicted_extremal(3, 1, 1) is None
    assert predicted_extremal(9, 5, 1) is None          # m > n/2
    with pytest.raises(FormulaError):
        predicted_extremal(10, 4, 3)


def test_predictions_agree_with_tables():
    from unicyclic_eds.tables import table_cells
    for cell in table_cells():
        pred = predicted_extremal(cell.n, cell.m, cell.rank)
        assert pred is not None
        expected = cell.corrected_value if cell.corrected_value is not None else cell.value
        assert pred.value == expected, (cell.n, cell.m, cell.rank)
