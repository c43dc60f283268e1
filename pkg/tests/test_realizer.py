from pseudolines.exceptions import InvalidSequence
from pseudolines.geometry import degree_counts, is_simple
from pseudolines.graph import build_from_arrangement, degree_sequence_of
from pseudolines.realizer import (
    DegreeSequence, RealizationPlan, Rejection, RejectionCode, accepted_sequences, all_plans, check_sequence, realize,
)
from pseudolines.serializers import arrangement_to_dict, dumps

from hypothesis import given
from hypothesis import strategies as st
import pytest

def test_parse():
    assert DegreeSequence.parse('4^5 2^5').entries == (4,) * 5 + (2,) * 5
    assert DegreeSequence.parse('2, 3,4 ,3 2 2').entries == (4, 3, 3, 2, 2, 2)
    assert str(DegreeSequence.parse('2,4,3,3,2,2')) == '<4, 3^2, 2^3>'

def test_parse_error_position():
    with pytest.raises(InvalidSequence) as e:
        DegreeSequence.parse('2,x,2')
    assert e.value.position == 2
    with pytest.raises(InvalidSequence):
        DegreeSequence.parse('  ')

@pytest.mark.parametrize('text, position', [('2,2,0', 4), ('0^3 2', 0), ('3 2 2 0^2', 6)])
def test_parse_error_position_of_zero_degree(text, position):
    with pytest.raises(InvalidSequence) as e:
        DegreeSequence.parse(text)
    assert e.value.position == position

def test_sequence_invariants():
    with pytest.raises(InvalidSequence):
        DegreeSequence((2, 3))
    with pytest.raises(InvalidSequence):
        DegreeSequence((2, 0))
    assert DegreeSequence.of([2, 4, 3]).entries == (4, 3, 2)
    assert DegreeSequence.from_counts({4: 1, 2: 2}) == DegreeSequence((4, 2, 2))

@pytest.mark.parametrize('text, n, d2, branch, k', [
    ('2,2,2', 3, 3, 'odd', 0),
    ('4^5 2^5', 5, 5, 'odd', 0),
    ('4^3 3^4 2^3', 5, 3, 'odd', 2),
    ('4^4 3^2 2^4', 5, 4, 'even', 0),
    ('4^7 3^4 2^4', 6, 4, 'even', 1),
])
def test_accepted(text, n, d2, branch, k):
    plan = check_sequence(DegreeSequence.parse(text))
    assert plan.accepted
    assert (plan.n, plan.d2, plan.parity_branch, plan.k) == (n, d2, branch, k)
    assert plan.sequence == DegreeSequence.parse(text)

@pytest.mark.parametrize('degrees, code', [
    ((4, 4, 2, 2, 2, 2), RejectionCode.PARITY),
    ((5, 2, 2, 2), RejectionCode.NOT_234_DEGREES),
    ((1, 2, 2), RejectionCode.NOT_234_DEGREES),
    ((3, 2, 2), RejectionCode.COUNT_IDENTITY_FAIL),
    ((4, 2, 2, 2), RejectionCode.COUNT_IDENTITY_FAIL),
    ((3, 3, 2, 2), RejectionCode.COUNT_IDENTITY_FAIL),
    ((4,) * 5 + (3,) * 8 + (2, 2), RejectionCode.D2_RANGE),
])
def test_rejected(degrees, code):
    result = check_sequence(DegreeSequence.of(degrees))
    assert isinstance(result, Rejection)
    assert not result.accepted
    assert result.code == code
    assert result.message

def test_plan_shape():
    plan = RealizationPlan.for_lines(5, 4)
    assert (plan.star_size, plan.pulls, plan.k) == (5, 1, 0)
    plan = RealizationPlan.for_lines(5, 3)
    assert (plan.star_size, plan.pulls, plan.k) == (3, 0, 2)

def test_all_plans():
    plans = all_plans(9)
    assert len(plans) == 25
    assert [(p.n, p.d2) for p in plans] == sorted((p.n, p.d2) for p in plans)
    assert (4, 4) not in {(p.n, p.d2) for p in plans}
    assert (9, 9) in {(p.n, p.d2) for p in plans}

def test_accepted_sequences():
    assert accepted_sequences(3) == {DegreeSequence((2, 2, 2))}
    assert accepted_sequences(4) == {DegreeSequence((4, 3, 3, 2, 2, 2))}
    assert {str(s) for s in accepted_sequences(5)} == {'<4^3, 3^4, 2^3>', '<4^4, 3^2, 2^4>', '<4^5, 2^5>'}

def test_realize_examples():
    A = realize(check_sequence(DegreeSequence.parse('2,2,2')))
    assert A.n == 3
    A = realize(check_sequence(DegreeSequence.parse('4^4 3^2 2^4')))
    assert A.n == 5
    assert degree_counts(A) == {4: 4, 3: 2, 2: 4}
    A = realize(check_sequence(DegreeSequence.parse('4^3 3^4 2^3')))
    assert degree_sequence_of(build_from_arrangement(A)) == DegreeSequence.parse('4^3 3^4 2^3')

def test_realize_rejected():
    with pytest.raises(InvalidSequence):
        realize(check_sequence(DegreeSequence.of((4, 4, 2, 2, 2, 2))))

@pytest.mark.parametrize('plan', all_plans(7), ids=lambda plan: str(plan.sequence))
def test_realize_is_deterministic(plan):
    first, second = realize(plan), realize(plan)
    assert [line.coefficients for line in first.lines] == [line.coefficients for line in second.lines]
    assert dumps(arrangement_to_dict(first)) == dumps(arrangement_to_dict(second))

@pytest.mark.slow
@pytest.mark.parametrize('plan', all_plans(9), ids=lambda plan: str(plan.sequence))
def test_realize_every_plan(plan):
    A = realize(plan)
    assert A.n == plan.n
    assert is_simple(A).ok
    assert degree_sequence_of(build_from_arrangement(A)) == plan.sequence

@given(st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=40), st.randoms())
def test_decision_ignores_order(degrees, random):
    shuffled = list(degrees)
    random.shuffle(shuffled)
    first, second = check_sequence(degrees), check_sequence(shuffled)
    assert first == second
    if first.accepted:
        assert first.sequence == DegreeSequence.of(degrees)
