from django.test import override_settings

from pseudolines import oracle
from pseudolines.conf import DEFAULTS, configure_worker, get_setting, resolved_settings
from pseudolines.exceptions import EnumerationRangeError, UnknownClaim
from pseudolines.oracle import (
    CHEAP, EXPENSIVE, STANDARD, Claim, Instance, check_instance, claim_ids, degree_sequence_census,
    find_two_switch_witness, get_claim, verify_all, verify_constructions,
)
from pseudolines.realizer import DegreeSequence, accepted_sequences
from pseudolines.serializers import dumps, run_to_dict
from pseudolines.signals import claim_failed, verification_finished

import pytest

def test_claim_registry():
    ids = claim_ids()
    assert len(ids) == len(set(ids))
    assert {'diameter', 'outer-diametrical', 'census', 'two-switch'} <= set(ids)
    assert get_claim('diameter').cost == CHEAP
    with pytest.raises(UnknownClaim):
        get_claim('two-switch')

def test_claim_costs():
    assert Claim('a', '', None, CHEAP).applies_to(9)
    assert not Claim('b', '', None, STANDARD).applies_to(6)
    assert Claim('b', '', None, STANDARD).applies_to(9, enumerated=False)
    assert Claim('c', '', None, EXPENSIVE).applies_to(5)
    assert not Claim('c', '', None, EXPENSIVE).applies_to(6, enumerated=False)

def test_check_instance(four):
    checked, failures = check_instance(Instance.from_diagram(four), claim_ids())
    assert failures == []
    assert checked == [claim.id for claim in oracle.CLAIMS]

def test_verify_three_wires():
    run = verify_all(3)
    assert run.passed
    assert run.instance_counts == {3: 2}
    assert run.checks['diameter'] == 2
    assert run.checks['census'] == 1
    assert 'two-switch' not in run.checks

def test_verify_four_wires():
    run = verify_all(4)
    assert run.passed, run.failures
    assert run.instance_counts == {3: 2, 4: 16}
    assert run.checks['two-switch'] == 1

def test_verification_runs_serialize_identically():
    assert dumps(run_to_dict(verify_all(4))) == dumps(run_to_dict(verify_all(4)))

@pytest.mark.slow
@override_settings(PSEUDOLINES_EXPENSIVE_CLAIMS_MAX_N=3)
def test_parallel_workers_see_the_settings():
    serial, parallel = verify_all(4), verify_all(4, jobs=2)
    assert serial.checks['quadrant'] == 2
    assert parallel.checks == serial.checks

def test_worker_settings_are_resolved():
    with override_settings(PSEUDOLINES_PATH_CAP=7):
        values = resolved_settings()
    assert values['PSEUDOLINES_PATH_CAP'] == 7
    assert set(values) == set(DEFAULTS)
    with override_settings():
        configure_worker(values)
        assert get_setting('PSEUDOLINES_PATH_CAP') == 7
    assert get_setting('PSEUDOLINES_PATH_CAP') == DEFAULTS['PSEUDOLINES_PATH_CAP']

def test_verify_diameter_up_to_five():
    run = verify_all(5, claims=['diameter'])
    assert run.passed
    assert run.total_instances == 2 + 16 + 768
    assert run.claims == ('diameter',)

@pytest.mark.parametrize('n_max', [2, 7])
def test_verify_range(n_max):
    with pytest.raises(EnumerationRangeError):
        verify_all(n_max)

def test_verify_six_needs_opt_in():
    with pytest.raises(EnumerationRangeError):
        verify_all(6, claims=['diameter'])

def test_verify_unknown_claim():
    with pytest.raises(UnknownClaim):
        verify_all(3, claims=['no-such-claim'])

def test_failures_are_signalled(monkeypatch):
    monkeypatch.setattr(oracle, 'CLAIMS', [Claim('always-wrong', 'fails on purpose', lambda inst: 'nope', CHEAP)])
    received = []

    def receiver(sender, **kwargs):
        received.append(kwargs)

    claim_failed.connect(receiver)
    try:
        run = verify_all(3, claims=['always-wrong'])
    finally:
        claim_failed.disconnect(receiver)
    assert not run.passed
    assert [f.claim for f in run.failures] == ['always-wrong', 'always-wrong']
    assert [r['instance'] for r in received] == [{'n': 3, 'swaps': [1, 2, 1]}, {'n': 3, 'swaps': [2, 1, 2]}]
    assert received[0]['witness'] == 'nope'

def test_finished_signal():
    runs = []

    def receiver(sender, run, **kwargs):
        runs.append(run)

    verification_finished.connect(receiver)
    try:
        run = verify_all(3, claims=['euler'])
    finally:
        verification_finished.disconnect(receiver)
    assert runs == [run]

def test_census():
    assert degree_sequence_census(3) == {DegreeSequence((2, 2, 2))}
    assert degree_sequence_census(4) == accepted_sequences(4)

def test_census_five_wires():
    assert degree_sequence_census(5) == accepted_sequences(5)

def test_two_switch_witness():
    witness = find_two_switch_witness()
    assert witness['diagram'] == {'n': 4, 'swaps': [1, 2, 1, 3, 2, 1]}
    assert witness['degree_sequence'] == [4, 3, 3, 2, 2, 2]

def test_verify_small_constructions():
    run = verify_constructions(5)
    assert run.passed, run.failures
    assert run.checks['realization'] == 5
    assert run.total_instances == 6
    assert any('star on 5 lines is inside' in note for note in run.notes)

@pytest.mark.slow
def test_verify_five_wires():
    run = verify_all(5)
    assert run.passed, run.failures[:3]
    assert run.checks['outer-diametrical'] == 786

@pytest.mark.slow
def test_verify_in_parallel():
    serial, parallel = verify_all(4), verify_all(4, jobs=2)
    assert parallel.passed
    assert parallel.instance_counts == serial.instance_counts
    assert parallel.checks == serial.checks

@pytest.mark.slow
def test_verify_constructions_up_to_nine():
    run = verify_constructions(9)
    assert run.passed, run.failures[:3]
    assert run.checks['realization'] == 25
    assert run.instance_counts[9] == 7 + 1
