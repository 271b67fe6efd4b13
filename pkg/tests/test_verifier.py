import json

import pytest

from logic import verifier
from logic.verifier import CrossVerifier, cross_verify


@pytest.fixture(scope="module")
def full_report():
    return cross_verify(8)


def test_full_run_passes(full_report):
    assert full_report.passed, full_report.first_discrepancy
    assert [leg.name for leg in full_report.legs] == list(CrossVerifier.LEG_NAMES)
    assert full_report.first_discrepancy is None


def test_full_run_records_weight_four_facts(full_report):
    facts = full_report.facts
    assert "rooted weight-4 total = 36" in facts
    assert "unrooted weight-4 classes = 16" in facts
    assert "weight-4 symmetry profile = {aut 1: 10, aut 2: 4, aut 4: 2}" in facts
    assert "c_4 = 25/2" in facts
    assert "a_0..a_8 = 1 1 3 10 36 137 543 2219 9285" in facts


def test_enumeration_legs_stop_at_their_bounds(full_report):
    by_name = {leg.name: leg for leg in full_report.legs}
    assert by_name["unrooted"].checked_up_to == 8
    assert by_name["passports"].checked_up_to == 7
    assert by_name["asymptotic"].checked_up_to == 400


def test_report_serialises(full_report):
    payload = json.loads(json.dumps(full_report.to_dict()))
    assert payload["status"] == "PASS"
    assert payload["summary"] == {'legs_run': 8, 'legs_passed': 8, 'legs_failed': 0}


def test_weight_four_run_includes_the_36_check():
    report = cross_verify(4)
    assert report.passed
    assert "rooted weight-4 total = 36" in report.facts


def test_zero_passes_vacuously():
    report = cross_verify(0)
    assert report.passed
    assert "rooted weight-4 total = 36" not in report.facts


def test_smaller_bound_limits_enumeration():
    report = cross_verify(6, bound=3, passport_bound=2)
    assert report.passed
    by_name = {leg.name: leg for leg in report.legs}
    assert by_name["unrooted"].checked_up_to == 3
    assert by_name["passports"].checked_up_to == 2


def test_mismatch_names_the_first_discrepancy(monkeypatch):
    monkeypatch.setattr(verifier, "b_row", lambda n: (1,) * n)
    report = cross_verify(3)
    assert not report.passed
    assert report.first_discrepancy.startswith("edge_refined: ")
    assert report.get_summary_stats()['legs_failed'] == 1


def test_negative_n_max_is_rejected():
    with pytest.raises(ValueError):
        cross_verify(-1)
