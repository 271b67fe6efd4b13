import json
from fractions import Fraction

import pytest

from logic.census import census_rows
from logic.report_generator import OutputFormat, ReportGenerator
from logic.tree import unrooted_census
from logic.verifier import LegResult, VerificationReport


@pytest.fixture
def reports():
    return ReportGenerator()


def test_values_in_every_format(reports):
    values = [1, Fraction(25, 2)]
    assert reports.render_values("c", [1, 4], values, OutputFormat.TABLE) == "1 25/2"
    assert json.loads(reports.render_values("c", [1, 4], values, OutputFormat.JSON)) == {
        'kind': "c", 'n': [1, 4], 'values': ["1", "25/2"],
    }
    assert reports.render_values("c", [1, 4], values, OutputFormat.TSV).splitlines() == [
        "n\tc", "1\t1", "4\t25/2",
    ]


def test_census_table_has_exact_columns(reports):
    text = reports.render_census_rows(census_rows(4), OutputFormat.TSV)
    header, *rows = text.splitlines()
    assert header.split("\t") == ["n", "a_n", "b_row", "c_n", "asymptotic_estimate"]
    assert rows[4].split("\t")[:4] == ["4", "36", "1 6 15 14", "25/2"]


def test_class_table_json(reports):
    payload = json.loads(reports.render_classes(2, unrooted_census(2), OutputFormat.JSON))
    assert payload['classes'] == 3
    assert payload['rooted_total'] == "3"
    assert payload['mass'] == "2"
    assert [row['code'] for row in payload['rows']] == ["(2 )", "(1 (1 ) )", "(1 ) (1 )"]
    assert [row['aut_order'] for row in payload['rows']] == [1, 2, 2]


def test_verification_template(reports):
    report = VerificationReport(
        n_max=3, bound=8, passport_bound=7,
        legs=[
            LegResult("sequence", True, 3, facts=["a_0..a_3 = 1 1 3 10"]),
            LegResult("unrooted", False, 3, discrepancy="sum of 1/|Aut| at weight 2: expected 2, got 1"),
        ],
    )
    text = reports.render_verification(report, OutputFormat.TABLE)
    assert text.startswith("Cross-verification up to n = 3")
    assert "a_0..a_3 = 1 1 3 10" in text
    assert "First discrepancy: unrooted: sum of 1/|Aut| at weight 2" in text
    assert text.rstrip().endswith("FAIL: 1/2 legs passed")
