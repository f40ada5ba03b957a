import json

from graphs.classify import classify
from graphs.core import edgeless
from graphs.families import complete, cycle, prism
from services.census import CensusRecord
from services.render import (
    render_records,
    render_report,
    render_summary,
    render_verdict_table,
    render_verdicts_jsonl,
)
from services.theorems import (
    summarize,
    verify_complement_duality,
    verify_line_edge,
    verify_triangle_free_observation,
)


def test_report_as_text_and_json():
    report = classify(cycle(5))

    assert render_report(report) == report.to_text()
    assert json.loads(render_report(report, as_json=True)) == report.to_dict()


def test_records_text_lists_parameters_and_count():
    records = [CensusRecord.from_graph(cycle(5)), CensusRecord.from_graph(complete(3))]
    lines = render_records(records).splitlines()

    assert len(lines) == 3
    assert "srg=(5,2,0,1)" in lines[0]
    assert "pseudo=yes(1)" in lines[0]
    assert "srg=(3,2,1,-)" in lines[1]
    assert lines[-1] == "2 record(s)"


def test_records_json_lines():
    record = CensusRecord.from_graph(cycle(5))

    (line,) = render_records([record], as_json=True).splitlines()
    assert json.loads(line) == record.to_dict()


def test_empty_records():
    assert render_records([]) == "0 record(s)\n"
    assert render_records([], as_json=True) == ""


def test_summary_line():
    verdicts = [verify_complement_duality(cycle(5)), verify_complement_duality(complete(4))]

    assert render_summary(summarize(verdicts)) == (
        "verdicts: 2, agree: 2, disagreements: 0, excluded: 1, not applicable: 0\n"
    )


def test_verdict_table_rows():
    verdicts = [
        verify_complement_duality(cycle(5)),
        verify_complement_duality(complete(4)),
        verify_triangle_free_observation(prism(3)),
        verify_line_edge(edgeless(2)),
    ]
    lines = render_verdict_table(verdicts).splitlines()

    assert lines[0].split() == ["theorem", "inputs", "applicable", "hypothesis", "result", "detail"]
    assert lines[1].split()[4] == "agree"
    assert " excluded " in lines[2]
    assert " n/a " in lines[3]
    assert " excluded " in lines[4]
    assert lines[-1].startswith("verdicts: 4,")
    assert all(len(line) <= 160 for line in lines)


def test_verdicts_jsonl():
    verdicts = [verify_complement_duality(cycle(5))]

    (line,) = render_verdicts_jsonl(verdicts).splitlines()
    assert json.loads(line) == verdicts[0].to_dict()
