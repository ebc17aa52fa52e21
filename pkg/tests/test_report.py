import xml.etree.ElementTree as ET

import pytest

from entangle_atlas.exceptions import IOFailure, ReportError
from entangle_atlas.report import (
    CSV_HEADER,
    FIGURE_FAMILIES,
    RunManifest,
    emit_plots,
    load_records_csv,
    load_records_json,
    manifest_filename,
    plots,
    records_to_rows,
    rows_to_records,
    survey_filename,
    write_anomalies,
    write_records_csv,
    write_records_json,
)
from entangle_atlas.survey import SurveyConfig, run_survey
from entangle_atlas.utils.file import load
from entangle_atlas.utils.meta import Config


@pytest.fixture(scope="module")
def survey():
    cfg = SurveyConfig.from_dict(dict(n1=2, n2_range=(2, 3), samples_per_dim=300, seed=3, chunk_size=100))
    return cfg, run_survey(cfg, progress=False)


def test_filenames():
    assert survey_filename(2, "csv") == "survey_n1=2.csv"
    assert manifest_filename(3) == "manifest_n1=3.json"


def test_csv_layout(survey, tmp_path):
    _, records = survey
    path = write_records_csv(records, tmp_path / "survey_n1=2.csv")
    lines = load(path, file_format="txt")
    assert lines[0] == ",".join(CSV_HEADER)
    assert len(lines) == 1 + sum(len(record.labels) for record in records)
    record = records[0]
    n1, n2, n, samples, label, count, probability, std_error, boundary = lines[1].split(",")
    assert (n1, n2, n, samples, label) == ("2", "2", "4", "300", "ppt")
    assert int(count) == record.counters["ppt"]
    assert float(probability) == record.probabilities["ppt"]
    assert float(std_error) == record.std_errors["ppt"]
    assert int(boundary) == record.boundary_counts["ppt"]


def test_csv_and_json_round_trip(survey, tmp_path):
    _, records = survey
    csv_path = write_records_csv(records, tmp_path / "a.csv")
    json_path = write_records_json(records, tmp_path / "a.json")
    for loaded in [load_records_csv(csv_path), load_records_json(json_path)]:
        assert loaded == records
        assert [r.probabilities for r in loaded] == [r.probabilities for r in records]
    assert load(json_path) == [dict(row) for row in records_to_rows(records)]


def test_outputs_are_byte_identical(survey, tmp_path):
    cfg, records = survey
    rerun = run_survey(cfg, progress=False)
    first = write_records_csv(records, tmp_path / "first.csv")
    second = write_records_csv(rerun, tmp_path / "second.csv")
    with open(first, "rb") as f, open(second, "rb") as g:
        assert f.read() == g.read()


def test_malformed_rows():
    with pytest.raises(ReportError):
        rows_to_records([dict(n1="2", n2="x", samples="3", label="ppt", count="1", boundary_count="0")])
    with pytest.raises(ReportError):
        rows_to_records([dict(n1="2", n2="2", label="ppt")])
    rows = [
        dict(n1="2", n2="2", samples="3", label="ppt", count="1", boundary_count="0"),
        dict(n1="2", n2="2", samples="4", label="reduction", count="1", boundary_count="0"),
    ]
    with pytest.raises(ReportError):
        rows_to_records(rows)


def test_empty_records_are_rejected(tmp_path):
    with pytest.raises(ReportError):
        write_records_csv([], tmp_path / "x.csv")
    with pytest.raises(ReportError):
        write_records_json([], tmp_path / "x.json")
    with pytest.raises(ReportError):
        emit_plots([], tmp_path)


def test_unwritable_destination(survey, tmp_path):
    _, records = survey
    blocker = tmp_path / "blocker"
    blocker.write_text("not a directory")
    with pytest.raises(IOFailure):
        write_records_csv(records, blocker / "survey.csv")


@pytest.mark.parametrize("error", [ValueError("bad limits"), RuntimeError("renderer failed")])
def test_plotting_errors_become_io_failures(survey, tmp_path, monkeypatch, error):
    _, records = survey

    def broken(*args, **kwargs):
        raise error

    monkeypatch.setattr(plots, "plot_family", broken)
    with pytest.raises(IOFailure, match=str(error)):
        emit_plots(records, tmp_path)


def test_plots_are_valid_svg(survey, tmp_path):
    _, records = survey
    files = emit_plots(records, tmp_path / "plots")
    assert len(files) == len(FIGURE_FAMILIES)
    assert sorted(f.split("/")[-1] for f in files) == sorted(f"{family}_n1=2.svg" for family in FIGURE_FAMILIES)
    for path in files:
        assert ET.parse(path).getroot().tag.endswith("svg")
    again = emit_plots(records, tmp_path / "again")
    for a, b in zip(files, again):
        with open(a, "rb") as f, open(b, "rb") as g:
            assert f.read() == g.read()


def test_anomalies_file(survey, tmp_path):
    _, records = survey
    path = write_anomalies(records, tmp_path / "anomalies_n1=2.json")
    assert load(path) == []


def test_manifest_reloads_as_config(survey, tmp_path):
    cfg, _ = survey
    manifest = RunManifest(cfg.to_dict(), dim_seconds={"2x2": 0.5}, outputs=["survey_n1=2.csv"])
    path = manifest.dump(tmp_path / manifest_filename(2))
    reloaded = Config.fromfile(path)
    assert SurveyConfig.from_dict(reloaded.to_dict()["survey_cfg"]) == cfg
    assert reloaded.dim_seconds == {"2x2": 0.5}
    assert reloaded.version == manifest.version
