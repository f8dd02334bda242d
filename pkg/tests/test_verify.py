import json

import pytest

from trischmidt import verify
from trischmidt.docio import render_json


def _only(stage):
    return tuple(s for s in verify.STAGES if s != stage)


def test_stage_skip_filters_checks():
    report = verify.run_suite(skip=_only("mixing"))
    assert report.checks
    assert {c.stage for c in report.checks} == {"mixing"}
    assert report.passed


def test_unknown_stage_rejected():
    with pytest.raises(ValueError, match="unknown stages"):
        verify.run_suite(skip=("nonsense",))


def test_tolerance_override_applies_to_every_check():
    report = verify.run_suite(skip=_only("mixing"), tolerance=0.5)
    assert all(c.tolerance == 0.5 for c in report.checks)
    assert report.passed
    with pytest.raises(ValueError):
        verify.run_suite(tolerance=-1.0)


def test_seeded_runs_are_reproducible():
    first = verify.run_suite(skip=_only("mixing"), seed=123)
    second = verify.run_suite(skip=_only("mixing"), seed=123)
    assert [c.observed for c in first.checks] == [c.observed for c in second.checks]


def test_crashed_check_reported_as_failure(monkeypatch):
    def boom(ctx):
        raise RuntimeError("synthetic breakage")

    monkeypatch.setattr(
        verify, "_REGISTRY", (("specfun", "synthetic-crash", 1e-6, boom),)
    )
    report = verify.run_suite()
    assert not report.passed
    assert "synthetic breakage" in report.checks[0].detail
    doc = report.to_document()
    assert doc["checks"][0]["observed"] is None
    assert json.loads(render_json(doc))["passed"] is False
