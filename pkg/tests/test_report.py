import dataclasses

from carpet_ext import les
from carpet_ext.report import build_report, criterion_low_genus, criterion_oracles


def test_report_claims_have_provenance_and_anchor():
    report = build_report()
    assert report.claims
    for c in report.claims:
        assert c.source in ("reported", "derived", "identity")
        assert c.anchor
    text = report.text()
    assert "serre-duality[e in 0..4, a,b in -8..12]" in text
    assert "2205/2205" in text


def test_widened_rule_produces_fail_row(monkeypatch):
    # let the exact a = 2 rule claim b >= e+2, which swallows the (2,2,0) case
    widened = tuple(
        dataclasses.replace(r, applies=lambda h, s, k: k == 1 and h.a == 2 and h.b >= s.e + 2)
        if r.name == "a2-exact" else r
        for r in les.RULES
    )
    monkeypatch.setattr(les, "RULES", widened)
    claims = criterion_low_genus()
    failed = [c for c in claims if not c.passed]
    assert [c.claim_id for c in failed] == ["alpha.low-genus(2,3)"]


def test_json_report_round_trips():
    import json

    report = build_report([("oracle properties", criterion_oracles)])
    doc = json.loads(report.json())
    assert doc["summary"]["total"] == len(report.claims)
