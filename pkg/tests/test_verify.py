import json

import pytest

from endograph.groups import AbelianShape
from endograph.verify import (CHECKS, ConfigError, TheoremCheck, VerifyConfig,
                              abelian_shapes, check_sort_key, hunt_converse_counterexample,
                              run_all)

import oracles


@pytest.fixture(scope="module")
def default_report():
    return run_all(VerifyConfig())


def test_default_run_passes(default_report):
    assert default_report.verdict == "pass"
    assert len(default_report.checks) == len(CHECKS) >= 12
    for c in default_report.checks:
        if c.asserting:
            assert c.status == "pass", c.id


def test_report_is_deterministic(default_report):
    again = run_all(VerifyConfig())
    assert again.to_json() == default_report.to_json()
    assert again.to_text() == default_report.to_text()
    data = json.loads(default_report.to_json())
    assert all(c["elapsed_ms"] is None for c in data["checks"])
    assert data["verdict"] == "pass"


def test_checks_sorted(default_report):
    ids = [c.id for c in default_report.checks]
    assert ids == sorted(ids, key=check_sort_key)


def test_hunt_reports_without_flipping_verdict(default_report):
    hunt = next(c for c in default_report.checks if c.id == "CONJ-2.3")
    assert not hunt.asserting
    texts = [w["observed"] for w in hunt.witnesses]
    assert "Endo(Z4) ~ Endo(Z2xZ2); directed graphs differ" in texts
    assert "EndoDirected(Z8) ~ EndoDirected(Z4xZ2)" in texts
    assert hunt.status == "fail" and default_report.verdict == "pass"


def test_hunt_small():
    c = hunt_converse_counterexample(VerifyConfig(catalog_max=4))
    assert c.status == "pass"
    assert "1 non-isomorphic equal-order pairs" in c.notes[0]


def test_only_and_config_errors():
    r = run_all(VerifyConfig(only=("THM-2.6",), formula_max_n=20))
    assert [c.id for c in r.checks] == ["THM-2.6"]
    assert r.checks[0].groups_checked == 19
    with pytest.raises(ConfigError):
        run_all(VerifyConfig(only=("THM-9.9",)))
    with pytest.raises(ConfigError):
        run_all(VerifyConfig(catalog_max=16))


def test_fail_carries_witness():
    c = TheoremCheck("X", "s", "f")
    c.expect(True, None, 1, 1)
    assert c.status == "pass" and not c.witnesses
    c.expect(False, None, 1, 2, "detail")
    assert c.status == "fail" and c.witnesses[0]["observed"] == 1


def test_abelian_shape_fleet_counts():
    shapes = abelian_shapes(64)
    assert len(shapes) == len(set(shapes))
    for n in range(1, 65):
        assert sum(1 for s in shapes if s.order == n) == oracles.abelian_class_count(n)
    assert AbelianShape(()) in shapes


def test_text_rendering(default_report):
    text = default_report.to_text()
    assert text.endswith("verdict: pass\n")
    assert "THM-2.9" in text and "(report only)" in text


def test_empty_fleet_skips():
    cfg = VerifyConfig(catalog_max=0, power_max_n=0, formula_max_n=1, abelian_max=0,
                       abelian_fast_max=0, oracle_max=0,
                       only=("THM-2.4", "THM-2.6", "PROP-2.13", "THM-2.17", "CONJ-2.3"))
    r = run_all(cfg)
    assert {c.status for c in r.checks} == {"skipped"}
    assert r.verdict == "pass"
