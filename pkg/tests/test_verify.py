import json

import pytest

from ospkit import verify
from ospkit.controls import FlippedOscillator, FlippedStandard, flipped_factory, flipped_gamma
from ospkit.intertwiner import Kind
from ospkit.verify import (
    SuiteReport,
    run_suite,
    suite_brackets,
    suite_decomposition,
    suite_intertwine,
    suite_proof_expansions,
    suite_singular,
)


def test_brackets_pass():
    assert suite_brackets(1, 4).passed
    rep = suite_brackets(2, 3)
    assert rep.passed and rep.checks > 0
    assert rep.info["unscaled_reading_failures"] > 0


@pytest.mark.parametrize("mod_cls", [FlippedStandard, FlippedOscillator])
def test_brackets_negative_control(mod_cls):
    assert suite_brackets(2, 2, mod_cls(2)).failures


def test_expansions_calibrate_input_reading():
    rep = suite_proof_expansions(2, 4)
    assert rep.passed
    assert rep.info["koszul_calibrated"] == "input"
    assert rep.info["koszul_candidates_passing"] == ["input"]
    assert rep.info["display_counts"]["input"]["raise_lil"]["verbatim"] == 0


def test_expansions_n3():
    assert suite_proof_expansions(3, 3).passed


def test_expansions_verbatim_slips_are_pinned():
    rep = suite_proof_expansions(2, 3)
    assert rep.info["verbatim_failing_displays"] == [
        "lower_lil", "gamma_lil_down", "gamma_big_ni", "gamma_big_i_lower", "gamma_big_ni_lower",
    ]
    counts = rep.info["display_counts"]["input"]["gamma_big_ni_lower"]
    assert counts["corrected"] == 0 and counts["slot_corrected"] > 0


def test_expansions_negative_controls():
    rep = suite_proof_expansions(2, 2, FlippedStandard(2))
    assert rep.failures and rep.info["koszul_calibrated"] == "none"
    assert suite_proof_expansions(2, 2, factory=flipped_factory).failures


def test_intertwine():
    assert suite_intertwine(2, 6).passed
    assert suite_intertwine(3, 4).passed


def test_intertwine_negative_controls():
    assert suite_intertwine(2, 2, g2=flipped_gamma(Kind.W2, 2)).failures
    assert suite_intertwine(2, 2, g1=flipped_gamma(Kind.W1, 2)).failures
    assert suite_intertwine(2, 2, FlippedOscillator(2)).failures


def test_decomposition():
    rep = suite_decomposition(2, 6)
    assert rep.passed
    assert rep.info["det_match_rate"]["LambdaC"].startswith("0/")
    assert suite_decomposition(3, 4).passed


def test_singular_n1_passes():
    rep = suite_singular(1, 6)
    assert rep.passed
    assert rep.info["full_total"] == 3


def test_singular_n2_totals_and_minus_delta_failure():
    rep = suite_singular(2, 6)
    assert rep.info["full_total"] == 2
    assert rep.info["minus_delta_total"] == 3
    contexts = [f.context for f in rep.failures]
    assert contexts == [
        "minus-delta total dimension",
        "w3,1 annihilated by every X-d_i",
        "w3,2 annihilated by every X-d_i",
    ]


def test_suites_need_n2():
    for fn in (suite_proof_expansions, suite_intertwine, suite_decomposition):
        with pytest.raises(ValueError):
            fn(1, 2)


def test_reports_deterministic():
    a = json.dumps(suite_decomposition(2, 3).to_json(), sort_keys=True)
    b = json.dumps(suite_decomposition(2, 3).to_json(), sort_keys=True)
    assert a == b
    assert suite_singular(2, 3).pretty() == suite_singular(2, 3).pretty()


def test_threads_env_gives_same_report(monkeypatch):
    base = json.dumps(suite_decomposition(2, 4).to_json())
    monkeypatch.setenv("OSPKIT_THREADS", "4")
    assert verify.worker_count() == 4
    assert json.dumps(suite_decomposition(2, 4).to_json()) == base


def test_pipeline_skips_after_failed_calibration(monkeypatch):
    def broken(n, max_deg):
        rep = SuiteReport("proof-expansions", n, max_deg)
        rep.info["koszul_calibrated"] = "none"
        rep.check(False, "forced", 0, 1)
        return rep

    monkeypatch.setitem(verify.SUITES, "proof-expansions", broken)
    monkeypatch.setitem(verify.SUITES, "brackets", lambda n, d: SuiteReport("brackets", n, d))
    monkeypatch.setitem(verify.SUITES, "singular", lambda n, d: SuiteReport("singular", n, d))
    reports = run_suite("all", 2, 1)
    by_name = {r.name: r for r in reports}
    assert by_name["intertwine"].skipped and by_name["decomposition"].skipped
    assert "SKIPPED" in by_name["intertwine"].pretty()


def test_pipeline_n1_marks_not_applicable():
    reports = run_suite("all", 1, 2)
    assert [r.name for r in reports] == list(verify.PIPELINE)
    assert reports[1].info["not_applicable"]


def test_resolve():
    assert verify.resolve("expansions") == "proof-expansions"
    with pytest.raises(ValueError):
        verify.resolve("nope")
