import pytest

from conftest import catalog_groups, group, small_catalog
from grouplab.classes import is_p_nilpotent, is_p_solvable
from grouplab.core import is_normal
from grouplab.embeddings import is_s_semipermutable
from grouplab.reports import format_reports
from grouplab.structure import derived_subgroup, frattini, prime_divisors, sylow_subgroup
from grouplab.theorems import (
    CHECK_IDS,
    LemmaId,
    Setting,
    TheoremId,
    evaluate,
    find_witness_main,
    find_witness_xu_li,
    lemma_suite,
)


def test_ids():
    assert len(TheoremId) == 10
    assert CHECK_IDS[:10] == [t.value for t in TheoremId]


def test_main_witness_examples(S3, S4, fixture216):
    assert find_witness_main(S3, 2).order == 1
    assert find_witness_main(S4, 2) is None
    assert find_witness_main(fixture216, 3) is None


def test_xu_li_witness_examples(S3, S4, fixture216):
    assert find_witness_xu_li(S3, 2).order == 1
    assert find_witness_xu_li(fixture216, 3).order == 1
    assert find_witness_xu_li(S4, 2) is None


def test_main_witness_sits_between_derived_and_frattini():
    for G in small_catalog(72):
        for p in prime_divisors(G.order):
            H = find_witness_main(G, p)
            if H is None:
                continue
            P = sylow_subgroup(G, p)
            assert derived_subgroup(P) <= H <= frattini(P)
            assert is_s_semipermutable(H, G).holds


def test_evaluate_main_on_s3(S3):
    r = evaluate(TheoremId.MAIN, S3, 2)
    assert all(h.status == "true" for h in r.hypotheses)
    assert r.conclusion.holds and r.verdict == "confirmed"


def test_evaluate_main_on_s4_is_vacuous(S4):
    r = evaluate("MAIN", S4, 2)
    assert r.verdict == "vacuous"
    assert any(h.status == "false" for h in r.hypotheses)


def test_evaluate_xu_li_on_fixture(fixture216):
    r = evaluate(TheoremId.XU_LI, fixture216, 3)
    failed = [h for h in r.hypotheses if h.status == "false"]
    assert r.verdict == "vacuous"
    assert failed[0].description == "N_G(P) is p-nilpotent"
    assert r.hypotheses[-1].status == "skipped"


def test_evaluate_abelian_observation_on_s4(S4):
    r = evaluate(TheoremId.ABELIAN_OBS, S4, 3)
    assert [h.status for h in r.hypotheses] == ["true"] * 3
    assert r.verdict == "confirmed"


def test_verdict_taxonomy():
    for G in small_catalog(24):
        for p in prime_divisors(G.order):
            s = Setting(G, p)
            for tid in CHECK_IDS:
                r = evaluate(tid, G, p, setting=s)
                statuses = [h.status for h in r.hypotheses]
                if "false" in statuses:
                    assert r.verdict == "vacuous"
                    after = statuses[statuses.index("false") + 1:]
                    assert all(x == "skipped" for x in after)
                else:
                    assert r.verdict == ("confirmed" if r.conclusion.holds else "VIOLATION")


def test_lemma_examples(S3, S4):
    by_id = {r.theorem: r for r in lemma_suite(S4, 3)}
    assert by_id[LemmaId.SPERM_ORDER_D.value].verdict == "vacuous"
    by_id = {r.theorem: r for r in lemma_suite(S3, 2)}
    assert by_id[LemmaId.CSUPP_PNILP.value].verdict == "confirmed"
    by_id = {r.theorem: r for r in lemma_suite(S4, 2)}
    assert by_id[LemmaId.CLOSURE_SOLVABLE.value].verdict == "confirmed"


def test_special_nilp_consistent_with_main():
    for G in small_catalog(72):
        for p in prime_divisors(G.order):
            s = Setting(G, p)
            main = evaluate(TheoremId.MAIN, G, p, setting=s)
            special = evaluate(TheoremId.SPECIAL_NILP, G, p, setting=s)
            if main.verdict == "confirmed" and all(h.holds for h in special.hypotheses):
                assert is_p_nilpotent(G, p).holds


def test_xu_li_with_derived_below_h_implies_main_for_p2():
    for G in small_catalog(72):
        if G.order % 2:
            continue
        H = find_witness_xu_li(G, 2)
        if H is None or not is_p_solvable(G, 2).holds:
            continue
        P = sylow_subgroup(G, 2)
        if derived_subgroup(P) <= H:
            assert find_witness_main(G, 2) is not None


def test_evaluate_is_deterministic():
    G = group("symmetric4*cyclic3")
    first = format_reports([evaluate(t, G, p) for p in (2, 3) for t in CHECK_IDS])
    group.cache_clear()
    G = group("symmetric4*cyclic3")
    second = format_reports([evaluate(t, G, p) for p in (2, 3) for t in CHECK_IDS])
    assert first == second


def test_undecided_on_budget_exhaustion(S4):
    r = evaluate(TheoremId.CHEN_CSUP, S4, 2, budget=3)
    assert r.verdict == "undecided"
    assert [h.status for h in r.hypotheses] == ["true", "undecided", "skipped"]
    r = evaluate(TheoremId.MAIN, group("symmetric3*symmetric3"), 2, budget=2)
    assert r.verdict == "undecided"


def test_unknown_theorem_rejected(S3):
    with pytest.raises(ValueError):
        evaluate("NOPE", S3, 2)


def test_p_not_dividing_order(S3):
    r = evaluate(TheoremId.XU_LI, S3, 5)
    assert r.verdict in ("vacuous", "confirmed")


def test_normal_witnesses_in_reports():
    for G in catalog_groups()[:10]:
        for p in prime_divisors(G.order):
            r = evaluate(TheoremId.XU_LI, G, p)
            H = find_witness_xu_li(G, p)
            if H is not None:
                assert is_normal(H, sylow_subgroup(G, p))
            assert r.verdict != "VIOLATION"
