import json
import random
from fractions import Fraction

import pytest

from toughcert import (
    DomainError,
    HypothesisError,
    SizeLimitError,
    build_extremal,
    certify,
    complete,
    disjoint_union,
    from_edges,
    is_one_over_t_tough,
    toughness_exact,
)
from toughcert.verify import (
    VERDICT_EXCEPTIONAL,
    VERDICT_INCONCLUSIVE,
    VERDICT_TOUGH,
    _partitions_desc,
    enumerate_connected,
    graph_from_mask,
    mask_of_graph,
    report_lines,
    verify_join_maximizer,
    verify_quotient_embedding,
    verify_subgraph_monotonicity,
    verify_theorem,
    verify_threshold_identities,
)

from oracles import connected_count, labelings_masks


def test_mask_round_trip():
    rng = random.Random(53)
    for _ in range(50):
        n = rng.randint(1, 9)
        mask = rng.getrandbits(n * (n - 1) // 2)
        assert mask_of_graph(graph_from_mask(n, mask)) == mask


def test_enumerate_connected_counts():
    for n in range(1, 6):
        assert sum(1 for _ in enumerate_connected(n)) == connected_count(n)


def test_enumerate_connected_order_and_guards():
    got = list(enumerate_connected(2))
    assert got == [complete(2)]
    masks = [mask_of_graph(g) for g in enumerate_connected(3)]
    assert masks == sorted(masks)
    with pytest.raises(SizeLimitError):
        next(enumerate_connected(9))
    with pytest.raises(DomainError):
        next(enumerate_connected(0))


def test_certify_verdicts():
    paw = build_extremal(1, 4)
    rep = certify(paw, 1)
    assert rep.verdict == VERDICT_EXCEPTIONAL
    assert rep.cross_check == {"tough": False, "witness": [0]}
    assert abs(rep.lambda1 - rep.threshold) <= 1e-9
    assert rep.graph6 == "C{"

    rep = certify(complete(4), 1)
    assert rep.verdict == VERDICT_TOUGH
    assert rep.cross_check["tough"] is True

    c4 = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    rep = certify(c4, 1)
    assert rep.verdict == VERDICT_INCONCLUSIVE

    d = rep.to_dict()
    assert json.dumps(d, sort_keys=True)
    assert d["verdict"] == VERDICT_INCONCLUSIVE


def test_certify_cross_check_modes():
    k5 = complete(5)
    assert certify(k5, 1, cross_check=False).cross_check is None
    assert certify(k5, 1, cross_check=True).cross_check["tough"] is True
    # auto mode skips large orders
    big = complete(12)
    assert certify(big, 1).cross_check is None
    assert certify(big, 1, cross_check=True).cross_check["tough"] is True


def test_certify_hypothesis_errors():
    with pytest.raises(HypothesisError):
        certify(disjoint_union(complete(2), complete(2)), 1)
    with pytest.raises(HypothesisError):
        certify(complete(2), 1)  # order below t + 2
    with pytest.raises(HypothesisError):
        certify(complete(4), 0)


def test_certify_never_contradicts_exact_oracle_small():
    # certified-tough must imply 1/t-tough on every connected graph
    for n in range(3, 6):
        for g in enumerate_connected(n):
            for t in (1, 2):
                if n < t + 2:
                    continue
                rep = certify(g, t, cross_check=True)
                tough, _ = is_one_over_t_tough(g, t)
                if rep.verdict == VERDICT_TOUGH:
                    assert tough
                if rep.verdict == VERDICT_EXCEPTIONAL:
                    assert not tough


def test_verify_theorem_small_orders_clean():
    for n, t in [(3, 1), (4, 1), (4, 2), (5, 1), (5, 2), (5, 3), (6, 2)]:
        summary = verify_theorem(n, t)
        assert summary.ok, summary.failures
        assert not summary.incidents
        assert summary.counts["connected"] == connected_count(n)
        assert (
            summary.counts["tough"] + summary.counts["not_tough"]
            == summary.counts["connected"]
        )


def test_verify_theorem_exceptional_sets_are_labelings():
    cases = {(4, 1): 12, (5, 2): 30, (4, 2): 4, (3, 1): 3}
    for (n, t), count in cases.items():
        summary = verify_theorem(n, t)
        got = set(summary.extras["exceptional_masks"])
        expected = labelings_masks(build_extremal(t, n))
        assert got == expected
        assert len(got) == count


def test_verify_theorem_toughness_flags_match_exact_oracle():
    for t in (1, 2):
        summary = verify_theorem(5, t)
        tough_count = sum(
            1
            for g in enumerate_connected(5)
            if is_one_over_t_tough(g, t)[0]
        )
        assert summary.counts["tough"] == tough_count


def test_verify_theorem_deterministic_reports():
    base = report_lines(verify_theorem(5, 1))
    again = report_lines(verify_theorem(5, 1))
    chunked = report_lines(verify_theorem(5, 1, chunk_size=100))
    forked = report_lines(verify_theorem(5, 1, workers=2, chunk_size=64))
    assert base == again == chunked == forked
    closing = json.loads(base[-1])
    assert closing["record"] == "summary"
    assert closing["ok"] is True


def test_verify_theorem_guards():
    with pytest.raises(DomainError):
        verify_theorem(4, 0)
    with pytest.raises(DomainError):
        verify_theorem(3, 2)  # n below t + 2
    with pytest.raises(SizeLimitError):
        verify_theorem(8, 1)  # needs allow_order_8


def test_verify_theorem_widened_band_reports_incidents_not_failures():
    # with a huge ambiguity band every non-tough graph lands in it, so
    # incidents appear but no failures
    summary = verify_theorem(4, 1, eps_strict=5.0)
    assert summary.ok
    assert summary.counts["eigensolves"] >= summary.counts["not_tough"]
    assert len(summary.incidents) == summary.counts["not_tough"] - summary.counts["exceptional"]


def test_verify_theorem_curiosity_logging():
    # K3 is the only tough graph at order 3 and sits well above the
    # threshold, so no curiosity records appear even when enabled
    summary = verify_theorem(3, 1, log_curiosities=True)
    assert summary.ok
    kinds = {rec["kind"] for rec in summary.incidents}
    assert "equality-curiosity" not in kinds


def test_partitions_desc():
    got = list(_partitions_desc(6, 3))
    assert got == [(4, 1, 1), (3, 2, 1), (2, 2, 2)]
    assert list(_partitions_desc(3, 1)) == [(3,)]
    assert list(_partitions_desc(2, 3)) == []


def test_verify_join_maximizer():
    for n, s, c in [(8, 1, 3), (12, 3, 4), (7, 2, 1), (9, 2, 2)]:
        summary = verify_join_maximizer(n, s, c)
        assert summary.ok, summary.failures
        assert summary.counts["shapes"] >= 1
    with pytest.raises(DomainError):
        verify_join_maximizer(3, 2, 2)  # no room for two parts


def test_verify_quotient_embedding():
    summary = verify_quotient_embedding(s_max=2, t_max=2, n_max=14)
    assert summary.ok, summary.failures
    assert summary.counts["partitions"] > 0


def test_verify_subgraph_monotonicity_deterministic():
    a = verify_subgraph_monotonicity(trials=60, seed=99)
    b = verify_subgraph_monotonicity(trials=60, seed=99)
    assert a.ok
    assert report_lines(a) == report_lines(b)
    with pytest.raises(DomainError):
        verify_subgraph_monotonicity(trials=0)


def test_verify_threshold_identities_small_grid():
    summary = verify_threshold_identities(s_max=3, t_max=3, n_max=18)
    assert summary.ok, summary.failures
    assert summary.counts["combinations"] > 0


def test_report_lines_are_stable_json():
    summary = verify_theorem(4, 1)
    lines = report_lines(summary)
    for line in lines:
        rec = json.loads(line)
        assert json.dumps(rec, sort_keys=True) == line
    assert json.loads(lines[-1])["record"] == "summary"
