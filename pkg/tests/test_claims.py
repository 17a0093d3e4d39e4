import pytest

from sclab import group_from_expr, replay, run_all_claims
from sclab.claims import (
    CLAIM_IDS,
    ClaimReport,
    check_cardinality,
    check_conj_specialization,
    check_doublecoset_distinct,
    check_g1_normal,
    check_order_lemma,
    check_quotient_theorem,
    check_second_iso,
    check_setwise_iff,
    check_third_iso,
)

from conftest import idx


def test_cardinality(z6, s3):
    r = check_cardinality(z6, idx(z6, "e a3"), "self")
    assert r.status == "holds" and r.witness["sizes"] == [1]
    assert check_cardinality(z6, idx(z6, "e a2 a4"), "self").witness["sizes"] == [3]
    r = check_cardinality(s3, range(6), "conj")
    assert r.claim_id == "L3.2" and r.witness["sizes"] == [1, 2, 3]
    assert check_cardinality(s3, range(6), "self").status == "precondition-unmet"


@pytest.mark.parametrize("expr, sub", [
    ("Z6", "e a2 a4"), ("S3", None), ("Q8", "1 -1 i -i"),
])
def test_setwise_iff_holds(expr, sub, s3):
    g = s3 if expr == "S3" else group_from_expr(expr)
    h = idx(g, sub) if sub else idx(g, "E B D")
    r = check_setwise_iff(g, h, "self")
    assert r.status == "holds"
    assert r.lhs == r.rhs == (expr == "Z6")


def test_setwise_iff_rejects_sandwich_kind(z6):
    with pytest.raises(ValueError):
        check_setwise_iff(z6, (0,), "sandwich")


def test_quotient_theorem(z6, q8):
    r = check_quotient_theorem(z6, idx(z6, "e a2 a4"))
    assert r.status == "holds" and r.witness["quotient_order"] == 2
    assert r.witness["normal_subgroup"] == ["e", "a2", "a4"] and r.witness["is_g_identity"]
    r = check_quotient_theorem(z6, idx(z6, "e a3"))
    assert r.witness["normal_subgroup"] == ["e"] and r.witness["quotient_order"] == 6
    r = check_quotient_theorem(q8, idx(q8, "1 -1"))
    assert r.witness["normal_subgroup"] == ["1"] and r.witness["quotient_order"] == 8


def test_g1_normal(z6, s3):
    r = check_g1_normal(z6)
    assert r.status == "holds" and r.witness["g_identity"] == ["e", "a2", "a4"]
    assert check_g1_normal(group_from_expr("Z2 x Z2")).witness["g_identity"] == ["e|e"]
    r = check_g1_normal(s3)
    assert r.status == "precondition-unmet"
    assert r.witness["g_identity"] == ["E", "B", "D"] and r.witness["is_normal"]


def test_second_iso(z6, s3):
    r = check_second_iso(z6, idx(z6, "e a3"), range(6))
    assert r.status == "holds" and r.witness["N"] == ["e", "a2", "a4"]
    assert r.witness["H_meet_N"] == ["e"] and r.witness["left_order"] == r.witness["right_order"] == 2
    r = check_second_iso(s3, idx(s3, "E A"), idx(s3, "E B D"))
    assert r.status == "holds" and r.witness["N"] == ["E", "B", "D"] and r.witness["left_order"] == 2
    assert check_second_iso(s3, range(6), (0,)).status == "holds"


def test_third_iso(z6, s3):
    k = idx(z6, "e a2 a4")
    r = check_third_iso(z6, k, k)
    assert r.status == "holds" and r.witness["left_order"] == 2
    r = check_third_iso(z6, range(6), range(6))
    assert r.status == "holds" and r.witness["left_order"] == 1
    assert check_third_iso(s3, idx(s3, "E A"), idx(s3, "E B D")).status == "precondition-unmet"


def test_order_lemma_counterexample(z6):
    r = check_order_lemma(z6, idx(z6, "e a3"))
    assert (r.status, r.lhs, r.rhs) == ("fails", True, False)
    assert "not_self_inverse" in r.witness
    assert replay(z6, r)


def test_order_lemma_holds(s3):
    v4 = group_from_expr("Z2 x Z2")
    r = check_order_lemma(v4, range(4))
    assert (r.status, r.lhs, r.rhs) == ("holds", True, True)
    r = check_order_lemma(s3, idx(s3, "E B D"))
    assert (r.status, r.lhs, r.rhs) == ("holds", False, False)
    assert r.witness["order_change"]["order_a"] != r.witness["order_change"]["order_xax"]


@pytest.mark.parametrize("expr, blocks", [("S3", 3), ("Z6", 6), ("D4", 5)])
def test_conj_specialization(expr, blocks):
    r = check_conj_specialization(group_from_expr(expr))
    assert r.status == "holds" and r.witness["blocks"] == blocks


def test_doublecoset(s3, z6):
    r = check_doublecoset_distinct(s3, idx(s3, "E A"))
    assert r.status == "holds"
    assert check_doublecoset_distinct(s3, (0,)).status == "precondition-unmet"
    # over the odd-order subgroup every sandwich class already is a coset
    r = check_doublecoset_distinct(z6, idx(z6, "e a2 a4"))
    assert r.status == "fails" and replay(z6, r)


def test_run_all_claims_z6(z6):
    reps = run_all_claims(z6)
    assert {r.claim_id for r in reps} == set(CLAIM_IDS)
    fails = {r.claim_id for r in reps if r.status == "fails"}
    assert fails <= {"L3.9", "C1-doublecoset"}
    assert any(r.claim_id == "L3.9" and r.status == "fails" for r in reps)


def test_run_all_claims_s3(s3):
    reps = run_all_claims(s3)
    l33 = [r for r in reps if r.claim_id == "L3.3" and r.status != "precondition-unmet"]
    assert len(l33) == 5 and all(r.status == "holds" for r in l33)
    t35 = [r for r in reps if r.claim_id == "T3.5" and r.subgroups == (("E",),)]
    assert t35[0].status == "holds"


def test_trivial_group_has_no_failures():
    reps = run_all_claims(group_from_expr("Z1"))
    assert all(r.status in ("holds", "precondition-unmet") for r in reps)


def test_every_failure_replays(catalog24):
    for entry, g in catalog24[:20]:
        for r in run_all_claims(g, pair_cap=8):
            if r.status == "fails":
                assert replay(g, r), (entry.name, r)


def test_unknown_claim_id(z6):
    with pytest.raises(ValueError):
        run_all_claims(z6, claims=["L9.9"])


def test_expired_budget_is_reported(z6):
    from sclab import Budget
    reps = run_all_claims(group_from_expr("S4"), Budget(-1))
    assert reps[-1].status == "budget-exceeded"


def test_replay_requires_a_failure(z6):
    with pytest.raises(ValueError):
        replay(z6, ClaimReport("L3.9", "Z6", (), "holds"))


def test_report_dict_keys(z6):
    d = check_order_lemma(z6, idx(z6, "e a3")).to_dict()
    assert list(d) == ["claim_id", "group", "subgroups", "status", "lhs", "rhs", "witness", "notes"]
