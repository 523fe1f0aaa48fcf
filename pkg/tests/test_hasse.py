"""Verifier records, witnesses, and the suite driver."""

import dataclasses
import json

import pytest

from idelink.covers import (
    lift_braid,
    principal_pushforward,
    pushforward_image,
    relabeled_cover,
)
from idelink.hasse import (
    CHECKS,
    equality_witness,
    iter_braid_words,
    count_scenarios,
    resolve_checks,
    run_scenario,
    run_suite,
    scenario_report_json,
    verify_diagonal_commutes,
    verify_meridian_pushforward,
    verify_norm_principle,
)
from idelink.ideles import principal_lattice
from idelink.links import BraidWord
from idelink.zlattice import (
    IntMatrix,
    SubLattice,
    lattice_equal,
    lattice_intersect,
    lattice_member,
)


def test_worked_double_cover_lattices():
    c = lift_braid(BraidWord(1, ()), 2)
    # ordered basis (mu_A, lam_A, mu_K, lam_K)
    expected = SubLattice.from_columns(4, [(0, 1, -1, 0), (-2, 0, 0, 2)])
    left = lattice_intersect(principal_lattice(c.spec.base), pushforward_image(c))
    right = principal_pushforward(c)
    assert lattice_equal(left, expected)
    assert lattice_equal(right, expected)


@pytest.mark.parametrize("word,strands,degree", [
    ((), 1, 2),
    ((1,), 2, 2),
    ((1, 1), 2, 3),
    ((1, 2), 3, 2),
    ((), 1, 1),
])
def test_all_checks_pass_on_good_covers(word, strands, degree):
    report = run_scenario(BraidWord(strands, word), degree)
    assert report.passed
    assert [c.name for c in report.checks] == list(CHECKS)


def test_equality_witness_confirmed_by_membership():
    a = SubLattice.from_columns(2, [(2, 0), (0, 1)])
    b = SubLattice.from_columns(2, [(1, 0), (0, 2)])
    w = equality_witness(a, b)
    assert w is not None
    assert lattice_member(w, a) != lattice_member(w, b)
    assert equality_witness(a, a) is None


def test_norm_principle_witness_on_tampered_cover():
    # break one pushforward matrix; the check must fail with a witness
    # lying in exactly one side
    c = lift_braid(BraidWord(2, (1,)), 2)
    bad = c.pushforward[:1] + (IntMatrix([[1, 5], [0, 1]]),) + c.pushforward[2:]
    tampered = dataclasses.replace(c, pushforward=bad)
    rec = verify_norm_principle(tampered)
    assert not rec.passed
    assert rec.witness is not None
    vec = tuple(rec.witness["vector"])
    left = lattice_intersect(
        principal_lattice(tampered.spec.base), pushforward_image(tampered)
    )
    right = principal_pushforward(tampered)
    assert lattice_member(vec, left) != lattice_member(vec, right)
    assert rec.witness["in_intersection"] != rec.witness["in_pushforward"]


def test_meridian_witness_on_tampered_cover():
    c = lift_braid(BraidWord(2, (1,)), 2)
    bad = (IntMatrix([[2, 0], [1, 1]]),) + c.pushforward[1:]
    tampered = dataclasses.replace(c, pushforward=bad)
    rec = verify_meridian_pushforward(tampered)
    assert not rec.passed
    assert rec.witness["upstairs_component"] == "A~"


def test_diagonal_commutes_witness_on_tampered_cover():
    c = lift_braid(BraidWord(2, (1,)), 2)
    bad = c.pushforward[:1] + (IntMatrix([[1, 3], [0, 1]]),) + c.pushforward[2:]
    tampered = dataclasses.replace(c, pushforward=bad)
    rec = verify_diagonal_commutes(tampered)
    assert not rec.passed
    assert rec.witness["pushed_boundary"] != rec.witness["boundary_of_image"]


def test_monotone_truncation_extra_split_strand():
    # adding an unused strand (split unknot around the axis) never flips
    # a passing verdict
    for word, strands in [((), 1), ((1,), 2), ((1, 1), 2), ((1, -1), 2)]:
        for degree in (2, 3):
            base = run_scenario(BraidWord(strands, word), degree)
            widened = run_scenario(BraidWord(strands + 1, word), degree)
            assert base.passed and widened.passed


def test_checks_run_on_relabeled_cover():
    c = lift_braid(BraidWord(3, (1, 2, 2)), 2)
    r = relabeled_cover(
        c,
        tuple(reversed(range(c.spec.base.size))),
        tuple(reversed(range(c.total.size))),
    )
    for name, fn in CHECKS.items():
        assert fn(c).passed == fn(r).passed, name


def test_resolve_checks():
    assert resolve_checks(None) == list(CHECKS)
    assert resolve_checks(["norm_principle"]) == ["norm_principle"]
    with pytest.raises(ValueError):
        resolve_checks(["norm_principle", "made_up"])


def test_iter_braid_words_deterministic_and_complete():
    words = list(iter_braid_words(2, 2))
    assert [(w.strands, w.letters) for w in words] == [
        (1, ()),
        (2, ()),
        (2, (-1,)),
        (2, (1,)),
        (2, (-1, -1)),
        (2, (-1, 1)),
        (2, (1, -1)),
        (2, (1, 1)),
    ]
    assert count_scenarios(2, 2, (2, 3)) == len(words) * 2
    assert count_scenarios(3, 5, (2, 3, 4, 5)) == (1 + 63 + 1365) * 4


class TestRunSuite:
    def test_small_suite_counts(self):
        res = run_suite(2, 3, (2, 3))
        assert len(res.reports) == 32
        assert res.complete
        assert res.failure_count == 0
        assert res.check_count == 32 * len(CHECKS)

    def test_empty_degrees(self):
        res = run_suite(2, 2, ())
        assert res.reports == ()
        assert res.complete

    def test_single_trivial_scenario(self):
        res = run_suite(1, 3, (2,))
        assert len(res.reports) == 1
        assert res.reports[0].word == ()

    def test_scenario_cap_flags_incomplete(self):
        res = run_suite(2, 3, (2, 3), scenario_cap=5)
        assert not res.complete
        assert len(res.reports) == 5

    def test_json_round_trip_and_determinism(self):
        res1 = run_suite(2, 2, (2,), checks=["norm_principle", "meridian_pushforward"])
        res2 = run_suite(2, 2, (2,), checks=["norm_principle", "meridian_pushforward"])
        doc1 = res1.to_json_dict()
        doc2 = res2.to_json_dict()
        blob1 = json.dumps(_strip_millis(doc1), sort_keys=True)
        blob2 = json.dumps(_strip_millis(doc2), sort_keys=True)
        assert blob1 == blob2
        reparsed = json.loads(json.dumps(doc1))
        checks = sum(len(s["checks"]) for s in reparsed["scenarios"])
        passes = sum(
            1
            for s in reparsed["scenarios"]
            for c in s["checks"]
            if c["verdict"] == "pass"
        )
        assert checks == reparsed["summary"]["checks"]
        assert passes == reparsed["summary"]["passes"]

    def test_bad_bounds_rejected(self):
        with pytest.raises(ValueError):
            run_suite(0, 2, (2,))
        with pytest.raises(ValueError):
            run_suite(2, -1, (2,))
        with pytest.raises(ValueError):
            run_suite(2, 2, (0,))


def _strip_millis(doc):
    doc = json.loads(json.dumps(doc))
    for scenario in doc.get("scenarios", []):
        for check in scenario["checks"]:
            check["millis"] = 0
    doc.get("summary", {}).pop("total_millis", None)
    return doc


def test_scenario_report_json_shape():
    rep = run_scenario(BraidWord(2, (1,)), 2, ["norm_principle"])
    doc = scenario_report_json(rep)
    assert doc["schema"] == 1
    assert doc["scenario"] == {"strands": 2, "word": [1], "degree": 2}
    assert doc["checks"][0]["name"] == "norm_principle"
    assert doc["checks"][0]["verdict"] == "pass"
    assert "millis" in doc["checks"][0]
