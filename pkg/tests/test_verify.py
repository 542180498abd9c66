import random

import numpy as np
import pytest

from pathcong import (
    CyclicQuiverError,
    Quiver,
    build_semigroup,
    check_theorems,
    enumerate_congruences,
    enumerate_special_ideals,
    predict_properties,
    random_acyclic_quiver,
)
from pathcong.verify import (
    congruence_label,
    congruence_leq_matrix,
    ideal_leq_matrix,
)


def test_predict_single_arrow(single_arrow):
    p = predict_properties(single_arrow)
    assert all(p.values())


def test_predict_kronecker(kronecker):
    p = predict_properties(kronecker)
    assert p["modular"] and p["lower_semimodular"] and p["strong_lower_semimodular"]
    assert not p["distributive"] and not p["all_rees"]
    assert p["strong_upper_semimodular"] and p["upper_semimodular"]


def test_predict_triple_arrow(triple_arrow):
    p = predict_properties(triple_arrow)
    assert p["strong_upper_semimodular"] and p["upper_semimodular"]
    assert not p["modular"]
    assert not p["lower_semimodular"] and not p["strong_lower_semimodular"]
    assert not p["distributive"]


def test_predict_rejects_cycles():
    with pytest.raises(CyclicQuiverError):
        predict_properties(Quiver(["v"], [("a", "v", "v")]))


def test_congruence_leq_matrix_matches_refines(kronecker):
    s = build_semigroup(kronecker)
    congs = enumerate_congruences(s)
    leq = congruence_leq_matrix(congs)
    for i, a in enumerate(congs):
        for j, b in enumerate(congs):
            assert leq[i, j] == a.refines(b)


def test_ideal_leq_matrix_matches_subset(triple_arrow):
    ideals = enumerate_special_ideals(triple_arrow)
    leq = ideal_leq_matrix(ideals)
    for i, a in enumerate(ideals):
        for j, b in enumerate(ideals):
            assert leq[i, j] == a.subset_of(b)


def test_check_theorems_paper_quivers(single_arrow, kronecker, triple_arrow):
    for q, n_elem, n_covers in ((single_arrow, 5, 5), (kronecker, 8, 10), (triple_arrow, 18, 35)):
        report = check_theorems(q)
        assert report.ok, report.format()
        assert report.quiver_summary["congruences"] == n_elem
        assert report.quiver_summary["ideals"] == n_elem
        assert len(report.verdicts) == 5


def test_check_theorems_seed_42_quiver():
    q = random_acyclic_quiver(random.Random(42))
    report = check_theorems(q)
    assert report.ok, report.format()


def test_check_theorems_disconnected():
    q = Quiver(
        ["1", "2", "3", "4"],
        [("alpha", "1", "2"), ("beta", "1", "2"), ("c", "3", "4")],
    )
    report = check_theorems(q)
    assert report.ok, report.format()
    # the Kronecker component blocks distributivity but not modularity
    assert report.computed["modular"]
    assert not report.computed["distributive"]
    comp_verdict = [v for v in report.verdicts if "component" in v[0]][0]
    assert comp_verdict[1] and "2 components" in comp_verdict[2]


def test_check_theorems_rejects_cycles():
    with pytest.raises(CyclicQuiverError):
        check_theorems(Quiver(["v"], [("a", "v", "v")]))


def test_report_format(kronecker):
    report = check_theorems(kronecker)
    text = report.format()
    assert "modular" in text
    assert "✓" in text and "✗" in text
    assert "consistent" in text
    assert "VIOLATION" not in text
    assert "congruences: 8" in text


def test_congruence_label(single_arrow):
    s = build_semigroup(single_arrow)
    from pathcong import principal_congruence

    c = principal_congruence(s, s.index_by_name("alpha"), 0)
    assert congruence_label(c) == "{0,alpha} {1} {2}"
