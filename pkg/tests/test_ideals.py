import random

import pytest

from pathcong import (
    PathVector,
    Quiver,
    all_relations,
    build_semigroup,
    commutative_relation,
    congruence_from_blocks,
    congruence_to_ideal,
    enumerate_congruences,
    enumerate_special_ideals,
    generate_ideal,
    ideal_join,
    ideal_meet,
    ideal_to_congruence,
    identity_congruence,
    monomial_relation,
    random_acyclic_quiver,
    row_reduce,
    subspace_intersection,
    universal_congruence,
    zero_ideal,
)
from pathcong.semigroup import CapExceeded


def span(dim, *coeff_dicts):
    return row_reduce([PathVector(d) for d in coeff_dicts], dim)


def test_all_relations_counts(single_arrow, kronecker, triple_arrow):
    assert len(all_relations(single_arrow)) == 3
    assert len(all_relations(kronecker)) == 5
    assert len(all_relations(triple_arrow)) == 8


def test_all_relations_kronecker_content(kronecker):
    rels = set(all_relations(kronecker))
    # paths: e1, e2, alpha, beta -> indices 0..3
    monos = {monomial_relation(i) for i in range(4)}
    assert rels == monos | {commutative_relation(2, 3)}


def test_generate_ideal_from_trivial_path(single_arrow):
    # <e1> picks up alpha through the product e1 * alpha
    ideal = generate_ideal(single_arrow, [monomial_relation(0)])
    assert ideal.space == span(3, {0: 1}, {2: 1})


def test_generate_ideal_empty(kronecker):
    assert zero_ideal(kronecker).dim == 0


def test_generate_ideal_two_differences(triple_arrow):
    ideal = generate_ideal(triple_arrow, [commutative_relation(2, 3), commutative_relation(3, 4)])
    assert ideal.dim == 2
    assert ideal.space == span(5, {2: 1, 3: -1}, {3: 1, 4: -1})


def test_generating_sets_with_equal_span_give_equal_ideals(triple_arrow):
    variants = [
        [commutative_relation(2, 3), commutative_relation(2, 4)],
        [commutative_relation(2, 3), commutative_relation(3, 4)],
        [commutative_relation(2, 4), commutative_relation(3, 4)],
    ]
    ideals = [generate_ideal(triple_arrow, gens) for gens in variants]
    assert ideals[0] == ideals[1] == ideals[2]
    assert len({i.space.key() for i in ideals}) == 1


def test_generate_rejects_invalid_relations(chain3):
    # a: 1->2 and b: 2->3 are not parallel
    with pytest.raises(ValueError):
        generate_ideal(chain3, [commutative_relation(3, 4)])
    with pytest.raises(ValueError):
        generate_ideal(chain3, [monomial_relation(99)])


def test_ideal_spaces_are_multiplicatively_closed(chain3, triple_arrow):
    rng = random.Random(61)
    for q in (chain3, triple_arrow, random_acyclic_quiver(rng), random_acyclic_quiver(rng)):
        s = build_semigroup(q)
        for ideal in enumerate_special_ideals(q):
            for w in ideal.space.basis:
                for u in range(s.n):
                    for v in range(s.n):
                        moved = {}
                        for idx, c in w.coeffs.items():
                            out = s.table[s.table[u][idx + 1]][v]
                            if out != 0:
                                moved[out - 1] = moved.get(out - 1, 0) + c
                        assert ideal.space.contains(PathVector(moved))


def test_meet_can_be_smaller_than_intersection(triple_arrow):
    i12 = generate_ideal(triple_arrow, [monomial_relation(2), commutative_relation(3, 4)])
    i14 = generate_ideal(triple_arrow, [monomial_relation(4), commutative_relation(2, 3)])
    inter = subspace_intersection(i12.space, i14.space)
    assert inter == span(5, {2: 1, 3: -1, 4: 1})
    meet = ideal_meet(i12, i14)
    assert meet.dim == 0
    join = ideal_join(i12, i14)
    assert join.space == span(5, {2: 1}, {3: 1}, {4: 1})


def test_join_with_zero_ideal(kronecker):
    for ideal in enumerate_special_ideals(kronecker):
        assert ideal_join(ideal, zero_ideal(kronecker)) == ideal


def test_enumerate_counts(single_arrow, kronecker, triple_arrow):
    assert len(enumerate_special_ideals(single_arrow)) == 5
    assert len(enumerate_special_ideals(kronecker)) == 8
    assert len(enumerate_special_ideals(triple_arrow)) == 18


def test_enumerate_single_arrow_spans(single_arrow):
    got = {i.space for i in enumerate_special_ideals(single_arrow)}
    assert got == {
        span(3),
        span(3, {2: 1}),
        span(3, {0: 1}, {2: 1}),
        span(3, {1: 1}, {2: 1}),
        span(3, {0: 1}, {1: 1}, {2: 1}),
    }


def test_enumerate_cap(triple_arrow):
    with pytest.raises(CapExceeded):
        enumerate_special_ideals(triple_arrow, max_elements=3)


def test_congruence_to_ideal_identity(single_arrow):
    s = build_semigroup(single_arrow)
    assert congruence_to_ideal(s, identity_congruence(s)).dim == 0


def test_congruence_to_ideal_rees_block(single_arrow):
    s = build_semigroup(single_arrow)
    rho3 = congruence_from_blocks(s, [[0, 1, 3], [2]])
    assert congruence_to_ideal(s, rho3).space == span(3, {0: 1}, {2: 1})


def test_congruence_to_ideal_kronecker_pair(kronecker):
    s = build_semigroup(kronecker)
    rho2 = congruence_from_blocks(s, [[0], [1], [2], [3, 4]])
    ideal = congruence_to_ideal(s, rho2)
    assert ideal.space == span(4, {2: 1, 3: -1})


def test_ideal_to_congruence_bounds(single_arrow):
    s = build_semigroup(single_arrow)
    assert ideal_to_congruence(s, zero_ideal(single_arrow)) == identity_congruence(s)
    kq = generate_ideal(single_arrow, [monomial_relation(0), monomial_relation(1)])
    assert kq.dim == 3
    assert ideal_to_congruence(s, kq) == universal_congruence(s)


def test_ideal_to_congruence_difference_span(triple_arrow):
    s = build_semigroup(triple_arrow)
    i15 = generate_ideal(triple_arrow, [commutative_relation(2, 3), commutative_relation(3, 4)])
    c = ideal_to_congruence(s, i15)
    assert c.blocks == ((0,), (1,), (2,), (3, 4, 5))


def test_round_trips(single_arrow, kronecker, triple_arrow, chain3):
    for q in (single_arrow, kronecker, triple_arrow, chain3):
        s = build_semigroup(q)
        for c in enumerate_congruences(s):
            assert ideal_to_congruence(s, congruence_to_ideal(s, c)) == c
        for ideal in enumerate_special_ideals(q):
            back = congruence_to_ideal(s, ideal_to_congruence(s, ideal))
            assert back.space == ideal.space


def test_bijection_preserves_order(kronecker, triple_arrow):
    for q in (kronecker, triple_arrow):
        s = build_semigroup(q)
        congs = enumerate_congruences(s)
        images = [congruence_to_ideal(s, c) for c in congs]
        for i, c1 in enumerate(congs):
            for j, c2 in enumerate(congs):
                assert c1.refines(c2) == images[i].subset_of(images[j])


def test_counts_match_between_routes(chain3):
    rng = random.Random(67)
    for q in [chain3] + [random_acyclic_quiver(rng) for _ in range(5)]:
        s = build_semigroup(q)
        assert len(enumerate_congruences(s)) == len(enumerate_special_ideals(q))


def test_meet_is_greatest_lower_bound(kronecker, triple_arrow):
    for q in (kronecker, triple_arrow):
        ideals = enumerate_special_ideals(q)
        for a in ideals:
            for b in ideals:
                meet = ideal_meet(a, b)
                assert meet.subset_of(a) and meet.subset_of(b)
                for other in ideals:
                    if other.subset_of(a) and other.subset_of(b):
                        assert other.subset_of(meet)


def test_cover_steps_add_one_dimension(triple_arrow):
    ideals = enumerate_special_ideals(triple_arrow)
    rels = all_relations(triple_arrow)
    npaths = 5
    for a in ideals:
        uppers = [b for b in ideals if a.subset_of(b) and a.space != b.space]
        covers = [
            b for b in uppers
            if not any(c.subset_of(b) and a.subset_of(c) and c.space not in (a.space, b.space)
                       for c in uppers)
        ]
        for b in covers:
            assert b.dim == a.dim + 1
            fresh = [r for r in rels if b.contains_relation(r) and not a.contains_relation(r)]
            assert fresh
            for r in fresh:
                regen = ideal_join(a, generate_ideal(triple_arrow, [r]))
                assert regen.space == b.space


def test_quiver_mismatch_rejected(single_arrow, kronecker):
    with pytest.raises(ValueError):
        ideal_join(zero_ideal(single_arrow), zero_ideal(kronecker))
    s = build_semigroup(single_arrow)
    with pytest.raises(ValueError):
        ideal_to_congruence(s, zero_ideal(kronecker))


def test_ideal_json_shape(kronecker):
    ideal = generate_ideal(kronecker, [commutative_relation(2, 3)])
    blob = ideal.to_json_dict()
    assert blob == {
        "generators": ["alpha - beta"],
        "basis": [{"alpha": "1", "beta": "-1"}],
    }
