from fractions import Fraction

import pytest

from arrgr.arrangement import braid, semiorder
from arrgr.circuits import nbc_counts
from arrgr.corpus import parallel_pair, single_hyperplane
from arrgr.errors import ResourceBoundError
from arrgr.linalg import SparseEchelon
from arrgr.polyring import Poly
from arrgr.vgring import (evaluate_on_chambers, filtration_profile, heaviside,
                          monomial_eval, presentation_dimension,
                          vg_relation_families, verify_relations,
                          _product_poly, _poly_to_mask_vector)


def test_heaviside_point_in_a_line():
    A = single_hyperplane()
    assert heaviside(A, 0) == (Fraction(1), Fraction(0))


def test_heaviside_idempotent(corpus_map):
    for A in (corpus_map["braid3"], corpus_map["parallel"]):
        for i in range(A.n):
            h = heaviside(A, i)
            assert tuple(x * x for x in h) == h


def test_braid3_circuit_monomial_vanishes():
    # x12 * x23 * (1 - x13) is zero: its support pattern is infeasible
    A = braid(3)
    poly = (Poly.generator(0) * Poly.generator(2)
            * (Poly.one() - Poly.generator(1)))
    assert set(evaluate_on_chambers(A, poly)) == {0}


def test_monomial_eval():
    A = parallel_pair()
    assert monomial_eval(A, ()) == (1, 1, 1)
    # both heavisides positive only on the chamber x > 1, which is "++"
    assert monomial_eval(A, (0, 1)) == (1, 0, 0)
    B = braid(3)
    assert sum(monomial_eval(B, (0, 1, 2))) == 1


def test_powers_do_not_enlarge_the_span():
    A = braid(3)
    assert evaluate_on_chambers(A, Poly.monomial((1, 1))) == heaviside(A, 1)


def test_filtration_point_in_a_line():
    p = filtration_profile(single_hyperplane())
    assert p.dims == (1, 2)
    assert p.gr_dims == (1, 1)


def test_filtration_matches_nbc(corpus_map):
    for name, A in corpus_map.items():
        gr = filtration_profile(A).gr_dims
        counts = nbc_counts(A)
        assert gr[: len(counts)] == counts, name
        assert all(g == 0 for g in gr[len(counts):]), name


def test_vg_families_point_in_a_line():
    rels = vg_relation_families(single_hyperplane())
    assert [r.family for r in rels] == [1]
    assert rels[0].poly == Poly.monomial((0, 0)) - Poly.generator(0)


def test_vg_family2_parallel_pair():
    rels = [r for r in vg_relation_families(parallel_pair()) if r.family == 2]
    assert len(rels) == 1
    want = Poly.generator(1) * (Poly.generator(0) - 1)
    assert rels[0].poly == want


def test_vg_family3_braid3():
    rels = [r for r in vg_relation_families(braid(3)) if r.family == 3]
    assert len(rels) == 1
    e12, e13, e23 = (Poly.generator(i) for i in range(3))
    want = e12 * e23 * (e13 - 1) - (e12 - 1) * (e23 - 1) * e13
    assert rels[0].poly == want


def test_verify_relations(corpus_map):
    for name in ("braid4", "semiorder3", "random8"):
        check = verify_relations(corpus_map[name])
        assert check.ok, (name, check.failures)
    assert verify_relations(corpus_map["braid4"]).span_dim == 24
    assert verify_relations(corpus_map["semiorder3"]).span_dim == 19


def test_family3_needs_the_flat_condition():
    # the same difference-of-products shape built from a parallel-type
    # (empty-flat) signed set is NOT a relation: negative control
    S = semiorder(3)
    X = next(X for X in S.minimal_infeasible_sign_sets()
             if not S.flat_nonempty(X.support))
    bogus = (_product_poly(X.plus, X.minus, Poly.one())
             - _product_poly(X.minus, X.plus, Poly.one()))
    values = evaluate_on_chambers(S, bogus)
    assert any(v != 0 for v in values)


def test_presentation_dimension_examples():
    assert presentation_dimension(single_hyperplane()) == 2
    assert presentation_dimension(braid(3)) == 6
    assert presentation_dimension(semiorder(3)) == 19


def test_presentation_dimension_equals_chambers(corpus_map):
    for name, A in corpus_map.items():
        assert presentation_dimension(A) == len(A.chambers()), name
        if A.central:
            assert presentation_dimension(A, families=(1, 3)) \
                == len(A.chambers()), name


def test_presentation_dimension_respects_bound():
    with pytest.raises(ResourceBoundError):
        presentation_dimension(braid(4), nmax=3)


def full_multiples_rank(A, families):
    """Oracle: multiply every relation by every squarefree monomial."""
    ech = SparseEchelon()
    for rel in vg_relation_families(A):
        if rel.family == 1 or rel.family not in families:
            continue
        vec = _poly_to_mask_vector(rel.poly.squarefree_reduce())
        for mask in range(2**A.n):
            prod = {}
            for m, c in vec.items():
                key = m | mask
                prod[key] = prod.get(key, Fraction(0)) + c
            ech.add({k: v for k, v in prod.items() if v})
    return ech.rank


def test_reduced_multiples_match_full_enumeration(corpus_map):
    # the pruned generator set must span exactly the same subspace
    for name in ("single", "parallel", "braid3", "semiorder2", "boolean3",
                 "generic3"):
        A = corpus_map[name]
        for families in ((1, 2), (1, 3)):
            want = 2**A.n - full_multiples_rank(A, families)
            assert presentation_dimension(A, families=families) == want, \
                (name, families)
