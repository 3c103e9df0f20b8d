"""The one-parameter deformation of the Heaviside presentation.

Adjoining the degree-2 parameter u deforms the three relation families so
that u = 1 recovers the chamber-function presentation and u = 0 recovers
the graded algebra's relations.  The deformed object itself is verified
through these two specializations plus the freeness identity
dim P^k = sum of the NBC counts up to grade k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrangement import Arrangement
from .circuits import canonical_circuits, nbc_counts
from .errors import ConsistencyError, InputError
from .polyring import Poly
from .vgring import Relation, _product_poly, filtration_profile


def rees_relation_families(A: Arrangement) -> tuple:
    """The three u-relation families.

    (1) e_i (e_i - u);
    (2) prod e_i prod (e_j - u) per minimal infeasible signed set;
    (3) per signed circuit, the difference of the two opposite products,
        divided by u after checking that every term really carries u.
    """
    cached = A._cache.get("rees_relations")
    if cached is not None:
        return cached
    u = Poly.u()
    rels = []
    for i in range(A.n):
        rels.append(Relation(1, i, Poly.generator(i) * (Poly.generator(i) - u)))
    for X in A.minimal_infeasible_sign_sets():
        rels.append(Relation(2, X, _product_poly(X.plus, X.minus, u)))
    for X in canonical_circuits(A):
        diff = (_product_poly(X.plus, X.minus, u)
                - _product_poly(X.minus, X.plus, u))
        if any(uexp == 0 for (_, uexp) in diff.terms):
            raise ConsistencyError(
                "circuit difference has a u-free term; this cannot happen")
        rels.append(Relation(3, X, diff.divide_u()))
    result = tuple(rels)
    A._cache["rees_relations"] = result
    return result


def specialize(poly: Poly, u_value, vg_normal_form: bool = False) -> Poly:
    """Substitute u = 0 or u = 1; optionally reduce e_i^2 -> e_i afterwards."""
    if u_value not in (0, 1):
        raise InputError("specialization point must be 0 or 1")
    out = poly.substitute_u(u_value)
    if vg_normal_form:
        out = out.squarefree_reduce()
    return out


@dataclass(frozen=True)
class ReesHilbertReport:
    """Rows (k, dim P^k, partial NBC sum); ok iff every row agrees."""

    rows: tuple
    ok: bool

    def lines(self):
        out = ["  k   dim P^k   sum NBC_<=k"]
        for k, d, s in self.rows:
            mark = "" if d == s else "   MISMATCH"
            out.append(f"  {k:<3} {d:<9} {s}{mark}")
        return out


def rees_hilbert_check(A: Arrangement, ordering=None) -> ReesHilbertReport:
    """Freeness forces dim P^k to equal the NBC counts accumulated up to
    grade k; report the whole table."""
    dims = filtration_profile(A).dims
    counts = nbc_counts(A, ordering)
    rows = []
    ok = True
    for k, d in enumerate(dims):
        partial = sum(counts[: k + 1])
        rows.append((k, d, partial))
        ok = ok and d == partial
    return ReesHilbertReport(tuple(rows), ok)
