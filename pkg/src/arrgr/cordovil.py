"""The graded algebra presented by squares, empty-flat monomials and circuit
boundaries, with its no-broken-circuit normal form.

Generators square to zero.  Every signed circuit X contributes the
alternating boundary sum_{a} phi(a) * x_{support - a} (normalized so the
ordering-minimal support element carries +1), and in the affine case every
monomial whose support has empty flat dies.  Monomials are straightened
onto the NBC basis by solving each boundary relation for its broken-circuit
term; every rewrite swaps an element for the strictly larger dropped
maximum, so the process terminates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import Arrangement
from .circuits import (CircuitSet, SignedSet, broken_circuit_map,
                       canonical_circuits, nbc_counts, nbc_sets,
                       ordering_ranks)
from .errors import InputError
from .polyring import Poly
from .vgring import Relation, _product_poly


def circuit_boundary(X: SignedSet, ordering=None, n: int | None = None) -> Poly:
    """Alternating sum of codimension-one monomials of a circuit support.

    The orientation is renormalized (never rejected) so that the
    ordering-minimal support element has sign +1.
    """
    if n is None:
        n = max(X.support) + 1
    ranks = ordering_ranks(n, ordering)
    lead = min(X.support, key=lambda i: ranks[i])
    if X.sign(lead) < 0:
        X = X.negate()
    out = Poly.zero()
    for a in sorted(X.support):
        rest = tuple(sorted(X.support - {a}))
        out = out + Poly.monomial(rest, coeff=X.sign(a))
    return out


def minimal_empty_flat_subsets(A: Arrangement) -> tuple:
    """Inclusion-minimal index sets whose hyperplanes have empty intersection."""
    cached = A._cache.get("min_empty_flats")
    if cached is not None:
        return cached
    from itertools import combinations

    found: list[frozenset] = []
    for size in range(2, A.n + 1):
        for supp in combinations(range(A.n), size):
            ss = frozenset(supp)
            if any(f <= ss for f in found):
                continue
            if not A.flat_nonempty(supp):
                found.append(ss)
    result = tuple(found)
    A._cache["min_empty_flats"] = result
    return result


def cordovil_relation_families(A: Arrangement) -> tuple:
    """Relations presenting the graded algebra: squares, minimal empty-flat
    monomials, and one boundary per circuit pair.  The boundary orientation
    matches `circuit_boundary`, i.e. the telescoped two-sided product sum
    normalized with +1 on the least support element."""
    rels = [Relation(1, i, Poly.monomial((i, i))) for i in range(A.n)]
    for ss in minimal_empty_flat_subsets(A):
        rels.append(Relation(2, ss, Poly.monomial(tuple(sorted(ss)))))
    for X in canonical_circuits(A):
        rels.append(Relation(3, X, circuit_boundary(X, n=A.n)))
    return tuple(rels)


class CordovilAlgebra:
    """Straightening context for an arrangement or a raw circuit system."""

    def __init__(self, source, ordering=None):
        if isinstance(source, Arrangement):
            self.n = source.n
            self.labels = source.labels
            self._flat_ok = source.flat_nonempty
        elif isinstance(source, CircuitSet):
            self.n = source.n
            self.labels = source.ground
            self._flat_ok = None
        else:
            raise InputError("source must be an Arrangement or a CircuitSet")
        self.source = source
        self.ordering = tuple(ordering) if ordering is not None else tuple(range(self.n))
        self._ranks = ordering_ranks(self.n, self.ordering)
        self._broken = broken_circuit_map(source, self.ordering)
        self._broken_order = sorted(
            self._broken,
            key=lambda b: tuple(sorted(self._ranks[i] for i in b)),
            reverse=True,
        )
        self.nbc = nbc_sets(source, self.ordering)
        self._nbc_lookup = set(self.nbc)
        self._memo: dict = {}

    # -- elements ------------------------------------------------------------

    def element(self, coords) -> "AlgebraElement":
        return AlgebraElement(self, coords)

    def one(self) -> "AlgebraElement":
        return self.element({frozenset(): Fraction(1)})

    def generator(self, h) -> "AlgebraElement":
        if isinstance(self.source, Arrangement):
            i = self.source.form_index(h)
        else:
            i = h if isinstance(h, int) else self.labels.index(h)
        return self.straighten(Poly.generator(i))

    def hilbert_series(self) -> tuple:
        return nbc_counts(self.source, self.ordering)

    # -- straightening ---------------------------------------------------------

    def _straighten_monomial(self, mono: frozenset) -> dict:
        hit = self._memo.get(mono)
        if hit is not None:
            return hit
        if self._flat_ok is not None and not self._flat_ok(mono):
            result: dict = {}
        else:
            broken = next((b for b in self._broken_order if b <= mono), None)
            if broken is None:
                assert mono in self._nbc_lookup
                result = {mono: Fraction(1)}
            else:
                supp, phi, mx = self._broken[broken]
                if mx in mono:
                    # the monomial contains the whole circuit support
                    result = {}
                else:
                    result = {}
                    for a in sorted(broken):
                        coeff = Fraction(-phi[a], phi[mx])
                        target = (mono - {a}) | {mx}
                        for basis, c in self._straighten_monomial(frozenset(target)).items():
                            val = result.get(basis, Fraction(0)) + coeff * c
                            if val:
                                result[basis] = val
                            else:
                                result.pop(basis, None)
        self._memo[mono] = result
        return result

    def straighten(self, poly: Poly) -> "AlgebraElement":
        """Normal form of a polynomial on the NBC basis.  Monomials with a
        repeated generator are zero; u must not appear."""
        if not poly.is_u_free:
            raise InputError("cannot straighten a polynomial carrying u")
        coords: dict = {}
        for (emon, _), coeff in poly.kill_squares().terms.items():
            for basis, c in self._straighten_monomial(frozenset(emon)).items():
                val = coords.get(basis, Fraction(0)) + coeff * c
                if val:
                    coords[basis] = val
                else:
                    coords.pop(basis, None)
        return AlgebraElement(self, coords)

    def multiply(self, a: "AlgebraElement", b: "AlgebraElement") -> "AlgebraElement":
        if a.algebra is not self or b.algebra is not self:
            raise InputError("elements belong to different algebra contexts")
        coords: dict = {}
        for s, ca in a.coords.items():
            for t, cb in b.coords.items():
                if s & t:
                    continue
                for basis, c in self._straighten_monomial(s | t).items():
                    val = coords.get(basis, Fraction(0)) + ca * cb * c
                    if val:
                        coords[basis] = val
                    else:
                        coords.pop(basis, None)
        return AlgebraElement(self, coords)


class AlgebraElement:
    """Rational combination of NBC basis monomials in a fixed context."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: CordovilAlgebra, coords):
        self.algebra = algebra
        clean = {}
        for basis, c in coords.items():
            basis = frozenset(basis)
            c = Fraction(c) if not isinstance(c, Fraction) else c
            if c == 0:
                continue
            if basis not in algebra._nbc_lookup:
                raise InputError("coordinates indexed by a non-NBC set")
            clean[basis] = c
        self.coords = clean

    @property
    def is_zero(self) -> bool:
        return not self.coords

    def __add__(self, other):
        out = dict(self.coords)
        for basis, c in other.coords.items():
            val = out.get(basis, Fraction(0)) + c
            if val:
                out[basis] = val
            else:
                out.pop(basis, None)
        return AlgebraElement(self.algebra, out)

    def __sub__(self, other):
        return self + (-1 * other)

    def __rmul__(self, scalar):
        from .linalg import frac
        scalar = frac(scalar)
        return AlgebraElement(self.algebra,
                              {b: scalar * c for b, c in self.coords.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra.multiply(self, other)
        return self.__rmul__(other)

    def __eq__(self, other):
        return (isinstance(other, AlgebraElement) and self.algebra is other.algebra
                and self.coords == other.coords)

    def degree_part(self, k: int) -> "AlgebraElement":
        return AlgebraElement(self.algebra,
                              {b: c for b, c in self.coords.items() if len(b) == k})

    def sorted_coords(self):
        return sorted(self.coords.items(), key=lambda kv: (len(kv[0]), tuple(sorted(kv[0]))))

    def to_json(self) -> dict:
        labels = self.algebra.labels
        basis, coeffs = [], []
        for b, c in self.sorted_coords():
            basis.append([labels[i] for i in sorted(b)])
            coeffs.append(str(c))
        return {"basis": basis, "coeffs": coeffs}

    def to_str(self) -> str:
        if not self.coords:
            return "0"
        poly = Poly({(tuple(sorted(b)), 0): c for b, c in self.coords.items()})
        return poly.to_str(self.algebra.labels)

    def __repr__(self):
        return f"AlgebraElement({self.to_str()})"


def dumps_element(el: AlgebraElement) -> str:
    return json.dumps(el.to_json())


@dataclass(frozen=True)
class LeadingFormReport:
    ok: bool
    signs: tuple      # (circuit, +1/-1) per circuit, in canonical order
    mismatches: tuple

    def sign_lines(self, labels):
        return [f"{X.pretty(labels)}: sign {s:+d}" for X, s in self.signs]


def leading_form_check(A: Arrangement, ordering=None) -> LeadingFormReport:
    """Compare the top-degree part of each degree-filtered circuit relation
    with the circuit boundary; a global sign per circuit is allowed and
    recorded."""
    signs = []
    mismatches = []
    for X in canonical_circuits(A, ordering):
        vg3 = (_product_poly(X.plus, X.minus, Poly.one())
               - _product_poly(X.minus, X.plus, Poly.one()))
        top = vg3.top_e_part()
        db = circuit_boundary(X, ordering, n=A.n)
        if top == db:
            signs.append((X, 1))
        elif top == -db:
            signs.append((X, -1))
        else:
            mismatches.append(X)
    return LeadingFormReport(not mismatches, tuple(signs), tuple(mismatches))
