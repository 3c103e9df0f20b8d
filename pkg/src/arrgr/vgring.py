"""The ring of locally constant functions on the arrangement complement,
filtered by Heaviside degree.

A chamber function is a tuple of rationals indexed by the canonical chamber
order.  The Heaviside generator of hyperplane i is 1 on chambers on its
positive side and 0 otherwise; P^k is the span of all products of at most k
generators.  Ideal-theoretic questions about the presentation are answered
with finite linear algebra in the 2^n-dimensional squarefree-monomial space
(squares are rewritten via e_i^2 -> e_i), never with Groebner bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .arrangement import Arrangement
from .circuits import SignedSet, canonical_circuits
from .errors import InputError, ResourceBoundError
from .linalg import SparseEchelon
from .polyring import Poly


def heaviside(A: Arrangement, h) -> tuple:
    """Value 1 on chambers with sign '+' at h, value 0 on sign '-'."""
    i = A.form_index(h)
    return tuple(Fraction(1) if c[i] == "+" else Fraction(0) for c in A.chambers())


def monomial_eval(A: Arrangement, subset) -> tuple:
    """Pointwise product of the Heaviside functions indexed by `subset`."""
    idxs = [A.form_index(h) for h in subset]
    return tuple(
        Fraction(1) if all(c[i] == "+" for i in idxs) else Fraction(0)
        for c in A.chambers()
    )


def evaluate_on_chambers(A: Arrangement, poly: Poly) -> tuple:
    """Substitute the Heaviside functions into a u-free polynomial."""
    if not poly.is_u_free:
        raise InputError("cannot evaluate a polynomial still carrying u")
    out = []
    for c in A.chambers():
        total = Fraction(0)
        for (emon, _), coeff in poly.terms.items():
            if all(c[i] == "+" for i in emon):
                total += coeff
        out.append(total)
    return tuple(out)


@dataclass(frozen=True)
class FiltrationProfile:
    """dims[k] = dim P^k for k = 0..n; gr_dims are successive differences."""

    dims: tuple
    gr_dims: tuple

    @property
    def top(self) -> int:
        return max((k for k, g in enumerate(self.gr_dims) if g), default=0)


def filtration_data(A: Arrangement, reverse: bool = False):
    """Pivot columns of the monomial-evaluation matrix, grade by grade.

    Returns (dims, bases) where bases[k] is the list of (subset, vector)
    pivot columns of degree exactly k; the union over grades <= k spans P^k.
    `reverse` flips the enumeration order inside each grade (used to confirm
    that derived quantities are basis-independent).
    """
    key = ("filtration", reverse)
    cached = A._cache.get(key)
    if cached is not None:
        return cached
    nch = len(A.chambers())
    ech = SparseEchelon()
    dims = []
    bases = []
    for k in range(A.n + 1):
        grade = []
        if ech.rank < nch:
            combos = combinations(range(A.n), k)
            if reverse:
                combos = reversed(list(combos))
            for subset in combos:
                vec = monomial_eval(A, subset)
                sparse = {i: v for i, v in enumerate(vec) if v}
                if ech.add(sparse):
                    grade.append((frozenset(subset), vec))
        dims.append(ech.rank)
        bases.append(grade)
    result = (tuple(dims), bases)
    A._cache[key] = result
    return result


def filtration_profile(A: Arrangement) -> FiltrationProfile:
    dims, _ = filtration_data(A)
    gr = tuple(dims[k] - (dims[k - 1] if k else 0) for k in range(len(dims)))
    return FiltrationProfile(tuple(dims), gr)


@dataclass(frozen=True)
class Relation:
    """One relation with its provenance: family tag and generating datum."""

    family: int
    source: object  # int for family 1, SignedSet for 2/3, frozenset for
                    # empty-flat monomial relations
    poly: Poly

    def source_str(self, labels) -> str:
        if isinstance(self.source, SignedSet):
            return self.source.pretty(labels)
        if isinstance(self.source, frozenset):
            return "{" + ",".join(labels[i] for i in sorted(self.source)) + "}"
        return labels[self.source]

    def pretty(self, labels) -> str:
        return f"({self.family}) [{self.source_str(labels)}]  {self.poly.to_str(labels)}"


def _product_poly(plus, minus, shift) -> Poly:
    """prod_{i in plus} e_i * prod_{j in minus} (e_j - shift)."""
    out = Poly.one()
    for i in sorted(plus):
        out = out * Poly.generator(i)
    for j in sorted(minus):
        out = out * (Poly.generator(j) - shift)
    return out


def vg_relation_families(A: Arrangement) -> tuple:
    """The three relation families of the Heaviside presentation.

    (1) e_i^2 - e_i for every i (emitted symbolically, pre-reduction);
    (2) prod e_i prod (e_j - 1) for every minimal infeasible signed set;
    (3) the difference of the two opposite products for every signed
        circuit, taken in the orientation with +1 on the least support
        element.
    """
    cached = A._cache.get("vg_relations")
    if cached is not None:
        return cached
    rels = []
    for i in range(A.n):
        rels.append(Relation(1, i, Poly.monomial((i, i)) - Poly.generator(i)))
    for X in A.minimal_infeasible_sign_sets():
        rels.append(Relation(2, X, _product_poly(X.plus, X.minus, Poly.one())))
    for X in canonical_circuits(A):
        poly = (_product_poly(X.plus, X.minus, Poly.one())
                - _product_poly(X.minus, X.plus, Poly.one()))
        rels.append(Relation(3, X, poly))
    result = tuple(rels)
    A._cache["vg_relations"] = result
    return result


@dataclass(frozen=True)
class RelationCheck:
    ok: bool
    span_dim: int
    chambers: int
    failures: tuple  # (family, source string, witness chamber signs)


def verify_relations(A: Arrangement) -> RelationCheck:
    """Evaluate every generated relation on the chambers and check that the
    monomial evaluations span all chamber functions."""
    failures = []
    chambers = A.chambers()
    for rel in vg_relation_families(A):
        values = evaluate_on_chambers(A, rel.poly)
        witness = next((c for c, v in zip(chambers, values) if v != 0), None)
        if witness is not None:
            failures.append((rel.family, rel.source_str(A.labels), witness))
    span = filtration_profile(A).dims[-1] if A.n else len(chambers)
    ok = not failures and span == len(chambers)
    return RelationCheck(ok, span, len(chambers), tuple(failures))


def _subset_masks(indices):
    """Bitmasks of all subsets of the given index list, empty set first."""
    masks = [0]
    for i in indices:
        bit = 1 << i
        masks += [m | bit for m in masks]
    return masks


def _poly_to_mask_vector(poly: Poly) -> dict:
    vec: dict = {}
    for (emon, uexp), coeff in poly.terms.items():
        assert uexp == 0
        mask = 0
        for i in emon:
            mask |= 1 << i
        vec[mask] = vec.get(mask, Fraction(0)) + coeff
    return {m: c for m, c in vec.items() if c}


def _reduced_multiples(rel: Relation, n: int):
    """All distinct squarefree reductions of monomial multiples of a
    family-(2) or family-(3) relation.

    Multiplying by a generator inside the support either reproduces the
    relation, kills it, or (family 3) isolates one of its two opposite
    products, so only multipliers disjoint from the support remain, applied
    to the short list of residual polynomials.
    """
    if rel.family == 2:
        base = [rel.poly]
        support = rel.source.support
    elif rel.family == 3:
        X = rel.source
        p1 = _product_poly(X.plus, X.minus, Poly.one())
        p2 = _product_poly(X.minus, X.plus, Poly.one())
        base = [p1 - p2]
        if X.minus:
            base.append(p1)
        if X.plus:
            base.append(p2)
        support = X.support
    else:
        raise InputError("only families 2 and 3 have monomial multiples here")
    free = [i for i in range(n) if i not in support]
    for mask in _subset_masks(free):
        for poly in base:
            vec = _poly_to_mask_vector(poly)
            yield {m | mask: c for m, c in vec.items()}


def presentation_dimension(A: Arrangement, families=(1, 2), nmax: int = 14) -> int:
    """Dimension of Q[e]/<relations> computed by multilinear reduction.

    Family (1) is imposed by working in the squarefree-monomial space of
    dimension 2^n and rewriting e_i^2 -> e_i; the remaining families span a
    subspace whose corank is the answer.  `families` selects which of (2)
    and (3) to use — for central arrangements families (1) and (3) alone
    must already give the chamber count.
    """
    if A.n > nmax:
        raise ResourceBoundError(
            f"presentation_dimension bound exceeded: n = {A.n} > {nmax}")
    ech = SparseEchelon()
    for rel in vg_relation_families(A):
        if rel.family == 1 or rel.family not in families:
            continue
        for vec in _reduced_multiples(rel, A.n):
            ech.add(vec)
    return 2**A.n - ech.rank
