"""Rational affine hyperplane arrangements.

An arrangement is an ordered list of labelled oriented hyperplanes
H_i = {v : w_i(v) = 0} given by affine forms w_i(v) = linear·v + constant.
Chambers are the connected components of the complement, encoded as sign
vectors: strings over '+'/'-' indexed like the form list ('+' sorts before
'-', so the lexicographic chamber order is plain string order).
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations, product

from .circuits import SignedSet
from .errors import DuplicateFormError, InputError
from .linalg import affine_system_consistent, frac, strict_feasible


class AffineForm:
    """A non-constant rational affine form coeffs·v + constant."""

    __slots__ = ("linear", "constant")

    def __init__(self, linear, constant=0):
        self.linear = tuple(frac(x) for x in linear)
        self.constant = frac(constant)
        if not any(x != 0 for x in self.linear):
            raise InputError("affine form must have a nonzero linear part")

    def __call__(self, point):
        if len(point) != len(self.linear):
            raise InputError("point dimension mismatch")
        return sum(a * frac(x) for a, x in zip(self.linear, point)) + self.constant

    def homogenized(self) -> tuple:
        """Coefficient vector extended by the constant."""
        return self.linear + (self.constant,)

    def proportional(self, other: "AffineForm") -> bool:
        """True iff some nonzero rational multiple of `other` equals self."""
        a, b = self.homogenized(), other.homogenized()
        if len(a) != len(b):
            return False
        lead = next(i for i, x in enumerate(a) if x != 0)
        if b[lead] == 0:
            return False
        scale = b[lead] / a[lead]
        return all(scale * x == y for x, y in zip(a, b))

    def __eq__(self, other):
        return (isinstance(other, AffineForm) and self.linear == other.linear
                and self.constant == other.constant)

    def __hash__(self):
        return hash((self.linear, self.constant))

    def __repr__(self):
        return f"AffineForm({self.linear}, {self.constant})"


class Arrangement:
    """Immutable arrangement; geometric queries are cached on the instance."""

    def __init__(self, dim, forms, labels=None):
        self.dim = int(dim)
        if self.dim < 0:
            raise InputError("dimension must be nonnegative")
        self.forms = tuple(f if isinstance(f, AffineForm) else AffineForm(*f)
                           for f in forms)
        for f in self.forms:
            if len(f.linear) != self.dim:
                raise InputError("form length does not match the dimension")
        if labels is None:
            labels = [f"H{i + 1}" for i in range(len(self.forms))]
        self.labels = tuple(str(x) for x in labels)
        if len(self.labels) != len(self.forms):
            raise InputError("one label per form required")
        if len(set(self.labels)) != len(self.labels):
            raise InputError("labels must be distinct")
        for i, j in combinations(range(len(self.forms)), 2):
            if self.forms[i].proportional(self.forms[j]):
                raise DuplicateFormError(
                    f"forms {self.labels[i]!r} and {self.labels[j]!r} define "
                    "the same hyperplane")
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self._cache: dict = {}

    # -- basics ------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.forms)

    @property
    def central(self) -> bool:
        return all(f.constant == 0 for f in self.forms)

    def form_index(self, h) -> int:
        """Resolve a 0-based index or a label to a form index."""
        if isinstance(h, str):
            if h not in self._index:
                raise InputError(f"no hyperplane labelled {h!r}")
            return self._index[h]
        i = int(h)
        if not 0 <= i < self.n:
            raise InputError(f"form index {i} out of range")
        return i

    def _key(self):
        return (self.dim, tuple(f.homogenized() for f in self.forms), self.labels)

    def __eq__(self, other):
        return isinstance(other, Arrangement) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Arrangement(dim={self.dim}, n={self.n})"

    # -- geometric queries ---------------------------------------------------

    def sign_constraints(self, signs) -> list:
        """Strict constraints 'sign_i w_i > 0' for a (partial) sign word."""
        out = []
        for i, s in enumerate(signs):
            sgn = 1 if s in ("+", 1) else -1
            f = self.forms[i]
            out.append((f.linear, f.constant, sgn))
        return out

    def signs_feasible(self, signs) -> bool:
        return strict_feasible(self.sign_constraints(signs), dim=self.dim)

    def chambers(self) -> tuple:
        """All feasible sign vectors, in lexicographic order ('+' < '-')."""
        cached = self._cache.get("chambers")
        if cached is not None:
            return cached
        out: list[str] = []

        def extend(prefix: str):
            if not self.signs_feasible(prefix):
                return
            if len(prefix) == self.n:
                out.append(prefix)
                return
            extend(prefix + "+")
            extend(prefix + "-")

        extend("")
        result = tuple(out)
        self._cache["chambers"] = result
        return result

    def chamber_index(self, signs: str) -> int:
        lookup = self._cache.get("chamber_index")
        if lookup is None:
            lookup = {c: i for i, c in enumerate(self.chambers())}
            self._cache["chamber_index"] = lookup
        return lookup[signs]

    def flat_nonempty(self, subset) -> bool:
        """True iff the affine flat {w_i = 0 : i in subset} is nonempty."""
        ss = frozenset(self.form_index(h) for h in subset)
        cache = self._cache.setdefault("flats", {})
        hit = cache.get(ss)
        if hit is None:
            rows = [self.forms[i].linear for i in sorted(ss)]
            rhs = [-self.forms[i].constant for i in sorted(ss)]
            hit = affine_system_consistent(rows, rhs)
            cache[ss] = hit
        return hit

    def signed_set_feasible(self, X: SignedSet) -> bool:
        """Open half-space intersection test for a signed index set."""
        constraints = [(self.forms[i].linear, self.forms[i].constant, 1)
                       for i in sorted(X.plus)]
        constraints += [(self.forms[i].linear, self.forms[i].constant, -1)
                        for i in sorted(X.minus)]
        return strict_feasible(constraints, dim=self.dim)

    def minimal_infeasible_sign_sets(self) -> tuple:
        """All signed sets with empty open intersection whose proper signed
        subsets all have nonempty open intersection.  Enumerated by support
        size, so minimality reduces to not containing an earlier hit."""
        cached = self._cache.get("min_infeasible")
        if cached is not None:
            return cached
        found: list[SignedSet] = []
        for size in range(1, self.n + 1):
            for supp in combinations(range(self.n), size):
                for pattern in product((1, -1), repeat=size):
                    plus = frozenset(i for i, s in zip(supp, pattern) if s > 0)
                    minus = frozenset(i for i, s in zip(supp, pattern) if s < 0)
                    X = SignedSet(plus, minus)
                    if any(f.issubset(X) for f in found):
                        continue
                    if not self.signed_set_feasible(X):
                        found.append(X)
        result = tuple(found)
        self._cache["min_infeasible"] = result
        return result


# -- generators ------------------------------------------------------------


def build(dim, forms, labels=None) -> Arrangement:
    """Validate and build an arrangement from raw (linear, constant) pairs."""
    return Arrangement(dim, forms, labels)


def braid(n: int) -> Arrangement:
    """x_i - x_j for 1 <= i < j <= n, labelled "ij"."""
    if n < 2:
        raise InputError("braid arrangement needs n >= 2")
    forms, labels = [], []
    for i in range(n):
        for j in range(i + 1, n):
            lin = [Fraction(0)] * n
            lin[i], lin[j] = Fraction(1), Fraction(-1)
            forms.append(AffineForm(lin, 0))
            labels.append(f"{i + 1}{j + 1}")
    return Arrangement(n, forms, labels)


def semiorder(n: int) -> Arrangement:
    """x_i - x_j - 1 for all ordered pairs i != j, labelled "ij"."""
    if n < 2:
        raise InputError("semiorder arrangement needs n >= 2")
    forms, labels = [], []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            lin = [Fraction(0)] * n
            lin[i], lin[j] = Fraction(1), Fraction(-1)
            forms.append(AffineForm(lin, -1))
            labels.append(f"{i + 1}{j + 1}")
    return Arrangement(n, forms, labels)


def boolean(n: int) -> Arrangement:
    """The coordinate arrangement x_1, ..., x_n."""
    if n < 1:
        raise InputError("boolean arrangement needs n >= 1")
    forms = []
    for i in range(n):
        lin = [Fraction(0)] * n
        lin[i] = Fraction(1)
        forms.append(AffineForm(lin, 0))
    return Arrangement(n, forms, [str(i + 1) for i in range(n)])


def cone(A: Arrangement, label: str = "H0") -> Arrangement:
    """Central arrangement in one higher dimension: each form picks up its
    constant as the coefficient of the new last coordinate r (so it restricts
    to the original at r = 1), plus the extra form -r labelled H0, last."""
    if label in A.labels:
        raise InputError(f"cone label {label!r} collides with an existing label")
    forms = [AffineForm(f.linear + (f.constant,), 0) for f in A.forms]
    forms.append(AffineForm((Fraction(0),) * A.dim + (Fraction(-1),), 0))
    return Arrangement(A.dim + 1, forms, A.labels + (label,))


def delete(A: Arrangement, h) -> Arrangement:
    """Remove one hyperplane."""
    i = A.form_index(h)
    forms = A.forms[:i] + A.forms[i + 1:]
    labels = A.labels[:i] + A.labels[i + 1:]
    return Arrangement(A.dim, forms, labels)


def restrict_with_map(A: Arrangement, h):
    """Restrict the other hyperplanes to H_h, returning the restricted
    arrangement in dimension dim-1 plus a provenance map old label -> kept
    label.  Parallel hyperplanes (empty intersection with H_h) drop out and
    do not appear in the map; scalar-multiple images collapse onto the
    first-seen representative, whose orientation and label are kept.

    The eliminated coordinate is the largest-index one with a nonzero
    coefficient in w_h, which makes the parametrization deterministic.
    """
    i = A.form_index(h)
    f = A.forms[i]
    p = max(k for k in range(A.dim) if f.linear[k] != 0)
    alpha = f.linear[p]
    keep = [k for k in range(A.dim) if k != p]
    out_forms: list[AffineForm] = []
    out_labels: list[str] = []
    provenance: dict = {}
    for j, g in enumerate(A.forms):
        if j == i:
            continue
        beta = g.linear[p]
        new_lin = [g.linear[k] - beta * f.linear[k] / alpha for k in keep]
        new_const = g.constant - beta * f.constant / alpha
        if all(x == 0 for x in new_lin):
            # distinct hyperplanes cannot restrict to the zero form
            assert new_const != 0
            continue
        cand = AffineForm(new_lin, new_const)
        match = next((m for m, kept in enumerate(out_forms)
                      if kept.proportional(cand)), None)
        if match is None:
            out_forms.append(cand)
            out_labels.append(A.labels[j])
            provenance[A.labels[j]] = A.labels[j]
        else:
            provenance[A.labels[j]] = out_labels[match]
    return Arrangement(A.dim - 1, out_forms, out_labels), provenance


def restrict(A: Arrangement, h) -> Arrangement:
    return restrict_with_map(A, h)[0]


# -- JSON ----------------------------------------------------------------


def arrangement_to_json(A: Arrangement) -> dict:
    return {
        "dim": A.dim,
        "forms": [
            {"linear": [str(x) for x in f.linear],
             "constant": str(f.constant),
             "label": lab}
            for f, lab in zip(A.forms, A.labels)
        ],
    }


def arrangement_from_json(data: dict) -> Arrangement:
    try:
        dim = int(data["dim"])
        forms = [AffineForm([frac(x) for x in e["linear"]], frac(e["constant"]))
                 for e in data["forms"]]
        labels = [e["label"] for e in data["forms"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed arrangement data: {exc}") from exc
    return Arrangement(dim, forms, labels)


def load_arrangement(path) -> Arrangement:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: line {exc.lineno}: {exc.msg}") from exc
    return arrangement_from_json(data)


def save_arrangement(A: Arrangement, path):
    with open(path, "w") as fh:
        json.dump(arrangement_to_json(A), fh, indent=2)
        fh.write("\n")
