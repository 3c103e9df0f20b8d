"""Sparse exact polynomials in the hyperplane generators e_i and the
degree-2 parameter u.

A monomial key is (emon, uexp) where emon is a sorted tuple of generator
indices (repeats allowed, so (3, 3) encodes e_3^2) and uexp is the power
of u.  Almost everything downstream works with squarefree, u-free
polynomials; the general shape exists for the square relations e_i^2 - e_i
and e_i(e_i - u).  The grading puts deg e_i = deg u = 2.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ConsistencyError, InputError
from .linalg import frac


class Poly:
    """Polynomial with rational coefficients; immutable by convention."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, coeff in (terms or {}).items():
            emon, uexp = key
            coeff = frac(coeff)
            if coeff == 0:
                continue
            clean[(tuple(sorted(emon)), int(uexp))] = coeff
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({((), 0): 1})

    @classmethod
    def constant(cls, c):
        return cls({((), 0): c})

    @classmethod
    def generator(cls, i: int):
        return cls({((i,), 0): 1})

    @classmethod
    def u(cls, power: int = 1):
        return cls({((), power): 1})

    @classmethod
    def monomial(cls, idxs, uexp: int = 0, coeff=1):
        return cls({(tuple(idxs), uexp): coeff})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.constant(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = frac(other)
            return Poly({k: v * c for k, v in self.terms.items()})
        out: dict = {}
        for (m1, u1), c1 in self.terms.items():
            for (m2, u2), c2 in other.terms.items():
                key = (tuple(sorted(m1 + m2)), u1 + u2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    # -- shape predicates ---------------------------------------------------

    @property
    def is_u_free(self) -> bool:
        return all(u == 0 for (_, u) in self.terms)

    @property
    def is_squarefree(self) -> bool:
        return all(len(set(m)) == len(m) for (m, _) in self.terms)

    @property
    def is_homogeneous(self) -> bool:
        degs = {len(m) + u for (m, u) in self.terms}
        return len(degs) <= 1

    def e_support(self) -> frozenset:
        out = set()
        for (m, _) in self.terms:
            out.update(m)
        return frozenset(out)

    # -- transforms ----------------------------------------------------------

    def substitute_u(self, value) -> "Poly":
        value = frac(value)
        out: dict = {}
        for (m, u), c in self.terms.items():
            key = (m, 0)
            out[key] = out.get(key, Fraction(0)) + c * value**u
        return Poly(out)

    def divide_u(self) -> "Poly":
        """Exact division by u; every term must carry u."""
        for (m, u) in self.terms:
            if u == 0:
                raise ConsistencyError("polynomial is not divisible by u")
        return Poly({(m, u - 1): c for (m, u), c in self.terms.items()})

    def squarefree_reduce(self) -> "Poly":
        """Apply the rewriting e_i^k -> e_i to every monomial."""
        out: dict = {}
        for (m, u), c in self.terms.items():
            key = (tuple(sorted(set(m))), u)
            out[key] = out.get(key, Fraction(0)) + c
        return Poly(out)

    def kill_squares(self) -> "Poly":
        """Drop every monomial containing a repeated generator (x^2 = 0)."""
        return Poly({(m, u): c for (m, u), c in self.terms.items()
                     if len(set(m)) == len(m)})

    def top_e_part(self) -> "Poly":
        """Highest-degree homogeneous part in the e generators (u-free input)."""
        if not self.is_u_free:
            raise InputError("top_e_part expects a u-free polynomial")
        if not self.terms:
            return Poly.zero()
        top = max(len(m) for (m, _) in self.terms)
        return Poly({(m, u): c for (m, u), c in self.terms.items() if len(m) == top})

    # -- display -------------------------------------------------------------

    def sorted_terms(self):
        """Terms in canonical order: total degree, then e-degree descending,
        then lexicographic on the index tuple."""
        return sorted(
            self.terms.items(),
            key=lambda kv: (-(len(kv[0][0]) + kv[0][1]), -len(kv[0][0]), kv[0][0]),
        )

    def to_str(self, labels=None) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (m, u), c in self.sorted_terms():
            factors = []
            if u == 1:
                factors.append("u")
            elif u > 1:
                factors.append(f"u^{u}")
            for i in sorted(set(m)):
                name = labels[i] if labels is not None else str(i)
                power = m.count(i)
                factors.append(f"e{name}" if power == 1 else f"e{name}^{power}")
            body = "*".join(factors)
            if not body:
                mag = str(abs(c))
            elif abs(c) == 1:
                mag = body
            else:
                mag = f"{abs(c)}*{body}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, mag))
        first_sign, first_mag = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_mag
        for sign, mag in pieces[1:]:
            out += f" {sign} {mag}"
        return out

    def to_json_terms(self, labels=None) -> list:
        out = []
        for (m, u), c in self.sorted_terms():
            names = [labels[i] if labels is not None else str(i) for i in m]
            out.append({"monomial": names, "u": u, "coeff": str(c)})
        return out

    def __repr__(self):
        return f"Poly({self.to_str()})"


def format_poincare(coeffs) -> str:
    """Render a polynomial in t^2 from its coefficient list, e.g. [1, 6, 11, 6]."""
    pieces = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            pieces.append(str(c))
        else:
            head = "" if c == 1 else f"{c}"
            pieces.append(f"{head}t^{2 * k}")
    return " + ".join(pieces) if pieces else "0"
