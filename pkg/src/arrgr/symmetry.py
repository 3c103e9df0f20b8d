"""Finite symmetry groups of arrangements and characters of the filtration.

A symmetry is recorded as a signed permutation of the forms: applying the
inverse affine map to form i gives a positive or negative multiple of form
perm(i).  The induced permutation of chambers is ρ(w); traces of ρ(w) on
each filtration stage P^k are computed through the orthogonal projection
onto P^k under the standard inner product on chamber functions, which is
legitimate because permutation matrices are orthogonal and P^k is
W-stable.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .arrangement import Arrangement
from .characters import cycle_type, decompose_character, partition_str
from .errors import ConsistencyError, InputError, NotASymmetryError
from .linalg import SparseEchelon, frac, rref, solve_square
from .vgring import filtration_data


@dataclass(frozen=True)
class SignedPermutation:
    """perm[i] = j and flips[i] = sign(lambda) where w·ω_i = lambda·ω_j."""

    perm: tuple
    flips: tuple

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)) or len(self.flips) != n:
            raise InputError("signed permutation data malformed")
        if any(s not in (1, -1) for s in self.flips):
            raise InputError("flips must be +1 or -1")

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(n)), (1,) * n)

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """self after other (w1 ∘ w2 as maps on the ambient space)."""
        n = len(self.perm)
        if len(other.perm) != n:
            raise InputError("size mismatch in composition")
        perm = tuple(self.perm[other.perm[i]] for i in range(n))
        flips = tuple(other.flips[i] * self.flips[other.perm[i]] for i in range(n))
        return SignedPermutation(perm, flips)

    def inverse(self) -> "SignedPermutation":
        n = len(self.perm)
        inv = [0] * n
        flips = [1] * n
        for i, j in enumerate(self.perm):
            inv[j] = i
            flips[j] = self.flips[i]
        return SignedPermutation(tuple(inv), tuple(flips))


def derive_signed_permutation(A: Arrangement, matrix, translation=None) -> SignedPermutation:
    """Signed form permutation induced by the affine map v -> Mv + t.

    For each i we need ω_i ∘ map⁻¹ to be a scalar multiple of some ω_j;
    otherwise the map is not a symmetry of the arrangement.
    """
    d = A.dim
    M = [[frac(x) for x in row] for row in matrix]
    if len(M) != d or any(len(row) != d for row in M):
        raise InputError("matrix must be square of the arrangement dimension")
    t = [frac(x) for x in (translation if translation is not None else [0] * d)]
    if len(t) != d:
        raise InputError("translation length mismatch")
    # columns of M^{-1} and the vector M^{-1} t
    rows_aug = [M[r] + [Fraction(1) if c == r else Fraction(0) for c in range(d)] + [t[r]]
                for r in range(d)]
    red, pivots = rref(rows_aug)
    if pivots != list(range(d)):
        raise InputError("symmetry matrix is singular")
    Minv = [[red[r][d + c] for c in range(d)] for r in range(d)]
    Minv_t = [red[r][2 * d] for r in range(d)]
    perm = [None] * A.n
    flips = [1] * A.n
    from .arrangement import AffineForm
    for i, f in enumerate(A.forms):
        lin = tuple(sum(f.linear[r] * Minv[r][c] for r in range(d)) for c in range(d))
        const = f.constant - sum(f.linear[r] * Minv_t[r] for r in range(d))
        image = AffineForm(lin, const)
        j = next((k for k, g in enumerate(A.forms) if image.proportional(g)), None)
        if j is None:
            raise NotASymmetryError(
                f"image of form {A.labels[i]!r} is not in the arrangement")
        lead = next(k for k, x in enumerate(image.homogenized()) if x != 0)
        scale = A.forms[j].homogenized()[lead] / image.homogenized()[lead]
        # image = (1/scale)·ω_j, so ω_i ∘ map⁻¹ = λ·ω_j with λ = 1/scale
        perm[i] = j
        flips[i] = 1 if scale > 0 else -1
    return SignedPermutation(tuple(perm), tuple(flips))


@dataclass(frozen=True)
class GroupSpec:
    """A finite group given in full, acting by signed form permutations.

    `underlying` optionally stores each element's source datum (for the
    coordinate action of S_n: the coordinate permutation in one-line
    notation), from which cycle types are derived.  `class_of` assigns each
    element a conjugacy class id; `cycle_types` is per class and is None
    for groups that are not recognized symmetric groups.
    """

    name: str
    elements: tuple
    class_of: tuple
    class_labels: tuple
    cycle_types: tuple | None
    underlying: tuple | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def n_classes(self) -> int:
        return len(self.class_labels)

    def class_sizes(self) -> tuple:
        sizes = [0] * self.n_classes
        for c in self.class_of:
            sizes[c] += 1
        return tuple(sizes)

    def class_representatives(self) -> tuple:
        reps = [None] * self.n_classes
        for e, c in enumerate(self.class_of):
            if reps[c] is None:
                reps[c] = self.elements[e]
        return tuple(reps)

    def validate_closure(self):
        _validate_closure(self.elements)


def _validate_closure(elements):
    elems = set(elements)
    if len(elems) != len(elements):
        raise InputError("group contains repeated elements")
    n = len(elements[0].perm)
    if SignedPermutation.identity(n) not in elems:
        raise InputError("group does not contain the identity")
    for a in elements:
        if a.inverse() not in elems:
            raise InputError("group not closed under inverse")
        for b in elements:
            if a.compose(b) not in elems:
                raise InputError("group not closed under composition")


def coordinate_action(A: Arrangement, name: str | None = None) -> GroupSpec:
    """The full symmetric group permuting the coordinates of Q^dim.

    Each coordinate permutation must map the arrangement to itself; its
    conjugacy class is its cycle type, so irreducible decompositions are
    available directly.
    """
    n = A.dim
    elements, unders, class_of = [], [], []
    labels: list[str] = []
    label_ids: dict = {}
    for g in permutations(range(n)):
        # permutation matrix sending e_i to e_{g(i)}: (Mv)_j = v_{g^{-1}(j)}
        M = [[Fraction(1) if g[c] == r else Fraction(0) for c in range(n)]
             for r in range(n)]
        w = derive_signed_permutation(A, M)
        mu = cycle_type(g)
        key = partition_str(mu)
        if key not in label_ids:
            label_ids[key] = len(labels)
            labels.append(key)
        elements.append(w)
        unders.append(g)
        class_of.append(label_ids[key])
    order = sorted(range(len(labels)), key=lambda c: labels[c])
    remap = {old: new for new, old in enumerate(order)}
    types = tuple(tuple(int(x) for x in labels[c][1:-1].split(",")) for c in order)
    return GroupSpec(
        name=f"S{n}-coordinates",
        elements=tuple(elements),
        class_of=tuple(remap[c] for c in class_of),
        class_labels=tuple(labels[c] for c in order),
        cycle_types=types,
        underlying=tuple(unders),
    )


def group_from_json(A: Arrangement, data: dict) -> GroupSpec:
    """Load a group from its file form; see the README for the schema."""
    name = str(data.get("group", "W"))
    if name == "Sn-coordinates":
        return coordinate_action(A)
    try:
        entries = data["action"]
    except KeyError as exc:
        raise InputError("group file needs an 'action' list") from exc
    elements = []
    for entry in entries:
        perm_map = entry["perm"]
        flips_map = entry.get("flips", {})
        perm = [None] * A.n
        flips = [1] * A.n
        for src, dst in perm_map.items():
            perm[A.form_index(str(src))] = A.form_index(str(dst))
        if any(p is None for p in perm):
            raise InputError("group element must map every hyperplane")
        for src, s in flips_map.items():
            flips[A.form_index(str(src))] = int(s)
        elements.append(SignedPermutation(tuple(perm), tuple(flips)))
    _validate_closure(elements)
    class_of, class_labels = _conjugacy_classes(elements)
    cycle_types = None
    m = re.fullmatch(r"S(\d+)", name)
    if m:
        cycle_types = _identify_sn_classes(int(m.group(1)), elements, class_of,
                                           len(class_labels))
        class_labels = tuple(partition_str(t) for t in cycle_types)
    return GroupSpec(name, tuple(elements), tuple(class_of), tuple(class_labels),
                     cycle_types)


def load_group(A: Arrangement, path_or_name: str) -> GroupSpec:
    if path_or_name == "Sn-coordinates":
        return coordinate_action(A)
    with open(path_or_name) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path_or_name}: line {exc.lineno}: {exc.msg}") from exc
    return group_from_json(A, data)


def _conjugacy_classes(elements):
    index = {w: k for k, w in enumerate(elements)}
    class_of = [None] * len(elements)
    next_id = 0
    for k, g in enumerate(elements):
        if class_of[k] is not None:
            continue
        for h in elements:
            conj = h.compose(g).compose(h.inverse())
            class_of[index[conj]] = next_id
        next_id += 1
    labels = tuple(f"C{c + 1}" for c in range(next_id))
    return class_of, labels


def _element_order(w: SignedPermutation) -> int:
    n = len(w.perm)
    e = SignedPermutation.identity(n)
    g = w
    k = 1
    while g != e:
        g = g.compose(w)
        k += 1
    return k


def _identify_sn_classes(n, elements, class_of, n_classes):
    """Match abstract classes to cycle types by (element order, class size);
    the pair is injective over partitions of n <= 5."""
    from .characters import class_size, partitions

    if n > 5:
        raise InputError("cycle-type identification from files is limited to S5")
    sizes = [0] * n_classes
    orders = [None] * n_classes
    for k, c in enumerate(class_of):
        sizes[c] += 1
        if orders[c] is None:
            orders[c] = _element_order(elements[k])
    from math import lcm
    lookup = {}
    for mu in partitions(n):
        key = (lcm(*mu), class_size(mu))
        if key in lookup:
            raise ConsistencyError("ambiguous cycle-type identification")
        lookup[key] = mu
    out = []
    for c in range(n_classes):
        key = (orders[c], sizes[c])
        if key not in lookup:
            raise InputError(
                f"class with order {orders[c]} and size {sizes[c]} does not "
                f"match any cycle type of S{n}")
        out.append(lookup[key])
    return tuple(out)


def chamber_permutation(A: Arrangement, w: SignedPermutation) -> tuple:
    """Index map chamber -> image chamber; the image sign vector must be a
    chamber again (guaranteed for true symmetries, asserted here)."""
    if len(w.perm) != A.n:
        raise InputError("signed permutation size does not match the arrangement")
    chambers = A.chambers()
    out = []
    for signs in chambers:
        img = [None] * A.n
        for i in range(A.n):
            s = 1 if signs[i] == "+" else -1
            img[w.perm[i]] = "+" if s * w.flips[i] > 0 else "-"
        img_str = "".join(img)
        try:
            out.append(A.chamber_index(img_str))
        except KeyError as exc:
            raise ConsistencyError(
                f"image sign vector {img_str} is not a chamber") from exc
    if sorted(out) != list(range(len(chambers))):
        raise ConsistencyError("chamber map is not a permutation")
    return tuple(out)


def fixed_chambers(A: Arrangement, w: SignedPermutation) -> int:
    p = chamber_permutation(A, w)
    return sum(1 for i, j in enumerate(p) if i == j)


@dataclass(frozen=True)
class GradedCharacters:
    """Character of every filtration layer, one value per conjugacy class."""

    group: GroupSpec
    grade_values: tuple   # grade -> tuple of Fractions per class
    chamber_values: tuple

    def decompositions(self):
        """Per-grade and total multiplicities; symmetric groups only."""
        if self.group.cycle_types is None:
            raise InputError("irreducible decomposition needs a symmetric group")
        out = []
        for values in self.grade_values:
            table = dict(zip(self.group.cycle_types, values))
            n = sum(self.group.cycle_types[0])
            out.append(decompose_character(table, n))
        total = decompose_character(
            dict(zip(self.group.cycle_types, self.chamber_values)),
            sum(self.group.cycle_types[0]))
        return out, total


def _projection_trace(basis_columns, perm, upto_grade):
    """trace of (B^T B)^{-1} B^T ρ B for the basis of P^k stacked by grade."""
    cols = []
    for k in range(upto_grade + 1):
        cols += [vec for _, vec in basis_columns[k]]
    if not cols:
        return Fraction(0)
    m = len(cols)
    nch = len(cols[0])
    # G = B^T B and R = B^T ρ(w) B, with (ρ(w) col)[perm[i]] = col[i]
    G = [[sum(cols[a][i] * cols[b][i] for i in range(nch)) for b in range(m)]
         for a in range(m)]
    R = [[sum(cols[a][perm[i]] * cols[b][i] for i in range(nch)) for b in range(m)]
         for a in range(m)]
    X = solve_square(G, R)
    return sum(X[i][i] for i in range(m))


def _check_stable(basis_columns, perm, upto_grade):
    """P^k must be carried into itself by the chamber permutation."""
    ech = SparseEchelon()
    cols = []
    for k in range(upto_grade + 1):
        cols += [vec for _, vec in basis_columns[k]]
    for vec in cols:
        ech.add({i: v for i, v in enumerate(vec) if v})
    base_rank = ech.rank
    for vec in cols:
        moved = {perm[i]: v for i, v in enumerate(vec) if v}
        if ech.add(moved):
            raise ConsistencyError("filtration stage is not W-stable")
    assert ech.rank == base_rank


def graded_character(A: Arrangement, group: GroupSpec,
                     reverse_basis: bool = False) -> GradedCharacters:
    """Characters of the filtration layers, via projection traces.

    grade-k character = trace on P^k minus trace on P^{k-1}, evaluated on
    one representative per conjugacy class.
    """
    dims, bases = filtration_data(A, reverse=reverse_basis)
    top = max((k for k in range(len(dims)) if bases[k]), default=0)
    reps = group.class_representatives()
    per_class_stage = []
    chamber_vals = []
    for w in reps:
        perm = chamber_permutation(A, w)
        _check_stable(bases, perm, top)
        traces = [_projection_trace(bases, perm, k) for k in range(top + 1)]
        per_class_stage.append(traces)
        chamber_vals.append(Fraction(sum(1 for i, j in enumerate(perm) if i == j)))
    grade_values = []
    for k in range(top + 1):
        row = []
        for traces in per_class_stage:
            prev = traces[k - 1] if k else Fraction(0)
            row.append(traces[k] - prev)
        grade_values.append(tuple(row))
    for c in range(len(reps)):
        total = sum(grade_values[k][c] for k in range(top + 1))
        if total != chamber_vals[c]:
            raise ConsistencyError("graded characters do not sum to the "
                                   "chamber character")
    return GradedCharacters(group, tuple(grade_values), tuple(chamber_vals))
