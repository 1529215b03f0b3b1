"""Integral cohomology of a Grassmannian, three ways.

The production representation is the Schubert basis: an element of
H*(Grass(r, m)) is a sparse map from partitions inside the r x (m - r)
box to integers, with multiplication by iterated Pieri steps (a general
basis element is first expanded through single-row classes by the
Giambelli determinant).  Degrees are Chern degrees: the class indexed by
a partition of weight w lives in cohomological degree 2w.

Alongside it live the polynomial presentation Z[x_1..x_r]/J (the x_i are
the Chern classes of the tautological subbundle, deg x_i = i) and a
brute-force oracle that builds that quotient degree by degree with exact
integer row reduction.  The oracle certifies the Pieri/Giambelli route;
neither side trusts the other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import comb

from .errors import ConsistencyError, DomainError
from .partitions import (
    IntPolynomial,
    as_partition,
    box_complement,
    conjugate,
    fits_in_box,
    gaussian_binomial,
    partitions_in_box,
    weight,
)


@dataclass(frozen=True)
class GrassSpec:
    """Ring spec for H*(Grass(r, m)): r-planes in an m-dimensional space."""

    r: int
    m: int

    def __post_init__(self):
        if not 0 <= self.r <= self.m:
            raise DomainError(f"need 0 <= r <= m, got r={self.r}, m={self.m}")

    @property
    def cols(self) -> int:
        return self.m - self.r

    @property
    def dim(self) -> int:
        """Complex dimension r(m - r); also the top Chern degree."""
        return self.r * self.cols

    @property
    def rank(self) -> int:
        """Rank of the ring as a Z-module: comb(m, r)."""
        return comb(self.m, self.r)

    @property
    def box(self) -> tuple:
        """The full-box partition ((m-r), ..., (m-r)), r parts."""
        return (self.cols,) * self.r if self.cols else ()

    def basis(self, weight: int | None = None) -> list:
        return partitions_in_box(self.r, self.cols, weight)


@dataclass(eq=True)
class GrassClass:
    """Element of H*(Grass(r, m)) in the Schubert basis.

    ``coords`` maps partitions in the box to integers; zero coefficients
    are never stored.  Instances are immutable by convention: every
    operation returns a fresh class.
    """

    spec: GrassSpec
    coords: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, c in self.coords.items():
            lam = as_partition(lam)
            if not fits_in_box(lam, self.spec.r, self.spec.cols):
                raise ValueError(f"{lam} does not fit the {self.spec.r}x{self.spec.cols} box")
            if c:
                clean[lam] = clean.get(lam, 0) + c
        self.coords = {k: v for k, v in clean.items() if v}

    @classmethod
    def zero(cls, spec):
        return cls(spec, {})

    @classmethod
    def unit(cls, spec):
        return cls(spec, {(): 1})

    @classmethod
    def schubert(cls, spec, lam):
        return cls(spec, {as_partition(lam): 1})

    def is_zero(self) -> bool:
        return not self.coords

    def is_homogeneous(self) -> bool:
        return len({weight(k) for k in self.coords}) <= 1

    def degree(self) -> int | None:
        """Common Chern degree of a homogeneous class, None for zero."""
        degs = {weight(k) for k in self.coords}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("class is not homogeneous")
        return degs.pop()

    def __add__(self, other):
        if not isinstance(other, GrassClass) or other.spec != self.spec:
            return NotImplemented
        data = dict(self.coords)
        for k, c in other.coords.items():
            data[k] = data.get(k, 0) + c
        return GrassClass(self.spec, data)

    def __neg__(self):
        return GrassClass(self.spec, {k: -c for k, c in self.coords.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GrassClass(self.spec, {k: c * other for k, c in self.coords.items()})
        if isinstance(other, GrassClass):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        terms = " + ".join(f"{c}*s{list(k)}" for k, c in sorted(self.coords.items()))
        return f"<GrassClass({self.spec.r},{self.spec.m}): {terms or '0'}>"


def _perm_sign(perm) -> int:
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


@lru_cache(maxsize=None)
def _pieri(rows: int, cols: int, lam: tuple, k: int):
    """Partitions obtained from lam by adding a horizontal strip of k boxes
    inside the rows x cols rectangle (each column gains at most one box)."""
    if k == 0:
        return (lam,)
    padded = lam + (0,) * (rows - len(lam))
    out = []

    def place(i, budget, acc):
        if i == rows:
            if budget == 0:
                out.append(as_partition(acc))
            return
        low = padded[i]
        high = cols if i == 0 else padded[i - 1]
        for v in range(low, min(high, low + budget) + 1):
            place(i + 1, budget - (v - low), acc + (v,))

    place(0, k, ())
    return tuple(out)


@lru_cache(maxsize=None)
def _h_monomials(mu: tuple):
    """Signed expansion of the Giambelli row determinant for mu into products
    of single-row degrees: returns ((k_1 >= k_2 >= ...), sign) pairs."""
    ell = len(mu)
    if ell == 0:
        return (((), 1),)
    acc = {}
    for perm in permutations(range(ell)):
        subs = tuple(mu[i] - i + perm[i] for i in range(ell))
        if any(s < 0 for s in subs):
            continue
        key = tuple(sorted((s for s in subs if s > 0), reverse=True))
        acc[key] = acc.get(key, 0) + _perm_sign(perm)
    return tuple((ks, c) for ks, c in acc.items() if c)


@lru_cache(maxsize=None)
def _mul_basis(rows: int, cols: int, lam: tuple, mu: tuple):
    """Structure constants of the product of two Schubert classes inside the
    rows x cols box, as a tuple of (partition, coefficient)."""
    if weight(lam) + weight(mu) > rows * cols:
        return ()
    if len(mu) > len(lam):
        lam, mu = mu, lam
    total = {}
    for ks, sign in _h_monomials(mu):
        cur = {lam: sign}
        for k in ks:
            nxt = {}
            for nu, c in cur.items():
                for nu2 in _pieri(rows, cols, nu, k):
                    nxt[nu2] = nxt.get(nu2, 0) + c
            cur = nxt
            if not cur:
                break
        for nu, c in cur.items():
            total[nu] = total.get(nu, 0) + c
    return tuple((nu, c) for nu, c in sorted(total.items()) if c)


def mul(a: GrassClass, b: GrassClass) -> GrassClass:
    """Product in H*(Grass(r, m)); terms leaving the box are truncated away."""
    if a.spec != b.spec:
        raise ValueError(f"mismatched ring specs {a.spec} and {b.spec}")
    rows, cols = a.spec.r, a.spec.cols
    data = {}
    for lam, c1 in a.coords.items():
        for mu, c2 in b.coords.items():
            c = c1 * c2
            for nu, sc in _mul_basis(rows, cols, lam, mu):
                data[nu] = data.get(nu, 0) + c * sc
    return GrassClass(a.spec, data)


def integrate(a: GrassClass) -> int:
    """Coefficient of the full-box class; zero if there is no top component."""
    return a.coords.get(a.spec.box, 0)


def chern_sub(spec: GrassSpec, i: int) -> GrassClass:
    """i-th Chern class of the tautological subbundle: (-1)^i times the
    single-column class of height i.  On Grass(m, m) the subbundle is
    trivial and the class vanishes."""
    if not 1 <= i <= spec.r:
        raise DomainError(f"chern_sub index {i} outside 1..{spec.r}")
    if spec.cols == 0:
        return GrassClass.zero(spec)
    return GrassClass(spec, {(1,) * i: (-1) ** i})

def chern_quot(spec: GrassSpec, k: int) -> GrassClass:
    """k-th Chern class of the tautological quotient bundle: the single-row
    class of width k.  On Grass(0, m) the quotient is trivial and the class
    vanishes."""
    if not 1 <= k <= spec.cols:
        raise DomainError(f"chern_quot index {k} outside 1..{spec.cols}")
    if spec.r == 0:
        return GrassClass.zero(spec)
    return GrassClass(spec, {(k,): 1})


def chern_list_sub(spec: GrassSpec) -> list:
    """Total Chern class of the subbundle as the list [1, c_1(S), ..., c_r(S)]."""
    return [GrassClass.unit(spec)] + [chern_sub(spec, i) for i in range(1, spec.r + 1)]


def chern_list_quot(spec: GrassSpec) -> list:
    """Total Chern class of the quotient bundle as [1, c_1(Q), ..., c_{m-r}(Q)]."""
    return [GrassClass.unit(spec)] + [chern_quot(spec, k) for k in range(1, spec.cols + 1)]


def dual_pairing(a: GrassClass, b: GrassClass) -> int:
    """integrate(a * b), evaluated through the complement pairing.

    The Schubert basis is self-dual up to box complement, a fact certified
    against mul/integrate by the test suite; this is the cheap path used by
    the integral evaluations.
    """
    spec = a.spec
    if spec != b.spec:
        raise ValueError("mismatched ring specs")
    total = 0
    for lam, c in a.coords.items():
        comp = box_complement(lam, spec.r, spec.cols)
        c2 = b.coords.get(comp)
        if c2:
            total += c * c2
    return total


def poincare(spec: GrassSpec) -> IntPolynomial:
    """Poincare polynomial of Grass(r, m) in cohomological degrees."""
    return gaussian_binomial(spec.m, spec.r).stretched(2)


# ---------------------------------------------------------------------------
# polynomial presentation
# ---------------------------------------------------------------------------

class PresentationPoly:
    """Integer polynomial in the subbundle Chern generators x_1..x_r.

    Terms are exponent tuples of length ``nvars``; the weighted degree
    convention is deg x_i = i, matching Chern degrees.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        data = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for expo, c in items:
                expo = tuple(int(e) for e in expo)
                if len(expo) != nvars or any(e < 0 for e in expo):
                    raise ValueError(f"bad exponent vector {expo} for {nvars} variables")
                if c:
                    data[expo] = data.get(expo, 0) + int(c)
        self.terms = {k: v for k, v in data.items() if v}

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars, i):
        """x_i, 1-based."""
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} outside 1..{nvars}")
        expo = tuple(1 if j == i - 1 else 0 for j in range(nvars))
        return cls(nvars, {expo: 1})

    def is_zero(self):
        return not self.terms

    @staticmethod
    def _wdeg(expo):
        return sum((i + 1) * e for i, e in enumerate(expo))

    def weighted_degree(self) -> int | None:
        """Common weighted degree; None for zero, error if inhomogeneous."""
        degs = {self._wdeg(e) for e in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("polynomial is not weighted-homogeneous")
        return degs.pop()

    def __add__(self, other):
        if not isinstance(other, PresentationPoly) or other.nvars != self.nvars:
            return NotImplemented
        data = dict(self.terms)
        for e, c in other.terms.items():
            data[e] = data.get(e, 0) + c
        return PresentationPoly(self.nvars, data)

    def __neg__(self):
        return PresentationPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return PresentationPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, PresentationPoly) or other.nvars != self.nvars:
            return NotImplemented
        data = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                data[e] = data.get(e, 0) + c1 * c2
        return PresentationPoly(self.nvars, data)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PresentationPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        def mono(e):
            factors = []
            for i, p in enumerate(e):
                if p == 1:
                    factors.append(f"x{i + 1}")
                elif p > 1:
                    factors.append(f"x{i + 1}^{p}")
            return "*".join(factors)

        parts = []
        for e in sorted(self.terms, key=lambda t: (self._wdeg(t), t), reverse=True):
            c = self.terms[e]
            m = mono(e)
            if not m:
                parts.append(str(c))
            elif c == 1:
                parts.append(m)
            elif c == -1:
                parts.append(f"-{m}")
            else:
                parts.append(f"{c}*{m}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"PresentationPoly({self.nvars}, {self.terms!r})"


def presentation_h(r: int, n_max: int) -> list:
    """Iterates of the relation recursion, starting from h^(0) = (x_1..x_r).

    One step multiplies the vector by the companion-style matrix whose first
    column is (-x_1, ..., -x_r) and whose superdiagonal is the identity:
    h_i^(n+1) = h_{i+1}^(n) - x_i h_1^(n), with h_{r+1}^(n) read as 0.
    Returns [(n, [h_1^(n), ..., h_r^(n)]) for n = 0..n_max].

    Step n presents the ring for ambient dimension m = r + n: the ideal
    generated by h^(m-r) cuts Z[x_1..x_r] down to a free module of rank
    comb(m, r), a fact the quotient-ring oracle checks against the Gaussian
    binomial coefficients.
    """
    if r < 1:
        raise DomainError("presentation needs r >= 1")
    if n_max < 0:
        raise DomainError("n_max must be nonnegative")
    xs = [PresentationPoly.variable(r, i) for i in range(1, r + 1)]
    cur = list(xs)
    out = [(0, list(cur))]
    for n in range(1, n_max + 1):
        h1 = cur[0]
        nxt = [cur[i + 1] - xs[i] * h1 for i in range(r - 1)]
        nxt.append(-(xs[r - 1] * h1))
        out.append((n, nxt))
        cur = nxt
    return out


def grassmann_relations(spec: GrassSpec) -> list:
    """Generators of the ideal presenting H*(Grass(r, m)) on x_1..x_r."""
    if spec.r == 0:
        return []
    return presentation_h(spec.r, spec.cols)[-1][1]


def schubert_to_presentation(spec: GrassSpec, lam) -> PresentationPoly:
    """Express a Schubert class as a polynomial in x_1..x_r.

    Column determinant with entries e_{lam'_i - i + j} where e_k stands for
    the k-th Chern class of the dual subbundle, i.e. (-1)^k x_k.
    """
    lam = as_partition(lam)
    if not fits_in_box(lam, spec.r, spec.cols):
        raise ValueError(f"{lam} does not fit the box of {spec}")
    r = spec.r

    def e_poly(k):
        if k == 0:
            return PresentationPoly.constant(r, 1)
        if k < 0 or k > r:
            return PresentationPoly.zero(r)
        return PresentationPoly.variable(r, k) * ((-1) ** k)

    mu = conjugate(lam)
    ell = len(mu)
    if ell == 0:
        return PresentationPoly.constant(r, 1)
    acc = PresentationPoly.zero(r)
    for perm in permutations(range(ell)):
        term = PresentationPoly.constant(r, _perm_sign(perm))
        for i in range(ell):
            term = term * e_poly(mu[i] - i + perm[i])
            if term.is_zero():
                break
        acc = acc + term
    return acc


# ---------------------------------------------------------------------------
# the brute-force quotient-ring oracle
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _weighted_monomials(nvars: int, d: int):
    """Exponent tuples over x_1..x_nvars of weighted degree d, lex descending."""
    if nvars == 0:
        return ((),) if d == 0 else ()
    out = []

    def rec(i, remaining, acc):
        if i == nvars:
            if remaining == 0:
                out.append(acc)
            return
        w = i + 1
        for e in range(remaining // w, -1, -1):
            rec(i + 1, remaining - e * w, acc + (e,))

    rec(0, d, ())
    return tuple(sorted(out, reverse=True))


def _integer_echelon(rows, ncols):
    """Exact integer row echelon preferring unit pivots.

    The pivot order is chosen greedily at entries of absolute value one
    (creating them by Euclidean column reduction when necessary), because a
    left-to-right sweep can get stuck on a non-unit pivot even when the row
    lattice is a direct summand.  A successful run returns (pivots, []),
    where every pivot entry is 1, each pivot row vanishes at the other
    pivot columns, and the non-pivot coordinates are therefore a Z-basis of
    the quotient.  If no unit pivot can be produced for some rows they are
    returned unreduced as the second component; the caller treats that as
    possible torsion.  Pure big-int arithmetic throughout.
    """
    work = [list(r) for r in rows if any(r)]
    pivots = []
    while work:
        pos = None
        for ri, row in enumerate(work):
            for c, v in enumerate(row):
                if v == 1 or v == -1:
                    pos = (ri, c)
                    break
            if pos:
                break
        if pos is None:
            progressed = False
            for c in range(ncols):
                having = [r for r in work if r[c]]
                if len(having) < 2:
                    continue
                having.sort(key=lambda r: abs(r[c]))
                base = having[0]
                for r in having[1:]:
                    q = r[c] // base[c]
                    if q:
                        for t in range(ncols):
                            r[t] -= q * base[t]
                        progressed = True
            work = [r for r in work if any(r)]
            if progressed:
                continue
            return sorted(pivots), work
        ri, c = pos
        piv = work.pop(ri)
        if piv[c] < 0:
            piv = [-x for x in piv]
        for row in work:
            if row[c]:
                q = row[c]
                for t in range(ncols):
                    row[t] -= q * piv[t]
        for _, prow in pivots:
            if prow[c]:
                q = prow[c]
                for t in range(ncols):
                    prow[t] -= q * piv[t]
        pivots.append((c, piv))
        work = [r for r in work if any(r)]
    return sorted(pivots), []


class QuotientRingOracle:
    """Brute-force model of H*(Grass(r, m)) as Z[x_1..x_r] modulo relations.

    Each weighted-graded piece is handled by exact integer row reduction of
    the ideal's span over the monomial basis.  Unit pivots are verified, not
    assumed: a quotient with torsion would be reported loudly instead of
    being normalized away.
    """

    SCALE_LIMIT = 200

    def __init__(self, spec: GrassSpec):
        if spec.rank > self.SCALE_LIMIT:
            raise DomainError(
                f"oracle limited to rank <= {self.SCALE_LIMIT}, got {spec.rank}"
            )
        self.spec = spec
        self._pieces = {}  # degree -> (monomials, pivots, standard monomial list)
        gens = grassmann_relations(spec)
        top = 2 * spec.dim  # products of two basis monomials stay below this
        for d in range(top + 1):
            monos = _weighted_monomials(spec.r, d)
            index = {e: i for i, e in enumerate(monos)}
            rows = []
            for g in gens:
                gd = g.weighted_degree()
                if gd is None or gd > d:
                    continue
                for u in _weighted_monomials(spec.r, d - gd):
                    row = [0] * len(monos)
                    for e, c in g.terms.items():
                        prod = tuple(a + b for a, b in zip(e, u))
                        row[index[prod]] = c
                    rows.append(row)
            basis, stuck = _integer_echelon(rows, len(monos))
            if stuck:
                raise ConsistencyError(
                    f"no unit-pivot echelon in degree {d} of {spec}: the "
                    "quotient may have torsion or no monomial basis there"
                )
            pivot_cols = {col for col, _ in basis}
            standard = tuple(e for i, e in enumerate(monos) if i not in pivot_cols)
            self._pieces[d] = (monos, basis, standard)

    @property
    def graded_ranks(self) -> tuple:
        """Ranks of the graded pieces for degrees 0..dim."""
        return tuple(len(self._pieces[d][2]) for d in range(self.spec.dim + 1))

    def standard_monomials(self, d: int) -> tuple:
        if d < 0:
            return ()
        if d not in self._pieces:
            return ()
        return self._pieces[d][2]

    def _reduce_vector(self, d, vec):
        monos, basis, standard = self._pieces[d]
        v = list(vec)
        for col, row in basis:
            c = v[col]
            if c:
                # pivot rows may have support on either side of their pivot
                for t in range(len(v)):
                    v[t] -= c * row[t]
        index = {e: i for i, e in enumerate(monos)}
        return {e: v[index[e]] for e in standard if v[index[e]]}

    def reduce_poly(self, poly: PresentationPoly) -> dict:
        """Normal form of a polynomial: map standard monomial -> coefficient."""
        if poly.nvars != self.spec.r:
            raise ValueError("variable count does not match the spec")
        buckets = {}
        for e, c in poly.terms.items():
            d = PresentationPoly._wdeg(e)
            buckets.setdefault(d, {})[e] = c
        out = {}
        for d, terms in buckets.items():
            if d not in self._pieces:
                if any(terms.values()):
                    raise ValueError(f"degree {d} beyond the oracle's table")
                continue
            monos = self._pieces[d][0]
            vec = [terms.get(e, 0) for e in monos]
            out.update(self._reduce_vector(d, vec))
        return out

    def multiply(self, e1: tuple, e2: tuple) -> dict:
        """Normal form of the product of two monomials."""
        prod = tuple(a + b for a, b in zip(e1, e2))
        poly = PresentationPoly(self.spec.r, {prod: 1})
        return self.reduce_poly(poly)

    def structure_constants(self, d1: int, d2: int) -> dict:
        """Multiplication table between the standard monomials of two degrees."""
        table = {}
        for e1 in self.standard_monomials(d1):
            for e2 in self.standard_monomials(d2):
                table[(e1, e2)] = self.multiply(e1, e2)
        return table


def oracle_quotient_ring(spec: GrassSpec) -> QuotientRingOracle:
    """Construct the quotient-ring oracle for one Grassmannian."""
    return QuotientRingOracle(spec)
