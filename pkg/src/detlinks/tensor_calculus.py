"""Characteristic classes of tensor bundles on a product of two Grassmannians.

The product ring H*(Grass(r, n) x Grass(r, m)) is handled factorwise in the
Schubert basis.  The classes the polar integrals consume are the Chern and
Segre classes of the two tensor bundles built from the tautological pairs:
the product of the subbundles (rank r^2) and the product of the quotient
bundles (rank (n-r)(m-r)).

Two independent routes compute the Chern series and both are kept:

* the production path works entirely inside the finite product ring.  Power
  sums of the factor bundles come from the Newton identities, power sums of
  a tensor product are binomial convolutions, and the Newton identities are
  run backwards to recover Chern classes.  Every intermediate value is fully
  reduced into the Schubert basis, so nothing grows beyond the ring's rank;
  the one division (by k in the k-th Newton step) is checked to be exact.

* the validator expands the product of (1 + a_i + b_j) over formal Chern
  roots once per rank pair and degree, rewrites it in elementary symmetric
  terms, memoizes that universal polynomial, and evaluates it on the factor
  Chern classes.  This route blows up combinatorially for large ranks and is
  only used at small scale to certify the production path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .errors import ConsistencyError, DomainError
from .grass_ring import (
    GrassClass,
    GrassSpec,
    _mul_basis,
    chern_list_quot,
    chern_list_sub,
)
from .partitions import as_partition, conjugate, weight

SUB_TENSOR = "sub_tensor"
QUOT_TENSOR = "quot_tensor"
_BUNDLES = (SUB_TENSOR, QUOT_TENSOR)


@dataclass(frozen=True)
class ProdSpec:
    """Spec for the product ring H*(Grass(r, n) x Grass(r, m)), r <= m <= n."""

    r: int
    n: int
    m: int

    def __post_init__(self):
        if not 0 <= self.r <= self.m <= self.n:
            raise DomainError(
                f"need 0 <= r <= m <= n, got r={self.r}, m={self.m}, n={self.n}"
            )

    @property
    def factor1(self) -> GrassSpec:
        return GrassSpec(self.r, self.n)

    @property
    def factor2(self) -> GrassSpec:
        return GrassSpec(self.r, self.m)

    @property
    def dim(self) -> int:
        return self.factor1.dim + self.factor2.dim

    @property
    def rank(self) -> int:
        return self.factor1.rank * self.factor2.rank

    @property
    def box(self) -> tuple:
        return (self.factor1.box, self.factor2.box)


@dataclass(eq=True)
class ProdClass:
    """Element of the product ring: sparse map (partition, partition) -> int."""

    spec: ProdSpec
    coords: dict = field(default_factory=dict)

    def __post_init__(self):
        f1, f2 = self.spec.factor1, self.spec.factor2
        clean = {}
        for (lam, mu), c in self.coords.items():
            lam, mu = as_partition(lam), as_partition(mu)
            if len(lam) > f1.r or (lam and lam[0] > f1.cols):
                raise ValueError(f"{lam} outside the first factor box of {self.spec}")
            if len(mu) > f2.r or (mu and mu[0] > f2.cols):
                raise ValueError(f"{mu} outside the second factor box of {self.spec}")
            if c:
                key = (lam, mu)
                clean[key] = clean.get(key, 0) + c
        self.coords = {k: v for k, v in clean.items() if v}

    @classmethod
    def zero(cls, spec):
        return cls(spec, {})

    @classmethod
    def unit(cls, spec):
        return cls(spec, {((), ()): 1})

    @classmethod
    def schubert_pair(cls, spec, lam, mu):
        return cls(spec, {(as_partition(lam), as_partition(mu)): 1})

    @classmethod
    def tensor(cls, spec, a: GrassClass, b: GrassClass):
        """Kuenneth embedding of a pair of single-factor classes."""
        if a.spec != spec.factor1 or b.spec != spec.factor2:
            raise ValueError("factor classes do not match the product spec")
        coords = {}
        for lam, ca in a.coords.items():
            for mu, cb in b.coords.items():
                coords[(lam, mu)] = ca * cb
        return cls(spec, coords)

    def is_zero(self):
        return not self.coords

    def degree(self) -> int | None:
        degs = {weight(l) + weight(m) for l, m in self.coords}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("class is not homogeneous")
        return degs.pop()

    def __add__(self, other):
        if not isinstance(other, ProdClass) or other.spec != self.spec:
            return NotImplemented
        data = dict(self.coords)
        for k, c in other.coords.items():
            data[k] = data.get(k, 0) + c
        return ProdClass(self.spec, data)

    def __neg__(self):
        return ProdClass(self.spec, {k: -c for k, c in self.coords.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ProdClass(self.spec, {k: c * other for k, c in self.coords.items()})
        if isinstance(other, ProdClass):
            return mul_prod(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        terms = " + ".join(
            f"{c}*s{list(l)}x{list(m)}" for (l, m), c in sorted(self.coords.items())
        )
        return f"<ProdClass r={self.spec.r} n={self.spec.n} m={self.spec.m}: {terms or '0'}>"


def mul_prod(a: ProdClass, b: ProdClass) -> ProdClass:
    """Factorwise product with truncation outside either box."""
    if a.spec != b.spec:
        raise ValueError(f"mismatched product specs {a.spec} and {b.spec}")
    r = a.spec.r
    cols1, cols2 = a.spec.factor1.cols, a.spec.factor2.cols
    data = {}
    for (l1, m1), c1 in a.coords.items():
        for (l2, m2), c2 in b.coords.items():
            c = c1 * c2
            left = _mul_basis(r, cols1, l1, l2)
            if not left:
                continue
            right = _mul_basis(r, cols2, m1, m2)
            for lam, cl in left:
                for mu, cm in right:
                    key = (lam, mu)
                    data[key] = data.get(key, 0) + c * cl * cm
    return ProdClass(a.spec, data)


def integrate_prod(a: ProdClass) -> int:
    """Coefficient of the (box, box) class."""
    return a.coords.get(a.spec.box, 0)


@dataclass(frozen=True)
class CharSeries:
    """Truncated characteristic-class series of one tensor bundle.

    ``terms[k]`` is the homogeneous degree-k part, fully reduced; term 0 is
    the unit class.
    """

    spec: ProdSpec
    flavor: str  # "chern" | "segre"
    bundle: str  # SUB_TENSOR | QUOT_TENSOR
    terms: tuple

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, k):
        return self.terms[k]


def _factor_chern(spec: ProdSpec, bundle: str):
    """Chern class lists and ranks of the two factor bundles being tensored."""
    if bundle == SUB_TENSOR:
        return (
            chern_list_sub(spec.factor1), spec.r,
            chern_list_sub(spec.factor2), spec.r,
        )
    if bundle == QUOT_TENSOR:
        return (
            chern_list_quot(spec.factor1), spec.factor1.cols,
            chern_list_quot(spec.factor2), spec.factor2.cols,
        )
    raise ValueError(f"unknown bundle tag {bundle!r}")


def _newton_power_sums(chern: list, up_to: int) -> list:
    """Power sums p_0..p_up_to of a bundle from its Chern classes.

    p_0 is rank * unit; then p_k = sum_{i<k} (-1)^(i-1) c_i p_{k-i}
    + (-1)^(k-1) k c_k with c_i = 0 beyond the rank.
    """
    spec = chern[0].spec
    rank = len(chern) - 1
    ps = [rank * GrassClass.unit(spec)]
    for k in range(1, up_to + 1):
        acc = GrassClass.zero(spec)
        for i in range(1, k):
            if i <= rank:
                term = chern[i] * ps[k - i]
                acc = acc + (term if (i % 2 == 1) else -term)
        if k <= rank:
            acc = acc + ((-1) ** (k - 1) * k) * chern[k]
        ps.append(acc)
    return ps


def _divide_exact(cls: ProdClass, k: int) -> ProdClass:
    coords = {}
    for key, c in cls.coords.items():
        if c % k:
            raise ConsistencyError(
                f"inexact division by {k} while solving the Newton identities on {cls.spec}"
            )
        coords[key] = c // k
    return ProdClass(cls.spec, coords)


class _SeriesState:
    """Incrementally extended Chern/Segre data for one (spec, bundle).

    Completed entries are immutable ProdClass values; extension only appends,
    so concurrent readers of finished degrees are safe and re-running an
    extension is idempotent.
    """

    def __init__(self, spec: ProdSpec, bundle: str):
        self.spec = spec
        self.bundle = bundle
        self.power = []  # tensor-bundle power sums, from degree 0
        self.chern = [ProdClass.unit(spec)]
        self.segre = [ProdClass.unit(spec)]
        self._factor_ps = None  # (list on factor1, list on factor2)

    def _ensure_factor_power_sums(self, up_to: int):
        c1, _, c2, _ = _factor_chern(self.spec, self.bundle)
        if self._factor_ps is None or len(self._factor_ps[0]) <= up_to:
            self._factor_ps = (
                _newton_power_sums(c1, up_to),
                _newton_power_sums(c2, up_to),
            )

    def extend_chern(self, up_to: int):
        if len(self.chern) > up_to:
            return
        self._ensure_factor_power_sums(up_to)
        ps1, ps2 = self._factor_ps
        while len(self.power) <= up_to:
            k = len(self.power)
            acc = ProdClass.zero(self.spec)
            for i in range(k + 1):
                piece = ProdClass.tensor(self.spec, ps1[i], ps2[k - i])
                acc = acc + comb(k, i) * piece
            self.power.append(acc)
        while len(self.chern) <= up_to:
            k = len(self.chern)
            acc = ProdClass.zero(self.spec)
            for i in range(1, k + 1):
                term = mul_prod(self.chern[k - i], self.power[i])
                acc = acc + (term if (i % 2 == 1) else -term)
            self.chern.append(_divide_exact(acc, k))

    def extend_segre(self, up_to: int):
        self.extend_chern(up_to)
        while len(self.segre) <= up_to:
            k = len(self.segre)
            acc = ProdClass.zero(self.spec)
            for j in range(1, k + 1):
                acc = acc + mul_prod(self.chern[j], self.segre[k - j])
            self.segre.append(-acc)


_SERIES: dict = {}


def _state(spec: ProdSpec, bundle: str) -> _SeriesState:
    if bundle not in _BUNDLES:
        raise ValueError(f"unknown bundle tag {bundle!r}")
    key = (spec, bundle)
    if key not in _SERIES:
        _SERIES[key] = _SeriesState(spec, bundle)
    return _SERIES[key]


def _clamp(spec: ProdSpec, up_to: int) -> int:
    if up_to < 0:
        raise DomainError("series degree must be nonnegative")
    return min(up_to, spec.dim)


def chern_tensor(spec: ProdSpec, bundle: str, up_to: int) -> CharSeries:
    """Total Chern class of the tensor bundle, truncated at degree ``up_to``.

    Requests above dim G are clamped: every class vanishes there anyway.
    """
    up_to = _clamp(spec, up_to)
    st = _state(spec, bundle)
    st.extend_chern(up_to)
    return CharSeries(spec, "chern", bundle, tuple(st.chern[: up_to + 1]))


def segre_tensor(spec: ProdSpec, bundle: str, up_to: int) -> CharSeries:
    """Segre series of the tensor bundle: the degreewise inverse of Chern.

    s_0 = 1 and sum_{j=0..k} c_j s_{k-j} = 0 for k >= 1, solved inside the
    product ring.
    """
    up_to = _clamp(spec, up_to)
    st = _state(spec, bundle)
    st.extend_segre(up_to)
    return CharSeries(spec, "segre", bundle, tuple(st.segre[: up_to + 1]))


# ---------------------------------------------------------------------------
# validator: universal polynomials from formal Chern roots
# ---------------------------------------------------------------------------

def _mono_deg(expo):
    return sum(expo)


@lru_cache(maxsize=None)
def _tensor_root_expansion(p: int, q: int, up_to: int):
    """Product of (1 + a_i + b_j) over i < p, j < q, truncated above total
    degree up_to, as a dict of exponent tuples of length p + q."""
    poly = {(0,) * (p + q): 1}
    for i in range(p):
        for j in range(q):
            nxt = {}
            for expo, c in poly.items():
                nxt[expo] = nxt.get(expo, 0) + c
                if _mono_deg(expo) < up_to:
                    for pos in (i, p + j):
                        bumped = expo[:pos] + (expo[pos] + 1,) + expo[pos + 1:]
                        nxt[bumped] = nxt.get(bumped, 0) + c
            poly = nxt
    return poly


@lru_cache(maxsize=None)
def _elementary_block(p: int, q: int, k: int, block: int):
    """e_k in the first block of p variables (block 0) or the last q (block 1)."""
    nvars = p + q
    lo, hi = (0, p) if block == 0 else (p, p + q)
    idxs = range(lo, hi)
    out = {}

    def rec(start, left, expo):
        if left == 0:
            out[tuple(expo)] = 1
            return
        for v in range(start, hi - left + 1):
            expo[v] = 1
            rec(v + 1, left - 1, expo)
            expo[v] = 0

    if k <= hi - lo:
        rec(lo, k, [0] * nvars)
    return out


@lru_cache(maxsize=None)
def _e_product_expansion(p: int, q: int, alpha: tuple, beta: tuple):
    """Monomial expansion of prod e_{alpha_i}(a-block) * prod e_{beta_j}(b-block)."""
    poly = {(0,) * (p + q): 1}
    factors = [(k, 0) for k in alpha] + [(k, 1) for k in beta]
    for k, block in factors:
        fac = _elementary_block(p, q, k, block)
        nxt = {}
        for e1, c1 in poly.items():
            for e2, c2 in fac.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                nxt[e] = nxt.get(e, 0) + c1 * c2
        poly = nxt
    return poly


@lru_cache(maxsize=None)
def universal_tensor_chern(p: int, q: int, k: int):
    """c_k of a tensor product of bundles of ranks (p, q) as a universal
    polynomial: tuple of (alpha, beta, coeff) meaning
    coeff * prod_i c_{alpha_i}(E) * prod_j c_{beta_j}(F).

    Computed once per (rank pair, degree) by symmetrizing the Chern-root
    product, then reused.  Exponentially large in the ranks; validator only.
    """
    if k == 0:
        return (((), (), 1),)
    if p == 0 or q == 0:
        return ()
    full = _tensor_root_expansion(p, q, k)
    f = {e: c for e, c in full.items() if _mono_deg(e) == k and c}
    out = []
    while f:
        lead = max(f)
        c = f[lead]
        a_part = as_partition(tuple(x for x in lead[:p] if x))
        b_part = as_partition(tuple(x for x in lead[p:] if x))
        if tuple(sorted(lead[:p], reverse=True)) != lead[:p] or \
           tuple(sorted(lead[p:], reverse=True)) != lead[p:]:
            raise ConsistencyError("leading monomial of a symmetric remainder is not dominant")
        alpha, beta = conjugate(a_part), conjugate(b_part)
        expansion = _e_product_expansion(p, q, alpha, beta)
        for e, ec in expansion.items():
            nc = f.get(e, 0) - c * ec
            if nc:
                f[e] = nc
            else:
                f.pop(e, None)
        out.append((alpha, beta, c))
    return tuple(out)


def chern_tensor_via_roots(spec: ProdSpec, bundle: str, up_to: int) -> CharSeries:
    """Validator route: evaluate the universal polynomials on the factors.

    Slow and memory-hungry for large ranks; meant for cross-checking the
    production series at small scale.
    """
    up_to = _clamp(spec, up_to)
    c1, p, c2, q = _factor_chern(spec, bundle)
    unit1, unit2 = GrassClass.unit(spec.factor1), GrassClass.unit(spec.factor2)
    terms = []
    for k in range(up_to + 1):
        acc = ProdClass.zero(spec)
        for alpha, beta, coeff in universal_tensor_chern(p, q, k):
            left = unit1
            for idx in alpha:
                left = left * c1[idx]
            right = unit2
            for idx in beta:
                right = right * c2[idx]
            acc = acc + coeff * ProdClass.tensor(spec, left, right)
        terms.append(acc)
    return CharSeries(spec, "chern", bundle, tuple(terms))
