"""Topology of the complex links of generic determinantal varieties.

A germ of type (m, n, s) is the locus of m x n matrices of rank below s,
stratified by exact rank.  Its complex link of codimension i is the Milnor
fiber of a generic linear function on the slice by a generic plane of
codimension i.  Euler characteristics come from a stratum sum weighted by
polar multiplicities; for i at or above the dimension of the singular locus
the links are smooth and the cohomology below the middle degree is that of
Grass(s-1, m), which pins every Betti number once the Euler characteristic
is known.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import ConsistencyError, DomainError
from .grass_ring import GrassSpec, poincare
from .partitions import IntPolynomial, partitions_in_box
from .polar import polar_profile


@dataclass(frozen=True)
class DetSpec:
    """Type (m, n, s): m x n matrices of rank < s, with 1 <= s <= m <= n."""

    m: int
    n: int
    s: int

    def __post_init__(self):
        if not 1 <= self.s <= self.m <= self.n:
            raise DomainError(
                f"need 1 <= s <= m <= n, got m={self.m}, n={self.n}, s={self.s}"
            )

    @property
    def r(self) -> int:
        """Rank of the open stratum: s - 1."""
        return self.s - 1

    @property
    def d(self) -> int:
        """Complex dimension of the germ: (m+n)r - r^2."""
        return (self.m + self.n) * self.r - self.r**2

    @property
    def sing_dim(self) -> int:
        """Dimension of the singular locus (negative when there is none)."""
        rr = self.r - 1
        return (self.m + self.n) * rr - rr**2

    def smooth_range(self) -> range:
        """Codimensions i whose links are smooth: sing_dim <= i < d."""
        return range(max(self.sing_dim, 0), self.d)


def _stratum_dim(spec: DetSpec, rank: int) -> int:
    return (spec.m + spec.n) * rank - rank**2


def egz_factor(spec: DetSpec, stratum_rank: int) -> int:
    """One minus the Euler characteristic of the transverse complex link
    along the rank stratum: the signed binomial
    (-1)^(s - r' - 1) * comb(m - r' - 1, s - r' - 1), after Ebeling and
    Gusein-Zade.  Equals 1 on the open stratum (empty link)."""
    if not 0 <= stratum_rank < spec.s:
        raise DomainError(
            f"stratum rank {stratum_rank} outside 0..{spec.s - 1} for {spec}"
        )
    a = spec.s - stratum_rank - 1
    return (-1) ** a * comb(spec.m - stratum_rank - 1, a)


def euler_complex_link(spec: DetSpec, i: int) -> int:
    """Euler characteristic of the codimension-i complex link.

    Stratum sum: each rank stratum r' contributes its transverse-link factor
    times an alternating partial sum of the polar multiplicities of the rank
    stratum's closure.  The origin stratum has an empty inner sum for every
    i >= 0 and is skipped.  At i = d - 1 the link is a finite set of points
    and the value equals the multiplicity of the germ.
    """
    if not 0 <= i < spec.d:
        raise DomainError(f"codimension {i} outside 0..{spec.d - 1} for {spec}")
    total = 0
    for rank in range(1, spec.s):
        da = _stratum_dim(spec, rank)
        if i + 1 > da:
            continue
        profile = polar_profile(spec.m, spec.n, rank)
        inner = 0
        for j in range(i + 1, da + 1):
            inner += (-1) ** (da - j) * profile.value(da - j)
        total += inner * egz_factor(spec, rank)
    return total


def euler_step(spec: DetSpec, i: int) -> int:
    """Single Morse-theoretic step chi(L^i) - chi(L^(i+1)).

    The difference isolates one term per stratum:
    (-1)^(d' - i - 1) * values[d' - i - 1] times the transverse-link factor,
    where d' is the stratum closure's dimension.
    """
    if not 0 <= i < spec.d - 1:
        raise DomainError(f"step index {i} outside 0..{spec.d - 2} for {spec}")
    total = 0
    for rank in range(1, spec.s):
        da = _stratum_dim(spec, rank)
        k = da - i - 1
        if k < 0:
            continue
        profile = polar_profile(spec.m, spec.n, rank)
        total += (-1) ** k * profile.value(k) * egz_factor(spec, rank)
    return total


def grass_betti(r: int, m: int) -> tuple:
    """Betti numbers of Grass(r, m) in cohomological degrees 0..2r(m-r)."""
    spec = GrassSpec(r, m)
    out = []
    for deg in range(2 * spec.dim + 1):
        if deg % 2:
            out.append(0)
        else:
            out.append(len(partitions_in_box(spec.r, spec.cols, deg // 2)))
    return tuple(out)


@dataclass(frozen=True)
class LinkProfile:
    """Cohomological profile of one smooth complex link.

    ``betti`` covers degrees 0..middle (the link is Stein of complex
    dimension middle = d - i - 1, so nothing lives above).  Below the middle
    the numbers are those of Grass(s-1, m); the middle one is solved from
    the Euler characteristic.  ``torsion_status`` is "free" only where a
    closed-form argument rules torsion out, else "unknown".
    """

    spec: DetSpec
    codim: int
    chi: int
    smooth: bool
    middle: int
    betti: tuple
    torsion_status: str


def betti_smooth_complex_link(spec: DetSpec, i: int) -> LinkProfile:
    """Betti vector of the codimension-i link; requires a smooth link."""
    if not 0 <= i < spec.d:
        raise DomainError(f"codimension {i} outside 0..{spec.d - 1} for {spec}")
    if i < spec.sing_dim:
        raise DomainError(
            f"link not smooth at codimension {i} for {spec}: "
            f"smooth range is {max(spec.sing_dim, 0)}..{spec.d - 1}"
        )
    chi = euler_complex_link(spec, i)
    middle = spec.d - i - 1
    gb = grass_betti(spec.r, spec.m)
    below = [gb[k] if k < len(gb) else 0 for k in range(middle)]
    partial = sum((-1) ** k * b for k, b in enumerate(below))
    mid = (-1) ** middle * (chi - partial)
    if mid < 0:
        raise ConsistencyError(
            f"negative middle Betti number {mid} for {spec} at codimension {i}"
        )
    torsion = "free" if (middle == 0 or (spec.r == 1 and i == 0)) else "unknown"
    return LinkProfile(
        spec=spec,
        codim=i,
        chi=chi,
        smooth=True,
        middle=middle,
        betti=tuple(below) + (mid,),
        torsion_status=torsion,
    )


# ---------------------------------------------------------------------------
# compact orbit models: Poincare polynomials
# ---------------------------------------------------------------------------

def poincare_unitary(n: int) -> IntPolynomial:
    """Poincare polynomial of the unitary group U(n): prod (1 + t^(2i-1))."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    out = IntPolynomial.one()
    for i in range(1, n + 1):
        out = out * IntPolynomial({0: 1, 2 * i - 1: 1})
    return out


def poincare_stiefel(r: int, n: int) -> IntPolynomial:
    """Poincare polynomial of the Stiefel manifold of r-frames in C^n:
    the top r odd-sphere factors of U(n)."""
    if not 0 <= r <= n:
        raise DomainError(f"need 0 <= r <= n, got r={r}, n={n}")
    out = IntPolynomial.one()
    for j in range(n - r + 1, n + 1):
        out = out * IntPolynomial({0: 1, 2 * j - 1: 1})
    return out


@dataclass(frozen=True)
class OrbitPoincare:
    """Poincare polynomial of the compact model of one rank stratum."""

    m: int
    n: int
    r: int
    polynomial: IntPolynomial


def orbit_poincare(m: int, n: int, r: int) -> OrbitPoincare:
    """Compact orbit model of the rank-r stratum in m x n matrices:
    cohomology of Grass(r, m) times a Stiefel factor of r odd spheres
    with degrees 2n-1, 2n-3, ..., 2(n-r)+1."""
    if not (0 <= r <= min(m, n)):
        raise DomainError(f"need 0 <= r <= min(m, n), got m={m}, n={n}, r={r}")
    poly = poincare(GrassSpec(r, m)) * poincare_stiefel(r, n)
    return OrbitPoincare(m, n, r, poly)


# ---------------------------------------------------------------------------
# real links: only the closed-form parts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RealLinkBetti:
    """What is actually known about a smooth real link of codimension i.

    The real link is a closed oriented manifold of real dimension
    2(d - i) - 1.  Below degree d - i - 1 its cohomology agrees with
    Grass(s-1, m); the two middle groups (degrees d-i-1 and d-i) are not
    computable by the methods here except in the closed-form rank-1 case
    i = 0, where the full vector is that of P^(m-1) x S^(2n-1).
    """

    spec: DetSpec
    codim: int
    below_middle: tuple  # degrees 0 .. d-i-2
    middle_degrees: tuple  # the two unknown degrees
    full_betti: tuple | None  # populated only in the closed-form case


def betti_real_link_rank1(m: int, n: int) -> tuple:
    """Betti numbers of the classical real link of the rank-1 germ:
    the product of projective (m-1)-space with a (2n-1)-sphere."""
    if not 2 <= m <= n:
        raise DomainError(f"need 2 <= m <= n, got m={m}, n={n}")
    poly = poincare(GrassSpec(1, m)) * IntPolynomial({0: 1, 2 * n - 1: 1})
    return tuple(poly.coefficients_list())


def betti_smooth_real_link(spec: DetSpec, i: int) -> RealLinkBetti:
    """Known Betti data of the codimension-i real link; smooth range only."""
    if not 0 <= i < spec.d:
        raise DomainError(f"codimension {i} outside 0..{spec.d - 1} for {spec}")
    if i < spec.sing_dim:
        raise DomainError(f"real link not smooth at codimension {i} for {spec}")
    middle_low = spec.d - i - 1
    gb = grass_betti(spec.r, spec.m)
    below = tuple(gb[k] if k < len(gb) else 0 for k in range(middle_low))
    full = None
    if spec.r == 1 and i == 0:
        full = betti_real_link_rank1(spec.m, spec.n)
    return RealLinkBetti(
        spec=spec,
        codim=i,
        below_middle=below,
        middle_degrees=(middle_low, middle_low + 1),
        full_betti=full,
    )


#: Known middle torsion of a real link, recorded rather than computed: the
#: codimension-2 real link of the 2x3 rank-1 germ is the unit-sphere bundle
#: of the degree -3 line bundle on the projective line, so its Gysin sequence
#: makes H^2 cyclic of order 3.
KNOWN_REAL_LINK_TORSION = {
    ((2, 3, 2), 2): {"degree": 2, "group": "Z/3"},
}


# ---------------------------------------------------------------------------
# smoothing bounds and the square-ish (m, m+1, m) family
# ---------------------------------------------------------------------------

def hilbert_burch_chi_table(max_m: int) -> list:
    """Euler characteristics of the d-dimensional smooth links of the
    (m, m+1, m) germs, rows d = 0..3, columns m = 1..max_m.

    The link of dimension d sits at codimension i = m(m+1) - d - 3.  For
    m = 1 the germ is the reduced origin and i goes negative: a slice by a
    codimension-0 plane is the contractible germ itself (chi = 1 at i = -1)
    and lower i are vacuous (0).
    """
    if max_m < 1:
        raise DomainError("max_m must be at least 1")
    rows = []
    for d in range(4):
        row = []
        for m in range(1, max_m + 1):
            spec = DetSpec(m, m + 1, m)
            i = m * (m + 1) - d - 3
            if 0 <= i < spec.d:
                row.append(euler_complex_link(spec, i))
            elif i == -1:
                row.append(1)
            else:
                row.append(0)
        rows.append(row)
    return rows


_BOUND_KINDS = ("curve", "surface", "threefold")


def smoothing_bounds(m: int, dim_kind: str) -> int:
    """Lower bound for the interesting Betti number of a determinantal
    smoothing cut out by an m x (m+1) matrix:

    * threefold: b_3 >= -chi(L^(m(m+1)-6)) - 2
    * surface:   b_2 >=  chi(L^(m(m+1)-5)) - 2
    * curve:     b_1 >= -chi(L^(m(m+1)-4)) - 1
    """
    if dim_kind not in _BOUND_KINDS:
        raise DomainError(f"dim_kind must be one of {_BOUND_KINDS}")
    if m < 1:
        raise DomainError("m must be at least 1")
    spec = DetSpec(m, m + 1, m)
    offset = {"curve": 4, "surface": 5, "threefold": 6}[dim_kind]
    i = m * (m + 1) - offset
    if not 0 <= i < spec.d:
        raise DomainError(
            f"no {dim_kind} link for m={m}: codimension {i} outside 0..{spec.d - 1}"
        )
    chi = euler_complex_link(spec, i)
    if dim_kind == "surface":
        return chi - 2
    if dim_kind == "threefold":
        return -chi - 2
    return -chi - 1
