"""Partition combinatorics and Poincare-series bookkeeping.

Every cohomology basis downstream is indexed by partitions inside an
``rows x cols`` rectangle, so partitions are kept as bare tuples of weakly
decreasing positive integers with trailing zeros dropped.  Tuples hash and
compare fast, which matters because they key every sparse ring element in
the package.
"""

from __future__ import annotations

from functools import lru_cache


#: A partition is a tuple of weakly decreasing positive integers; () is empty.
Partition = tuple


def as_partition(parts) -> Partition:
    """Normalize ``parts`` into a partition tuple.

    Trailing zeros are dropped; anything not weakly decreasing and positive
    is rejected.

    >>> as_partition([3, 1, 0])
    (3, 1)
    """
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if p and (p[-1] < 0 or any(p[i] < p[i + 1] for i in range(len(p) - 1))):
        raise ValueError(f"not a partition: {parts!r}")
    return p


def weight(p: Partition) -> int:
    """Number of boxes of the Young diagram."""
    return sum(p)


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram.  Involutive.

    >>> conjugate((3, 1))
    (2, 1, 1)
    """
    if not p:
        return ()
    return tuple(sum(1 for part in p if part > j) for j in range(p[0]))


def fits_in_box(p: Partition, rows: int, cols: int) -> bool:
    """Whether ``p`` has at most ``rows`` parts, each at most ``cols``."""
    return len(p) <= rows and (not p or p[0] <= cols)


def box_complement(p: Partition, rows: int, cols: int) -> Partition:
    """Complement of ``p`` inside the rows x cols rectangle, rotated by 180 degrees."""
    if not fits_in_box(p, rows, cols):
        raise ValueError(f"{p} does not fit in a {rows}x{cols} box")
    padded = p + (0,) * (rows - len(p))
    comp = tuple(cols - padded[rows - 1 - i] for i in range(rows))
    return as_partition(comp)


def _descending(w, max_part, max_len):
    # partitions of w, parts <= max_part, length <= max_len, lex descending
    if w == 0:
        yield ()
        return
    for first in range(min(w, max_part), 0, -1):
        if max_len == 0:
            return
        for rest in _descending(w - first, first, max_len - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _box_weight(rows: int, cols: int, w: int):
    return tuple(_descending(w, cols, rows))


def partitions_in_box(rows: int, cols: int, weight: int | None = None) -> list:
    """All partitions with at most ``rows`` parts, each part at most ``cols``.

    Optionally filtered to a single weight.  The order is canonical: graded
    by weight, then lexicographically descending, so table output and cache
    layouts stay deterministic.

    >>> partitions_in_box(2, 2, 2)
    [(2,), (1, 1)]
    """
    if rows < 0 or cols < 0:
        raise ValueError("box dimensions must be nonnegative")
    if weight is not None:
        if weight < 0:
            raise ValueError("weight must be nonnegative")
        return list(_box_weight(rows, cols, weight))
    out = []
    for w in range(rows * cols + 1):
        out.extend(_box_weight(rows, cols, w))
    return out


class IntPolynomial:
    """Sparse univariate polynomial with exact integer coefficients.

    Just enough ring structure for Poincare polynomials: addition,
    multiplication, evaluation, degree dilation.  Zero coefficients are
    never stored.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for d, c in items:
                d = int(d)
                if d < 0:
                    raise ValueError("negative degree")
                if c:
                    data[d] = data.get(d, 0) + int(c)
        self.coeffs = {d: c for d, c in data.items() if c}

    @classmethod
    def from_list(cls, dense):
        return cls(enumerate(dense))

    @classmethod
    def one(cls):
        return cls({0: 1})

    def coefficient(self, d: int) -> int:
        return self.coeffs.get(d, 0)

    def coefficients_list(self) -> list:
        """Dense coefficient list, constant term first."""
        if not self.coeffs:
            return [0]
        top = max(self.coeffs)
        return [self.coeffs.get(d, 0) for d in range(top + 1)]

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return max(self.coeffs) if self.coeffs else -1

    def is_palindromic(self) -> bool:
        lst = self.coefficients_list()
        return lst == lst[::-1]

    def stretched(self, k: int) -> "IntPolynomial":
        """Substitute t -> t**k."""
        if k < 1:
            raise ValueError("stretch factor must be positive")
        return IntPolynomial({d * k: c for d, c in self.coeffs.items()})

    def __call__(self, x):
        return sum(c * x**d for d, c in self.coeffs.items())

    def __add__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        data = dict(self.coeffs)
        for d, c in other.coeffs.items():
            data[d] = data.get(d, 0) + c
        return IntPolynomial(data)

    def __neg__(self):
        return IntPolynomial({d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial({d: c * other for d, c in self.coeffs.items()})
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        data = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                d = d1 + d2
                data[d] = data.get(d, 0) + c1 * c2
        return IntPolynomial(data)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == ({0: other} if other else {})
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d in sorted(self.coeffs):
            c = self.coeffs[d]
            if d == 0:
                parts.append(str(c))
            else:
                t = "t" if d == 1 else f"t^{d}"
                if c == 1:
                    parts.append(t)
                elif c == -1:
                    parts.append(f"-{t}")
                else:
                    parts.append(f"{c}*{t}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self):
        return f"IntPolynomial({self.coeffs!r})"


def gaussian_binomial(m: int, r: int) -> IntPolynomial:
    """Gaussian binomial coefficient [m choose r] as a polynomial in t.

    The degree-j coefficient counts partitions of weight j inside the
    r x (m - r) box; evaluating at t = 1 gives comb(m, r) and the
    coefficient list is palindromic.

    >>> str(gaussian_binomial(4, 2))
    '1 + t + 2*t^2 + t^3 + t^4'
    """
    if not 0 <= r <= m:
        raise ValueError(f"need 0 <= r <= m, got m={m}, r={r}")
    cols = m - r
    return IntPolynomial(
        {w: len(_box_weight(r, cols, w)) for w in range(r * cols + 1)}
    )
