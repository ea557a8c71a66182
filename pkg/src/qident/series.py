"""Dense truncated power series in q over exact integers.

Every value in this package is an :class:`ExactSeries`: a tuple of
arbitrary-precision integer coefficients, index n holding the coefficient
of q^n, known exactly modulo q^(N+1) where N is the *order*.  There is no
floating point anywhere; convergence conditions ("|q| < 1") are replaced
by formal truncated arithmetic.

Conventions
-----------
* A series of order N stores exactly N+1 coefficients, explicit zeros
  included.
* Operations on operands of different orders silently truncate to the
  smaller order (identity checks naturally mix series built at different
  provisional orders).
* Equality compares coefficients up to the common (minimum) order.
* All values are immutable; every operation is a pure function, so series
  may be freely shared between threads.

Multiplication is schoolbook convolution, O(N^2) coefficient operations;
at the working orders of this package (N <= a few hundred) that is faster
and simpler than any asymptotic trick, and exactness is free because
Python integers never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple


class NonUnitConstantTerm(ValueError):
    """Raised by invert() when the constant term is not +1 or -1."""


class ExponentOutOfOrder(IndexError):
    """Raised by coeff() when the requested exponent exceeds the order."""


@dataclass(frozen=True)
class ExactSeries:
    """A truncated power series: coeffs[n] is the coefficient of q^n.

    The series is known exactly modulo q^(order+1); len(coeffs) == order+1.
    """

    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) == 0:
            raise ValueError("a series stores at least the constant term")

    @property
    def order(self) -> int:
        """Largest exponent with a stored coefficient."""
        return len(self.coeffs) - 1

    def valuation(self) -> int | None:
        """Smallest exponent with a nonzero coefficient, or None if zero."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    # -- operators ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactSeries):
            return NotImplemented
        n = min(len(self.coeffs), len(other.coeffs))
        return self.coeffs[:n] == other.coeffs[:n]

    def __add__(self, other: "ExactSeries") -> "ExactSeries":
        return add(self, other)

    def __sub__(self, other: "ExactSeries") -> "ExactSeries":
        return add(self, scale(-1, other))

    def __mul__(self, other: "ExactSeries") -> "ExactSeries":
        return mul(self, other)

    def __neg__(self) -> "ExactSeries":
        return scale(-1, self)

    def __repr__(self) -> str:
        terms = [f"{c}*q^{n}" for n, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms[:6]) if terms else "0"
        if len(terms) > 6:
            body += " + ..."
        return f"ExactSeries({body} + O(q^{self.order + 1}))"


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def monomial(c: int, e: int, order: int) -> ExactSeries:
    """The series c*q^e at the given order (zero if e > order)."""
    if e < 0:
        raise ValueError(f"exponent must be non-negative, got {e}")
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    coeffs = [0] * (order + 1)
    if e <= order:
        coeffs[e] = c
    return ExactSeries(tuple(coeffs))


def one(order: int) -> ExactSeries:
    """The multiplicative unit at the given order."""
    return monomial(1, 0, order)


def zero(order: int) -> ExactSeries:
    """The zero series at the given order."""
    return ExactSeries((0,) * (order + 1))


def from_coeffs(values: Iterable[int]) -> ExactSeries:
    """Build a series directly from a coefficient sequence (index = exponent)."""
    return ExactSeries(tuple(values))


# ---------------------------------------------------------------------------
# Arithmetic
# ---------------------------------------------------------------------------

def add(a: ExactSeries, b: ExactSeries) -> ExactSeries:
    """Coefficientwise sum at the common (minimum) order."""
    n = min(len(a.coeffs), len(b.coeffs))
    return ExactSeries(tuple(x + y for x, y in zip(a.coeffs[:n], b.coeffs[:n])))


def scale(c: int, a: ExactSeries) -> ExactSeries:
    """The scalar multiple c*a."""
    if c == 1:
        return a
    return ExactSeries(tuple(c * x for x in a.coeffs))


def shift(a: ExactSeries, e: int) -> ExactSeries:
    """Multiply by q^e.  The result has order a.order + e.

    If a is exact mod q^(N+1) then q^e * a is exact mod q^(N+e+1), so the
    order legitimately grows: no information is invented.
    """
    if e < 0:
        raise ValueError(f"shift exponent must be non-negative, got {e}")
    if e == 0:
        return a
    return ExactSeries((0,) * e + a.coeffs)


def mul(a: ExactSeries, b: ExactSeries) -> ExactSeries:
    """Truncated Cauchy product at the common (minimum) order.

    Schoolbook convolution that skips zero rows; the operand with fewer
    nonzero coefficients drives the outer loop, which makes products with
    sparse factors (monomials, binomials, theta sums) effectively linear.
    """
    order = min(len(a.coeffs), len(b.coeffs)) - 1
    ac = a.coeffs[: order + 1]
    bc = b.coeffs[: order + 1]
    # Let the sparser operand drive the outer loop.
    if sum(1 for x in ac if x) > sum(1 for x in bc if x):
        ac, bc = bc, ac
    out = [0] * (order + 1)
    for i, ai in enumerate(ac):
        if not ai:
            continue
        seg = bc[: order + 1 - i]
        out[i : i + len(seg)] = [x + ai * y for x, y in zip(out[i : i + len(seg)], seg)]
    return ExactSeries(tuple(out))


def invert(a: ExactSeries) -> ExactSeries:
    """Multiplicative inverse b with mul(a, b) = 1 at a's order.

    Requires a unit constant term (+1 or -1); uses the forward recurrence
    b[n] = -a0 * sum_{i>=1} a[i]*b[n-i], restricted to the nonzero a[i].
    """
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise NonUnitConstantTerm(
            f"constant term must be +1 or -1 to invert, got {a0}"
        )
    order = a.order
    ac = a.coeffs
    nz = [i for i in range(1, order + 1) if ac[i]]
    b = [0] * (order + 1)
    b[0] = a0
    for n in range(1, order + 1):
        s = 0
        for i in nz:
            if i > n:
                break
            s += ac[i] * b[n - i]
        if s:
            b[n] = -a0 * s
    return ExactSeries(tuple(b))


def substitute_power(a: ExactSeries, d: int) -> ExactSeries:
    """Replace q by q^d, truncating at the original order.

    The coefficient of q^(d*n) is a.coeffs[n] when d*n <= order; exponents
    that are not multiples of d get 0.
    """
    if d < 1:
        raise ValueError(f"substitution power must be >= 1, got {d}")
    if d == 1:
        return a
    order = a.order
    out = [0] * (order + 1)
    for n, c in enumerate(a.coeffs):
        e = d * n
        if e > order:
            break
        out[e] = c
    return ExactSeries(tuple(out))


def coeff(a: ExactSeries, n: int) -> int:
    """The stored coefficient of q^n; errors if n is outside 0..order."""
    if n < 0 or n > a.order:
        raise ExponentOutOfOrder(
            f"exponent {n} outside the stored range 0..{a.order}"
        )
    return a.coeffs[n]
