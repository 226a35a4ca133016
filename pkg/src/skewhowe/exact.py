"""Exact arithmetic kernel.

Arbitrary-precision integers and rationals, Laurent polynomials in q,
the q-combinatorial primitives ([k]_q, [k]_q!, q-binomials, triangle
Catalan numbers), and Gamma values at half-integer points expressed as
rational multiples of powers of sqrt(pi).

Everything here is exact: no floats, no modular tricks.  All values are
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

# Exact rationals.  fractions.Fraction already keeps den > 0 and
# gcd(|num|, den) = 1, which is the canonical form we need.
BigRational = Fraction


def rational_to_json(r: Fraction) -> dict:
    return {"num": str(r.numerator), "den": str(r.denominator)}


def rational_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


class ExactDivisionError(ArithmeticError):
    """Raised when a polynomial division leaves a nonzero remainder."""


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    """An element of (1/2)Z stored as its doubled integer value."""

    doubled: int

    @staticmethod
    def of(value) -> "HalfInt":
        """Coerce an int, Fraction with denominator 1 or 2, or HalfInt."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, int):
            return HalfInt(2 * value)
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return HalfInt(2 * value.numerator)
            if value.denominator == 2:
                return HalfInt(value.numerator)
        raise ValueError(f"not a half-integer: {value!r}")

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def as_int(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.doubled // 2

    def as_fraction(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def __add__(self, other) -> "HalfInt":
        return HalfInt(self.doubled + HalfInt.of(other).doubled)

    __radd__ = __add__

    def __sub__(self, other) -> "HalfInt":
        return HalfInt(self.doubled - HalfInt.of(other).doubled)

    def __rsub__(self, other) -> "HalfInt":
        return HalfInt(HalfInt.of(other).doubled - self.doubled)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.doubled)

    def __mul__(self, other: int) -> "HalfInt":
        if not isinstance(other, int):
            return NotImplemented
        return HalfInt(self.doubled * other)

    __rmul__ = __mul__

    def __lt__(self, other) -> bool:
        return self.doubled < HalfInt.of(other).doubled

    def __eq__(self, other) -> bool:
        try:
            return self.doubled == HalfInt.of(other).doubled
        except ValueError:
            return NotImplemented

    def __hash__(self):
        return hash(self.as_fraction())

    def __repr__(self) -> str:
        if self.is_integer:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"


class QLaurent:
    """Laurent polynomial in q with arbitrary-precision integer coefficients.

    Stored densely on a contiguous exponent window: ``coeffs[i]`` is the
    coefficient of q^(min_exp + i).  Canonical form: leading and trailing
    coefficients are nonzero unless the polynomial is zero (zero is the
    empty window with min_exp = 0).
    """

    __slots__ = ("min_exp", "coeffs")

    def __init__(self, min_exp: int, coeffs):
        coeffs = list(coeffs)
        lo = 0
        hi = len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "min_exp", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "min_exp", min_exp + lo)
            object.__setattr__(self, "coeffs", tuple(coeffs[lo:hi]))

    def __setattr__(self, *args):
        raise AttributeError("QLaurent is immutable")

    def __reduce__(self):
        return (QLaurent, (self.min_exp, self.coeffs))

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "QLaurent":
        return _ZERO

    @staticmethod
    def one() -> "QLaurent":
        return _ONE

    @staticmethod
    def monomial(coeff: int, exp: int = 0) -> "QLaurent":
        return QLaurent(exp, (coeff,))

    @staticmethod
    def of(value) -> "QLaurent":
        if isinstance(value, QLaurent):
            return value
        if isinstance(value, int):
            return QLaurent(0, (value,))
        raise TypeError(f"cannot coerce {value!r} to QLaurent")

    # -- basic queries ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_exp(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no degree")
        return self.min_exp + len(self.coeffs) - 1

    def coeff(self, exp: int) -> int:
        i = exp - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def at_one(self) -> int:
        """Evaluate at q = 1 (the sum of the coefficients)."""
        return sum(self.coeffs)

    def __call__(self, q):
        """Evaluate at an exact rational or integer point q != 0."""
        q = Fraction(q)
        if q == 0 and self.min_exp < 0:
            raise ZeroDivisionError("negative exponents at q = 0")
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc * q**self.min_exp

    def has_nonnegative_coeffs(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "QLaurent":
        other = QLaurent.of(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.min_exp + len(self.coeffs), other.min_exp + len(other.coeffs))
        out = [0] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            out[self.min_exp - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.min_exp - lo + i] += c
        return QLaurent(lo, out)

    __radd__ = __add__

    def __neg__(self) -> "QLaurent":
        return QLaurent(self.min_exp, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "QLaurent":
        return self + (-QLaurent.of(other))

    def __rsub__(self, other) -> "QLaurent":
        return QLaurent.of(other) + (-self)

    def __mul__(self, other) -> "QLaurent":
        other = QLaurent.of(other)
        if self.is_zero or other.is_zero:
            return _ZERO
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return QLaurent(self.min_exp + other.min_exp, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QLaurent":
        if n < 0:
            raise ValueError("negative powers are not Laurent-polynomial")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, m: int) -> "QLaurent":
        """Multiply by q^m (m may be negative)."""
        if self.is_zero:
            return self
        return QLaurent(self.min_exp + m, self.coeffs)

    def divide_exact(self, other) -> "QLaurent":
        """Exact division; raises ExactDivisionError on a nonzero remainder.

        Product formulas are asserted, never approximated: any remainder
        is a bug or a falsified identity, so it is an error.
        """
        other = QLaurent.of(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero:
            return _ZERO
        rem = list(self.coeffs)
        div = other.coeffs
        n, m = len(rem), len(div)
        if n < m:
            raise ExactDivisionError(f"{self} is not divisible by {other}")
        lead = div[-1]
        quot = [0] * (n - m + 1)
        for i in range(n - m, -1, -1):
            c = rem[i + m - 1]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise ExactDivisionError(f"{self} is not divisible by {other}")
            quot[i] = q
            for j, d in enumerate(div):
                rem[i + j] -= q * d
        if any(rem):
            raise ExactDivisionError(f"{self} is not divisible by {other}")
        return QLaurent(self.min_exp - other.min_exp, quot)

    # -- comparisons / hashing ----------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QLaurent.of(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self.min_exp == other.min_exp and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.min_exp, self.coeffs))

    # -- rendering ----------------------------------------------------

    def __repr__(self) -> str:
        return f"QLaurent({self!s})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.min_exp + i
            if e == 0:
                terms.append(str(c))
            else:
                qpow = "q" if e == 1 else f"q^{e}"
                if c == 1:
                    terms.append(qpow)
                elif c == -1:
                    terms.append(f"-{qpow}")
                else:
                    terms.append(f"{c}*{qpow}")
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def to_json(self) -> dict:
        return {"min_exp": self.min_exp, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(obj: dict) -> "QLaurent":
        return QLaurent(int(obj["min_exp"]), [int(c) for c in obj["coeffs"]])


_ZERO = QLaurent(0, ())
_ONE = QLaurent(0, (1,))


# -- q-combinatorics ---------------------------------------------------

def q_int(k: int) -> QLaurent:
    """[k]_q = 1 + q + ... + q^(k-1); zero for k <= 0."""
    if k <= 0:
        return _ZERO
    return QLaurent(0, (1,) * k)


_qfact_cache = [_ONE]
_qfact_lock = threading.Lock()


def q_factorial(k: int) -> QLaurent:
    """[k]_q! = [1]_q [2]_q ... [k]_q, memoized per session."""
    if k < 0:
        raise ValueError("q-factorial of a negative integer")
    if k >= len(_qfact_cache):
        with _qfact_lock:
            while k >= len(_qfact_cache):
                m = len(_qfact_cache)
                _qfact_cache.append(_qfact_cache[m - 1] * q_int(m))
    return _qfact_cache[k]


def q_binomial(n: int, m: int) -> QLaurent:
    """Gaussian binomial [n choose m]_q; zero outside 0 <= m <= n."""
    if n < 0:
        raise ValueError("q-binomial with negative top index")
    if m < 0 or m > n:
        return _ZERO
    return q_factorial(n).divide_exact(q_factorial(m) * q_factorial(n - m))


def catalan_triangle_q(n: int, k: int) -> QLaurent:
    """q-analog of the triangle Catalan number.

    C_{n,k}(q) = [n+k]_q! [n-k+1]_q / ([k]_q! [n+1]_q!) for n >= 0 and
    0 <= k <= n, and 0 whenever n < 0, k < 0, or k > n.  At q = 1 this
    counts N/E lattice paths from (0,0) to (n,k) weakly below the
    diagonal.
    """
    if n < 0 or k < 0 or k > n:
        return _ZERO
    num = q_factorial(n + k) * q_int(n - k + 1)
    return num.divide_exact(q_factorial(k) * q_factorial(n + 1))


def q_power_plus_one(a: int) -> QLaurent:
    """q^a + 1 (a >= 0)."""
    if a < 0:
        raise ValueError("negative exponent")
    if a == 0:
        return QLaurent.of(2)
    return QLaurent(0, (1,) + (0,) * (a - 1) + (1,))


def q_power_plus_one_product(exponents) -> QLaurent:
    """prod over a of (q^a + 1) for the given exponents."""
    out = _ONE
    for a in exponents:
        out = out * q_power_plus_one(a)
    return out


# -- Gamma at half-integers --------------------------------------------

@dataclass(frozen=True)
class SqrtPiValue:
    """A value rational * sqrt(pi)^power, exact.

    Products add the sqrt(pi) powers; the ratio of two values with equal
    powers is an ordinary rational.
    """

    rational: Fraction
    sqrt_pi_power: int = 0

    @staticmethod
    def of(value) -> "SqrtPiValue":
        if isinstance(value, SqrtPiValue):
            return value
        return SqrtPiValue(Fraction(value), 0)

    @property
    def is_zero(self) -> bool:
        return self.rational == 0

    def __mul__(self, other) -> "SqrtPiValue":
        other = SqrtPiValue.of(other)
        return SqrtPiValue(self.rational * other.rational,
                           self.sqrt_pi_power + other.sqrt_pi_power)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "SqrtPiValue":
        other = SqrtPiValue.of(other)
        return SqrtPiValue(self.rational / other.rational,
                           self.sqrt_pi_power - other.sqrt_pi_power)

    def __neg__(self) -> "SqrtPiValue":
        return SqrtPiValue(-self.rational, self.sqrt_pi_power)

    def ratio_to(self, other: "SqrtPiValue") -> Fraction:
        """Exact rational ratio self/other; the sqrt(pi) powers must match."""
        if self.sqrt_pi_power != other.sqrt_pi_power:
            raise ValueError("sqrt(pi) powers do not cancel in the ratio")
        return self.rational / other.rational

    def __repr__(self) -> str:
        if self.sqrt_pi_power == 0:
            return str(self.rational)
        return f"{self.rational}*sqrt(pi)^{self.sqrt_pi_power}"


def gamma_half_integer(t) -> SqrtPiValue:
    """Gamma(t) for half-integer t, exact.

    Integer t > 0 gives (t-1)!.  Half-odd t gives a rational multiple of
    sqrt(pi) via Gamma(1/2) = sqrt(pi) and the recurrence
    Gamma(z+1) = z Gamma(z), extended to negative half-odd arguments.
    Nonpositive integers are poles and rejected.
    """
    t = HalfInt.of(t)
    if t.is_integer:
        m = t.as_int()
        if m <= 0:
            raise ValueError(f"Gamma pole at nonpositive integer {m}")
        out = 1
        for j in range(1, m):
            out *= j
        return SqrtPiValue(Fraction(out), 0)
    # t = d/2 with d odd; climb down/up from Gamma(1/2) = sqrt(pi)
    value = Fraction(1)
    d = t.doubled
    while d > 1:
        d -= 2
        value *= Fraction(d, 2)
    while d < 1:
        value /= Fraction(d, 2)
        d += 2
    return SqrtPiValue(value, 1)


def reciprocal_gamma_regularized(t) -> tuple[SqrtPiValue, int]:
    """1/Gamma(t) together with the order of the regularization.

    For t not a nonpositive integer returns (1/Gamma(t), 0).  At a pole
    t = -m the reciprocal vanishes linearly; the second component 1 flags
    that the returned value is the first-order coefficient
    lim_{e->0} 1/(e*Gamma(-m+e)) = (-1)^m m!.  Ratios of products with
    equal total regularization order are exact.
    """
    t = HalfInt.of(t)
    if t.is_integer and t.as_int() <= 0:
        m = -t.as_int()
        fact = 1
        for j in range(2, m + 1):
            fact *= j
        return SqrtPiValue(Fraction((-1) ** m * fact), 0), 1
    g = gamma_half_integer(t)
    return SqrtPiValue(1 / g.rational, -g.sqrt_pi_power), 0
