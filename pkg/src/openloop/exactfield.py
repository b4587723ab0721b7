"""Exact arithmetic in the cyclotomic field Q(zeta12).

Every quantity in this package lives in the degree-4 number field
Q(zeta), where zeta = exp(i*pi/6) is a primitive twelfth root of unity
with minimal polynomial

    zeta**4 - zeta**2 + 1 = 0.

The field contains all special constants of the loop model at its
combinatorial point:

    q = zeta**4     primitive cube root of unity, q + 1/q = -1,
    i = zeta**3     imaginary unit, generating the fourth roots s.

A Scalar stores four rationals (c0, c1, c2, c3) representing

    c0 + c1*zeta + c2*zeta**2 + c3*zeta**3.

Products are reduced with zeta**4 = zeta**2 - 1 (hence zeta**6 = -1),
so the representation is canonical and syntactic equality of the
coefficient vectors coincides with equality in the field.  There is no
floating point anywhere: coefficients are `fractions.Fraction` values,
which are always stored gcd-reduced with a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

__all__ = [
    "Rational",
    "Scalar",
    "ZERO",
    "ONE",
    "ZETA",
    "Q",
    "IMAG",
    "fourth_roots",
    "bracket",
    "kfun",
]

# Rational coefficients are plain stdlib fractions: they already keep
# numerator and denominator coprime with the denominator positive.
Rational = Fraction

_RationalLike = Union[int, Fraction]
_ScalarLike = Union["Scalar", int, Fraction]


class Scalar:
    """An element of Q(zeta12) in the basis (1, zeta, zeta^2, zeta^3)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Sequence[_RationalLike] = (0, 0, 0, 0)):
        if len(coeffs) != 4:
            raise ValueError("Scalar needs exactly 4 coefficients")
        self._c = tuple(Fraction(c) for c in coeffs)

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, value: _RationalLike) -> Scalar:
        return cls((Fraction(value), 0, 0, 0))

    @classmethod
    def zero(cls) -> Scalar:
        return cls()

    @classmethod
    def one(cls) -> Scalar:
        return cls((1, 0, 0, 0))

    @classmethod
    def root_of_unity(cls, k: int) -> Scalar:
        """zeta**k for any integer k, reduced into the basis."""
        k %= 12
        if k < 4:
            coeffs = [0, 0, 0, 0]
            coeffs[k] = 1
            return cls(coeffs)
        # zeta^4 = zeta^2 - 1 and zeta^6 = -1 reduce the higher powers.
        if k == 4:
            return cls((-1, 0, 1, 0))
        if k == 5:
            return cls((0, -1, 0, 1))
        return -cls.root_of_unity(k - 6)

    @classmethod
    def from_strings(cls, parts: Sequence[str]) -> Scalar:
        """Inverse of to_strings: four 'p/d' (or 'p') strings."""
        if len(parts) != 4:
            raise ValueError("Scalar needs exactly 4 coefficient strings")
        return cls(tuple(Fraction(p.strip()) for p in parts))

    # -- views --------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self._c

    def to_strings(self) -> tuple[str, str, str, str]:
        """Serialize as four 'p/d' strings, denominator always shown."""
        return tuple(f"{c.numerator}/{c.denominator}" for c in self._c)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._c)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self._c[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self._c[0]

    # -- ring operations ----------------------------------------------

    @staticmethod
    def _coerce(other: _ScalarLike) -> Scalar | None:
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar((Fraction(other), 0, 0, 0))
        return None

    def __add__(self, other: _ScalarLike) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(tuple(a + b for a, b in zip(self._c, o._c)))

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar(tuple(-a for a in self._c))

    def __sub__(self, other: _ScalarLike) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(tuple(a - b for a, b in zip(self._c, o._c)))

    def __rsub__(self, other: _ScalarLike) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: _ScalarLike) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        t = [Fraction(0)] * 7
        for i in range(4):
            if a[i] == 0:
                continue
            for j in range(4):
                if b[j] == 0:
                    continue
                t[i + j] += a[i] * b[j]
        # Reduce degree 4..6: zeta^4 = zeta^2 - 1, zeta^5 = zeta^3 - zeta,
        # zeta^6 = -1.
        return Scalar((
            t[0] - t[4] - t[6],
            t[1] - t[5],
            t[2] + t[4],
            t[3] + t[5],
        ))

    __rmul__ = __mul__

    def inv(self) -> Scalar:
        """Multiplicative inverse, by solving x * self = 1 exactly."""
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero Scalar")
        if self.is_rational():
            return Scalar((1 / self._c[0], 0, 0, 0))
        # Columns of m are the basis images zeta^j * self.
        cols = [(self * Scalar.root_of_unity(j))._c for j in range(4)]
        m = [[cols[j][i] for j in range(4)] for i in range(4)]
        rhs = [Fraction(1), Fraction(0), Fraction(0), Fraction(0)]
        # Gaussian elimination on the 4x4 rational system.
        for col in range(4):
            piv = next(r for r in range(col, 4) if m[r][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            rhs[col], rhs[piv] = rhs[piv], rhs[col]
            d = m[col][col]
            m[col] = [v / d for v in m[col]]
            rhs[col] /= d
            for r in range(4):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [v - f * w for v, w in zip(m[r], m[col])]
                    rhs[r] -= f * rhs[col]
        return Scalar(rhs)

    def __truediv__(self, other: _ScalarLike) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other: _ScalarLike) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int) -> Scalar:
        if not isinstance(n, int):
            return NotImplemented
        base = self.inv() if n < 0 else self
        n = abs(n)
        result = Scalar.one()
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons and hashing --------------------------------------

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other) if isinstance(other, (Scalar, int, Fraction)) else None
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        if self.is_rational():
            return f"Scalar({self._c[0]})"
        terms = []
        for k, c in enumerate(self._c):
            if c == 0:
                continue
            unit = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            terms.append(f"{c}{'*' if unit else ''}{unit}")
        return "Scalar(" + " + ".join(terms) + ")"


ZERO = Scalar.zero()
ONE = Scalar.one()
ZETA = Scalar.root_of_unity(1)
Q = Scalar.root_of_unity(4)
IMAG = Scalar.root_of_unity(3)


def fourth_roots() -> tuple[Scalar, Scalar, Scalar, Scalar]:
    """All solutions of s**4 = 1, in the order 1, i, -1, -i."""
    return (ONE, IMAG, -ONE, -IMAG)


def bracket(z: Scalar) -> Scalar:
    """[z] = z - 1/z, the elementary antisymmetric building block."""
    return z - z.inv()


def kfun(z: Scalar, zeta: Scalar) -> Scalar:
    """k(z, zeta) = [z/(q zeta)] [z zeta / q].

    Expanding with q + 1/q = -1 gives the handy normal form
    k(z, zeta) = q z^2 + 1/(q z^2) - zeta^2 - 1/zeta^2, so k is even
    in both arguments and symmetric under zeta -> 1/zeta.
    """
    return bracket(z / (Q * zeta)) * bracket(z * zeta / Q)
