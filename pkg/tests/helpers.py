"""Shared draw helpers for the test suite.

Every test that needs spectral parameters draws them through
`draw_point` with an explicit seed, so failures reproduce exactly.
"""

from __future__ import annotations

from random import Random

from openloop import ONE, Scalar, SpectralPoint
from openloop.groundstate import generic_parameters


def draw_point(rng: Random, length: int, s: Scalar = ONE) -> SpectralPoint:
    """A generic spectral point: z's, zetas and w jointly non-degenerate."""
    vals = generic_parameters(rng, length + 3)
    return SpectralPoint(
        z=tuple(vals[:length]),
        zeta1=vals[length],
        zeta2=vals[length + 1],
        w=vals[length + 2],
        s=s,
    )


def rational(num: int, den: int = 1) -> Scalar:
    from fractions import Fraction

    return Scalar.from_rational(Fraction(num, den))
