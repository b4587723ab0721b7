"""Baxterised bulk and boundary operators and their face weights.

With [z] = z - 1/z, q = exp(2 pi i / 3) and the boundary function
k(z, zeta) = [z/(q zeta)] [z zeta / q], the local operators are

    Rcheck_i(z)        = ( [q/z] - [z] e_i ) / [q z],       1 <= i <= L-1,
    Kcheck_i(z, zeta)  = ( k(z, zeta) - [q][z^2] e_i ) / k(1/z, zeta),
                                                            i in {0, L}.

Both are unital at z = 1, satisfy unitarity O(z) O(1/z) = 1, and obey
the braid-limit Yang-Baxter and reflection equations checked in the
test suite.

The same data reappears tile by tile inside the double-row transfer
matrix.  A bulk tile carries two fillings (strands passing, weight a;
strands bouncing, weight b) and a boundary tile carries a straight
filling (the travelling strand makes a U-turn) and a turn-back filling
(both strand ends leave into the boundary).  `face_weights_R` returns
a(u) = [q/u]/[q u] and b(u) = -[u]/[q u] at u = z/w; the boundary
weights below make the one-site assembled tile equal to Kcheck, which
pins every sign.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SingularParameterError
from .exactfield import ONE, Q, Scalar, bracket, kfun
from .linkpat import SparseOperator, generator_matrix

__all__ = [
    "FaceWeights",
    "face_weights_K0",
    "face_weights_KL",
    "face_weights_R",
    "kcheck0",
    "kcheckL",
    "rcheck",
]


@dataclass(frozen=True)
class FaceWeights:
    """Pair of tile weights: id_weight for the passing filling, cup_weight
    for the bouncing (or boundary turn-back) filling."""

    id_weight: Scalar
    cup_weight: Scalar


def rcheck(i: int, z: Scalar, length: int) -> SparseOperator:
    """Rcheck_i(z) acting on the 2^length basis; needs 1 <= i <= length-1."""
    if not 1 <= i <= length - 1:
        raise ValueError(f"bulk operator index {i} out of range 1..{length - 1}")
    denom = bracket(Q * z)
    if denom.is_zero():
        raise SingularParameterError("Rcheck pole: [q z] = 0")
    dim = 1 << length
    ident = SparseOperator.identity(dim)
    e = generator_matrix(i, length)
    return ident.scale(bracket(Q / z) / denom) - e.scale(bracket(z) / denom)


def _kcheck(i: int, z: Scalar, zeta: Scalar, length: int) -> SparseOperator:
    denom = kfun(z.inv(), zeta)
    if denom.is_zero():
        raise SingularParameterError("Kcheck pole: k(1/z, zeta) = 0")
    dim = 1 << length
    ident = SparseOperator.identity(dim)
    e = generator_matrix(i, length)
    coeff = bracket(Q) * bracket(z * z) / denom
    return ident.scale(kfun(z, zeta) / denom) - e.scale(coeff)


def kcheck0(z: Scalar, zeta: Scalar, length: int) -> SparseOperator:
    """Left boundary operator Kcheck_0(z, zeta)."""
    return _kcheck(0, z, zeta, length)


def kcheckL(z: Scalar, zeta: Scalar, length: int) -> SparseOperator:
    """Right boundary operator Kcheck_L(z, zeta)."""
    return _kcheck(length, z, zeta, length)


def face_weights_R(z: Scalar, w: Scalar) -> FaceWeights:
    """Bulk tile weights of R(z, w): a = [q w/z]/[q z/w], b = -[z/w]/[q z/w]."""
    u = z / w
    denom = bracket(Q * u)
    if denom.is_zero():
        raise SingularParameterError("R tile pole: [q z/w] = 0")
    return FaceWeights(bracket(Q / u) / denom, -bracket(u) / denom)


def face_weights_K0(w: Scalar, zeta: Scalar) -> FaceWeights:
    """Left boundary tile of K_0(w, zeta).

    Assembled on one site (straight * Id + turn * e_0) this equals
    Kcheck_0(q w, zeta): the travelling strand meets the left wall
    with its argument shifted by one crossing.
    """
    denom = kfun((Q * w).inv(), zeta)
    if denom.is_zero():
        raise SingularParameterError("K_0 tile pole: k(1/(q w), zeta) = 0")
    straight = kfun(Q * w, zeta) / denom
    turn = -bracket(Q) * bracket(Q * w * Q * w) / denom
    return FaceWeights(straight, turn)


def face_weights_KL(w: Scalar, zeta: Scalar) -> FaceWeights:
    """Right boundary tile of K_L(w, zeta); assembles to Kcheck_L(w, zeta)."""
    denom = kfun(w.inv(), zeta)
    if denom.is_zero():
        raise SingularParameterError("K_L tile pole: k(1/w, zeta) = 0")
    straight = kfun(w, zeta) / denom
    turn = -bracket(Q) * bracket(w * w) / denom
    return FaceWeights(straight, turn)
