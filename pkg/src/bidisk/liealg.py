"""su(1,1) vectors: invariant form, brackets, adjoint action, classification.

Vectors are written on the ordered basis

    xi   = [[ 1j, 0], [ 0, -1j]]
    eta  = [[ 0, -1j], [ 1j, 0]]
    zeta = [[ 0, 1], [ 1, 0]]

with real coefficients (a, b, c).  The invariant form b(x, y) = tr(xy)/2
has signature (-, +, +) on this basis, so b(x, x) = -a^2 + b^2 + c^2.  A
vector is elliptic exactly when b(x, x) < 0; its eigenvalues are then
+-1j*omega with omega = sqrt(-b(x, x)), and the elliptic cone splits into
a positive (a > 0) and a negative (a < 0) component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

ZERO_TOL = 1e-13

ELLIPTIC_POSITIVE = "elliptic-positive"
ELLIPTIC_NEGATIVE = "elliptic-negative"
NON_ELLIPTIC = "non-elliptic"
ZERO = "zero"


@dataclass(frozen=True)
class LieVector:
    """Element a*xi + b*eta + c*zeta of su(1,1)."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"non-finite coefficient {name}={v!r}")
            object.__setattr__(self, name, v)

    def matrix(self) -> np.ndarray:
        a, b, c = self.a, self.b, self.c
        return np.array([[1j * a, c - 1j * b], [c + 1j * b, -1j * a]])

    def norm_inf(self) -> float:
        return max(abs(self.a), abs(self.b), abs(self.c))

    def __add__(self, other: "LieVector") -> "LieVector":
        return LieVector(self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other: "LieVector") -> "LieVector":
        return LieVector(self.a - other.a, self.b - other.b, self.c - other.c)

    def __mul__(self, s: float) -> "LieVector":
        return LieVector(self.a * s, self.b * s, self.c * s)

    __rmul__ = __mul__

    def __neg__(self) -> "LieVector":
        return self * -1.0


XI = LieVector(1.0, 0.0, 0.0)
ETA = LieVector(0.0, 1.0, 0.0)
ZETA = LieVector(0.0, 0.0, 1.0)


@dataclass(frozen=True)
class SpectralClass:
    """Classification tag plus rotation number (None off the elliptic cone)."""

    kind: str
    omega: float | None


@dataclass(frozen=True)
class SymplecticGenerator:
    """Real trace-free 2x2 matrix [[a, -b], [c, -a]]."""

    a: float
    b: float
    c: float

    def matrix(self) -> np.ndarray:
        return np.array([[self.a, -self.b], [self.c, -self.a]])


def from_matrix(m, tol: float = 1e-9) -> LieVector:
    """Decompose a 2x2 su(1,1) matrix on the (xi, eta, zeta) basis.

    Raises ValueError when the matrix is further than ``tol`` (relative to
    its own magnitude) from the su(1,1) pattern [[i a, c - i b], [c + i b, -i a]].
    """
    m = np.asarray(m, dtype=complex)
    a = m[0, 0].imag
    b = (m[1, 0].imag - m[0, 1].imag) / 2.0
    c = (m[0, 1].real + m[1, 0].real) / 2.0
    x = LieVector(a, b, c)
    scale = max(1.0, float(np.max(np.abs(m))))
    if float(np.max(np.abs(m - x.matrix()))) > tol * scale:
        raise ValueError("matrix is not in su(1,1) within tolerance")
    return x


def bform(x: LieVector, y: LieVector | None = None) -> float:
    """Invariant bilinear form tr(xy)/2 = -a1*a2 + b1*b2 + c1*c2."""
    if y is None:
        y = x
    return -x.a * y.a + x.b * y.b + x.c * y.c


def bracket(x: LieVector, y: LieVector) -> LieVector:
    """Commutator [x, y], expanded on [xi,eta]=2*zeta, [xi,zeta]=-2*eta,
    [eta,zeta]=-2*xi."""
    ab = x.a * y.b - x.b * y.a
    ac = x.a * y.c - x.c * y.a
    bc = x.b * y.c - x.c * y.b
    return LieVector(-2.0 * bc, -2.0 * ac, 2.0 * ab)


def adjoint(g, x: LieVector) -> LieVector:
    """Ad(g) x = g x g^{-1} for g any object exposing an SU(1,1) .matrix()."""
    m = g.matrix()
    alpha = m[0, 0]
    beta = m[0, 1]
    # exact inverse of [[alpha, beta], [conj(beta), conj(alpha)]] at det 1
    minv = np.array([[np.conj(alpha), -beta], [-np.conj(beta), alpha]])
    return from_matrix(m @ x.matrix() @ minv)


def classify(x: LieVector, zero_tol: float = ZERO_TOL) -> SpectralClass:
    """Spectral class of x: zero, elliptic-positive/negative, or non-elliptic.

    Elliptic means b(x, x) < 0; omega = sqrt(-b(x, x)) is the rotation
    number and the sign component is read off the xi coefficient.
    """
    if x.norm_inf() < zero_tol:
        return SpectralClass(ZERO, 0.0)
    q = bform(x)
    if q < 0.0:
        kind = ELLIPTIC_POSITIVE if x.a > 0.0 else ELLIPTIC_NEGATIVE
        return SpectralClass(kind, math.sqrt(-q))
    return SpectralClass(NON_ELLIPTIC, None)


def cayley_matrix() -> np.ndarray:
    """The fixed conjugator C = (1/sqrt(2)) [[1, 1j], [1j, 1]] carrying
    su(1,1) onto sl(2, R)."""
    s = 1.0 / math.sqrt(2.0)
    return np.array([[s, 1j * s], [1j * s, s]])


def to_sp2(x: LieVector) -> SymplecticGenerator:
    """Image of x under conjugation by the Cayley matrix.

    C M C^{-1} = [[-b, a + c], [c - a, b]], which is real and trace-free.
    """
    return SymplecticGenerator(-x.b, -(x.a + x.c), x.c - x.a)


def from_sp2(s: SymplecticGenerator) -> LieVector:
    return LieVector((-s.b - s.c) / 2.0, -s.a, (-s.b + s.c) / 2.0)


def exp_matrix(x: LieVector) -> np.ndarray:
    """Matrix exponential of x via Cayley-Hamilton: M^2 = b(x, x) * I."""
    q = bform(x)
    m = x.matrix()
    eye = np.eye(2, dtype=complex)
    if abs(q) < 1e-30:
        return eye + m
    if q < 0.0:
        w = math.sqrt(-q)
        return math.cos(w) * eye + (math.sin(w) / w) * m
    r = math.sqrt(q)
    return math.cosh(r) * eye + (math.sinh(r) / r) * m


def random_vector(rng: np.random.Generator, scale: float = 1.0) -> LieVector:
    a, b, c = scale * rng.standard_normal(3)
    return LieVector(a, b, c)
