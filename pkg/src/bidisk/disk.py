"""Poincare disk geometry: Schwarz distance, Mobius maps, bidisk action.

Distance normalization: rho(z, w) = 2 * artanh(d_S(z, w)) where d_S is the
Schwarz-Pick quotient |z - w| / |1 - conj(w) z|.  With this factor the
diagonal pair (t, -t) sits at rho = 4 artanh(t) and the slice moment value
comes out as 8t / (1 - t^2); the log-form without the 2 is not used
anywhere in this package.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

BOUNDARY_TOL = 1e-12
DIAGONAL_TOL = 1e-13
DET_TOL = 1e-10


def check_disk(z) -> complex:
    """Validate |z| < 1 - 1e-12 and return z as a complex number."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError("disk point must be finite")
    if abs(z) >= 1.0 - BOUNDARY_TOL:
        raise ValueError(f"point {z!r} is not inside the open unit disk")
    return z


def schwarz_distance(z, w) -> float:
    """Schwarz-Pick pseudo-distance |z - w| / |1 - conj(w) z|, in [0, 1)."""
    z = check_disk(z)
    w = check_disk(w)
    return abs(z - w) / abs(1.0 - w.conjugate() * z)


def poincare_distance(z, w) -> float:
    """Hyperbolic distance rho = 2 artanh(d_S)."""
    return 2.0 * math.atanh(schwarz_distance(z, w))


@dataclass(frozen=True)
class MobiusTransform:
    """Disk automorphism z -> (alpha z + beta) / (conj(beta) z + conj(alpha))
    with |alpha|^2 - |beta|^2 = 1."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        a = complex(self.alpha)
        b = complex(self.beta)
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)
        det = abs(a) ** 2 - abs(b) ** 2
        if abs(det - 1.0) > DET_TOL:
            raise ValueError(f"not an SU(1,1) pair: |alpha|^2 - |beta|^2 = {det!r}")

    def __call__(self, z) -> complex:
        z = complex(z)
        return (self.alpha * z + self.beta) / (
            self.beta.conjugate() * z + self.alpha.conjugate()
        )

    def __matmul__(self, other: "MobiusTransform") -> "MobiusTransform":
        """Composition self o other (matrix product of the SU(1,1) lifts)."""
        a = self.alpha * other.alpha + self.beta * other.beta.conjugate()
        b = self.alpha * other.beta + self.beta * other.alpha.conjugate()
        return MobiusTransform(a, b)

    def inverse(self) -> "MobiusTransform":
        return MobiusTransform(self.alpha.conjugate(), -self.beta)

    def matrix(self) -> np.ndarray:
        return np.array(
            [[self.alpha, self.beta], [self.beta.conjugate(), self.alpha.conjugate()]]
        )

    @classmethod
    def identity(cls) -> "MobiusTransform":
        return cls(1.0, 0.0)

    @classmethod
    def rotation(cls, phi: float) -> "MobiusTransform":
        """Rotation z -> exp(1j*phi) z about the origin."""
        return cls(cmath.exp(0.5j * phi), 0.0)

    @classmethod
    def from_matrix(cls, m, tol: float = 1e-9) -> "MobiusTransform":
        m = np.asarray(m, dtype=complex)
        g = cls(m[0, 0], m[0, 1])
        if float(np.max(np.abs(m - g.matrix()))) > tol * max(1.0, float(np.max(np.abs(m)))):
            raise ValueError("matrix is not in SU(1,1) within tolerance")
        return g


def translate(zeta) -> MobiusTransform:
    """The automorphism T_zeta(z) = (z - zeta) / (1 - conj(zeta) z), which
    sends zeta to 0."""
    zeta = check_disk(zeta)
    d = math.sqrt(1.0 - abs(zeta) ** 2)
    return MobiusTransform(1.0 / d, -zeta / d)


@dataclass(frozen=True)
class BidiskPoint:
    """Ordered pair of points of the open unit disk."""

    z: complex
    w: complex

    def __post_init__(self):
        object.__setattr__(self, "z", check_disk(self.z))
        object.__setattr__(self, "w", check_disk(self.w))

    @property
    def is_diagonal(self) -> bool:
        return abs(self.z - self.w) < DIAGONAL_TOL


def act_bidisk(g: MobiusTransform, p: BidiskPoint) -> BidiskPoint:
    """Diagonal action g.(z, w) = (g z, g w)."""
    return BidiskPoint(g(p.z), g(p.w))


def hyperbolic_disk_euclidean(s: float, u: float) -> tuple[float, float]:
    """Euclidean center and radius of the Schwarz disk {w : d_S(s, w) < u}.

    The disk around a real center s in [0, 1) is again a round Euclidean
    disk; its extreme points on the real axis are T_{-s}(u) and T_{-s}(-u).
    """
    s = float(s)
    if not 0.0 <= s < 1.0:
        raise ValueError("center must be real in [0, 1)")
    u = float(u)
    if not 0.0 < u < 1.0:
        raise ValueError("schwarz radius must lie in (0, 1)")
    back = translate(-s)
    hi = back(u)
    lo = back(-u)
    return ((hi + lo) / 2.0).real, ((hi - lo) / 2.0).real


def random_point(rng: np.random.Generator, rmax: float = 0.95) -> complex:
    """Area-uniform point of the disk of radius rmax."""
    r = rmax * math.sqrt(rng.random())
    theta = rng.uniform(0.0, 2.0 * math.pi)
    return complex(r * math.cos(theta), r * math.sin(theta))


def random_mobius(rng: np.random.Generator, zeta_max: float = 0.9) -> MobiusTransform:
    zeta = random_point(rng, zeta_max)
    phi = rng.uniform(0.0, 2.0 * math.pi)
    return MobiusTransform.rotation(phi) @ translate(zeta)
