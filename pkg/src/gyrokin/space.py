"""Gyrovector-space structure on the ball: scaling, metric, lines, midpoints.

Points and vectors share one coordinate type (admissible velocities); the
capital-letter "point" role only signals intent.  Gyrolines here are straight
chords of the ball, so Euclidean collinearity tests apply verbatim to
gyrocollinearity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ball import MAX_NORM, as_velocity, dot, norm, norm_sq, same_dimension
from .errors import CollinearPoints, DimensionError, NonFinite
from .gyro import coadd, einstein_add, einstein_sub, left_sub

# Ambient triangle areas below this mark a triple as gyrocollinear.
COLLINEAR_AREA_TOL = 1e-12


def scalar_mul(r, v) -> np.ndarray:
    """Scalar gyromultiplication r (x) v = tanh(r artanh|v|) v/|v|.

    Broadcasts over leading axes of both ``r`` and ``v``; r (x) 0 = 0 by
    definition.  The magnitude is clamped into the admissible ball so that
    the result is valid for every finite r.
    """
    r = np.asarray(r, dtype=float)
    if not np.all(np.isfinite(r)):
        raise NonFinite("scalar factor must be finite")
    v = as_velocity(v, name="v")
    n = norm(v)
    mag = np.tanh(r * np.arctanh(n))
    mag = np.clip(mag, -MAX_NORM, MAX_NORM)
    scale = np.divide(mag, n, out=np.zeros(np.broadcast(mag, n).shape), where=n > 0.0)
    return scale[..., None] * v


def gyrodistance(a, b) -> np.ndarray:
    """Gyrometric d(a, b) = |(-a) (+) b|, in [0, 1).

    Symmetric, zero exactly on coincident points, and gyroadditive along
    gyrosegments under the parallel speed composition.
    """
    return norm(left_sub(a, b))


def gyroline_point(a, b, t) -> np.ndarray:
    """Point a (+) ((-a) (+) b) (x) t of the gyroline through a and b.

    t = 0 gives ``a``, t = 1 gives ``b``; the full parameter range traces the
    chord of the ball through the two points.  Coincident endpoints make the
    line degenerate and every t maps to ``a``.
    """
    a = as_velocity(a, name="a")
    b = as_velocity(b, name="b")
    same_dimension(a, b, names=("a", "b"))
    return einstein_add(a, scalar_mul(t, left_sub(a, b)))


def gyromidpoint(a, b) -> np.ndarray:
    """Gyromidpoint of a and b: the equidistant point of gyrosegment ab.

    Evaluated in the gamma-weighted form
    (gamma_a a + gamma_b b)/(gamma_a + gamma_b), which is exactly symmetric;
    the line-parameter and half-coaddition forms agree to rounding and are
    exercised by the test suite.
    """
    a = as_velocity(a, name="a")
    b = as_velocity(b, name="b")
    same_dimension(a, b, names=("a", "b"))
    ga = 1.0 / np.sqrt(1.0 - norm_sq(a))
    gb = 1.0 / np.sqrt(1.0 - norm_sq(b))
    return (ga[..., None] * a + gb[..., None] * b) / (ga + gb)[..., None]


def triangle_area(a, b, c) -> np.ndarray:
    """Euclidean area of the ambient triangle abc (any dimension).

    Uses base times orthogonalized height rather than the Gram determinant:
    the latter cancels catastrophically near collinear triples and cannot
    resolve areas below sqrt(eps), while this form stays accurate to rounding.
    """
    a = np.asarray(a, dtype=float)
    x = np.asarray(b, dtype=float) - a
    y = np.asarray(c, dtype=float) - a
    xx = norm_sq(x)
    coef = np.divide(dot(x, y), xx, out=np.zeros(np.shape(xx)), where=xx > 0.0)
    y_perp = y - coef[..., None] * x
    return 0.5 * np.sqrt(xx) * norm(y_perp)


def are_gyrocollinear(a, b, c, tol: float = COLLINEAR_AREA_TOL) -> bool:
    """True when the three points lie on one gyroline (one chord)."""
    return bool(np.all(triangle_area(a, b, c) < tol))


def gyroparallelogram_fourth(a, b, c, *, allow_degenerate: bool = False,
                             tol: float = COLLINEAR_AREA_TOL) -> np.ndarray:
    """Fourth vertex d = (b [+] c) (-) a of the gyroparallelogram abdc.

    The defining property is that the two gyrodiagonals ad and bc share
    their gyromidpoint.  Collinear inputs degenerate the figure and raise
    CollinearPoints unless ``allow_degenerate`` is set (coincident points,
    e.g. a = b, then fall through to the raw formula, which returns c).
    """
    a = as_velocity(a, name="a")
    b = as_velocity(b, name="b")
    c = as_velocity(c, name="c")
    same_dimension(a, b, names=("a", "b"))
    same_dimension(a, c, names=("a", "c"))
    if not allow_degenerate and are_gyrocollinear(a, b, c, tol):
        raise CollinearPoints("a, b, c lie on one gyroline; no gyroparallelogram")
    return einstein_sub(coadd(b, c), a)


@dataclass(frozen=True, eq=False)
class RootedGyrovector:
    """An ordered point pair with its value (-tail) (+) head.

    Two rooted gyrovectors are one gyrovector exactly when their values
    agree; re-rooting keeps the value and moves the head accordingly.
    """

    tail: np.ndarray
    head: np.ndarray
    value: np.ndarray

    @property
    def gyrolength(self) -> float:
        return float(norm(self.value))


def gyrovector_between(p, q) -> RootedGyrovector:
    """Rooted gyrovector from point p to point q."""
    p = as_velocity(p, name="p")
    q = as_velocity(q, name="q")
    same_dimension(p, q, names=("p", "q"))
    return RootedGyrovector(tail=p, head=q, value=left_sub(p, q))


def equivalent(g1: RootedGyrovector, g2: RootedGyrovector,
               tol: float = 1e-12) -> bool:
    """Whether two rooted gyrovectors carry the same value."""
    if g1.value.shape != g2.value.shape:
        return False
    return bool(np.all(np.abs(g1.value - g2.value) <= tol))


def translate_to(g: RootedGyrovector, new_tail) -> RootedGyrovector:
    """Re-root a gyrovector: same value, head = new_tail (+) value.

    The value array is reused, not recomputed, so the translated gyrovector
    is equivalent to ``g`` exactly.
    """
    new_tail = as_velocity(new_tail, name="new_tail")
    same_dimension(new_tail, g.value, names=("new_tail", "value"))
    return RootedGyrovector(
        tail=new_tail,
        head=einstein_add(new_tail, g.value),
        value=g.value,
    )


def gyrovector_coadd(u, v) -> np.ndarray:
    """Gyrovector addition by the gyroparallelogram law: the diagonal value.

    For gyrovectors u = (-a)(+)b and v = (-a)(+)c rooted at a common tail,
    the diagonal of their gyroparallelogram carries the value u [+] v.
    """
    return coadd(u, v)


def metric_tensor(x) -> np.ndarray:
    """Matrix G(x) of the Riemannian line element at a ball point x.

        ds^2 = |(x + dx) (-) x|^2 = dx.G(x).dx + O(|dx|^3)

    with G(x) = I/(1 - x^2) + x x^T/(1 - x^2)^2, the classical line element
    of the ball model.  Symmetric positive definite; the identity at x = 0.
    """
    x = as_velocity(x, name="x")
    if x.ndim != 1:
        raise DimensionError("metric_tensor expects a single point")
    n = x.shape[0]
    q = 1.0 - float(norm_sq(x))
    return np.eye(n) / q + np.outer(x, x) / (q * q)
