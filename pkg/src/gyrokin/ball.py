"""The ball of admissible velocities: validation helpers and the BetaVector type.

Every velocity in this library is dimensionless (a fraction of c) and lives in
the open unit ball of R^n.  Physical units are handled only at I/O boundaries;
nothing below this layer ever multiplies by c.

Array-level functions operate on the last axis, so shapes ``(..., n)``
broadcast like any other numpy operation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AdmissibilityError, DimensionError

# Constructors reject squared norms above 1 - BALL_MARGIN: gamma factors blow
# up and the algebraic laws lose their precision headroom without a hard edge.
BALL_MARGIN = 1e-12

# Largest norm an admissible velocity may have; scalar results clamp here.
MAX_NORM = float(np.sqrt(1.0 - BALL_MARGIN))

# Vectors whose components are all below this magnitude are treated as exact
# zeros, so that -0.0 and denormal dust compare equal to the identity.
ZERO_EPS = 1e-300

# Default tolerances for the validation checks the library reports on.
COMPONENT_TOL = 1e-10
GAMMA_RTOL = 1e-12


def dot(u, v):
    """Inner product over the last axis."""
    return np.sum(np.asarray(u) * np.asarray(v), axis=-1)


def norm_sq(v):
    """Squared Euclidean norm over the last axis."""
    v = np.asarray(v)
    return np.sum(v * v, axis=-1)


def norm(v):
    """Euclidean norm over the last axis."""
    return np.sqrt(norm_sq(v))


def as_velocity(v, *, name: str = "velocity") -> np.ndarray:
    """Coerce to a float array of shape (..., n) and enforce admissibility.

    Raises
    ------
    DimensionError
        If the input is scalar (no component axis).
    AdmissibilityError
        If any entry is non-finite or any squared norm exceeds
        ``1 - BALL_MARGIN``.
    """
    arr = np.asarray(v, dtype=float)
    if arr.ndim == 0:
        raise DimensionError(f"{name} must have at least one component")
    if arr.shape[-1] < 1:
        raise DimensionError(f"{name} has an empty component axis")
    if not np.all(np.isfinite(arr)):
        raise AdmissibilityError(f"{name} has non-finite components")
    n2 = norm_sq(arr)
    # "not <=" instead of ">" so NaN in n2 can never sneak through.
    if not np.all(n2 <= 1.0 - BALL_MARGIN):
        worst = float(np.sqrt(np.max(n2)))
        raise AdmissibilityError(
            f"{name} has norm {worst:.17g} outside the admissible ball "
            f"(limit {MAX_NORM:.17g})"
        )
    return arr


def as_ambient(w, *, name: str = "vector") -> np.ndarray:
    """Coerce to a finite float array of shape (..., n); no ball constraint."""
    arr = np.asarray(w, dtype=float)
    if arr.ndim == 0:
        raise DimensionError(f"{name} must have at least one component")
    if not np.all(np.isfinite(arr)):
        raise AdmissibilityError(f"{name} has non-finite components")
    return arr


def same_dimension(u: np.ndarray, v: np.ndarray, *, names=("u", "v")) -> None:
    """Require matching component counts on the last axis."""
    if u.shape[-1] != v.shape[-1]:
        raise DimensionError(
            f"{names[0]} has dimension {u.shape[-1]} but {names[1]} has "
            f"dimension {v.shape[-1]}"
        )


@dataclass(frozen=True, eq=False)
class BetaVector:
    """A validated point of the open unit ball: a velocity in units of c.

    The wrapped array is read-only; all math happens in the functional
    modules, which accept BetaVector wherever an array is expected.
    """

    components: np.ndarray

    def __post_init__(self):
        arr = np.array(self.components, dtype=float, copy=True)
        if arr.ndim != 1:
            raise DimensionError("BetaVector takes a single 1-D vector")
        arr = as_velocity(arr, name="BetaVector")
        arr.setflags(write=False)
        object.__setattr__(self, "components", arr)

    @classmethod
    def zero(cls, dim: int) -> "BetaVector":
        return cls(np.zeros(dim))

    def __array__(self, dtype=None, copy=None):
        if dtype is not None:
            return self.components.astype(dtype)
        return self.components

    def __len__(self) -> int:
        return self.components.shape[0]

    @property
    def dim(self) -> int:
        return self.components.shape[0]

    @property
    def norm(self) -> float:
        return float(norm(self.components))

    @property
    def norm_sq(self) -> float:
        return float(norm_sq(self.components))

    @property
    def gamma(self) -> float:
        return float(1.0 / np.sqrt(1.0 - norm_sq(self.components)))

    @property
    def is_zero(self) -> bool:
        """True when every component is below the exact-zero threshold."""
        return bool(np.all(np.abs(self.components) < ZERO_EPS))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BetaVector):
            return NotImplemented
        if self.dim != other.dim:
            return False
        if self.is_zero and other.is_zero:
            return True
        return bool(np.array_equal(self.components, other.components))

    def __hash__(self):
        if self.is_zero:
            return hash((self.dim, 0.0))
        return hash((self.dim, self.components.tobytes()))

    def __neg__(self) -> "BetaVector":
        return BetaVector(-self.components)

    def __repr__(self) -> str:
        inner = ", ".join(format(x, ".17g") for x in self.components)
        return f"BetaVector([{inner}])"
