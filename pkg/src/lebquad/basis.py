"""Polynomial basis families with stable recurrence evaluation.

All families are evaluated in a mapped variable t in [-1, 1]; the affine
map keeps the three-term recurrences well conditioned regardless of the
units of the input data.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ConfigurationError, InputDataError

_EPS = np.finfo(float).eps


class Family(str, Enum):
    CHEBYSHEV = "chebyshev"
    LEGENDRE = "legendre"
    MONOMIAL = "monomial"


@dataclass(frozen=True)
class DomainMap:
    """Affine map x -> t = (2x - x_min - x_max) / (x_max - x_min) in [-1, 1]."""

    x_min: float
    x_max: float

    def __post_init__(self):
        if not (np.isfinite(self.x_min) and np.isfinite(self.x_max)):
            raise InputDataError("domain endpoints must be finite")
        if not self.x_min < self.x_max:
            raise ConfigurationError(
                f"domain requires x_min < x_max, got [{self.x_min}, {self.x_max}]"
            )

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return (2.0 * x - self.x_min - self.x_max) / (self.x_max - self.x_min)

    @classmethod
    def identity(cls) -> "DomainMap":
        return cls(-1.0, 1.0)

    @classmethod
    def from_samples(cls, x) -> "DomainMap":
        """Map built from the sample range; identity if all samples coincide."""
        x = np.asarray(x, dtype=float)
        lo, hi = float(x.min()), float(x.max())
        if lo == hi:
            return cls.identity()
        return cls(lo, hi)


@dataclass(frozen=True)
class BasisSpec:
    """A family of polynomial basis functions Q_0 .. Q_{size-1} on a domain."""

    family: Family
    size: int
    domain: DomainMap

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.size < 1:
            raise ConfigurationError(f"basis size must be >= 1, got {self.size}")


def evaluate_all(spec: BasisSpec, x) -> np.ndarray:
    """Evaluate all basis functions at x via the three-term recurrence.

    x may be a scalar or a 1-d array; the result has shape (size,) or
    (size, len(x)).
    """
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise InputDataError("evaluation points must be finite")
    t = spec.domain(x)
    scalar = t.ndim == 0
    t = np.atleast_1d(t)
    out = np.empty((spec.size, t.size))
    out[0] = 1.0
    if spec.size > 1:
        out[1] = t
    if spec.family is Family.CHEBYSHEV:
        for k in range(2, spec.size):
            out[k] = 2.0 * t * out[k - 1] - out[k - 2]
    elif spec.family is Family.LEGENDRE:
        for k in range(2, spec.size):
            out[k] = ((2 * k - 1) * t * out[k - 1] - (k - 1) * out[k - 2]) / k
    else:
        for k in range(2, spec.size):
            out[k] = t * out[k - 1]
    return out[:, 0] if scalar else out


def _legendre_linearization(j: int, k: int) -> list[tuple[int, float]]:
    # Adams' formula: P_j P_k = sum_r c_r P_{j+k-2r}, r = 0 .. min(j, k),
    # with c_r built from A_r = (2r-1)!!/r! computed by recurrence.
    lo, hi = min(j, k), max(j, k)
    a = np.empty(hi + lo + 1)
    a[0] = 1.0
    for r in range(1, hi + lo + 1):
        a[r] = a[r - 1] * (2 * r - 1) / r
    terms = []
    for r in range(lo + 1):
        m = j + k - 2 * r
        c = (a[j - r] * a[r] * a[k - r] / a[j + k - r]) * (2 * m + 1) / (
            2 * (j + k - r) + 1
        )
        terms.append((m, c))
    return terms


def product_expansion(spec: BasisSpec, j: int, k: int) -> list[tuple[int, float]]:
    """Coefficients c_m with Q_j * Q_k = sum_m c_m Q_m.

    Chebyshev uses T_j T_k = (T_{j+k} + T_{|j-k|}) / 2, monomials multiply
    degrees, Legendre uses the standard linearization coefficients.
    """
    if not (0 <= j < spec.size and 0 <= k < spec.size):
        raise ConfigurationError(
            f"indices ({j}, {k}) out of range for basis of size {spec.size}"
        )
    if j == 0:
        return [(k, 1.0)]
    if k == 0:
        return [(j, 1.0)]
    if spec.family is Family.MONOMIAL:
        return [(j + k, 1.0)]
    if spec.family is Family.CHEBYSHEV:
        if j == k:
            return [(0, 0.5), (2 * j, 0.5)]
        return [(abs(j - k), 0.5), (j + k, 0.5)]
    return _legendre_linearization(j, k)
