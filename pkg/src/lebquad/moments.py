"""Sample ingestion and Gram/moment accumulation.

Two routes produce the same Gram matrices: direct sample sums
(:func:`accumulate_grams`) and the moment / multiplication-operator path
(:func:`moments_from_samples` followed by :func:`grams_from_moments`).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import BasisSpec, evaluate_all, product_expansion
from .errors import ConfigurationError, DegreeRangeError, InputDataError


@dataclass(frozen=True)
class SampleSet:
    """Weighted observations (x_l, w_l, f_l, g_l) defining the measure.

    ``g`` is optional; without it only the single-process quadrature
    pipeline is available.
    """

    x: np.ndarray
    w: np.ndarray
    f: np.ndarray
    g: np.ndarray | None = None

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        w = np.asarray(self.w, dtype=float)
        f = np.asarray(self.f, dtype=float)
        g = None if self.g is None else np.asarray(self.g, dtype=float)
        if x.ndim != 1 or x.size < 1:
            raise InputDataError("need at least one sample")
        for name, arr in (("w", w), ("f", f)) + (() if g is None else (("g", g),)):
            if arr.shape != x.shape:
                raise InputDataError(f"column '{name}' has {arr.size} entries, expected {x.size}")
        for name, arr in (("x", x), ("w", w), ("f", f)) + (() if g is None else (("g", g),)):
            bad = np.flatnonzero(~np.isfinite(arr))
            if bad.size:
                raise InputDataError(f"non-finite value in column '{name}' at record {bad[0] + 1}")
        neg = np.flatnonzero(w < 0)
        if neg.size:
            raise InputDataError(f"negative weight at record {neg[0] + 1}")
        if w.sum() <= 0:
            raise InputDataError("total measure must be positive")
        for name, arr in (("x", x), ("w", w), ("f", f), ("g", g)):
            object.__setattr__(self, name, arr)
            if arr is not None:
                arr.setflags(write=False)

    @property
    def size(self) -> int:
        return self.x.size

    @property
    def has_g(self) -> bool:
        return self.g is not None

    def scaled(self, c: float) -> "SampleSet":
        """Same samples with all measure weights multiplied by c > 0."""
        return SampleSet(self.x, self.w * c, self.f, self.g)


@dataclass(frozen=True)
class GramSet:
    """Gram matrices and moment vector of a SampleSet in a given basis."""

    n: int
    G: np.ndarray
    A_f: np.ndarray
    m: np.ndarray
    total_measure: float
    basis: BasisSpec
    A_g: np.ndarray | None = None

    @property
    def has_g(self) -> bool:
        return self.A_g is not None

    def operator(self, which: str) -> np.ndarray:
        if which == "f":
            return self.A_f
        if which == "g":
            if self.A_g is None:
                raise ConfigurationError("samples carried no g column")
            return self.A_g
        raise ConfigurationError(f"unknown process {which!r}, expected 'f' or 'g'")


@dataclass(frozen=True)
class MomentSet:
    """Moments <Q_m>, <f Q_m>, <g Q_m> for m = 0 .. 2n-1."""

    basis: BasisSpec
    mu: np.ndarray
    mu_f: np.ndarray
    mu_g: np.ndarray | None = None

    @property
    def has_g(self) -> bool:
        return self.mu_g is not None


def _check_order(n: int, basis: BasisSpec, minimum: int) -> None:
    if n < 1:
        raise ConfigurationError(f"order must be >= 1, got {n}")
    if basis.size < minimum:
        raise ConfigurationError(
            f"basis size {basis.size} too small, need at least {minimum}"
        )


def _mirror(M: np.ndarray) -> np.ndarray:
    # Bit-for-bit symmetric: keep the upper triangle, mirror it down.
    upper = np.triu(M)
    return upper + np.triu(M, 1).T


def accumulate_grams(samples: SampleSet, basis: BasisSpec, n: int) -> GramSet:
    """Direct sample sums G_jk = sum_l Q_j(x_l) Q_k(x_l) w_l, etc."""
    _check_order(n, basis, n)
    Q = evaluate_all(basis, samples.x)[:n]
    G = _mirror((Q * samples.w) @ Q.T)
    A_f = _mirror((Q * (samples.w * samples.f)) @ Q.T)
    A_g = None
    if samples.has_g:
        A_g = _mirror((Q * (samples.w * samples.g)) @ Q.T)
    m = Q @ samples.w
    return GramSet(
        n=n, G=G, A_f=A_f, A_g=A_g, m=m,
        total_measure=float(samples.w.sum()), basis=basis,
    )


def moments_from_samples(samples: SampleSet, basis: BasisSpec, n: int) -> MomentSet:
    """Moments of Q_m against dmu, f dmu, and g dmu for m = 0 .. 2n-1."""
    _check_order(n, basis, 2 * n)
    Q = evaluate_all(basis, samples.x)[: 2 * n]
    mu = Q @ samples.w
    mu_f = Q @ (samples.w * samples.f)
    mu_g = Q @ (samples.w * samples.g) if samples.has_g else None
    return MomentSet(basis=basis, mu=mu, mu_f=mu_f, mu_g=mu_g)


def _gram_from_moment_vector(basis: BasisSpec, mu: np.ndarray, n: int) -> np.ndarray:
    out = np.zeros((n, n))
    for j in range(n):
        for k in range(j, n):
            acc = 0.0
            for m, c in product_expansion(basis, j, k):
                if m >= mu.size:
                    raise DegreeRangeError(
                        f"Q_{j}*Q_{k} needs moment {m}, only {mu.size} available"
                    )
                acc += c * mu[m]
            out[j, k] = acc
            out[k, j] = acc
    return out


def grams_from_moments(moments: MomentSet, n: int) -> GramSet:
    """Gram matrices assembled from moments via the multiplication operator."""
    if n < 1:
        raise ConfigurationError(f"order must be >= 1, got {n}")
    if moments.mu.size < 2 * n - 1:
        raise DegreeRangeError(
            f"order {n} needs {2 * n - 1} moments, got {moments.mu.size}"
        )
    basis = moments.basis
    G = _gram_from_moment_vector(basis, moments.mu, n)
    A_f = _gram_from_moment_vector(basis, moments.mu_f, n)
    A_g = None
    if moments.has_g:
        A_g = _gram_from_moment_vector(basis, moments.mu_g, n)
    return GramSet(
        n=n, G=G, A_f=A_f, A_g=A_g, m=moments.mu[:n].copy(),
        total_measure=float(moments.mu[0]), basis=basis,
    )
