"""Closed-form model of the ideal dispersive Mach-Zehnder interferometer.

A two-level sample at inverse temperature ``beta`` sits in one arm and
imprints a photon-number phase only when excited.  With a NOON probe of
``n_photons`` photons the two-outcome statistics at the reference port are
fully determined by the thermal fringe visibility

    V(beta) = exp(-beta*hw0) / (2 + exp(-beta*hw0)),

with fringes

    P0(beta, x) = (1 + V cos(2*N*x)) / (1 + V),
    PN(beta, x) = 1 - P0 = 2V/(1+V) * sin(N*x)**2.

All Fisher-information quantities below are the closed forms obtained by
plugging these probabilities and their gradients into the two-outcome
Fisher matrix.  Everything is a pure function of its arguments; negative
``beta`` (population inversion) is allowed and only raises the contrast,
never flips the fringe phase.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, DegeneratePointError

DEFAULT_DEGENERACY_FLOOR = 1e-12


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters of the ideal interferometer.

    beta:        inverse temperature (1/energy; dimensionless for hbar_omega0=1),
                 any finite value, negative means population inversion
    x:           dispersive phase in radians
    n_photons:   NOON photon number N >= 1
    hbar_omega0: atomic energy splitting > 0
    """

    beta: float
    x: float
    n_photons: int = 1
    hbar_omega0: float = 1.0

    def __post_init__(self):
        if not (self.hbar_omega0 > 0):
            raise ConfigError(f"hbar_omega0 must be > 0, got {self.hbar_omega0}")
        if self.n_photons < 1 or int(self.n_photons) != self.n_photons:
            raise ConfigError(f"n_photons must be a positive integer, got {self.n_photons}")
        if not (math.isfinite(self.beta) and math.isfinite(self.x)):
            raise ConfigError("beta and x must be finite")


@dataclass(frozen=True)
class FringeProbabilities:
    """Two-outcome statistics (all photons at the reference port vs. not)."""

    p0: float
    pN: float


@dataclass(frozen=True)
class FisherMatrix:
    """Symmetric 2x2 information matrix for theta = (beta, x)."""

    f_bb: float
    f_xx: float
    f_bx: float

    def as_array(self) -> np.ndarray:
        return np.array([[self.f_bb, self.f_bx], [self.f_bx, self.f_xx]])

    @property
    def trace(self) -> float:
        return self.f_bb + self.f_xx

    @property
    def det(self) -> float:
        return self.f_bb * self.f_xx - self.f_bx**2


@dataclass(frozen=True)
class LandscapeGrid:
    """Uniform rectangular grid over (beta, x)."""

    beta_min: float
    beta_max: float
    x_min: float
    x_max: float
    n_beta: int = 20
    n_x: int = 20

    def __post_init__(self):
        if self.n_beta < 2 or self.n_x < 2:
            raise ConfigError("grid sizes must be >= 2")
        if not (self.beta_max > self.beta_min and self.x_max > self.x_min):
            raise ConfigError("grid ranges must be non-degenerate")

    def beta_values(self) -> np.ndarray:
        return np.linspace(self.beta_min, self.beta_max, self.n_beta)

    def x_values(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.n_x)


def visibility(p: ModelParams) -> float:
    """Thermal fringe visibility V(beta) in (0, 1), strictly decreasing in beta."""
    b = p.beta * p.hbar_omega0
    # exp(-b) overflows for large negative b; use 1/(2 exp(b) + 1) there instead.
    if b > 0:
        e = math.exp(-b)
        return e / (2.0 + e)
    return 1.0 / (2.0 * math.exp(b) + 1.0)


def visibility_derivative(p: ModelParams) -> float:
    """dV/dbeta = -hbar_omega0 * V * (1 - V); always negative."""
    v = visibility(p)
    return -p.hbar_omega0 * v * (1.0 - v)


def excited_population(beta: float, hbar_omega0: float = 1.0) -> float:
    """Thermal excited-state weight p_e = 1/(1 + exp(beta*hw0)) = 2V/(1+V)."""
    b = beta * hbar_omega0
    if b >= 0:
        return math.exp(-b) / (1.0 + math.exp(-b))
    return 1.0 / (1.0 + math.exp(b))


def output_probabilities(p: ModelParams) -> FringeProbabilities:
    """Reference-port fringe P0 = (1 + V cos(2Nx)) / (1 + V) and its complement.

    Computed through the algebraically equivalent form PN = p_e sin(Nx)^2 so
    that p0 + pN = 1 holds exactly and P0(x=0) = 1 for any beta.
    """
    pe = excited_population(p.beta, p.hbar_omega0)
    pn = pe * math.sin(p.n_photons * p.x) ** 2
    return FringeProbabilities(p0=1.0 - pn, pN=pn)


def probability_gradient(p: ModelParams) -> tuple[float, float]:
    """(d P0/d beta, d P0/d x) of the reference-port probability.

    d_beta P0 = 2*hw0*V(1-V)/(1+V)^2 * sin(Nx)^2   (>= 0)
    d_x    P0 = -2N*V/(1+V) * sin(2Nx)             (odd in x)
    """
    v = visibility(p)
    n = p.n_photons
    s2 = math.sin(n * p.x) ** 2
    d_beta = 2.0 * p.hbar_omega0 * v * (1.0 - v) / (1.0 + v) ** 2 * s2
    d_x = -2.0 * n * v / (1.0 + v) * math.sin(2.0 * n * p.x)
    return d_beta, d_x


def fim_analytic(p: ModelParams, degeneracy_floor: float = DEFAULT_DEGENERACY_FLOOR) -> FisherMatrix:
    """Closed-form two-outcome Fisher matrix of the reference-port statistics.

        F_bb = 2*hw0^2 * V(1-V)^2 sin(Nx)^2 / [(1+V)^2 (1+V cos 2Nx)]
        F_xx = 8*N^2 * V cos(Nx)^2 / (1+V cos 2Nx)
        F_bx = -2*N*hw0 * V(1-V) sin(2Nx) / [(1+V)(1+V cos 2Nx)]

    The forms above are already the analytic limits at fringe extrema, so the
    only genuine degeneracy is a deterministic outcome: the call raises
    DegeneratePointError when p0*(1-p0) or the shared denominator falls below
    ``degeneracy_floor``.  Pass a smaller floor (or 0) to evaluate the limit
    values at deliberately near-deterministic points.
    """
    v = visibility(p)
    probs = output_probabilities(p)
    n = p.n_photons
    denom = 1.0 + v * math.cos(2.0 * n * p.x)
    if degeneracy_floor > 0:
        if denom < degeneracy_floor or probs.p0 * probs.pN < degeneracy_floor:
            raise DegeneratePointError(
                f"deterministic operating point: p0={probs.p0!r}, pN={probs.pN!r}"
            )
    hw = p.hbar_omega0
    s2 = math.sin(n * p.x) ** 2
    f_bb = 2.0 * hw**2 * v * (1.0 - v) ** 2 * s2 / ((1.0 + v) ** 2 * denom)
    f_xx = 8.0 * n**2 * v * math.cos(n * p.x) ** 2 / denom
    f_bx = -2.0 * n * hw * v * (1.0 - v) * math.sin(2.0 * n * p.x) / ((1.0 + v) * denom)
    return FisherMatrix(f_bb=f_bb, f_xx=f_xx, f_bx=f_bx)


def two_outcome_fim(p0: float, grad_p0: tuple[float, float]) -> FisherMatrix:
    """Generic binary-outcome Fisher matrix sum_y (dP_y)(dP_y)^T / P_y.

    Independent of the closed forms in :func:`fim_analytic`; used as the
    oracle that pins them down.
    """
    if not (0.0 < p0 < 1.0):
        raise DegeneratePointError(f"p0 must lie strictly in (0,1), got {p0}")
    g = np.asarray(grad_p0, dtype=float)
    w = 1.0 / p0 + 1.0 / (1.0 - p0)  # dP1 = -dP0
    m = w * np.outer(g, g)
    return FisherMatrix(f_bb=m[0, 0], f_xx=m[1, 1], f_bx=m[0, 1])


def scalar_figures(f: FisherMatrix) -> tuple[float, float, float]:
    """(F_eff, trace, f_x) with F_eff = det F / Tr F and f_x = F_xx / Tr F."""
    tr = f.trace
    if not tr > 0:
        raise DegeneratePointError(f"Fisher-matrix trace must be > 0, got {tr}")
    return f.det / tr, tr, f.f_xx / tr


def trace_landscape(grid: LandscapeGrid, template: ModelParams) -> np.ndarray:
    """Tr F over the grid, rows indexed by beta and columns by x."""
    out = np.empty((grid.n_beta, grid.n_x))
    for i, beta in enumerate(grid.beta_values()):
        for j, x in enumerate(grid.x_values()):
            p = ModelParams(beta=beta, x=x, n_photons=template.n_photons,
                            hbar_omega0=template.hbar_omega0)
            f = fim_analytic(p, degeneracy_floor=0.0)
            out[i, j] = f.trace
    return out


def plateau_mask(grid: LandscapeGrid, template: ModelParams, delta: float = 0.05) -> np.ndarray:
    """Boolean grid marking points with Tr F >= (1 - delta) * max over the grid."""
    if not (0.0 < delta < 1.0):
        raise ConfigError(f"delta must lie in (0,1), got {delta}")
    tr = trace_landscape(grid, template)
    return tr >= (1.0 - delta) * tr.max()
