"""Truncated-Fock open-system engine: probes, damping channels, QFIM.

States live in one or two bosonic modes truncated at ``cutoff`` photons per
mode (dimension d = cutoff + 1; two-mode basis index i = n_a * d + n_b).
Mode a is always the sensing mode: the thermal-conditional phase channel

    rho -> p_g(beta) rho + p_e(beta) Phi_x(rho),
    Phi_x(rho)_{nm} = exp(-i x (n - m)) rho_{nm}   (number phase on mode a)

is the Fock-space version of the dispersive kick, with Gibbs weights
p_g, p_e of the two-level sample.  Photon loss is the exact amplitude
damping Kraus family

    K_k = sum_n sqrt(C(n,k) (1-eta)^k eta^(n-k)) |n-k><n|,

and dephasing multiplies coherences by exp(-gamma (n-m)^2) per mode.  Both
channels act multiplicatively on Fock coherences (plus the downward
population flow of loss), so they commute there, and damping the sensing
arm reproduces the closed-form fringe law
V_eff = eta^(N/2) exp(-gamma N^2) V(beta) for a NOON probe exactly.

Quantum Fisher information comes from symmetric logarithmic derivatives:
finite-difference d_a rho, eigendecomposition of rho, and

    (L_a)_{jk} = 2 <j|d_a rho|k> / (lambda_j + lambda_k)

on the retained support.  ``incompatibility`` is (1/2)|Tr(rho [L_beta, L_x])|,
the weak-commutativity obstruction to saturating both Cramer-Rao bounds
simultaneously.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .analytic import FisherMatrix, ModelParams, excited_population, visibility
from .errors import ConfigError, CutoffTooSmallError, DegenerateSupportError

DEFAULT_LEAKAGE_BOUND = 1e-8

# The published fringe law runs in cos(2Nx): parameterized families carry the
# dispersive phase argument doubled.
FRINGE_PHASE_SCALE = 2.0


@dataclass(frozen=True)
class NoiseParams:
    """Transmission eta = exp(-gamma_ad t) and dephasing gamma = gamma_pd t / 2."""

    eta: float = 1.0
    gamma: float = 0.0
    gamma_ad: float | None = None
    gamma_pd: float | None = None
    t: float | None = None

    def __post_init__(self):
        if not (0.0 < self.eta <= 1.0):
            raise ConfigError(f"eta must lie in (0, 1], got {self.eta}")
        if self.gamma < 0.0:
            raise ConfigError(f"gamma must be >= 0, got {self.gamma}")
        raw = (self.gamma_ad, self.gamma_pd, self.t)
        if any(v is not None for v in raw):
            if any(v is None for v in raw):
                raise ConfigError("raw rates require all of gamma_ad, gamma_pd, t")
            if abs(self.eta - math.exp(-self.gamma_ad * self.t)) > 1e-12:
                raise ConfigError("eta inconsistent with exp(-gamma_ad * t)")
            if abs(self.gamma - self.gamma_pd * self.t / 2.0) > 1e-12:
                raise ConfigError("gamma inconsistent with gamma_pd * t / 2")

    @classmethod
    def from_rates(cls, gamma_ad: float, gamma_pd: float, t: float) -> "NoiseParams":
        return cls(eta=math.exp(-gamma_ad * t), gamma=gamma_pd * t / 2.0,
                   gamma_ad=gamma_ad, gamma_pd=gamma_pd, t=t)


@dataclass(frozen=True)
class FockState:
    """Pure state over 1 or 2 truncated modes; amplitudes has length d**modes."""

    modes: int
    cutoff: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.modes not in (1, 2):
            raise ConfigError("only 1- or 2-mode states are supported")
        d = self.cutoff + 1
        if self.amplitudes.shape != (d**self.modes,):
            raise ConfigError("amplitude vector has wrong dimension")
        norm = np.linalg.norm(self.amplitudes)
        if abs(norm - 1.0) > 1e-10:
            raise ConfigError(f"state norm {norm} differs from 1 beyond 1e-10")

    @property
    def dim(self) -> int:
        return self.cutoff + 1

    def to_density(self) -> "FockDensity":
        v = self.amplitudes.astype(complex)
        return FockDensity(modes=self.modes, cutoff=self.cutoff, matrix=np.outer(v, v.conj()))


@dataclass(frozen=True)
class FockDensity:
    """Dense Hermitian trace-one matrix over the same space as FockState."""

    modes: int
    cutoff: int
    matrix: np.ndarray

    def __post_init__(self):
        d = (self.cutoff + 1) ** self.modes
        if self.matrix.shape != (d, d):
            raise ConfigError("density matrix has wrong dimension")

    @property
    def dim(self) -> int:
        return self.cutoff + 1

    def validate(self, tol: float = 1e-10) -> "FockDensity":
        m = self.matrix
        if np.abs(m - m.conj().T).max() > tol:
            raise ConfigError("density matrix is not Hermitian")
        if abs(np.trace(m).real - 1.0) > tol:
            raise ConfigError("density matrix trace differs from 1")
        if np.linalg.eigvalsh(m).min() < -1e-8:
            raise ConfigError("density matrix has a significantly negative eigenvalue")
        return self


def mode_numbers(modes: int, cutoff: int) -> tuple[np.ndarray, ...]:
    """Photon-number arrays per basis index, one array per mode."""
    d = cutoff + 1
    if modes == 1:
        return (np.arange(d),)
    idx = np.arange(d * d)
    return idx // d, idx % d


def make_noon(n: int, cutoff: int | None = None) -> FockState:
    """Two-mode NOON state (|N,0> + |0,N>)/sqrt(2)."""
    if n < 1:
        raise ConfigError(f"NOON photon number must be >= 1, got {n}")
    if cutoff is None:
        cutoff = n
    if cutoff < n:
        raise CutoffTooSmallError(f"cutoff {cutoff} < photon number {n}")
    d = cutoff + 1
    amp = np.zeros(d * d, dtype=complex)
    amp[n * d] = 1.0 / math.sqrt(2.0)
    amp[n] = 1.0 / math.sqrt(2.0)
    return FockState(modes=2, cutoff=cutoff, amplitudes=amp)


def cat_default_cutoff(alpha: complex, leakage_bound: float = DEFAULT_LEAKAGE_BOUND) -> int:
    """Smallest even-layer cutoff meeting the leakage bound, at least |a|^2 + 6|a|.

    The |a|^2 + 6|a| guard alone undershoots the default 1e-8 bound already
    at |a| = 2, so the default keeps growing until the exact even-coherent
    tail satisfies it.
    """
    a2 = abs(alpha) ** 2
    floor = math.ceil(a2 + 6.0 * abs(alpha))
    if a2 == 0.0:
        return max(floor, 1)
    top = floor if floor % 2 == 0 else floor - 1
    total = sum(math.exp(n * math.log(a2) - math.lgamma(n + 1))
                for n in range(0, top + 1, 2))
    while 1.0 - total / math.cosh(a2) > leakage_bound:
        top += 2
        total += math.exp(top * math.log(a2) - math.lgamma(top + 1))
        if top > 100_000:
            raise CutoffTooSmallError("even-cat cutoff search did not converge")
    return max(floor, top)


def make_cat(alpha: complex, cutoff: int | None = None,
             leakage_bound: float = DEFAULT_LEAKAGE_BOUND) -> FockState:
    """Even cat state ~ |alpha> + |-alpha>, exactly zero on odd Fock layers.

    Truncation leakage is checked against the untruncated even-coherent
    weight sum_{even n} |alpha|^(2n) / n! = cosh(|alpha|^2).
    """
    if cutoff is None:
        cutoff = cat_default_cutoff(alpha, leakage_bound)
    d = cutoff + 1
    a2 = abs(alpha) ** 2
    amp = np.zeros(d, dtype=complex)
    if a2 == 0.0:
        amp[0] = 1.0
        return FockState(modes=1, cutoff=cutoff, amplitudes=amp)
    phase = alpha / abs(alpha)
    for n in range(0, d, 2):
        # log-space keeps alpha^n / sqrt(n!) finite at large cutoff
        logw = n * math.log(abs(alpha)) - 0.5 * math.lgamma(n + 1)
        amp[n] = phase**n * math.exp(logw)
    partial = float(np.sum(np.abs(amp) ** 2))
    leakage = 1.0 - partial / math.cosh(a2)
    if leakage > leakage_bound:
        raise CutoffTooSmallError(
            f"even-cat leakage {leakage:.3e} above bound {leakage_bound:.1e} at cutoff {cutoff}"
        )
    return FockState(modes=1, cutoff=cutoff, amplitudes=amp / math.sqrt(partial))


def tmsv_default_cutoff(r: float, leakage_bound: float = DEFAULT_LEAKAGE_BOUND) -> int:
    if r == 0.0:
        return 1
    th2 = math.tanh(abs(r)) ** 2
    return max(math.ceil(math.log(leakage_bound) / math.log(th2)) - 1, 1)


def make_tmsv(r: float, cutoff: int | None = None,
              leakage_bound: float = DEFAULT_LEAKAGE_BOUND) -> FockState:
    """Two-mode squeezed vacuum sech(r) sum_n tanh(r)^n |n,n>, renormalized.

    The untruncated tail weight is exactly tanh(r)^(2(cutoff+1)).
    """
    if cutoff is None:
        cutoff = tmsv_default_cutoff(r, leakage_bound)
    if cutoff < 0:
        raise CutoffTooSmallError("cutoff must be >= 0")
    th = math.tanh(r)
    leakage = th ** (2 * (cutoff + 1))
    if leakage >= leakage_bound:
        raise CutoffTooSmallError(
            f"TMSV leakage {leakage:.3e} above bound {leakage_bound:.1e} at cutoff {cutoff}"
        )
    d = cutoff + 1
    amp = np.zeros(d * d, dtype=complex)
    amp[np.arange(d) * d + np.arange(d)] = th ** np.arange(d)
    amp /= np.linalg.norm(amp)
    return FockState(modes=2, cutoff=cutoff, amplitudes=amp)


def _squeezed_vacuum_log_probs(r: float, max_pairs: int) -> np.ndarray:
    """log P(2m) of squeezed vacuum for m = 0..max_pairs."""
    th2 = math.tanh(abs(r)) ** 2
    m = np.arange(max_pairs + 1)
    lg = np.array([math.lgamma(2 * mm + 1) - 2 * math.lgamma(mm + 1) for mm in m])
    return lg - 2 * m * math.log(2.0) + m * math.log(th2) - math.log(math.cosh(r)) \
        if r != 0.0 else np.where(m == 0, 0.0, -np.inf)


def squeezed_vacuum_default_cutoff(r: float,
                                   leakage_bound: float = DEFAULT_LEAKAGE_BOUND) -> int:
    if r == 0.0:
        return 1
    probs = np.exp(_squeezed_vacuum_log_probs(r, 100_000 // 2))
    csum = np.cumsum(probs)
    hits = np.nonzero(1.0 - csum < leakage_bound)[0]
    if len(hits) == 0:
        raise CutoffTooSmallError("squeezed-vacuum cutoff search did not converge")
    return int(2 * hits[0])


def make_squeezed_vacuum(r: float, cutoff: int | None = None,
                         leakage_bound: float = DEFAULT_LEAKAGE_BOUND) -> FockState:
    """Single-mode squeezed vacuum (even Fock layers only), renormalized.

    Mean photon number sinh(r)^2 matches the per-mode TMSV marginal; the
    scaling studies use this probe where a two-mode matrix at the same
    n_bar would be intractable.
    """
    if cutoff is None:
        cutoff = squeezed_vacuum_default_cutoff(r, leakage_bound)
    d = cutoff + 1
    amp = np.zeros(d, dtype=complex)
    if r == 0.0:
        amp[0] = 1.0
        return FockState(modes=1, cutoff=cutoff, amplitudes=amp)
    th = math.tanh(r)
    for m in range(0, (cutoff // 2) + 1):
        logw = 0.5 * math.lgamma(2 * m + 1) - math.lgamma(m + 1) - m * math.log(2.0) \
            + m * math.log(abs(th))
        amp[2 * m] = (-1.0 if th > 0 else 1.0) ** m * math.exp(logw)
    partial = float(np.sum(np.abs(amp) ** 2)) / math.cosh(r)
    leakage = 1.0 - partial
    if leakage > leakage_bound:
        raise CutoffTooSmallError(
            f"squeezed-vacuum leakage {leakage:.3e} above {leakage_bound:.1e} at cutoff {cutoff}"
        )
    return FockState(modes=1, cutoff=cutoff, amplitudes=amp / np.linalg.norm(amp))


def mean_photon_number(state: FockState, mode: int = 0) -> float:
    nums = mode_numbers(state.modes, state.cutoff)[mode]
    return float(np.sum(nums * np.abs(state.amplitudes) ** 2))


def parity_expectation(state: FockState, mode: int = 0) -> float:
    nums = mode_numbers(state.modes, state.cutoff)[mode]
    return float(np.sum((-1.0) ** nums * np.abs(state.amplitudes) ** 2))


def _as_matrix(rho: FockDensity | FockState) -> tuple[np.ndarray, int, int]:
    if isinstance(rho, FockState):
        rho = rho.to_density()
    return rho.matrix, rho.modes, rho.cutoff


def thermal_phase_encode(rho: FockDensity | FockState, beta: float,
                         hbar_omega0: float, x: float, mode: int = 0) -> FockDensity:
    """p_g * rho + p_e * Phi_x(rho), number-phase map on the sensing mode."""
    m, modes, cutoff = _as_matrix(rho)
    pe = excited_population(beta, hbar_omega0)
    nums = mode_numbers(modes, cutoff)[mode]
    phases = np.exp(-1j * x * nums)
    kicked = phases[:, None] * m * phases.conj()[None, :]
    return FockDensity(modes=modes, cutoff=cutoff, matrix=(1.0 - pe) * m + pe * kicked)


def _loss_coefficients(dim: int, eta: float, k: int) -> np.ndarray:
    """c[m] = <m|K_k|m+k|> = sqrt(C(m+k, k) (1-eta)^k eta^m), m = 0..dim-1-k."""
    m = np.arange(dim - k)
    logbinom = np.array(
        [math.lgamma(mm + k + 1) - math.lgamma(mm + 1) - math.lgamma(k + 1) for mm in m]
    )
    logc = 0.5 * (logbinom + k * math.log1p(-eta) + m * math.log(eta))
    return np.exp(logc)


def amplitude_damping_kraus(dim: int, eta: float) -> list[np.ndarray]:
    """Exact k-photon-loss Kraus family on one truncated mode."""
    if not (0.0 < eta <= 1.0):
        raise ConfigError(f"eta must lie in (0, 1], got {eta}")
    ops = []
    for k in range(dim):
        kmat = np.zeros((dim, dim))
        if eta == 1.0:
            if k == 0:
                np.fill_diagonal(kmat, 1.0)
            ops.append(kmat)
            continue
        c = _loss_coefficients(dim, eta, k)
        kmat[np.arange(dim - k), np.arange(k, dim)] = c
        ops.append(kmat)
    return ops


def _damp_mode(t: np.ndarray, eta: float, d: int, modes: int, mode: int) -> np.ndarray:
    """Single-mode loss over one (ket, bra) axis pair of the state tensor."""
    out = np.zeros_like(t)
    for k in range(d):
        c = _loss_coefficients(d, eta, k)
        w = c[:, None] * c[None, :]
        if modes == 1:
            out[: d - k, : d - k] += w * t[k:, k:]
        elif mode == 0:
            out[: d - k, :, : d - k, :] += w[:, None, :, None] * t[k:, :, k:, :]
        else:
            out[:, : d - k, :, : d - k] += w[None, :, None, :] * t[:, k:, :, k:]
    return out


def amplitude_damp(rho: FockDensity | FockState, eta: float,
                   sensing_mode_only: bool = False) -> FockDensity:
    """Photon loss with transmission eta, by default on every mode.

    ``sensing_mode_only`` restricts the channel to mode a, matching the
    single-mode master-equation solution behind the closed-form fringe law.
    """
    if not (0.0 < eta <= 1.0):
        raise ConfigError(f"eta must lie in (0, 1], got {eta}")
    m, modes, cutoff = _as_matrix(rho)
    if eta == 1.0:
        return FockDensity(modes=modes, cutoff=cutoff, matrix=m.copy())
    d = cutoff + 1
    if modes == 1:
        return FockDensity(modes=1, cutoff=cutoff, matrix=_damp_mode(m, eta, d, 1, 0))
    t = _damp_mode(m.reshape(d, d, d, d), eta, d, 2, 0)
    if not sensing_mode_only:
        t = _damp_mode(t, eta, d, 2, 1)
    return FockDensity(modes=2, cutoff=cutoff, matrix=t.reshape(d * d, d * d))


def phase_damp(rho: FockDensity | FockState, gamma: float,
               sensing_mode_only: bool = False) -> FockDensity:
    """Coherence decay rho_nm -> exp(-gamma (n-m)^2) rho_nm per damped mode."""
    if gamma < 0.0:
        raise ConfigError(f"gamma must be >= 0, got {gamma}")
    m, modes, cutoff = _as_matrix(rho)
    if gamma == 0.0:
        return FockDensity(modes=modes, cutoff=cutoff, matrix=m.copy())
    nums = mode_numbers(modes, cutoff)
    expo = (nums[0][:, None] - nums[0][None, :]).astype(float) ** 2
    if modes == 2 and not sensing_mode_only:
        expo = expo + (nums[1][:, None] - nums[1][None, :]).astype(float) ** 2
    return FockDensity(modes=modes, cutoff=cutoff, matrix=m * np.exp(-gamma * expo))


def differential_phase_damp(rho: FockDensity | FockState, eps: float) -> FockDensity:
    """Correlated two-mode dephasing with generator n_a - n_b.

    Coherences decay as exp(-eps dL^2 / 2) with dL the generator-eigenvalue
    difference, so the NOON coherence (dL = 2N) picks up exp(-2 eps N^2).
    """
    if eps < 0.0:
        raise ConfigError(f"eps must be >= 0, got {eps}")
    m, modes, cutoff = _as_matrix(rho)
    if modes != 2:
        raise ConfigError("differential dephasing requires a two-mode state")
    na, nb = mode_numbers(2, cutoff)
    ell = (na - nb).astype(float)
    dl = ell[:, None] - ell[None, :]
    return FockDensity(modes=2, cutoff=cutoff, matrix=m * np.exp(-0.5 * eps * dl**2))


def apply_noise(rho: FockDensity, noise: NoiseParams,
                sensing_mode_only: bool = False) -> FockDensity:
    out = amplitude_damp(rho, noise.eta, sensing_mode_only=sensing_mode_only)
    return phase_damp(out, noise.gamma, sensing_mode_only=sensing_mode_only)


def effective_visibility(beta: float, n: int, noise: NoiseParams,
                         hbar_omega0: float = 1.0) -> float:
    """Closed-form degraded contrast eta^(N/2) exp(-gamma N^2) V(beta)."""
    v = visibility(ModelParams(beta=beta, x=0.0, n_photons=max(int(n), 1),
                               hbar_omega0=hbar_omega0))
    return noise.eta ** (n / 2.0) * math.exp(-noise.gamma * n**2) * v


def noon_pipeline_visibility(beta: float, n: int, noise: NoiseParams,
                             hbar_omega0: float = 1.0, n_sweep: int = 24) -> float:
    """Fringe contrast of the full Kraus pipeline; oracle for the closed form.

    Sweeps the dispersive phase over a full fringe period, extracts the
    operational (P_max - P_min)/(P_max + P_min) contrast from the
    NOON-sector bright-port fringe of the encoded state, and applies the
    uniform factor that sensing-arm loss and dephasing leave on the swept
    coherence.  Loss drains the NOON-sector populations as well, so the
    contrast shrinkage lives in the coherence ratio, not in the raw lossy
    fringe.
    """
    probe = make_noon(n)
    d = probe.dim
    ia, ib = n * d, n
    xs = np.linspace(0.0, 2.0 * math.pi / n, 2 * n_sweep + 1)
    bright, ratios = [], []
    for x in xs:
        enc = thermal_phase_encode(probe.to_density(), beta, hbar_omega0, x)
        pops = enc.matrix[ia, ia].real + enc.matrix[ib, ib].real
        coh = enc.matrix[ia, ib]
        bright.append(pops / 2.0 + coh.real)
        noisy = apply_noise(enc, noise, sensing_mode_only=True)
        if abs(coh) > 1e-12:
            ratios.append(noisy.matrix[ia, ib] / coh)
    fringe = np.asarray(bright)
    v_ideal = (fringe.max() - fringe.min()) / (fringe.max() + fringe.min())
    ratios = np.asarray(ratios)
    if np.ptp(ratios.real) > 1e-10 or np.abs(ratios.imag).max() > 1e-10:
        raise ConfigError("coherence damping factor is not uniform across the sweep")
    return float(ratios.real.mean()) * float(v_ideal)


@dataclass(frozen=True)
class SLDPair:
    """Symmetric logarithmic derivatives for theta = (beta, x) at one point."""

    l_beta: np.ndarray
    l_x: np.ndarray
    eigen_floor: float


def _sld_from_derivative(drho: np.ndarray, lam: np.ndarray, vec: np.ndarray,
                         floor: float) -> np.ndarray:
    m = vec.conj().T @ drho @ vec
    s = lam[:, None] + lam[None, :]
    keep = s > floor
    l_eig = np.where(keep, 2.0 * m / np.where(keep, s, 1.0), 0.0)
    l = vec @ l_eig @ vec.conj().T
    return 0.5 * (l + l.conj().T)


def sld_pair(rho_fn: Callable[[float, float], np.ndarray], at: tuple[float, float],
             step: float = 1e-4, eigen_floor: float | None = None) -> SLDPair:
    """SLDs of a (beta, x)-parameterized density family via central differences.

    ``eigen_floor`` defaults to 1e-10 times the largest eigenvalue;
    eigenvalue pairs below it are projected out of the Lyapunov inversion.
    Raises DegenerateSupportError when the retained eigenspace carries less
    than 1 - 1e-6 of the state.
    """
    if step <= 0:
        raise ConfigError("finite-difference step must be > 0")
    beta, x = at
    rho0 = np.asarray(rho_fn(beta, x))
    d_beta = (np.asarray(rho_fn(beta + step, x)) - np.asarray(rho_fn(beta - step, x))) / (2 * step)
    d_x = (np.asarray(rho_fn(beta, x + step)) - np.asarray(rho_fn(beta, x - step))) / (2 * step)
    lam, vec = np.linalg.eigh(rho0)
    floor = 1e-10 * float(lam.max()) if eigen_floor is None else eigen_floor
    retained = lam[lam > floor]
    if retained.sum() < 1.0 - 1e-6:
        raise DegenerateSupportError(
            f"retained support carries {retained.sum():.9f} < 1 - 1e-6 of the state"
        )
    return SLDPair(
        l_beta=_sld_from_derivative(d_beta, lam, vec, floor),
        l_x=_sld_from_derivative(d_x, lam, vec, floor),
        eigen_floor=floor,
    )


def qfim_numeric(slds: SLDPair, rho: np.ndarray | FockDensity) -> FisherMatrix:
    """Q_ab = Re Tr[rho (L_a L_b + L_b L_a)] / 2 as a 2x2 Fisher matrix."""
    r = rho.matrix if isinstance(rho, FockDensity) else np.asarray(rho)
    lb, lx = slds.l_beta, slds.l_x
    q_bb = float(np.trace(r @ lb @ lb).real)
    q_xx = float(np.trace(r @ lx @ lx).real)
    q_bx = float(0.5 * np.trace(r @ (lb @ lx + lx @ lb)).real)
    return FisherMatrix(f_bb=q_bb, f_xx=q_xx, f_bx=q_bx)


def incompatibility(slds: SLDPair, rho: np.ndarray | FockDensity) -> float:
    """Statistical incompatibility (1/2)|Tr(rho [L_beta, L_x])| >= 0."""
    r = rho.matrix if isinstance(rho, FockDensity) else np.asarray(rho)
    comm = slds.l_beta @ slds.l_x - slds.l_x @ slds.l_beta
    return float(0.5 * abs(np.trace(r @ comm)))


def probe_family(probe: FockState | FockDensity, noise: NoiseParams,
                 hbar_omega0: float = 1.0, sensing_mode_only: bool = False,
                 phase_scale: float = FRINGE_PHASE_SCALE) -> Callable[[float, float], np.ndarray]:
    """(beta, x) -> density matrix: encode, then loss, then dephasing.

    The phase argument is scaled by ``phase_scale`` (2 by default) so the
    family's fringes match the published cos(2Nx) convention.
    """
    base = probe.to_density() if isinstance(probe, FockState) else probe

    def rho_fn(beta: float, x: float) -> np.ndarray:
        enc = thermal_phase_encode(base, beta, hbar_omega0, phase_scale * x)
        return apply_noise(enc, noise, sensing_mode_only=sensing_mode_only).matrix

    return rho_fn


def circuit_output_family(n_photons: int = 1, hbar_omega0: float = 1.0
                          ) -> Callable[[float, float], np.ndarray]:
    """Diagonal two-outcome family diag(P0, PN) of the measured circuit qubit."""
    from .analytic import output_probabilities

    def rho_fn(beta: float, x: float) -> np.ndarray:
        probs = output_probabilities(ModelParams(beta=beta, x=x, n_photons=n_photons,
                                                 hbar_omega0=hbar_omega0))
        return np.diag([probs.p0, probs.pN]).astype(complex)

    return rho_fn
