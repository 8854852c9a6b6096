"""Exact density-matrix simulation of the four-qubit interferometer circuit.

Register layout (q0 is the most significant bit of the basis index):

    q0  ancilla that purifies the thermal sample state
    q1  two-level sample ("atom"), thermalized at inverse temperature beta
    q2  interferometer output mode; the only qubit that is measured
    q3  reference arm

Gate sequence (the N=1 instance of the interferometer):

    R(beta) on q0           thermal-weight rotation
    CNOT q0->q1             entangle ancilla and sample; tracing q0 leaves
                            the Gibbs mixture on q1
    X on q3                 load the single photon into the reference arm
    H on q2                 first beam splitter
    CNOT q2->q3             completes the NOON-encoded input (|01>+|10>)/sqrt(2)
    CU(2x) q1->q2           dispersive kick: diag(1, e^{-2ix}) on q2 when the
                            sample is excited
    CNOT q2->q3             second beam splitter (recombination) ...
    H on q2
    CNOT q2->q3             ... whose final CNOT dumps the which-port record
                            onto the reference arm, leaving q2 diagonal
    measure q2

The controlled phase carries the full 2Nx fringe argument so that the exact
output reproduces P0 = (1 + V cos(2Nx))/(1 + V) bit for bit; the trailing
CNOT makes the reduced state of q2 diagonal in the computational basis,
which is why plain computational readout is an optimal measurement here.

Shot sampling uses a counter-based Philox generator keyed by (seed, grid
indices), so grid sweeps are reproducible and embarrassingly parallel.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .analytic import FringeProbabilities, excited_population
from .errors import ConfigError

N_QUBITS = 4
MEASURED_QUBIT = 2

_H = np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2.0)
_X = np.array([[0.0, 1.0], [1.0, 0.0]])
_P0 = np.array([[1.0, 0.0], [0.0, 0.0]])
_P1 = np.array([[0.0, 0.0], [0.0, 1.0]])
_I2 = np.eye(2)


def thermal_rotation_matrix(beta: float, hbar_omega0: float = 1.0) -> np.ndarray:
    """Real rotation R(beta) with R|0> = sqrt(p_g)|0> + sqrt(p_e)|1>.

    p_g = 1/(1 + exp(-beta*hw0)) and p_e = 1 - p_g are the Gibbs weights of
    the two-level sample.
    """
    if not hbar_omega0 > 0:
        raise ConfigError(f"hbar_omega0 must be > 0, got {hbar_omega0}")
    pe = excited_population(beta, hbar_omega0)
    pg = 1.0 - pe
    a, b = np.sqrt(pg), np.sqrt(pe)
    return np.array([[a, -b], [b, a]])


def controlled_phase_matrix(phi: float) -> np.ndarray:
    """Local 2x2 phase gate diag(1, e^{-i phi}) applied to the target qubit."""
    return np.array([[1.0, 0.0], [0.0, np.exp(-1j * phi)]], dtype=complex)


@dataclass(frozen=True)
class GateOp:
    """One circuit element: a unitary on 1-2 qubits or the final measurement.

    kind: Hadamard | PauliX | CNOT | ThermalRotation | ControlledPhase | Measure
    qubits: target for 1q gates, (control, target) for 2q gates
    param: beta for ThermalRotation, phase for ControlledPhase
    """

    kind: str
    qubits: tuple[int, ...]
    param: float | None = None
    hbar_omega0: float = 1.0

    def __post_init__(self):
        if len(set(self.qubits)) != len(self.qubits):
            raise ConfigError(f"gate qubits must be distinct: {self.qubits}")
        if any(q < 0 or q >= N_QUBITS for q in self.qubits):
            raise ConfigError(f"gate qubits out of register range: {self.qubits}")

    def local_matrix(self) -> np.ndarray:
        if self.kind == "Hadamard":
            return _H
        if self.kind == "PauliX":
            return _X
        if self.kind == "ThermalRotation":
            return thermal_rotation_matrix(self.param, self.hbar_omega0)
        if self.kind == "ControlledPhase":
            return controlled_phase_matrix(self.param)
        if self.kind == "CNOT":
            return _X
        raise ConfigError(f"no unitary for gate kind {self.kind!r}")

    def full_matrix(self, n_qubits: int = N_QUBITS) -> np.ndarray:
        """Unitary on the whole register; q0 is the most significant bit."""
        if self.kind == "Measure":
            raise ConfigError("measurement has no unitary matrix")
        if self.kind in ("CNOT", "ControlledPhase"):
            control, target = self.qubits
            return _embed_controlled(_P0, _I2, control, target, n_qubits) + _embed_controlled(
                _P1, self.local_matrix().astype(complex), control, target, n_qubits
            )
        (target,) = self.qubits
        return _embed_single(self.local_matrix().astype(complex), target, n_qubits)


def _embed_single(u: np.ndarray, target: int, n_qubits: int) -> np.ndarray:
    out = np.eye(1, dtype=complex)
    for q in range(n_qubits):
        out = np.kron(out, u if q == target else _I2)
    return out


def _embed_controlled(proj: np.ndarray, u: np.ndarray, control: int, target: int,
                      n_qubits: int) -> np.ndarray:
    out = np.eye(1, dtype=complex)
    for q in range(n_qubits):
        if q == control:
            out = np.kron(out, proj)
        elif q == target:
            out = np.kron(out, u)
        else:
            out = np.kron(out, _I2)
    return out


def build_mzi_circuit(beta: float, x: float, hbar_omega0: float = 1.0) -> list[GateOp]:
    """Gate list of the interferometer circuit for parameters (beta, x)."""
    hw = hbar_omega0
    return [
        GateOp("ThermalRotation", (0,), param=beta, hbar_omega0=hw),
        GateOp("CNOT", (0, 1)),
        GateOp("PauliX", (3,)),
        GateOp("Hadamard", (2,)),
        GateOp("CNOT", (2, 3)),
        GateOp("ControlledPhase", (1, 2), param=2.0 * x),
        GateOp("CNOT", (2, 3)),
        GateOp("Hadamard", (2,)),
        GateOp("CNOT", (2, 3)),
        GateOp("Measure", (MEASURED_QUBIT,)),
    ]


@dataclass
class QubitRegister:
    """Dense density matrix over an n-qubit register (q0 = most significant)."""

    n_qubits: int = N_QUBITS
    state: np.ndarray = field(default=None)

    def __post_init__(self):
        if self.n_qubits > 8:
            raise ConfigError("register limited to 8 qubits (dense simulation)")
        dim = 2**self.n_qubits
        if self.state is None:
            rho = np.zeros((dim, dim), dtype=complex)
            rho[0, 0] = 1.0
            self.state = rho
        elif self.state.shape != (dim, dim):
            raise ConfigError(f"state must be {dim}x{dim}")

    def apply(self, gate: GateOp) -> None:
        u = gate.full_matrix(self.n_qubits)
        self.state = u @ self.state @ u.conj().T

    def reduced(self, keep: int) -> np.ndarray:
        """Partial trace onto a single qubit."""
        n = self.n_qubits
        t = self.state.reshape((2,) * (2 * n))
        # contract every ket index with its bra partner except `keep`
        ket = list(range(n))
        bra = list(range(n, 2 * n))
        for q in range(n):
            if q != keep:
                bra[q] = ket[q]
        out = np.einsum(t, ket + bra, [keep, n + keep])
        return out


def run_circuit(beta: float, x: float, hbar_omega0: float = 1.0) -> QubitRegister:
    """Evolve |0000><0000| through the full gate list (measurement excluded)."""
    reg = QubitRegister()
    for gate in build_mzi_circuit(beta, x, hbar_omega0):
        if gate.kind == "Measure":
            continue
        reg.apply(gate)
    return reg


def exact_probability(beta: float, x: float, hbar_omega0: float = 1.0) -> FringeProbabilities:
    """Exact two-outcome statistics of the measured qubit (no sampling).

    Traces out q0, q1 and q3 and reads the diagonal of q2's reduced state;
    agrees with the closed-form fringe law to machine precision.
    """
    reg = run_circuit(beta, x, hbar_omega0)
    rho2 = reg.reduced(MEASURED_QUBIT)
    return FringeProbabilities(p0=float(rho2[0, 0].real), pN=float(rho2[1, 1].real))


@dataclass(frozen=True)
class ShotRecord:
    """Counts of a mu-shot run at one grid point, with seed provenance."""

    n0: int
    n1: int
    mu: int
    seed: int
    beta: float
    x: float

    def __post_init__(self):
        if self.n0 + self.n1 != self.mu:
            raise ConfigError("shot counts must add up to mu")


def shot_rng(seed: int, beta_index: int = 0, x_index: int = 0) -> np.random.Generator:
    """Counter-based Philox stream keyed by (seed, grid indices)."""
    bits = np.random.Philox(key=np.uint64(seed),
                            counter=[np.uint64(beta_index), np.uint64(x_index), 0, 0])
    return np.random.Generator(bits)


def sample_shots(beta: float, x: float, mu: int, seed: int,
                 beta_index: int = 0, x_index: int = 0,
                 hbar_omega0: float = 1.0) -> ShotRecord:
    """Draw n0 ~ Binomial(mu, P0(beta, x)) from the exact circuit probability."""
    if mu < 1:
        raise ConfigError(f"mu must be >= 1, got {mu}")
    p = exact_probability(beta, x, hbar_omega0)
    rng = shot_rng(seed, beta_index, x_index)
    n0 = int(rng.binomial(mu, min(max(p.p0, 0.0), 1.0)))
    return ShotRecord(n0=n0, n1=mu - n0, mu=mu, seed=seed, beta=beta, x=x)
