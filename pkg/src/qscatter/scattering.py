"""Probe-qubit trace estimation.

A single ancilla qubit prepended to the system register (wire 0, prepared in
|0>) is taken through a Hadamard, a controlled application of U, and a
closing Hadamard. Its polarization then carries Tr(U rho): the z component
holds the real part, and after a -pi/2 rotation of the transverse detection
frame the x component holds minus the imaginary part, so

    sigma_z - i * sigma_x == Tr(U rho)

exactly. Expectation values are computed from the evolved density matrix, so
no sampling noise enters.
"""

from dataclasses import dataclass

import numpy as np

from .circuits import GateOp, apply_sequence, pauli_expectation
from .errors import DimensionMismatchError, InvalidValueError
from .linalg import assert_density_matrix, assert_unitary, qubit_count

_FRAME_THETA = -np.pi / 2


@dataclass(frozen=True)
class ScatteringResult:
    """Probe polarization after one scattering run."""

    sigma_z: float
    sigma_x: float

    @property
    def trace_estimate(self) -> complex:
        return complex(self.sigma_z, -self.sigma_x)


def direct_trace(rho: np.ndarray, u: np.ndarray) -> complex:
    """Tr(U rho) evaluated without any circuit; the oracle side of the duality."""
    rho = assert_density_matrix(rho)
    u = assert_unitary(u)
    if rho.shape != u.shape:
        raise DimensionMismatchError(
            f"state dim {rho.shape[0]} does not match operator dim {u.shape[0]}"
        )
    return complex(np.trace(u @ rho))


def _probe_readout(joint: np.ndarray, gates: list[GateOp]) -> ScatteringResult:
    # The closing PhaseShift aligns the transverse detection axis so that the
    # x readout returns -Im Tr(U rho); it commutes with the z readout.
    seq = [GateOp("Hadamard", (0,))] + gates + [
        GateOp("Hadamard", (0,)),
        GateOp("PhaseShift", (0,), theta=_FRAME_THETA),
    ]
    final = apply_sequence(joint, seq)
    z = pauli_expectation(final, "z", 0)
    x = pauli_expectation(final, "x", 0)
    return ScatteringResult(sigma_z=z, sigma_x=x)


def scattering_circuit(rho: np.ndarray, u: np.ndarray) -> ScatteringResult:
    """Run the probe circuit with a dense controlled-U block."""
    rho = assert_density_matrix(rho)
    u = assert_unitary(u)
    if rho.shape != u.shape:
        raise DimensionMismatchError(
            f"state dim {rho.shape[0]} does not match operator dim {u.shape[0]}"
        )
    k = qubit_count(rho.shape[0])
    probe0 = np.zeros((2, 2), dtype=complex)
    probe0[0, 0] = 1.0
    joint = np.kron(probe0, rho)
    cu = GateOp("ControlledUnitary", tuple(range(k + 1)), unitary=u)
    return _probe_readout(joint, [cu])


def scattering_circuit_gates(
    rho: np.ndarray, gates, num_qubits: int
) -> ScatteringResult:
    """Run the probe circuit with the controlled block given as a gate list.

    ``gates`` act on ``num_qubits`` wires laid out as probe (wire 0), system
    (wires 1..k), then any work wires, which start in |0> and must be
    returned clean by the sequence.
    """
    rho = assert_density_matrix(rho)
    k = qubit_count(rho.shape[0])
    if num_qubits < k + 1:
        raise InvalidValueError(
            f"need at least {k + 1} wires for a {rho.shape[0]}-dim system, got {num_qubits}"
        )
    probe0 = np.zeros((2, 2), dtype=complex)
    probe0[0, 0] = 1.0
    joint = np.kron(probe0, rho)
    for _ in range(num_qubits - k - 1):
        joint = np.kron(joint, probe0)
    return _probe_readout(joint, list(gates))
