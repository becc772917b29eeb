"""Exact complex-amplitude state-vector engine.

Provides qubit registers and the three gates the protocol needs (Hadamard,
CNOT, bit-flip phase oracle), plus computational-basis measurement and GHZ
preparation.  Basis index bit ``j`` corresponds to qubit ``j``; qubit 0 is
the least significant bit, so the most significant qubit sits at the bottom
of the usual circuit drawing.

Gates mutate the state in place and return it, so calls can be chained.
Norms are preserved to better than 1e-12; measurement renormalizes the
surviving branch by exact division with the branch probability's square
root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _kernels
from .bits import validate_bits
from .errors import EngineError, SizeError

#: Largest register a single StateVector may hold.  2**26 complex doubles
#: is ~1 GiB, which bounds the joint-oracle backend.
MAX_QUBITS = 26

#: Absolute tolerance on amplitudes and norms.  Only +/- 1/sqrt(2**k)
#: values arise, so double precision leaves a wide margin.
ATOL = 1e-12


class StateVector:
    """Normalized amplitudes over ``num_qubits`` qubits.

    ``amps`` is the raw contiguous complex128 buffer of length
    ``2**num_qubits``; index ``i`` is the basis state whose bit ``j`` gives
    the value of qubit ``j``.
    """

    __slots__ = ("num_qubits", "amps")

    def __init__(self, num_qubits: int, amps: np.ndarray):
        if not 1 <= num_qubits <= MAX_QUBITS:
            raise SizeError(f"qubit count must be in [1, {MAX_QUBITS}], got {num_qubits}")
        amps = np.ascontiguousarray(amps, dtype=np.complex128)
        if amps.shape != (1 << num_qubits,):
            raise ValueError(
                f"need {1 << num_qubits} amplitudes for {num_qubits} qubits, got {amps.shape}"
            )
        if not np.isfinite(amps.view(np.float64)).all():
            raise ValueError("amplitudes must be finite")
        self.num_qubits = num_qubits
        self.amps = amps

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def copy(self) -> "StateVector":
        return StateVector(self.num_qubits, self.amps.copy())

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amps) ** 2

    def __repr__(self) -> str:
        return f"StateVector(num_qubits={self.num_qubits})"


@dataclass(frozen=True)
class MeasurementRecord:
    """Outcome of a computational-basis measurement.

    ``bits[i]`` is the sampled bit of the i-th measured qubit (argument
    order).  ``collapsed`` holds the renormalized remainder over the
    unmeasured qubits, reindexed from 0 in their original relative order,
    or ``None`` when every qubit was measured.
    """

    bits: str
    collapsed: Optional[StateVector]


def _check_index(state: StateVector, q: int) -> int:
    q = int(q)
    if not 0 <= q < state.num_qubits:
        raise ValueError(f"qubit index {q} out of range for {state.num_qubits} qubits")
    return q


def _check_indices(state: StateVector, qubits: Iterable[int]) -> list[int]:
    out = [_check_index(state, q) for q in qubits]
    if len(set(out)) != len(out):
        raise ValueError(f"duplicate qubit indices: {out}")
    return out


def zero_state(k: int) -> StateVector:
    """All-zeros basis state on ``k`` qubits."""
    if not 1 <= k <= MAX_QUBITS:
        raise SizeError(f"qubit count must be in [1, {MAX_QUBITS}], got {k}")
    amps = np.zeros(1 << k, dtype=np.complex128)
    amps[0] = 1.0
    return StateVector(k, amps)


def apply_hadamard(state: StateVector, q: int) -> StateVector:
    """Single-qubit Hadamard at ``q``."""
    _kernels.hadamard_inplace(state.amps, _check_index(state, q))
    return state


def apply_cnot(state: StateVector, control: int, target: int) -> StateVector:
    """Controlled-NOT: flips ``target`` on basis states whose ``control`` bit is 1."""
    control = _check_index(state, control)
    target = _check_index(state, target)
    if control == target:
        raise ValueError("control and target must differ")
    _kernels.cnot_inplace(state.amps, control, target)
    return state


def apply_hadamard_all(state: StateVector, qubits: Sequence[int]) -> StateVector:
    """Hadamard at each listed qubit; order-independent."""
    for q in _check_indices(state, qubits):
        _kernels.hadamard_inplace(state.amps, q)
    return state


def prepare_ghz(n: int) -> StateVector:
    """Maximally entangled n-qubit state (|0..0> + |1..1>)/sqrt(2).

    Built the standard way: Hadamard on qubit 0, then a CNOT chain up to
    the last qubit.
    """
    if n < 1:
        raise ValueError(f"player count must be >= 1, got {n}")
    state = zero_state(n)
    apply_hadamard(state, 0)
    for q in range(n - 1):
        apply_cnot(state, q, q + 1)
    return state


def apply_phase_oracle(
    state: StateVector, input_qubits: Sequence[int], output_qubit: int, secret_bits: str
) -> StateVector:
    """Bit-flip oracle: XORs the masked parity of the input register into the output qubit.

    ``input_qubits[j]`` carries bit ``j`` of the oracle argument and pairs
    with bit ``j`` of ``secret_bits`` (an MSB-first bit-string).  The flip
    form is exact; with the output qubit in the |-> state it acts as the
    diagonal phase (-1)**(secret . x) on the input register (phase
    kickback).
    """
    validate_bits(secret_bits)
    inputs = _check_indices(state, list(input_qubits) + [output_qubit])
    output_qubit = inputs.pop()
    m = len(secret_bits)
    if len(inputs) != m:
        raise ValueError(f"secret has {m} bits but {len(inputs)} input qubits given")
    phase_mask = 0
    for j, q in enumerate(inputs):
        if secret_bits[m - 1 - j] == "1":
            phase_mask |= 1 << q
    if phase_mask:
        _kernels.flip_oracle_inplace(state.amps, phase_mask, output_qubit)
    return state


def measure(
    state: StateVector, qubits: Sequence[int], rng: np.random.Generator
) -> MeasurementRecord:
    """Born-rule measurement of ``qubits``; deterministic given ``rng``.

    The unmeasured remainder is renormalized and returned in
    ``MeasurementRecord.collapsed``.
    """
    qubits = _check_indices(state, qubits)
    k = state.num_qubits
    t = len(qubits)
    if t == 0:
        return MeasurementRecord(bits="", collapsed=state)

    if t == k:
        probs = state.probabilities()
        index = _sample_index(probs, rng)
        bits = "".join(str((index >> q) & 1) for q in qubits)
        return MeasurementRecord(bits=bits, collapsed=None)

    # Move the measured qubits' axes to the front, argument order first.
    axes = [k - 1 - q for q in qubits]
    rest = [ax for ax in range(k) if ax not in axes]
    shaped = state.amps.reshape((2,) * k).transpose(axes + rest).reshape(1 << t, -1)
    marginal = np.einsum("ij,ij->i", shaped, shaped.conj()).real
    outcome = _sample_index(marginal, rng)
    branch_prob = float(marginal[outcome])
    if branch_prob <= 0.0:
        raise EngineError("measurement landed on a zero-probability branch")
    collapsed_amps = np.ascontiguousarray(shaped[outcome]) / math.sqrt(branch_prob)
    bits = format(outcome, f"0{t}b")
    return MeasurementRecord(bits=bits, collapsed=StateVector(k - t, collapsed_amps))


def project_qubit(state: StateVector, q: int, rng: np.random.Generator) -> int:
    """Measure qubit ``q`` in the computational basis but keep it in the register.

    Models an intercept-and-resend of a transiting qubit: the sampled basis
    state is forwarded in place of the original.  Returns the sampled bit.
    """
    q = _check_index(state, q)
    low = 1 << q
    view = state.amps.reshape(-1, 2, low)
    p0 = float(np.einsum("ij,ij->", view[:, 0, :], view[:, 0, :].conj()).real)
    p1 = float(np.einsum("ij,ij->", view[:, 1, :], view[:, 1, :].conj()).real)
    bit = 0 if rng.random() * (p0 + p1) < p0 else 1
    branch_prob = p1 if bit else p0
    if branch_prob <= 0.0:
        raise EngineError("projection landed on a zero-probability branch")
    view[:, 1 - bit, :] = 0.0
    state.amps /= math.sqrt(branch_prob)
    return bit


def _sample_index(weights: np.ndarray, rng: np.random.Generator) -> int:
    cum = np.cumsum(weights)
    total = float(cum[-1])
    if total <= 0.0:
        raise EngineError("state has zero total probability")
    draw = rng.random() * total
    index = int(np.searchsorted(cum, draw, side="right"))
    return min(index, len(weights) - 1)
