"""Pure-numpy gate kernels.

Reference implementation of the hot loops; `_kernels_cy` is the compiled
twin with identical signatures and identical floating-point arithmetic.
All functions mutate ``amps`` (a contiguous complex128 array of length 2**k)
in place.  Qubit ``q`` corresponds to bit ``q`` of the basis index.
"""

import math

import numpy as np

IMPL = "python"

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


def hadamard_inplace(amps: np.ndarray, q: int) -> None:
    low = 1 << q
    view = amps.reshape(-1, 2, low)
    a = view[:, 0, :].copy()
    b = view[:, 1, :].copy()
    view[:, 0, :] = (a + b) * _INV_SQRT2
    view[:, 1, :] = (a - b) * _INV_SQRT2


def cnot_inplace(amps: np.ndarray, control: int, target: int) -> None:
    idx = np.arange(len(amps))
    sel = idx[((idx >> control) & 1 == 1) & ((idx >> target) & 1 == 0)]
    partner = sel | (1 << target)
    tmp = amps[sel].copy()
    amps[sel] = amps[partner]
    amps[partner] = tmp


def flip_oracle_inplace(amps: np.ndarray, phase_mask: int, out_qubit: int) -> None:
    """XOR the masked-parity bit of each basis index into ``out_qubit``.

    ``phase_mask`` must not include the output qubit's bit.
    """
    idx = np.arange(len(amps))
    par = np.zeros(len(amps), dtype=bool)
    mask = phase_mask
    while mask:
        bit = mask & -mask
        par ^= (idx & bit) != 0
        mask ^= bit
    sel = idx[par & ((idx >> out_qubit) & 1 == 0)]
    partner = sel | (1 << out_qubit)
    tmp = amps[sel].copy()
    amps[sel] = amps[partner]
    amps[partner] = tmp
