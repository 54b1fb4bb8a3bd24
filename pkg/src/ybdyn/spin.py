"""Spin-1/2 operators on two sites, basis (|00>, |01>, |10>, |11>) with |0> = spin up."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import I2, I4

SZ = np.diag([0.5, -0.5]).astype(complex)
SP = np.array([[0, 1], [0, 0]], dtype=complex)
SM = np.array([[0, 0], [1, 0]], dtype=complex)
SX = 0.5 * (SP + SM)
SY = -0.5j * (SP - SM)


@dataclass(frozen=True)
class SpinOperatorSet:
    sz1: np.ndarray
    sz2: np.ndarray
    sp1: np.ndarray
    sp2: np.ndarray
    sm1: np.ndarray
    sm2: np.ndarray
    identity: np.ndarray


def spin_ops() -> SpinOperatorSet:
    def site1(op):
        return np.kron(op, I2)

    def site2(op):
        return np.kron(I2, op)

    return SpinOperatorSet(
        sz1=site1(SZ), sz2=site2(SZ),
        sp1=site1(SP), sp2=site2(SP),
        sm1=site1(SM), sm2=site2(SM),
        identity=I4.copy(),
    )


OPS = spin_ops()
