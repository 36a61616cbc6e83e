"""Singlet-pair measurement scenario.

Measuring one spin of a singlet along any axis fixes the partner's value to
the opposite sign.  Before the measurement the reduced state of the partner
is maximally mixed; afterwards it is the pure state along the opposite
outcome, and a follow-up measurement along the same axis is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..states import QuantumState
from .spin import reduced_first, singlet_vector, spin_eigenvector


@dataclass(frozen=True)
class EPRResult:
    direction: np.ndarray
    outcome: float
    partner_value: float
    pre_state: QuantumState        # reduced state of particle A before measurement
    post_state: QuantumState       # reduced state of particle A afterwards
    joint_post: QuantumState       # two-particle state after the B measurement


def epr_scenario(direction, outcome: float) -> EPRResult:
    """Measure particle B of a singlet along ``direction``.

    ``outcome`` must be +1/2 or -1/2.  The B-side projector collapses the
    joint state; the partner value for A along the same axis is exactly
    ``-outcome``.
    """
    d = np.asarray(direction, dtype=float)
    d = d / np.linalg.norm(d)
    if not np.isclose(abs(outcome), 0.5):
        raise ValueError("outcome must be +1/2 or -1/2")
    sign = 1 if outcome > 0 else -1

    psi = singlet_vector()
    pre_joint = QuantumState.from_vector(psi)
    b_vec = spin_eigenvector(d, sign)
    proj_b = np.kron(np.eye(2, dtype=complex), np.outer(b_vec, b_vec.conj()))
    collapsed = proj_b @ psi
    collapsed = collapsed / np.linalg.norm(collapsed)
    joint_post = QuantumState.from_vector(collapsed)

    return EPRResult(
        direction=d,
        outcome=float(outcome),
        partner_value=-float(outcome),
        pre_state=reduced_first(pre_joint),
        post_state=reduced_first(joint_post),
        joint_post=joint_post,
    )
