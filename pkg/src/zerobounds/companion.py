"""Companion matrices, their 2x2 block partition, and Cartesian parts.

For a monic degree-n polynomial p the companion matrix C(p) has first row
(-a_n, -a_{n-1}, ..., -a_1) and ones on the subdiagonal; its eigenvalues are
exactly the zeros of p. For even degree 2n the matrix is partitioned into
four n x n blocks A11, A12, A21, A22, and the Hermitian parts
P = (C + C*)/2, Q = (C - C*)/(2i) are carried both blockwise and globally.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegreeTooSmallError, InternalConsistencyError, OddDegreeError
from .polynomial import Polynomial

__all__ = ["BlockCompanion", "build_companion", "build_block_companion", "real_part_charpoly"]


def build_companion(p: Polynomial) -> np.ndarray:
    """The degree x degree companion matrix of p."""
    n = p.degree
    if n < 2:
        raise DegreeTooSmallError("companion matrix needs degree >= 2")
    matrix = np.zeros((n, n), dtype=complex)
    matrix[0, :] = [-p.coefficient(n - j) for j in range(n)]
    for i in range(1, n):
        matrix[i, i - 1] = 1.0
    return matrix


@dataclass(frozen=True)
class BlockCompanion:
    """Companion matrix of an even-degree polynomial in 2x2 block form.

    n is the half-degree; each block is n x n. The p/q blocks are the
    blockwise Cartesian parts, which for this partition coincide with the
    global slices of (C +- C*)/2 — that equality is verified at build time.
    zero_constant_term flags a_1 = 0: the formulas remain evaluable, but the
    partition's standing hypothesis is not met, so reports should note it.
    """

    n: int
    companion: np.ndarray
    a11: np.ndarray
    a12: np.ndarray
    a21: np.ndarray
    a22: np.ndarray
    p11: np.ndarray
    p12: np.ndarray
    p21: np.ndarray
    p22: np.ndarray
    q11: np.ndarray
    q12: np.ndarray
    q21: np.ndarray
    q22: np.ndarray
    zero_constant_term: bool


def build_block_companion(q: Polynomial) -> BlockCompanion:
    """Partition C(q) for even degree 2n >= 4 and attach Cartesian parts."""
    degree = q.degree
    if degree % 2 != 0:
        raise OddDegreeError(f"block partition needs even degree, got {degree}")
    if degree < 4:
        raise DegreeTooSmallError("block partition needs degree >= 4")
    n = degree // 2

    full = build_companion(q)
    a11, a12 = full[:n, :n], full[:n, n:]
    a21, a22 = full[n:, :n], full[n:, n:]

    # blockwise Cartesian parts of the partition
    p11 = (a11 + a11.conj().T) / 2
    p22 = (a22 + a22.conj().T) / 2
    p12 = (a12 + a21.conj().T) / 2
    p21 = p12.conj().T
    q11 = (a11 - a11.conj().T) / 2j
    q22 = (a22 - a22.conj().T) / 2j
    q12 = (a12 - a21.conj().T) / 2j
    q21 = q12.conj().T

    # the same blocks must fall out of the global Cartesian decomposition;
    # a mismatch would mean the partition arithmetic is wrong
    p_global = (full + full.conj().T) / 2
    q_global = (full - full.conj().T) / 2j
    scale = 1.0 + float(np.max(np.abs(full)))
    for block, slice_ in (
        (p11, p_global[:n, :n]),
        (p12, p_global[:n, n:]),
        (p21, p_global[n:, :n]),
        (p22, p_global[n:, n:]),
        (q11, q_global[:n, :n]),
        (q12, q_global[:n, n:]),
        (q21, q_global[n:, :n]),
        (q22, q_global[n:, n:]),
    ):
        if float(np.max(np.abs(block - slice_))) > 1e-14 * scale:
            raise InternalConsistencyError(
                "blockwise Cartesian parts disagree with the global decomposition"
            )

    return BlockCompanion(
        n=n,
        companion=full,
        a11=a11, a12=a12, a21=a21, a22=a22,
        p11=p11, p12=p12, p21=p21, p22=p22,
        q11=q11, q12=q12, q21=q21, q22=q22,
        zero_constant_term=(q.coefficient(1) == 0),
    )


def real_part_charpoly(p: Polynomial, z: complex) -> complex:
    """Characteristic polynomial of Re C(p) = (C(p) + C(p)*)/2, evaluated at z.

    Closed form:

        (z + Re(a_n)) * prod_{j=1}^{n-1} (z - cos(j pi/n))
          - sum_{j=1}^{n-1} [prod_{k != j} (z - cos(k pi/n))] * |v_j|^2,

    with v_j = (1/sqrt(2n)) * [(1 - conj(a_{n-1})) sin(j pi/n)
                               - sum_{k=2}^{n-1} conj(a_{n-k}) sin(k j pi/n)].
    """
    n = p.degree
    if n < 3:
        raise DegreeTooSmallError("real-part characteristic polynomial needs degree >= 3")
    a = p.lower
    cosines = [np.cos(j * np.pi / n) for j in range(1, n)]

    def v(j: int) -> complex:
        total = (1 - np.conj(a[n - 2])) * np.sin(j * np.pi / n)
        for k in range(2, n):
            total -= np.conj(a[n - k - 1]) * np.sin(k * j * np.pi / n)
        return total / np.sqrt(2 * n)

    value = (z + a[n - 1].real) * np.prod([z - c for c in cosines])
    for j in range(1, n):
        partial = np.prod([z - cosines[k - 1] for k in range(1, n) if k != j])
        value -= partial * abs(v(j)) ** 2
    return complex(value)
