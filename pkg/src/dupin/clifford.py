"""Clifford systems: families E_1, ..., E_{m-1} of skew-symmetric orthogonal
complex structures on R^l that pairwise anticommute.

Existence is governed by the Radon-Hurwitz function: writing
l = 2^{4a+b} (odd), 0 <= b <= 3, set rho(l) = 8a + 2^b. A family of m - 1
anticommuting complex structures on R^l exists iff m <= rho(l).

Construction is fully deterministic: left-multiplication matrices of the
Cayley-Dickson algebras (complex, quaternion, octonion) give the base
families up to seven structures, one doubling step produces eight on R^16,
Bott periodicity (16-fold dimension jump via the symmetric product
omega = A_1 ... A_8) extends past eight, and block replication fills in
composite l. Rebuilding with the same (m, l) yields bit-identical matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError, RadonHurwitzError

__all__ = [
    "CliffordSystem",
    "SystemReport",
    "radon_hurwitz",
    "min_dimension",
    "build_system",
    "verify_system",
]


def radon_hurwitz(l: int) -> int:
    """rho(l) = 8a + 2^b for l = 2^{4a+b} odd, 0 <= b <= 3."""
    if l < 1:
        raise ArgumentError("dimension must be positive")
    c = 0
    while l % 2 == 0:
        l //= 2
        c += 1
    a, b = divmod(c, 4)
    return 8 * a + 2**b


def min_dimension(k: int) -> int:
    """Smallest l carrying k pairwise anticommuting complex structures."""
    if k < 0:
        raise ArgumentError("negative structure count")
    d = 1
    while radon_hurwitz(d) < k + 1:
        d *= 2
    return d


# ---------------------------------------------------------------------------
# Cayley-Dickson algebras and their left-multiplication matrices


def _cd_conj(x: np.ndarray) -> np.ndarray:
    out = -x
    out[0] = x[0]
    return out


def _cd_mul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    n = x.size
    if n == 1:
        return x * y
    h = n // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    return np.concatenate(
        [
            _cd_mul(a, c) - _cd_mul(_cd_conj(d), b),
            _cd_mul(d, a) + _cd_mul(b, _cd_conj(c)),
        ]
    )


def _left_mult_structures(dim: int) -> list[np.ndarray]:
    """Left multiplication by the imaginary basis units of the CD algebra."""
    eye = np.eye(dim)
    mats = []
    for i in range(1, dim):
        cols = [_cd_mul(eye[i], eye[j]) for j in range(dim)]
        mats.append(np.stack(cols, axis=1))
    return mats


def _double(mats: list[np.ndarray]) -> list[np.ndarray]:
    """k structures on R^d -> k+1 structures on R^{2d}."""
    d = mats[0].shape[0] if mats else 1
    dpm = np.diag([1.0, -1.0])
    j2 = np.array([[0.0, -1.0], [1.0, 0.0]])
    out = [np.kron(dpm, a) for a in mats]
    out.append(np.kron(j2, np.eye(d)))
    return out


def _base_family(k: int) -> list[np.ndarray]:
    """k anticommuting structures on R^{min_dimension(k)}."""
    if k == 0:
        return []
    if k <= 7:
        dim = min_dimension(k)
        return _left_mult_structures(dim)[:k]
    if k == 8:
        return _double(_left_mult_structures(8))
    # Bott step: 8 on R^16 plus k-8 on R^e gives k on R^{16 e}
    eights = _double(_left_mult_structures(8))
    omega = eights[0]
    for a in eights[1:]:
        omega = omega @ a
    rest = _base_family(k - 8)
    e = rest[0].shape[0] if rest else 1
    out = [np.kron(a, np.eye(e)) for a in eights]
    out.extend(np.kron(omega, b) for b in rest)
    return out


@dataclass(frozen=True)
class CliffordSystem:
    """An (m, l) Clifford family: m - 1 structures acting on R^l."""

    m: int
    l: int
    mats: tuple

    def __iter__(self):
        return iter(self.mats)

    def __len__(self):
        return len(self.mats)

    def as_array(self) -> np.ndarray:
        if not self.mats:
            return np.zeros((0, self.l, self.l))
        return np.stack(self.mats)


def build_system(m: int, l: int) -> CliffordSystem:
    """Construct the deterministic (m, l) system, or raise RadonHurwitzError."""
    if m < 1 or l < 1:
        raise ArgumentError("need m >= 1 and l >= 1")
    rho = radon_hurwitz(l)
    if m > rho:
        raise RadonHurwitzError(
            f"no Clifford system with m={m} on R^{l}: "
            f"m must not exceed rho({l}) = {rho}"
        )
    k = m - 1
    base = _base_family(k)
    d = min_dimension(k)
    reps = l // d
    mats = tuple(np.kron(np.eye(reps), a) for a in base)
    sys = CliffordSystem(m, l, mats)
    rep = verify_system(sys)
    if rep.max_violation > 1e-12:
        raise AssertionError(f"construction self-check failed: {rep.max_violation}")
    return sys


@dataclass(frozen=True)
class SystemReport:
    """Spectral-norm violations of the defining identities."""

    square: float        # max ||E_i^2 + I||
    skew: float          # max ||E_i + E_i^T||
    orthogonal: float    # max ||E_i^T E_i - I||
    anticommute: float   # max ||E_i E_j + E_j E_i||, i < j

    @property
    def max_violation(self) -> float:
        return max(self.square, self.skew, self.orthogonal, self.anticommute)


def verify_system(sys: CliffordSystem) -> SystemReport:
    eye = np.eye(sys.l)
    sq = sk = orth = anti = 0.0
    for e in sys.mats:
        if e.shape != (sys.l, sys.l):
            raise ArgumentError("matrix size does not match the declared l")
        sq = max(sq, np.linalg.norm(e @ e + eye, 2))
        sk = max(sk, np.linalg.norm(e + e.T, 2))
        orth = max(orth, np.linalg.norm(e.T @ e - eye, 2))
    for i in range(len(sys.mats)):
        for j in range(i + 1, len(sys.mats)):
            anti = max(
                anti, np.linalg.norm(sys.mats[i] @ sys.mats[j] + sys.mats[j] @ sys.mats[i], 2)
            )
    return SystemReport(sq, sk, orth, anti)
