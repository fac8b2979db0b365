"""Quaternion arithmetic on (w, x, y, z) coefficient tuples.

Pairs (u, v) in H x H are flattened to 8 reals with u first; the pair inner
product Re(conj(a) u) + Re(conj(b) v) then coincides with the Euclidean dot
product of the flattened vectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["Quaternion", "qmul", "qconj", "pair_dot", "ONE", "I", "J", "K"]


@dataclass(frozen=True)
class Quaternion:
    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_array(cls, a) -> "Quaternion":
        w, x, y, z = np.asarray(a, dtype=float)
        return cls(w, x, y, z)

    def as_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z])

    @property
    def real(self) -> float:
        return self.w

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self) -> float:
        return self.w**2 + self.x**2 + self.y**2 + self.z**2

    def norm(self) -> float:
        return np.sqrt(self.norm2())

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return qmul(self, other)
        return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)

    def __rmul__(self, other):
        # scalar * quaternion
        return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)


def qmul(a: Quaternion, b: Quaternion) -> Quaternion:
    return Quaternion(
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    )


def qconj(a: Quaternion) -> Quaternion:
    return a.conj()


def pair_dot(a: Quaternion, b: Quaternion, u: Quaternion, v: Quaternion) -> float:
    """Re(conj(a) u + conj(b) v), the Euclidean dot on flattened pairs."""
    return (qmul(qconj(a), u) + qmul(qconj(b), v)).real


ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)
