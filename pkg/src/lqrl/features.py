"""Quadratic feature maps and the linear value/Q parameterizations.

The value features are phi(x) = [1; vec(x x')] (column-stacking vec), so a
parameter theta = (theta0, Theta1) represents V(x; theta) = theta0 + x'Theta1 x.
The Q features use z = [x; u] the same way.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .model import symmetrize


class Transition(NamedTuple):
    """One sampled (x, u, x') step."""

    x: np.ndarray
    u: np.ndarray
    x_next: np.ndarray


def vec(M: np.ndarray) -> np.ndarray:
    """Column-stacking vectorization."""
    return np.asarray(M, dtype=float).flatten(order="F")


def unvec(v: np.ndarray, n: int) -> np.ndarray:
    return np.asarray(v, dtype=float).reshape((n, n), order="F")


def features(x) -> np.ndarray:
    """phi(x) = [1; vec(x x')], length 1 + n^2."""
    x = np.asarray(x, dtype=float).reshape(-1)
    return np.concatenate(([1.0], vec(np.outer(x, x))))


def q_features(x, u) -> np.ndarray:
    """psi(x, u) = [1; vec(z z')] with z = [x; u], length 1 + (n+d)^2."""
    x = np.asarray(x, dtype=float).reshape(-1)
    u = np.asarray(u, dtype=float).reshape(-1)
    z = np.concatenate([x, u])
    return np.concatenate(([1.0], vec(np.outer(z, z))))


@dataclass(frozen=True)
class ValueParams:
    """Parameters (theta0, Theta1) of V(x) = theta0 + x'Theta1 x."""

    theta0: float
    Theta1: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "theta0", float(self.theta0))
        object.__setattr__(self, "Theta1", np.atleast_2d(np.asarray(self.Theta1, dtype=float)))

    @property
    def n(self) -> int:
        return self.Theta1.shape[0]

    def value(self, x) -> float:
        x = np.asarray(x, dtype=float).reshape(-1)
        return float(self.theta0 + x @ self.Theta1 @ x)

    def to_vec(self) -> np.ndarray:
        return np.concatenate(([self.theta0], vec(self.Theta1)))

    @classmethod
    def from_vec(cls, v: np.ndarray, n: int) -> "ValueParams":
        return cls(theta0=float(v[0]), Theta1=unvec(v[1:], n))

    def norm(self) -> float:
        return float(np.linalg.norm(self.to_vec()))

    def symmetrized(self) -> "ValueParams":
        return ValueParams(self.theta0, symmetrize(self.Theta1))


@dataclass(frozen=True)
class QParams:
    """Parameters of Q(x,u) = Theta0 + z'[Theta11 Theta12; Theta21 Theta22]z."""

    Theta0: float
    Theta11: np.ndarray
    Theta12: np.ndarray
    Theta22: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "Theta0", float(self.Theta0))
        for name in ("Theta11", "Theta12", "Theta22"):
            object.__setattr__(self, name, np.atleast_2d(np.asarray(getattr(self, name), dtype=float)))

    @property
    def n(self) -> int:
        return self.Theta11.shape[0]

    @property
    def d(self) -> int:
        return self.Theta22.shape[0]

    @property
    def Theta21(self) -> np.ndarray:
        return self.Theta12.T

    def block(self) -> np.ndarray:
        """Full symmetric (n+d) x (n+d) quadratic-form matrix."""
        top = np.hstack([self.Theta11, self.Theta12])
        bottom = np.hstack([self.Theta12.T, self.Theta22])
        return np.vstack([top, bottom])

    @classmethod
    def from_block(cls, Theta0: float, block: np.ndarray, n: int) -> "QParams":
        block = symmetrize(block)
        return cls(Theta0=Theta0, Theta11=block[:n, :n], Theta12=block[:n, n:],
                   Theta22=block[n:, n:])

    def value(self, x, u) -> float:
        x = np.asarray(x, dtype=float).reshape(-1)
        u = np.asarray(u, dtype=float).reshape(-1)
        z = np.concatenate([x, u])
        return float(self.Theta0 + z @ self.block() @ z)

    def to_vec(self) -> np.ndarray:
        return np.concatenate(([self.Theta0], vec(self.block())))

    @classmethod
    def from_vec(cls, v: np.ndarray, n: int, d: int) -> "QParams":
        m = n + d
        return cls.from_block(float(v[0]), unvec(v[1:], m), n)

    def norm(self) -> float:
        return float(np.linalg.norm(self.to_vec()))

    def distance(self, other: "QParams") -> float:
        return float(np.linalg.norm(self.to_vec() - other.to_vec()))
