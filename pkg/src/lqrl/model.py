"""LQR problem instance, policies and stability diagnostics.

The plant is x_{t+1} = A x_t + B u_t + w_t with stage cost x'Sx + u'Ru and
Gaussian policy u = Kx + eta, eta ~ N(0, sigma^2 I).  Absorbing the policy
noise into the dynamics gives the effective noise covariance
D_omega_tilde = sigma^2 B B' + D_omega.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, NotPositiveDefinite, NotStable, RhoBarTooSmall

# Tolerance on strict spectral-radius inequalities when classifying policies.
FEASIBILITY_TOL = 1e-10
# Relative tolerance for positive-definiteness checks.
PD_TOL = 1e-12


class Feasibility(enum.Enum):
    STABLE = "Stable"
    FINITE_COST = "FiniteCost"
    INFEASIBLE = "Infeasible"


def _as_matrix(x, name: str) -> np.ndarray:
    m = np.atleast_2d(np.asarray(x, dtype=float))
    if m.ndim != 2:
        raise DimensionMismatch(f"{name} must be a matrix, got ndim={m.ndim}")
    return m


def spectral_radius(M) -> float:
    """Largest absolute eigenvalue of a square matrix."""
    M = _as_matrix(M, "M")
    if M.shape[0] != M.shape[1]:
        raise DimensionMismatch(f"spectral radius needs a square matrix, got {M.shape}")
    if M.shape[0] == 0:
        return 0.0
    return float(np.max(np.abs(np.linalg.eigvals(M))))


def is_symmetric(M: np.ndarray, tol: float = 1e-10) -> bool:
    return bool(np.all(np.abs(M - M.T) <= tol * (1.0 + np.max(np.abs(M)))))


def symmetrize(M: np.ndarray) -> np.ndarray:
    return 0.5 * (M + M.T)


def min_eigenvalue(M: np.ndarray) -> float:
    """Smallest eigenvalue of a symmetric matrix."""
    return float(np.linalg.eigvalsh(symmetrize(M))[0])


def is_positive_definite(M: np.ndarray) -> bool:
    """PD check: smallest eigenvalue > PD_TOL * (1 + largest eigenvalue)."""
    if not is_symmetric(M):
        return False
    w = np.linalg.eigvalsh(symmetrize(M))
    return bool(w[0] > PD_TOL * (1.0 + abs(w[-1])))


def psd_sqrt(M: np.ndarray) -> np.ndarray:
    """Symmetric square root of a symmetric PSD matrix (eigendecomposition)."""
    w, V = np.linalg.eigh(symmetrize(M))
    w = np.clip(w, 0.0, None)
    return (V * np.sqrt(w)) @ V.T


@dataclass(frozen=True)
class LqrModel:
    """System matrices, cost matrices, discount and noise parameters."""

    A: np.ndarray
    B: np.ndarray
    S: np.ndarray
    R: np.ndarray
    gamma: float
    sigma: float
    D_omega: np.ndarray

    def __post_init__(self):
        for name in ("A", "B", "S", "R", "D_omega"):
            object.__setattr__(self, name, _as_matrix(getattr(self, name), name))
        object.__setattr__(self, "gamma", float(self.gamma))
        object.__setattr__(self, "sigma", float(self.sigma))

    @property
    def n(self) -> int:
        return self.A.shape[0]

    @property
    def d(self) -> int:
        return self.B.shape[1]

    @property
    def D_omega_tilde(self) -> np.ndarray:
        """Effective process-noise covariance sigma^2 B B' + D_omega."""
        return symmetrize(self.sigma**2 * (self.B @ self.B.T) + self.D_omega)

    def closed_loop(self, K) -> np.ndarray:
        return self.A + self.B @ _as_matrix(K, "K")

    def stage_cost_matrix(self, K) -> np.ndarray:
        K = _as_matrix(K, "K")
        return symmetrize(self.S + K.T @ self.R @ K)

    def cost(self, x: np.ndarray, u: np.ndarray) -> float:
        x = np.asarray(x, dtype=float).reshape(-1)
        u = np.asarray(u, dtype=float).reshape(-1)
        return float(x @ self.S @ x + u @ self.R @ u)

    def to_dict(self) -> dict:
        return {
            "A": self.A.tolist(),
            "B": self.B.tolist(),
            "S": self.S.tolist(),
            "R": self.R.tolist(),
            "gamma": self.gamma,
            "sigma": self.sigma,
            "D_omega": self.D_omega.tolist(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "LqrModel":
        keys = {"A", "B", "S", "R", "gamma", "sigma", "D_omega"}
        missing = keys - set(data)
        if missing:
            raise DimensionMismatch(f"model document missing keys: {sorted(missing)}")
        return cls(A=np.array(data["A"], dtype=float),
                   B=np.array(data["B"], dtype=float),
                   S=np.array(data["S"], dtype=float),
                   R=np.array(data["R"], dtype=float),
                   gamma=float(data["gamma"]),
                   sigma=float(data["sigma"]),
                   D_omega=np.array(data["D_omega"], dtype=float))

    @classmethod
    def from_json(cls, text: str) -> "LqrModel":
        return cls.from_dict(json.loads(text))


# Reference instance: scalar plant with nilpotent test policy K = -0.5, so the
# closed-loop series truncates after one term and everything downstream has a
# hand-checkable value.
def ref1() -> LqrModel:
    return LqrModel(A=[[0.5]], B=[[1.0]], S=[[1.0]], R=[[1.0]],
                    gamma=0.9, sigma=0.1, D_omega=[[0.04]])


REF1_K_MINUS = np.array([[-0.5]])


@dataclass(frozen=True)
class ValidationReport:
    checks: dict
    D_omega_tilde: np.ndarray | None

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def validate(model: LqrModel) -> ValidationReport:
    """Check all model invariants; raises on the first hard failure.

    Returns the full per-invariant report (with the derived effective noise
    covariance) when everything passes.
    """
    checks: dict[str, bool] = {}

    n = model.A.shape[0]
    checks["A_square"] = model.A.shape == (n, n)
    checks["B_rows"] = model.B.shape[0] == n
    checks["S_shape"] = model.S.shape == (n, n)
    checks["R_shape"] = model.R.shape == (model.B.shape[1], model.B.shape[1])
    checks["D_omega_shape"] = model.D_omega.shape == (n, n)
    if not all(checks.values()):
        bad = [k for k, v in checks.items() if not v]
        raise DimensionMismatch(f"inconsistent dimensions: {bad}")

    for name, mat in (("S", model.S), ("R", model.R), ("D_omega", model.D_omega)):
        checks[f"{name}_pd"] = is_positive_definite(mat)
        if not checks[f"{name}_pd"]:
            raise NotPositiveDefinite(name)

    checks["gamma_range"] = 0.0 < model.gamma < 1.0
    checks["sigma_positive"] = model.sigma > 0.0
    if not checks["gamma_range"]:
        raise NotPositiveDefinite("gamma", f"gamma={model.gamma} outside (0,1)")
    if not checks["sigma_positive"]:
        raise NotPositiveDefinite("sigma", f"sigma={model.sigma} must be > 0")

    D_tilde = model.D_omega_tilde
    checks["D_omega_tilde_pd"] = is_positive_definite(D_tilde)
    if not checks["D_omega_tilde_pd"]:
        raise NotPositiveDefinite("D_omega_tilde")

    return ValidationReport(checks=checks, D_omega_tilde=D_tilde)


def classify_policy(model: LqrModel, K) -> Feasibility:
    """Stable / FiniteCost / Infeasible by spectral radius of A + BK.

    The cost is finite iff rho(A+BK) < 1/sqrt(gamma); stability is the
    stricter rho < 1.  Strict inequalities carry a margin FEASIBILITY_TOL.
    """
    K = _as_matrix(K, "K")
    if K.shape != (model.d, model.n):
        raise DimensionMismatch(f"K must be {model.d}x{model.n}, got {K.shape}")
    rho = spectral_radius(model.closed_loop(K))
    if rho < 1.0 - FEASIBILITY_TOL:
        return Feasibility.STABLE
    if rho < 1.0 / np.sqrt(model.gamma) - FEASIBILITY_TOL:
        return Feasibility.FINITE_COST
    return Feasibility.INFEASIBLE


@dataclass(frozen=True)
class Policy:
    """A gain matrix with its cached feasibility class."""

    K: np.ndarray
    feasibility: Feasibility

    @classmethod
    def of(cls, model: LqrModel, K) -> "Policy":
        K = _as_matrix(K, "K")
        return cls(K=K, feasibility=classify_policy(model, K))

    @property
    def stable(self) -> bool:
        return self.feasibility is Feasibility.STABLE

    @property
    def finite_cost(self) -> bool:
        return self.feasibility in (Feasibility.STABLE, Feasibility.FINITE_COST)


@dataclass(frozen=True)
class StabilityCertificate:
    """Decay certificate ||(A+BK)^k||_2 <= Gamma * rho_bar^k for k <= k_max."""

    rho_bar: float
    Gamma: float
    k_max: int = field(default=200)


def stability_certificate(model: LqrModel, K, rho_bar: float,
                          k_max: int = 200) -> StabilityCertificate:
    """Certificate constant Gamma = max_k ||(A+BK)^k||_2 / rho_bar^k.

    Requires a stable K and rho(A+BK) < rho_bar < 1; the returned bound then
    holds for every k in 0..k_max by construction.
    """
    M = model.closed_loop(K)
    rho = spectral_radius(M)
    if rho >= 1.0 - FEASIBILITY_TOL:
        raise NotStable(f"rho(A+BK)={rho:.6g} >= 1")
    if not (rho < rho_bar < 1.0):
        raise RhoBarTooSmall(f"need rho(A+BK)={rho:.6g} < rho_bar={rho_bar} < 1")
    gamma_c = 1.0
    Mk = np.eye(model.n)
    scale = 1.0
    for _ in range(k_max):
        Mk = Mk @ M
        scale *= rho_bar
        gamma_c = max(gamma_c, float(np.linalg.norm(Mk, 2)) / scale)
    return StabilityCertificate(rho_bar=float(rho_bar), Gamma=gamma_c, k_max=k_max)
