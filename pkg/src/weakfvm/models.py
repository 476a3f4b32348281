"""The three conservation-law systems behind a single model abstraction.

Each model bundles dimension, flux, Jacobian, the shared (repeated)
eigenvalue and the interface average that makes DF = Abar DU hold across a
jump. All evaluation routines are vectorized over a leading axis so grids
of states go through in one call; state arrays have the component axis last.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError, VacuumStateError

VACUUM_FLOOR = 1e-12


@dataclass(frozen=True)
class AveragedState:
    """Interface average: the shared averaged eigenvalue and any auxiliary
    averages (mean density for the pressureless system)."""

    lambda_bar: float
    aux: tuple[float, ...] = ()


class SystemModel:
    """Base contract: flux, jacobian, eigenvalue, average_state."""

    name: str = ""
    dim: int = 0
    primitive_names: tuple[str, ...] = ()

    def _check(self, U) -> np.ndarray:
        U = np.asarray(U, dtype=float)
        if U.shape[-1] != self.dim:
            raise InvalidInputError(
                f"{self.name}: expected {self.dim} components, got {U.shape[-1]}"
            )
        if not np.all(np.isfinite(U)):
            raise InvalidInputError(f"{self.name}: non-finite state components")
        return U

    def flux(self, U):
        raise NotImplementedError

    def jacobian(self, U):
        raise NotImplementedError

    def eigenvalue(self, U):
        """The shared wave speed u, vectorized over leading axes."""
        raise NotImplementedError

    def average_state(self, UL, UR) -> AveragedState:
        raise NotImplementedError

    def interface_lambda(self, UL, UR):
        """Vectorized averaged eigenvalue for arrays of state pairs."""
        raise NotImplementedError

    def roe_property_residual(self, UL, UR) -> float:
        """Max-norm defect of DF = Abar DU on the components the interface
        average constrains (all of them for pressureless, the first for the
        Burgers systems, whose remaining rows need averages the scheme never
        uses)."""
        raise NotImplementedError

    def primitive(self, cells) -> np.ndarray:
        """Plotted/exported variables per cell (identity except pressureless)."""
        raise NotImplementedError


class PressurelessGas(SystemModel):
    """rho_t + (rho u)_x = 0, (rho u)_t + (rho u^2)_x = 0.

    Conserved state (rho, rho u); double eigenvalue u with the single true
    eigenvector (1, u)^t, hence genuinely weakly hyperbolic.
    """

    name = "pressureless"
    dim = 2
    primitive_names = ("rho", "u")

    def __init__(self):
        # Diagnostics only: number of density clampings applied in averages
        # and primitive extraction near vacuum.
        self.vacuum_clamp_count = 0

    def _velocity(self, U):
        rho = U[..., 0]
        clamped = np.maximum(rho, VACUUM_FLOOR)
        n_clamped = int(np.count_nonzero(rho < VACUUM_FLOOR))
        if n_clamped:
            self.vacuum_clamp_count += n_clamped
        return U[..., 1] / clamped

    def flux(self, U):
        U = self._check(U)
        m = U[..., 1]
        return np.stack([m, m * self._velocity(U)], axis=-1)

    def jacobian(self, U):
        U = self._check(U)
        u = float(self._velocity(U))
        return np.array([[0.0, 1.0], [-u * u, 2.0 * u]])

    def eigenvalue(self, U):
        U = self._check(U)
        return self._velocity(U)

    def average_state(self, UL, UR, clamp: bool = False) -> AveragedState:
        UL = self._check(UL)
        UR = self._check(UR)
        rho_l, rho_r = float(UL[0]), float(UR[0])
        if clamp:
            if rho_l < VACUUM_FLOOR or rho_r < VACUUM_FLOOR:
                self.vacuum_clamp_count += 1
            rho_l = max(rho_l, VACUUM_FLOOR)
            rho_r = max(rho_r, VACUUM_FLOOR)
        elif rho_l <= 0.0 or rho_r <= 0.0:
            raise VacuumStateError(
                f"nonpositive density in average: rho_L={rho_l}, rho_R={rho_r}"
            )
        u_l = float(UL[1]) / rho_l
        u_r = float(UR[1]) / rho_r
        sl, sr = np.sqrt(rho_l), np.sqrt(rho_r)
        u_bar = u_l if u_l == u_r else (sl * u_l + sr * u_r) / (sl + sr)
        return AveragedState(u_bar, (float(sl * sr),))

    def interface_lambda(self, UL, UR):
        rho_l = np.maximum(UL[..., 0], VACUUM_FLOOR)
        rho_r = np.maximum(UR[..., 0], VACUUM_FLOOR)
        n_clamped = int(np.count_nonzero(UL[..., 0] < VACUUM_FLOOR)) + int(
            np.count_nonzero(UR[..., 0] < VACUUM_FLOOR)
        )
        if n_clamped:
            self.vacuum_clamp_count += n_clamped
        u_l = UL[..., 1] / rho_l
        u_r = UR[..., 1] / rho_r
        sl, sr = np.sqrt(rho_l), np.sqrt(rho_r)
        return np.where(u_l == u_r, u_l, (sl * u_l + sr * u_r) / (sl + sr))

    def jacobian_at_lambda(self, u_bar: float) -> np.ndarray:
        """The linearized Jacobian written in terms of the averaged speed."""
        return np.array([[0.0, 1.0], [-u_bar * u_bar, 2.0 * u_bar]])

    def roe_property_residual(self, UL, UR) -> float:
        avg = self.average_state(UL, UR)
        A_bar = self.jacobian_at_lambda(avg.lambda_bar)
        dF = self.flux(UR) - self.flux(UL)
        dU = np.asarray(UR, dtype=float) - np.asarray(UL, dtype=float)
        return float(np.abs(dF - A_bar @ dU).max())

    def primitive(self, cells) -> np.ndarray:
        cells = self._check(cells)
        return np.stack([cells[..., 0], self._velocity(cells)], axis=-1)


class _BurgersFamily(SystemModel):
    """Shared pieces of the derivative-augmented Burgers systems: the wave
    speed is the first component and its average is the arithmetic mean."""

    def eigenvalue(self, U):
        U = self._check(U)
        return U[..., 0]

    def average_state(self, UL, UR) -> AveragedState:
        UL = self._check(UL)
        UR = self._check(UR)
        u_l, u_r = float(UL[0]), float(UR[0])
        return AveragedState(u_l if u_l == u_r else 0.5 * (u_l + u_r))

    def interface_lambda(self, UL, UR):
        u_l = UL[..., 0]
        u_r = UR[..., 0]
        return np.where(u_l == u_r, u_l, 0.5 * (u_l + u_r))

    def roe_property_residual(self, UL, UR) -> float:
        # Only the u-equation constrains the average; the remaining rows of
        # the linearization are never needed by the interface flux.
        avg = self.average_state(UL, UR)
        u_l, u_r = float(np.asarray(UL)[0]), float(np.asarray(UR)[0])
        return abs(0.5 * (u_r * u_r - u_l * u_l) - avg.lambda_bar * (u_r - u_l))

    def primitive(self, cells) -> np.ndarray:
        return self._check(cells).copy()


class ModifiedBurgers(_BurgersFamily):
    """u_t + (u^2/2)_x = 0 augmented with v = u_x: v_t + (u v)_x = 0."""

    name = "modburgers"
    dim = 2
    primitive_names = ("u", "v")

    def flux(self, U):
        U = self._check(U)
        u, v = U[..., 0], U[..., 1]
        return np.stack([0.5 * u * u, u * v], axis=-1)

    def jacobian(self, U):
        U = self._check(U)
        u, v = float(U[0]), float(U[1])
        return np.array([[u, 0.0], [v, u]])


class FurtherModifiedBurgers(_BurgersFamily):
    """Two more x-derivatives of the modified Burgers system (w = v_x,
    z = w_x), giving the 4x4 system with fluxes
    (u^2/2, u v, v^2 + u w, 3 v w + u z)."""

    name = "further-modburgers"
    dim = 4
    primitive_names = ("u", "v", "w", "z")

    def flux(self, U):
        U = self._check(U)
        u, v, w, z = (U[..., i] for i in range(4))
        return np.stack(
            [0.5 * u * u, u * v, v * v + u * w, 3.0 * v * w + u * z], axis=-1
        )

    def jacobian(self, U):
        U = self._check(U)
        u, v, w, z = (float(c) for c in U)
        return np.array(
            [
                [u, 0.0, 0.0, 0.0],
                [v, u, 0.0, 0.0],
                [w, 2.0 * v, u, 0.0],
                [z, 3.0 * w, 3.0 * v, u],
            ]
        )


_MODEL_CLASSES = {
    cls.name: cls for cls in (PressurelessGas, ModifiedBurgers, FurtherModifiedBurgers)
}


def get_model(name: str) -> SystemModel:
    """Fresh model instance by name (pressureless, modburgers, further-modburgers)."""
    try:
        return _MODEL_CLASSES[name]()
    except KeyError:
        raise InvalidInputError(
            f"unknown model {name!r}; valid: {sorted(_MODEL_CLASSES)}"
        ) from None
