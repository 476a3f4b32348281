import numpy as np
import pytest

from weakfvm import (
    FurtherModifiedBurgers,
    ModifiedBurgers,
    PressurelessGas,
    get_model,
    numeric_rank,
)
from weakfvm.errors import InvalidInputError, VacuumStateError


@pytest.fixture
def pressureless():
    return PressurelessGas()


@pytest.fixture
def modburgers():
    return ModifiedBurgers()


@pytest.fixture
def further(params=None):
    return FurtherModifiedBurgers()


class TestFlux:
    def test_pressureless(self, pressureless):
        np.testing.assert_allclose(
            pressureless.flux(np.array([1.0, 1.5])), [1.5, 2.25]
        )

    def test_modburgers_zero_u(self, modburgers):
        np.testing.assert_allclose(modburgers.flux(np.array([0.0, 3.0])), [0.0, 0.0])

    def test_further_at_ones(self, further):
        np.testing.assert_allclose(further.flux(np.ones(4)), [0.5, 1.0, 2.0, 4.0])

    def test_dimension_mismatch(self, modburgers):
        with pytest.raises(InvalidInputError):
            modburgers.flux(np.ones(3))

    def test_batched_evaluation(self, further):
        U = np.tile(np.ones(4), (7, 1))
        assert further.flux(U).shape == (7, 4)


class TestJacobian:
    def test_pressureless_at_u2(self, pressureless):
        np.testing.assert_allclose(
            pressureless.jacobian(np.array([1.0, 2.0])), [[0.0, 1.0], [-4.0, 4.0]]
        )

    def test_modburgers_degenerate_point_is_diagonal(self, modburgers):
        np.testing.assert_allclose(
            modburgers.jacobian(np.array([3.0, 0.0])), [[3.0, 0.0], [0.0, 3.0]]
        )

    def test_further_at_ones(self, further):
        np.testing.assert_allclose(
            further.jacobian(np.ones(4)),
            [[1, 0, 0, 0], [1, 1, 0, 0], [1, 2, 1, 0], [1, 3, 3, 1]],
        )

    @pytest.mark.parametrize("name", ["pressureless", "modburgers", "further-modburgers"])
    def test_matches_finite_difference_of_flux(self, name):
        rng = np.random.default_rng(21)
        model = get_model(name)
        h = 1e-4
        for _ in range(10):
            if name == "pressureless":
                rho, u = rng.uniform(0.5, 3.0), rng.uniform(-2.0, 2.0)
                U = np.array([rho, rho * u])
            else:
                U = rng.uniform(0.3, 2.0, model.dim) * rng.choice([-1, 1], model.dim)
            A = model.jacobian(U)
            A_fd = np.empty_like(A)
            for k in range(model.dim):
                e = np.zeros(model.dim)
                e[k] = h
                A_fd[:, k] = (model.flux(U + e) - model.flux(U - e)) / (2 * h)
            assert np.abs(A - A_fd).max() <= 1e-6 * (1.0 + np.abs(A).max())

    @pytest.mark.parametrize("name", ["pressureless", "modburgers", "further-modburgers"])
    def test_single_true_eigenvector(self, name):
        # rank(A - u I) = dim - 1 away from the degenerate manifolds
        rng = np.random.default_rng(5)
        model = get_model(name)
        for _ in range(20):
            if name == "pressureless":
                rho, u = rng.uniform(0.2, 4.0), rng.uniform(-3.0, 3.0)
                U = np.array([rho, rho * u])
            else:
                U = rng.uniform(0.2, 3.0, model.dim) * rng.choice([-1, 1], model.dim)
            A = model.jacobian(U)
            lam = float(model.eigenvalue(U))
            assert numeric_rank(A - lam * np.eye(model.dim)) == model.dim - 1


class TestAverageState:
    def test_pressureless_reference_pair(self, pressureless):
        avg = pressureless.average_state(np.array([1.0, 1.5]), np.array([0.2, 0.0]))
        assert avg.lambda_bar == pytest.approx(1.0364745084375788, rel=1e-12)
        assert avg.aux[0] == pytest.approx(np.sqrt(0.2), rel=1e-12)

    def test_equal_state_consistency_is_exact(self, pressureless):
        U = np.array([0.3, 0.3 * 1.7])
        avg = pressureless.average_state(U, U)
        assert avg.lambda_bar == float(pressureless.eigenvalue(U))
        assert avg.aux[0] == pytest.approx(0.3, rel=1e-15)

    def test_modburgers_sonic_pair(self, modburgers):
        avg = modburgers.average_state(np.array([-2.0, 1.0]), np.array([4.0, -2.0]))
        assert avg.lambda_bar == 1.0
        assert avg.aux == ()

    def test_vacuum_rejected_without_clamp(self, pressureless):
        with pytest.raises(VacuumStateError):
            pressureless.average_state(np.array([0.0, 0.0]), np.array([1.0, 1.0]))

    def test_vacuum_clamp_counts(self):
        model = PressurelessGas()
        model.average_state(np.array([1e-15, 0.0]), np.array([1.0, 1.0]), clamp=True)
        assert model.vacuum_clamp_count == 1

    def test_average_between_velocities(self, pressureless):
        rng = np.random.default_rng(13)
        for _ in range(200):
            rho = rng.uniform(1e-3, 10.0, 2)
            u = rng.uniform(-5.0, 5.0, 2)
            avg = pressureless.average_state(
                np.array([rho[0], rho[0] * u[0]]), np.array([rho[1], rho[1] * u[1]])
            )
            assert min(u) - 1e-12 <= avg.lambda_bar <= max(u) + 1e-12


class TestRoeProperty:
    def test_delta_shock_pair_residual(self, pressureless):
        res = pressureless.roe_property_residual(
            np.array([1.0, 1.5]), np.array([0.2, 0.0])
        )
        assert res <= 1e-12

    @pytest.mark.parametrize("name", ["pressureless", "modburgers", "further-modburgers"])
    def test_equal_states_zero(self, name):
        model = get_model(name)
        U = np.arange(1.0, 1.0 + model.dim)
        assert model.roe_property_residual(U, U) == 0.0

    def test_pressureless_random_pairs(self, pressureless):
        rng = np.random.default_rng(17)
        for _ in range(1000):
            rho = rng.uniform(1e-3, 10.0, 2)
            u = rng.uniform(-5.0, 5.0, 2)
            UL = np.array([rho[0], rho[0] * u[0]])
            UR = np.array([rho[1], rho[1] * u[1]])
            dF = np.abs(pressureless.flux(UR) - pressureless.flux(UL)).max()
            assert pressureless.roe_property_residual(UL, UR) <= 1e-10 * (1.0 + dF)

    def test_modburgers_first_component_exact(self, modburgers):
        rng = np.random.default_rng(19)
        for _ in range(200):
            UL = rng.uniform(-4.0, 4.0, 2)
            UR = rng.uniform(-4.0, 4.0, 2)
            assert modburgers.roe_property_residual(UL, UR) <= 1e-12


class TestInterfaceLambda:
    def test_matches_scalar_average(self, pressureless):
        rng = np.random.default_rng(29)
        rho = rng.uniform(0.1, 5.0, (8, 2))
        u = rng.uniform(-3.0, 3.0, (8, 2))
        UL = np.stack([rho[:, 0], rho[:, 0] * u[:, 0]], axis=-1)
        UR = np.stack([rho[:, 1], rho[:, 1] * u[:, 1]], axis=-1)
        lams = pressureless.interface_lambda(UL, UR)
        for k in range(8):
            assert lams[k] == pytest.approx(
                pressureless.average_state(UL[k], UR[k]).lambda_bar, rel=1e-14
            )


def test_primitive_names_and_values():
    model = get_model("pressureless")
    prim = model.primitive(np.array([[2.0, 1.0]]))
    np.testing.assert_allclose(prim, [[2.0, 0.5]])
    assert model.primitive_names == ("rho", "u")
    assert get_model("further-modburgers").primitive_names == ("u", "v", "w", "z")


def test_unknown_model_rejected():
    with pytest.raises(InvalidInputError):
        get_model("euler")
