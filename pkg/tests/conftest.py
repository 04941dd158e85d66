import numpy as np
import pytest

import polcomp as pc


@pytest.fixture
def nu_quadratic():
    return pc.payoff_preset("quadratic")


@pytest.fixture
def two_type():
    """Reference instance: types at 0 and 1, equal shares."""
    return pc.VoterDistribution([0.0, 1.0], [0.5, 0.5], ["left", "right"])


@pytest.fixture
def three_type_symmetric():
    return pc.VoterDistribution([-1.0, 0.0, 1.0], [0.3, 0.4, 0.3])


@pytest.fixture
def two_type_2d():
    return pc.VoterDistribution([[0.0, 0.0], [1.0, 1.0]], [0.5, 0.5])


@pytest.fixture
def unit_shock():
    return pc.Shock(1.0)


@pytest.fixture
def nu_linear():
    """Risk-neutral boundary payoff, built directly (no concave microfoundation)."""
    return pc.ReducedPayoff(lambda s: np.asarray(s, dtype=float), provenance="direct[linear]")


@pytest.fixture
def nu_sqrt():
    return pc.ReducedPayoff(lambda s: np.sqrt(np.asarray(s, dtype=float)),
                            provenance="direct[sqrt]")
