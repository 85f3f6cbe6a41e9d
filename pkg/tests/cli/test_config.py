import math

import pytest

from contnorm.cli.config import load_config, parse_config
from contnorm.errors import ConfigError
from contnorm.integrators.wave_samples import Parity
from contnorm.potentials.gaussian import GaussianPotential
from contnorm.potentials.square_well import SquareWellPotential

MINIMAL = """
potential:
  kind: square-well
  V0: 1.0
  a: 1.0
k_grid:
  min: 0.5
  max: 2.0
  count: 4
"""


def test_minimal_document_gets_defaults():
    """
    Everything but the potential and the k-grid has a default.
    """
    config = parse_config(MINIMAL)
    assert config.solver.step == 1e-3
    assert config.solver.method == "numerov"
    assert config.potential.epsilon_v == 1e-12
    assert config.parity == "both"
    assert config.mass == 1.0
    assert config.workers == 1
    assert config.verify.delta is None
    assert config.verify.completeness is None
    assert config.output.format == "csv"


def test_minimal_document_builds_objects():
    config = parse_config(MINIMAL)
    potential = config.build_potential()
    assert isinstance(potential, SquareWellPotential)
    assert potential.params() == {"V0": 1.0, "a": 1.0}
    assert config.k_grid.values() == [0.5, 1.0, 1.5, 2.0]
    assert config.parities() == [Parity.EVEN, Parity.ODD]
    solver = config.solver_config()
    assert (solver.mass, solver.step, solver.method) == (1.0, 1e-3, "numerov")


def test_negative_k_min_names_the_field():
    text = MINIMAL.replace("min: 0.5", "min: -1")
    with pytest.raises(ConfigError) as excinfo:
        parse_config(text)
    assert "k_grid.min" in str(excinfo.value)


def test_reversed_k_range():
    text = MINIMAL.replace("max: 2.0", "max: 0.1")
    with pytest.raises(ConfigError) as excinfo:
        parse_config(text)
    assert "k_grid" in str(excinfo.value)


def test_unknown_kind():
    text = MINIMAL.replace("square-well", "coulomb")
    with pytest.raises(ConfigError) as excinfo:
        parse_config(text)
    message = str(excinfo.value)
    assert "potential.kind" in message
    assert "unknown potential kind 'coulomb'" in message


def test_missing_parameter():
    text = MINIMAL.replace("  a: 1.0\n", "")
    with pytest.raises(ConfigError) as excinfo:
        parse_config(text)
    assert "requires parameter(s): a" in str(excinfo.value)


def test_parameter_of_another_kind():
    text = MINIMAL.replace("  a: 1.0\n", "  a: 1.0\n  w: 2.0\n")
    with pytest.raises(ConfigError) as excinfo:
        parse_config(text)
    assert "does not take parameter(s): w" in str(excinfo.value)


def test_invalid_potential_value():
    text = MINIMAL.replace("a: 1.0", "a: -1.0")
    with pytest.raises(ConfigError) as excinfo:
        parse_config(text)
    assert str(excinfo.value).startswith("potential:")


def test_gaussian_support_follows_epsilon():
    """
    An explicit epsilon_v reaches the potential and sets its support.
    """
    text = """
potential: {kind: gaussian, V0: 1.0, w: 1.0, epsilon_v: 1.0e-10}
k_grid: {min: 1.0, max: 1.0}
"""
    potential = parse_config(text).build_potential()
    assert isinstance(potential, GaussianPotential)
    assert math.isclose(potential.support_edge(), math.sqrt(2.0 * math.log(1e10)), rel_tol=1e-14)


def test_verification_blocks():
    text = MINIMAL + """
verify:
  delta: {k0: 1.0, sigma: 0.05, L: 200}
  completeness: {x: 0.7, y: 0.7, k_max: 60, sigma_x: 0.1}
"""
    config = parse_config(text)
    assert config.verify.delta.window == 200.0
    assert config.verify.delta.parity == "even"
    assert config.verify.delta.tolerance == 0.02
    assert config.verify.completeness.tolerance == 0.05


def test_unknown_keys_are_rejected():
    with pytest.raises(ConfigError) as excinfo:
        parse_config(MINIMAL + "sovler: {step: 1.0e-4}\n")
    assert "sovler" in str(excinfo.value)


@pytest.mark.parametrize("text", ["", "- just\n- a list\n", "potential: [unclosed\n"])
def test_malformed_documents(text):
    with pytest.raises(ConfigError):
        parse_config(text)


def test_unknown_method():
    with pytest.raises(ConfigError) as excinfo:
        parse_config(MINIMAL + "solver: {method: euler}\n")
    assert "solver.method" in str(excinfo.value)


def test_single_parity_selection():
    config = parse_config(MINIMAL + "parity: odd\n")
    assert config.parities() == [Parity.ODD]


def test_load_config(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text(MINIMAL, encoding="utf-8")
    assert load_config(path).k_grid.count == 4
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.yaml")
