"""
Shared fixtures: the bundled specs, seeded randomness and file locations
"""
from pathlib import Path

import pytest
from dotenv import load_dotenv

load_dotenv()

from src.algebra import AlgebraSpec  # noqa: E402
from src.lattice import Sublattice  # noqa: E402
from src.scalars import GammaElement  # noqa: E402
from src.utils import get_rng  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
SCENARIOS = ROOT / "scenarios"
GOLDEN = Path(__file__).resolve().parent / "golden"


def free(*exponents: int, modulus: int = 1) -> GammaElement:
    return GammaElement(modulus, 0, tuple(exponents))


@pytest.fixture
def rng():
    return get_rng()


@pytest.fixture
def plane() -> AlgebraSpec:
    """Generic quantum plane: x_1 x_2 = t x_2 x_1"""
    return AlgebraSpec.build(2, 1, 1, {(0, 1): free(1)})


@pytest.fixture
def cyclotomic_plane() -> AlgebraSpec:
    """x_1 x_2 = zeta_3 x_2 x_1; the center is spanned by x_1^3 and x_2^3"""
    return AlgebraSpec.build(2, 3, 0, {(0, 1): GammaElement(3, 1, ())})


@pytest.fixture
def complement_spec() -> AlgebraSpec:
    """Rank 3 with g_12 = t^2, g_13 = g_23 = t"""
    return AlgebraSpec.build(3, 1, 1, {(0, 1): free(2), (0, 2): free(1), (1, 2): free(1)})


@pytest.fixture
def axis_1() -> Sublattice:
    return Sublattice.from_generators([(1, 0)], 2)


@pytest.fixture
def scenarios_dir() -> Path:
    return SCENARIOS


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN
