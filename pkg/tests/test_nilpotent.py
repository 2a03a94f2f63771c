"""
Class-2 nilpotent groups, central characters and the reduced-module harness
"""
import pytest

from src.harness import theorem_b_harness
from src.models.convert import spec_to_file
from src.models.loaders import character_from_file, datum_from_file, generators_from_file, load
from src.models.schemas import Bounds, CharacterFile, DatumFile, GeneratorsFile
from src.nilpotent import (
    CentralCharacter,
    Class2Datum,
    group_commutator,
    h_inverse,
    h_multiply,
    is_abelian,
    reduce,
    subgroup_image,
)
from src.scalars import GammaElement
from src.utils import canonical_json
from src.utils.errors import InputFormatError, QTorusError, SpecMismatchError
from src.utils.sampling import random_vector


@pytest.fixture
def heisenberg() -> Class2Datum:
    """[h_1, h_2] = z"""
    return Class2Datum.build(2, 1, {(0, 1): [1]})


@pytest.fixture
def generic_character() -> CentralCharacter:
    return CentralCharacter.build([GammaElement(1, 0, (1,))], 1, 1)


@pytest.fixture
def cube_root_character() -> CentralCharacter:
    return CentralCharacter.build([GammaElement(3, 1, ())], 3, 0)


H1 = ((1, 0), (0,))
H2 = ((0, 1), (0,))
Z = ((0, 0), (1,))


# ============================================================================
# GROUP LAW
# ============================================================================

def test_heisenberg_products(heisenberg):
    assert h_multiply(heisenberg, H1, H2) == ((1, 1), (0,))
    assert h_multiply(heisenberg, H2, H1) == ((1, 1), (-1,))
    assert group_commutator(heisenberg, H1, H2) == (1,)
    assert group_commutator(heisenberg, H2, H1) == (-1,)


def test_commutator_matches_group_law(rng):
    """h k h^-1 k^-1 is central and equals the bilinear commutator"""
    datum = Class2Datum.build(3, 2, {(0, 1): [1, 0], (0, 2): [2, -1], (1, 2): [0, 3]})
    for _ in range(20):
        h = (random_vector(rng, 3), random_vector(rng, 2))
        k = (random_vector(rng, 3), random_vector(rng, 2))
        product = h_multiply(
            datum, h_multiply(datum, h_multiply(datum, h, k), h_inverse(datum, h)), h_inverse(datum, k)
        )
        assert product == ((0, 0, 0), group_commutator(datum, h, k))


def test_commutator_is_bilinear(rng):
    datum = Class2Datum.build(3, 1, {(0, 1): [1], (1, 2): [2]})
    for _ in range(20):
        h, k, l = ((random_vector(rng, 3), (0,)) for _ in range(3))
        kl = h_multiply(datum, k, l)
        expected = tuple(a + b for a, b in zip(group_commutator(datum, h, k), group_commutator(datum, h, l)))
        assert group_commutator(datum, h, kl) == expected


def test_inverse(heisenberg):
    h = ((2, -3), (5,))
    assert h_multiply(heisenberg, h, h_inverse(heisenberg, h)) == ((0, 0), (0,))


def test_is_abelian_and_image(heisenberg):
    assert is_abelian(heisenberg, [H1, Z])
    assert not is_abelian(heisenberg, [H1, H2])
    assert subgroup_image(heisenberg, [H1, Z]).rows == ((1, 0),)


def test_datum_rejects_bad_input():
    with pytest.raises(SpecMismatchError):
        Class2Datum.build(2, 1, {(1, 0): [1]})
    with pytest.raises(SpecMismatchError):
        Class2Datum.build(2, 1, {(0, 1): [1, 2]})
    with pytest.raises(SpecMismatchError):
        Class2Datum.build(2, 1, {}).check(((1, 0, 0), (0,)))


# ============================================================================
# REDUCTION
# ============================================================================

def test_reduce_heisenberg(heisenberg, generic_character, plane):
    assert reduce(heisenberg, generic_character) == plane


def test_reduce_matches_golden(scenarios_dir, golden_dir):
    datum = datum_from_file(load(DatumFile, scenarios_dir / "heisenberg_datum.json"))
    chi = character_from_file(load(CharacterFile, scenarios_dir / "heisenberg_generic_character.json"))
    text = canonical_json(spec_to_file(reduce(datum, chi)))
    assert text == (golden_dir / "generic_quantum_plane.json").read_text()


def test_reduce_character_mismatch(heisenberg):
    two = CentralCharacter.build([GammaElement(1, 0, (1,))] * 2, 1, 1)
    with pytest.raises(SpecMismatchError):
        reduce(heisenberg, two)


def test_character_is_additive(generic_character):
    doubled = generic_character + generic_character
    assert doubled((1,)) == generic_character((2,))
    with pytest.raises(SpecMismatchError):
        CentralCharacter.build([GammaElement(3, 1, ())], 1, 0)


def test_generators_from_file(heisenberg, scenarios_dir):
    pairs = load(GeneratorsFile, scenarios_dir / "heisenberg_generators.json").generators
    assert generators_from_file(pairs, heisenberg) == [H1, Z]
    with pytest.raises(InputFormatError):
        generators_from_file(pairs[:1] + [pairs[0].model_copy(update={"a": [1]})], heisenberg)


# ============================================================================
# HARNESS
# ============================================================================

def test_harness_generic_character(heisenberg, generic_character):
    report = theorem_b_harness(heisenberg, generic_character, [H1, Z], Bounds(k_max=4))
    assert report.hypothesis_met
    assert report.passed
    assert report.subgroup == [[1, 0]]
    names = {c.name: c.status for c in report.checks}
    assert names["torsion-free over C"] == "pass"
    assert names["growth degree equals rank C"] == "pass"
    assert names["finite length evidence"] == "pass"


def test_harness_cube_root_character(heisenberg, cube_root_character):
    """A root of unity gives the reduced algebra a center"""
    report = theorem_b_harness(heisenberg, cube_root_character, [H1, Z], Bounds(k_max=4))
    assert not report.hypothesis_met
    assert "hypothesis not met: center nontrivial" in report.flags
    assert all(c.name != "growth degree equals rank C" for c in report.checks)


def test_harness_rejects_non_abelian_subgroup(heisenberg, generic_character):
    with pytest.raises(QTorusError):
        theorem_b_harness(heisenberg, generic_character, [H1, H2])
