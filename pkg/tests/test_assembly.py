from fractions import Fraction
from math import gcd

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from exceptions.geometryExceptions import InvalidDescription
from model.latticeModel import FlatTorus, LatticeVector
from model.manifoldModel import OneSided, Sidedness, TwoSided
from model.slopeModel import SlopeClass
from model.spaceformModel import LensType, PrismType
from services.assemblyServices import absorb_flat_slab, classify, double_cover, realize, validate
from services.diskMetricServices import get_shape, synthesize_standard_disk, verify
from services.generatorServices import random_descriptions
from services.spaceformServices import lens_equivalent

SQUARE = FlatTorus.unit_square()


def codes(g):
    return [v.code for v in validate(g)]


def test_validate_examples():
    assert codes(TwoSided(SQUARE, LatticeVector(1, 0), LatticeVector(1, 0))) == ["EQUAL_FOLIATIONS"]
    assert codes(OneSided(1, 2, LatticeVector(1, 0))) == ["REDUCIBLE_FOLIATION"]
    assert codes(OneSided(1, 2, LatticeVector(3, 2))) == []


def test_validate_collects_every_violation():
    g = TwoSided(SQUARE, LatticeVector(2, 4), LatticeVector(0, 3), collar=-1.0)
    assert codes(g) == ["NON_PRIMITIVE", "NON_PRIMITIVE", "NEGATIVE_COLLAR"]
    assert codes(OneSided(0, 2, LatticeVector(3, 2))) == ["NOT_POSITIVE"]


def test_classify_rejects_invalid_description():
    with pytest.raises(InvalidDescription) as info:
        classify(TwoSided(SQUARE, LatticeVector(1, 0), LatticeVector(-1, 0)))
    assert info.value.detail["violations"][0]["code"] == "EQUAL_FOLIATIONS"


@pytest.mark.parametrize("q", range(0, 6))
def test_s3_family_classifies_as_sphere(q):
    result = classify(TwoSided(SQUARE, LatticeVector(1, 0), LatticeVector(q, 1)))
    assert result.spaceform == LensType(1, 0)
    assert result.group_order == 1
    assert result.slope.slope == q


def test_real_projective_space():
    result = classify(TwoSided(SQUARE, LatticeVector(1, 0), LatticeVector(1, 2)))
    assert result.sided is Sidedness.TWO_SIDED
    assert result.spaceform == LensType(2, 1)
    assert result.slope_class == SlopeClass(Fraction(1, 2), Fraction(-1, 2))
    assert result.cos_alpha == pytest.approx(1 / 5 ** 0.5)
    assert len(result.cylinders) == 2


def test_prism_classification():
    result = classify(OneSided(1, 2, LatticeVector(3, 2)))
    assert result.sided is Sidedness.ONE_SIDED
    assert result.spaceform == PrismType(3, 2)
    assert result.group_order == 24
    assert len(result.cylinders) == 1
    assert result.cos_alpha is None


def test_prism_sign_normalization():
    assert classify(OneSided(1, 1, LatticeVector(-3, 2))).spaceform == PrismType(3, 2)


def test_absorb_flat_slab():
    g = TwoSided(SQUARE, LatticeVector(1, 0), LatticeVector(1, 2))
    assert absorb_flat_slab(g) is g

    slab = TwoSided(SQUARE, LatticeVector(1, 0), LatticeVector(1, 2), collar=1.0)
    absorbed = absorb_flat_slab(slab)
    assert absorbed.collar == 0.0
    assert absorbed.cylinder_collars == (0.5, 0.5)
    assert classify(absorbed) == classify(slab)

    one_sided = absorb_flat_slab(OneSided(1, 1, LatticeVector(3, 2), collar=0.2))
    assert one_sided.cylinder_collars == (0.2,)


def test_double_cover_examples():
    cover = double_cover(OneSided(1, 1, LatticeVector(1, 1)))
    assert cover.f2 == LatticeVector(1, -1)
    assert classify(cover).spaceform == LensType(2, 1)

    cover = double_cover(OneSided(1, 1, LatticeVector(3, 2), collar=0.25))
    assert cover.collar == 0.5
    result = classify(cover)
    assert result.spaceform == LensType(12, 7)
    assert result.canonical_spaceform == LensType(12, 5)
    assert lens_equivalent(result.spaceform, LensType(12, 5))


def test_double_cover_needs_one_sided():
    with pytest.raises(InvalidDescription):
        double_cover(TwoSided(SQUARE, LatticeVector(1, 0), LatticeVector(1, 2)))


@settings(max_examples=200, deadline=None)
@given(
    m=st.integers(min_value=1, max_value=30),
    n=st.integers(min_value=1, max_value=30),
    r1=st.fractions(min_value=Fraction(1, 10), max_value=10, max_denominator=20),
    r2=st.fractions(min_value=Fraction(1, 10), max_value=10, max_denominator=20),
)
def test_double_cover_order(m, n, r1, r2):
    assume(gcd(m, n) == 1)
    result = classify(double_cover(OneSided(r1, r2, LatticeVector(m, n))))
    assert result.spaceform.p == 2 * m * n


def test_generated_descriptions_are_valid():
    descriptions = random_descriptions(seed=11, count=40)
    assert descriptions == random_descriptions(seed=11, count=40)
    for g in descriptions:
        assert validate(g) == []
        classify(g)


@pytest.mark.slow
def test_realize_scales_disks_to_cylinder_lengths():
    g = TwoSided(SQUARE, LatticeVector(1, 0), LatticeVector(1, 2), collar=0.4)
    realization = realize(g, grid=1024)
    for disk, cylinder in zip(realization.disks, realization.classification.cylinders):
        assert disk.boundary_length == pytest.approx(cylinder.r, rel=1e-12)
        assert verify(disk).passed
    # each cylinder takes half the slab
    bare = synthesize_standard_disk(get_shape("symmetric_bump"), grid=1024)
    first = realization.disks[0]
    assert first.rho_max == pytest.approx(bare.rho_max * realization.classification.cylinders[0].r + 0.2, rel=1e-12)


def test_realize_rejects_invalid_description():
    with pytest.raises(InvalidDescription):
        realize(OneSided(1, 1, LatticeVector(0, 1)), grid=200)
