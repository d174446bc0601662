from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from model.latticeModel import FlatTorus, LatticeVector
from model.manifoldModel import INFINITE, ComponentFamily, OneSided, PrismComponentReport, TwoSided
from model.slopeModel import SlopeClass
from model.spaceformModel import LensType, PrismType
from services.assemblyServices import absorb_flat_slab, classify
from services.generatorServices import random_descriptions
from services.latticeServices import change_of_basis, normalized_marking, transform_vector
from services.moduliServices import (
    component_id,
    enumerate_lens_components,
    lens_witness,
    prism_component_count,
    same_component,
)
from services.spaceformServices import lens_canonical, spaceform_equivalent
from strategies import flat_tori, foliation_pairs, prism_parameters, rationals, unimodular_matrices

SQUARE = FlatTorus.unit_square()


def classes(reports):
    return [report.component.slope_class for report in reports]


def test_lens_seven_two_normal_form():
    marking = normalized_marking(SQUARE, LatticeVector(2, 7))
    assert marking.vhat == LatticeVector(1, 4)
    assert marking.theta == Fraction(30, 53)
    assert component_id(lens_witness(2, 7)).slope_class == SlopeClass(Fraction(2, 7), Fraction(-4, 7))


def test_enumerate_lens_seven_two():
    reports = enumerate_lens_components(LensType(7, 2), 5)
    assert [klass.as_pair() for klass in classes(reports)] == [
        (Fraction(2, 7), Fraction(-4, 7)),
        (Fraction(3, 7), Fraction(-5, 7)),
    ]
    assert all(report.component.swap_class == report.component.slope_class for report in reports)
    assert all(report.component.spaceform == LensType(7, 2) for report in reports)
    assert all(report.component.family is ComponentFamily.LENS_TYPE for report in reports)


def test_enumerate_sphere():
    reports = enumerate_lens_components(LensType(1, 0), 3)
    assert [klass.as_pair() for klass in classes(reports)] == [
        (Fraction(0), Fraction(0)),
        (Fraction(1), Fraction(-1)),
        (Fraction(2), Fraction(-1)),
        (Fraction(3), Fraction(-1)),
    ]
    assert [report.component.swap_class.as_pair() for report in reports[1:]] == [(Fraction(1), Fraction(-1))] * 3


@pytest.mark.parametrize("lens", [LensType(7, 2), LensType(5, 1), LensType(12, 5), LensType(1, 0)])
def test_component_count_grows_with_bound(lens):
    for bound in (lens.p, 2 * lens.p, 5 * lens.p):
        assert len(enumerate_lens_components(lens, 2 * bound)) > len(enumerate_lens_components(lens, bound))
    assert len(enumerate_lens_components(lens, 100)) > len(enumerate_lens_components(lens, 10))


def test_enumerate_rejects_zero_bound():
    with pytest.raises(ValueError):
        enumerate_lens_components(LensType(7, 2), 0)


def test_witnesses_classify_to_the_lens():
    for report in enumerate_lens_components(LensType(7, 2), 20):
        assert component_id(report.witness) == report.component


def test_same_component_examples():
    assert same_component(lens_witness(2, 7), lens_witness(4, 7))
    assert not same_component(lens_witness(2, 7), lens_witness(3, 7))

    # lens-type L(4, 1) against prism-type P(1, 1)
    assert not same_component(lens_witness(1, 4), OneSided(1, 1, LatticeVector(1, 1)))

    g = TwoSided(SQUARE, LatticeVector(1, 0), LatticeVector(1, 2), collar=1.0)
    assert same_component(g, absorb_flat_slab(g))


def test_prism_component_of_one_sided():
    component = component_id(OneSided(1, 2, LatticeVector(3, 2)))
    assert component.family is ComponentFamily.PRISM_TYPE
    assert component == component_id(OneSided(5, 7, LatticeVector(-3, 2)))


@pytest.mark.parametrize("m, n", [(3, 2), (2, 5), (5, 3), (7, 1), (9, 4), (11, 6)])
def test_prism_manifolds_are_connected(m, n):
    assert prism_component_count(PrismType(m, n)) == 1


def test_prism_with_m_one_has_both_families():
    report = prism_component_count(PrismType(1, 2))
    assert isinstance(report, PrismComponentReport)
    assert report.prism_type == 1
    assert report.lens_type is INFINITE
    assert report.lens == LensType(8, 3)


@settings(max_examples=200, deadline=None)
@given(torus=flat_tori(), pair=foliation_pairs(), u=unimodular_matrices())
def test_component_invariant_under_base_change(torus, pair, u):
    f1, f2 = pair
    g = TwoSided(torus, f1, f2)
    moved = TwoSided(change_of_basis(torus, u), transform_vector(u, f1), transform_vector(u, f2))
    assert component_id(g) == component_id(moved)


def swap(g: TwoSided) -> TwoSided:
    return TwoSided(g.torus, g.f2, g.f1, collar=g.collar, cylinder_collars=g.cylinder_collars[::-1])


SAMPLE = (
    [lens_witness(q, 7) for q in range(1, 7)]
    + [lens_witness(q, 1) for q in range(4)]
    + [OneSided(1, 1, LatticeVector(2, 5)), OneSided(2, 3, LatticeVector(-2, 5)), OneSided(1, 1, LatticeVector(3, 5))]
    + random_descriptions(seed=5, count=12)
)


@settings(max_examples=200, deadline=None)
@given(torus=flat_tori(), pair=foliation_pairs())
def test_component_ignores_cylinder_order(torus, pair):
    g = TwoSided(torus, *pair)
    assert same_component(g, swap(g))


def test_cylinders_with_different_normal_forms():
    g = lens_witness(2, 1)
    component = component_id(g)
    assert component.slope_class.as_pair() == (Fraction(2), Fraction(-1))
    assert component.swap_class.as_pair() == (Fraction(1), Fraction(-1))
    assert component_id(swap(g)) == component
    assert not same_component(g, lens_witness(1, 1))


@pytest.mark.parametrize(
    "f2, lead, other",
    [
        (LatticeVector(3, 2), (Fraction(3, 2), Fraction(-1, 2)), (Fraction(1, 2), Fraction(-1, 2))),
        (LatticeVector(-1, 3), (Fraction(2, 3), Fraction(-2, 3)), (Fraction(1, 3), Fraction(-1, 3))),
    ],
)
def test_swap_on_the_square(f2, lead, other):
    g = TwoSided(SQUARE, LatticeVector(1, 0), f2)
    for description in (g, swap(g)):
        component = component_id(description)
        assert component.slope_class.as_pair() == lead
        assert component.swap_class.as_pair() == other


def test_same_component_is_an_equivalence_relation():
    for g in SAMPLE:
        assert same_component(g, g)
    for g1, g2 in product(SAMPLE, repeat=2):
        assert same_component(g1, g2) == same_component(g2, g1)
    for g1, g2, g3 in product(SAMPLE[:14], repeat=3):
        if same_component(g1, g2) and same_component(g2, g3):
            assert same_component(g1, g3)


def test_same_component_implies_diffeomorphic():
    pairs = [(g1, g2) for g1, g2 in product(SAMPLE, repeat=2) if same_component(g1, g2)]
    # lens_witness(2, 7) and lens_witness(4, 7) among others
    assert len(pairs) > len(SAMPLE)
    for g1, g2 in pairs:
        assert spaceform_equivalent(classify(g1).spaceform, classify(g2).spaceform)


def test_prisms_with_matching_slopes_stay_apart():
    first = component_id(OneSided(1, 1, LatticeVector(2, 5)))
    second = component_id(OneSided(1, 1, LatticeVector(3, 5)))
    assert first.slope_class == second.slope_class
    assert first != second


@pytest.mark.parametrize("lens", [LensType(7, 2), LensType(5, 1), LensType(12, 5), LensType(1, 0)])
def test_witnesses_realize_the_lens(lens):
    reports = enumerate_lens_components(lens, 30)
    assert reports
    for report in reports:
        result = classify(report.witness)
        assert spaceform_equivalent(result.spaceform, lens)
        assert result.canonical_spaceform == report.component.spaceform == lens_canonical(lens)


@settings(max_examples=20, deadline=None)
@given(
    mn=prism_parameters(),
    radii=st.lists(rationals(positive=True), min_size=4, max_size=4),
    signs=st.tuples(st.sampled_from((1, -1)), st.sampled_from((1, -1))),
)
def test_random_prism_pairs_share_one_component(mn, radii, signs):
    m, n = mn
    first = OneSided(radii[0], radii[1], LatticeVector(m, n))
    second = OneSided(radii[2], radii[3], LatticeVector(signs[0] * m, signs[1] * n))
    assert prism_component_count(PrismType(m, n)) == 1
    assert same_component(first, second)
    assert component_id(first).spaceform == PrismType(m, n)
