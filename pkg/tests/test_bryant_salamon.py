"""The cohomogeneity-one 4-form: construction, closedness, perturbations.

Φ = f²ψ₁ + fgψ₂ + g²ψ₃ over the chamber ring with f = 4w⁻², g = 5w³.
Closedness is an exact polynomial identity here, and every invariant
perturbation Φ + dt∧(Y⌟Φ) with even coefficients stays closed.
"""

import random

import pytest

from spin7lab.exterior.scalars import FieldScalar, Q
from spin7lab.invariant.bryant_salamon import (DT, BryantSalamon, HForm,
                                               InvariantField,
                                               build_bryant_salamon,
                                               build_metric,
                                               closure_mechanism_holds,
                                               lemma_invariant_forms,
                                               metric_lie_derivative,
                                               orbit_witness_holds,
                                               perturbed_form,
                                               pointwise_rank_one_check,
                                               proposition_display,
                                               verify_killing,
                                               verify_pullback_proposition)
from spin7lab.invariant.chamber import (ChamberForm, ChamberScalar, S, T, W,
                                        W_INV, lie_derivative,
                                        maurer_cartan_d)
from spin7lab.invariant.liealg import build_lie_frame
from spin7lab.sampling import random_even_scalar

BS = build_bryant_salamon()
DS = ChamberForm.generator(0)

ZERO_S = ChamberScalar()
ONE_S = ChamberScalar.of(1)


def quaternion_units():
    z = ChamberForm.zero(0)
    one = ChamberForm.scalar(1)
    return (HForm(one, z, z, z), HForm(z, one, z, z),
            HForm(z, z, one, z), HForm(z, z, z, one))


# -- quaternion-valued forms -----------------------------------------------------

def test_hform_wedge_reduces_to_quaternion_product_on_scalars():
    e, i, j, k = quaternion_units()
    assert i.wedge(j).components[3] == ChamberForm.scalar(1)   # ij = k
    assert not i.wedge(j).components[0]
    assert j.wedge(i).components[3] == ChamberForm.scalar(-1)  # ji = -k
    assert i.wedge(i).components[0] == ChamberForm.scalar(-1)  # i² = -1
    assert e.wedge(k).components[3] == ChamberForm.scalar(1)   # 1·k = k


def test_hform_conjugate_flips_imaginary_parts():
    _, i, j, k = quaternion_units()
    for unit in (i, j, k):
        conj = unit.conjugate()
        assert conj.components[0] == unit.components[0]
        for slot in (1, 2, 3):
            assert conj.components[slot] == -unit.components[slot]


# -- construction of the 4-form ---------------------------------------------------

def test_radial_functions():
    assert BS.f == ChamberScalar.monomial(4, 0, -2)
    assert BS.g == ChamberScalar.monomial(5, 0, 3)
    assert BS.f * BS.g == ChamberScalar.monomial(20, 0, 1)


def test_phi_is_the_weighted_sum_of_its_three_layers():
    assert BS.phi == (BS.f * BS.f) * BS.psi1 + (BS.f * BS.g) * BS.psi2 \
        + (BS.g * BS.g) * BS.psi3


def test_phi_spot_coefficients():
    assert BS.phi.coefficient(0, 4, 5, 6) == \
        ChamberScalar.monomial(-16, 3, -4)
    assert BS.phi.coefficient(7, 8, 9, 10) == ChamberScalar.monomial(-25, 0, 6)
    assert BS.phi.coefficient(5, 6, 7, 10) == ChamberScalar.monomial(20, 2, 1)


def test_psi_layers():
    assert BS.psi1.coefficient(0, 4, 5, 6) == ChamberScalar.monomial(-1, 3, 0)
    assert BS.psi3 == ChamberForm.blade(7, 8, 9, 10, coeff=-1)
    # ψ₂ couples base and fiber: exactly two fiber slots in every blade
    assert BS.psi2
    for slots, _coeff in BS.psi2.blades():
        assert len([s for s in slots if s >= 7]) == 2
        assert not any(s in (1, 2, 3) for s in slots)


def test_display_transcription_matches_construction():
    assert proposition_display() == BS.phi
    assert verify_pullback_proposition()


# -- closedness --------------------------------------------------------------------

def test_phi_is_closed():
    assert not maurer_cartan_d(BS.phi)


def test_psi_differentials():
    w2, x1234 = lemma_invariant_forms()
    assert not maurer_cartan_d(BS.psi3)
    assert maurer_cartan_d(BS.psi1) == \
        ChamberScalar.monomial(Q(1, 2), 3, 0) * DS.wedge(w2)
    assert maurer_cartan_d(BS.psi2) == \
        ChamberScalar.monomial(3, 1, 0) * DS.wedge(x1234)


def test_closedness_needs_both_radial_functions():
    # dropping the cross term breaks the cancellation
    partial = (BS.f * BS.f) * BS.psi1 + (BS.g * BS.g) * BS.psi3
    assert maurer_cartan_d(partial)


def test_lemma_forms_are_closed_and_invariant():
    w2, x1234 = lemma_invariant_forms()
    for form in (w2, x1234):
        assert not maurer_cartan_d(form)
        # invariance under the isotropy rotations
        for slot in (4, 5, 6):
            assert not lie_derivative(slot, form)


# -- invariant perturbations --------------------------------------------------------

def test_named_perturbations_are_closed():
    triples = [
        (1, 0, 0),
        (T, T * T + 1, 3 * T),
    ]
    for a, b, c in triples:
        field = InvariantField.of(a, b, c)
        form = perturbed_form(field)
        assert not maurer_cartan_d(form)
        assert form != BS.phi  # the perturbation really moved the form


def test_random_even_perturbations_are_closed():
    rng = random.Random("test-bs:even")
    for _ in range(3):
        field = InvariantField.of(random_even_scalar(rng),
                                  random_even_scalar(rng),
                                  random_even_scalar(rng))
        assert not maurer_cartan_d(perturbed_form(field))


def test_odd_coefficients_are_rejected():
    with pytest.raises(ValueError):
        perturbed_form(InvariantField.of(S, 0, 0))
    with pytest.raises(ValueError):
        perturbed_form(InvariantField.of(1, S * T, 0))


def test_perturbation_shape():
    field = InvariantField.of(1, 0, 0)
    delta = perturbed_form(field) - BS.phi
    assert delta == DT * DS.wedge(field.contract(BS.phi))
    # every added term contains ds
    for slots, _c in delta.blades():
        assert slots[0] == 0


def test_closure_mechanism():
    rng = random.Random("test-bs:mechanism")
    fields = [InvariantField.of(1, 0, 0),
              InvariantField.of(T, T * T + 1, 3 * T),
              InvariantField.of(random_even_scalar(rng), 0,
                                random_even_scalar(rng))]
    for field in fields:
        assert closure_mechanism_holds(field)


def test_lie_derivative_of_phi_is_absorbed_by_dt():
    # the mechanism closes because dt ∧ L_Y Φ = 0: every blade of L_Y Φ
    # already carries the ds factor (L_Y Φ itself need not vanish)
    rng = random.Random("test-bs:kill")
    field = InvariantField.of(random_even_scalar(rng),
                              random_even_scalar(rng),
                              random_even_scalar(rng))
    lied = field.lie_derivative(BS.phi)
    for slots, _c in lied.blades():
        assert slots[0] == 0
    assert not DT * DS.wedge(lied)


def test_orbit_witness():
    fields = [InvariantField.of(1, 0, 0),
              InvariantField.of(T, T * T + 1, 3 * T)]
    for field in fields:
        assert orbit_witness_holds(field)


# -- the metric and its isometries ----------------------------------------------------

def test_metric_is_diagonal_and_positive():
    metric = build_metric()
    assert metric.is_diagonal()
    assert metric.has_positive_coefficients()


def test_metric_entries():
    metric = build_metric()
    f, g = BS.f, BS.g
    assert metric.get(0, 0) == f
    for slot in (4, 5, 6):
        assert metric.get(slot, slot) == f * T
    for slot in (7, 8, 9, 10):
        assert metric.get(slot, slot) == g
    # the sp(1)⁺ directions are vertical: no metric coefficient
    for slot in (1, 2, 3):
        assert metric.get(slot, slot) == ZERO_S


def test_isotropy_fields_are_killing():
    assert verify_killing()
    metric = build_metric()
    frame = build_lie_frame()
    for slot in (4, 5, 6):
        assert not metric_lie_derivative(slot, metric, frame)


def test_killing_fails_for_a_corrupted_frame():
    frame = build_lie_frame()
    mutated = [[[c for c in row] for row in plane]
               for plane in frame.structure]
    mutated[3][4][5] = FieldScalar(7)  # corrupt [A4, A5]
    bad = frame.with_structure(tuple(tuple(tuple(r) for r in p)
                                     for p in mutated))
    assert not verify_killing(bad)


# -- pointwise orbit membership ---------------------------------------------------------

def test_pointwise_check_at_rational_points():
    field = InvariantField.of(T, T * T + 1, 3 * T)
    for s_value in (1, "1/2", "7/3"):
        record = pointwise_rank_one_check(field, s_value)
        assert record["trivial"] is False
        assert record["rank"] == 1
        assert record["square_zero"] is True
        assert record["jordan_type"] == [2, 1, 1, 1, 1, 1, 1]
        assert record["in_orbit"] is True


def test_pointwise_check_trivial_field():
    record = pointwise_rank_one_check(InvariantField.of(0, 0, 0), 1)
    assert record["trivial"] is True
    assert record["in_orbit"] is True


def test_pointwise_check_validates_sample_point():
    field = InvariantField.of(1, 0, 0)
    with pytest.raises(ValueError):
        pointwise_rank_one_check(field, -1)
    with pytest.raises(ValueError):
        pointwise_rank_one_check(field, 0)
    with pytest.raises(ValueError):
        pointwise_rank_one_check(field, FieldScalar(0, 1))


def test_field_evenness_predicate():
    assert InvariantField.of(T, 0, T * T).is_even()
    assert not InvariantField.of(S, 0, 0).is_even()
