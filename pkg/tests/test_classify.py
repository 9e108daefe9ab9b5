"""Nilpotent orbit classification: which Jordan types admit perturbations.

The kernel dimensions and certificate pairs below were computed once with
this library and frozen; the tests re-derive them from scratch on every run,
so any regression in the exterior algebra or the linear algebra shows up as
a mismatch against these constants.
"""

import random

import pytest

from spin7lab.cayley import build_omega
from spin7lab.classify import (Certificate, YoungDiagram,
                               classification_report,
                               cubic_vanishes_on_subspace, enumerate_diagrams,
                               find_certificate, jordan_type_of, kernel_space,
                               representative)
from spin7lab.exterior.endo import Endo, rho
from spin7lab.exterior.forms import Vector
from spin7lab.sampling import random_rank_one_nilpotent, random_unimodular

# dim {ω ∈ Λ⁴ : ρ(A)²ω = 0} for the canonical nilpotent of each Jordan type
KERNEL_DIMS = {
    (8,): 15,
    (7, 1): 18,
    (6, 2): 22,
    (6, 1, 1): 22,
    (5, 3): 26,
    (5, 2, 1): 28,
    (5, 1, 1, 1): 28,
    (4, 4): 30,
    (4, 3, 1): 34,
    (4, 2, 2): 35,
    (4, 2, 1, 1): 36,
    (4, 1, 1, 1, 1): 36,
    (3, 3, 2): 42,
    (3, 3, 1, 1): 42,
    (3, 2, 2, 1): 48,
    (3, 2, 1, 1, 1): 50,
    (3, 1, 1, 1, 1, 1): 50,
    (2, 2, 2, 2): 52,
    (2, 2, 2, 1, 1): 60,
    (2, 2, 1, 1, 1, 1): 64,
    (2, 1, 1, 1, 1, 1, 1): 70,
    (1, 1, 1, 1, 1, 1, 1, 1): 70,
}

# deterministic witness pair found by the fixed search order, per diagram
CERTIFICATE_PAIRS = {
    (8,): ("w1", "v2"),
    (7, 1): ("w1", "v2"),
    (6, 2): ("w1", "w7"),
    (6, 1, 1): ("w1", "v2"),
    (5, 3): ("w1", "w6"),
    (5, 2, 1): ("w1", "w6"),
    (5, 1, 1, 1): ("w1", "v2"),
    (4, 4): ("w1", "w5"),
    (4, 3, 1): ("w1", "w5"),
    (4, 2, 2): ("w1", "w5"),
    (4, 2, 1, 1): ("w1", "w5"),
    (4, 1, 1, 1, 1): ("w1", "v2"),
    (3, 3, 2): ("w1", "w4"),
    (3, 3, 1, 1): ("w1", "w4"),
    (3, 2, 2, 1): ("w1", "w4"),
    (3, 2, 1, 1, 1): ("w1", "w4"),
    (3, 1, 1, 1, 1, 1): ("w1", "v2"),
    (2, 2, 2, 2): ("w1", "w3"),
    (2, 2, 2, 1, 1): ("w1", "w3"),
    (2, 2, 1, 1, 1, 1): ("w1", "w3"),
}

ADMISSIBLE = {(2, 1, 1, 1, 1, 1, 1), (1, 1, 1, 1, 1, 1, 1, 1)}


def seeded(name: str) -> random.Random:
    return random.Random(f"test-classify:{name}")


def _partitions_of(n, maxpart=None):
    """Independent partition generator for the enumeration cross-check."""
    maxpart = n if maxpart is None else maxpart
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions_of(n - first, first):
            yield (first,) + rest


# -- diagram enumeration ------------------------------------------------------

def test_every_partition_of_eight_appears_once():
    diagrams = enumerate_diagrams()
    assert len(diagrams) == 22
    assert {d.parts for d in diagrams} == set(_partitions_of(8))
    for d in diagrams:
        assert sum(d.parts) == 8
        assert list(d.parts) == sorted(d.parts, reverse=True)


def test_diagram_validation():
    assert YoungDiagram.of(4, 3, 1).parts == (4, 3, 1)
    with pytest.raises(ValueError):
        YoungDiagram.of(1, 3, 4)  # must be non-increasing
    with pytest.raises(ValueError):
        YoungDiagram.of(4, 3)  # must sum to 8
    with pytest.raises(ValueError):
        YoungDiagram.of(9, -1)  # parts must be positive


# -- canonical representatives and jordan types ----------------------------------

def test_representative_round_trips_through_jordan_type():
    for d in enumerate_diagrams():
        a = representative(d).matrix
        assert a.is_nilpotent()
        assert jordan_type_of(a) == d


def test_jordan_type_rejects_non_nilpotent():
    with pytest.raises(ValueError):
        jordan_type_of(Endo.identity())


def test_jordan_type_is_a_conjugation_invariant():
    rng = seeded("conjugation")
    for d in enumerate_diagrams():
        a = representative(d).matrix
        g, g_inv = random_unimodular(rng)
        assert jordan_type_of(g @ a @ g_inv) == d


def test_rank_one_nilpotents_have_minimal_type():
    rng = seeded("rank-one-type")
    for _ in range(10):
        a = random_rank_one_nilpotent(rng)
        assert jordan_type_of(a) == YoungDiagram.of(2, 1, 1, 1, 1, 1, 1)


# -- kernel spaces -----------------------------------------------------------

def test_kernel_dimensions_match_frozen_table():
    got = {d.parts: kernel_space(d).dimension for d in enumerate_diagrams()}
    assert got == KERNEL_DIMS


def test_kernel_basis_is_killed_by_rho_squared():
    d = YoungDiagram.of(3, 2, 2, 1)
    a = representative(d).matrix
    space = kernel_space(d)
    assert space.dimension == KERNEL_DIMS[(3, 2, 2, 1)]
    for form in space.basis:
        assert not rho(a, rho(a, form))


def test_full_kernel_exactly_for_admissible_types():
    for d in enumerate_diagrams():
        full = kernel_space(d).dimension == 70
        assert full == (d.parts in ADMISSIBLE)


# -- certificates -----------------------------------------------------------

def test_certificate_table():
    for d in enumerate_diagrams():
        cert = find_certificate(d)
        assert cert.diagram == d
        assert cert.dim_kernel == KERNEL_DIMS[d.parts]
        if d.parts in ADMISSIBLE:
            assert cert.verdict == "admissible"
            assert cert.pair is None
        else:
            assert cert.verdict == "excluded"
            labels = (cert.pair[0].label, cert.pair[1].label)
            assert labels == CERTIFICATE_PAIRS[d.parts]


def test_certificates_really_kill_the_cubic():
    # re-run the vanishing check for each frozen witness pair
    for d in enumerate_diagrams():
        if d.parts in ADMISSIBLE:
            continue
        cert = find_certificate(d)
        assert cubic_vanishes_on_subspace(cert.pair[0].vector,
                                          cert.pair[1].vector,
                                          kernel_space(d))


def test_cubic_does_not_vanish_on_the_full_space():
    # (e7, e8) has a nonzero cube against the Cayley form itself, which lies
    # in the full kernel of the admissible types
    d = YoungDiagram.of(1, 1, 1, 1, 1, 1, 1, 1)
    assert not cubic_vanishes_on_subspace(Vector.basis(7), Vector.basis(8),
                                          kernel_space(d))


def test_certificate_records_serialize():
    cert = find_certificate(YoungDiagram.of(4, 4))
    rec = cert.to_record()
    assert rec["diagram"] == [4, 4]
    assert rec["verdict"] == "excluded"
    assert rec["dim_kernel"] == 30
    assert rec["pair"]["u"]["label"] == "w1"
    assert len(rec["pair"]["v"]["components"]) == 8


# -- the full report -----------------------------------------------------------

def test_classification_report_admissible_set():
    report = classification_report(seed=0, signature_samples=5)
    assert [d.parts for d in report.admissible] == \
        [(2, 1, 1, 1, 1, 1, 1), (1, 1, 1, 1, 1, 1, 1, 1)]
    assert report.signature_clean
    assert len(report.rows) == 22


def test_classification_report_record_shape():
    report = classification_report(seed=3, signature_samples=2)
    rec = report.to_record(zero_timings=True)
    assert rec["seed"] == 3
    assert len(rec["diagrams"]) == 22
    assert all(row["millis"] == 0 for row in rec["diagrams"])
    assert rec["admissible_diagrams"] == [[2, 1, 1, 1, 1, 1, 1],
                                          [1, 1, 1, 1, 1, 1, 1, 1]]
    assert rec["rank_one_signature"] == {"samples": 2, "pure_7_35": True}
    timed = report.to_record()
    assert [r["diagram"] for r in timed["diagrams"]] == \
        [r["diagram"] for r in rec["diagrams"]]


def test_report_is_deterministic_up_to_timings():
    a = classification_report(seed=1, signature_samples=3)
    b = classification_report(seed=1, signature_samples=3)
    assert a.to_record(zero_timings=True) == b.to_record(zero_timings=True)
