"""The sp(2) frame: quaternionic generators, brackets, Killing form, normalizer.

Two normalizations coexist: the connection-scaled frame whose coframe the
cohomogeneity-one formulas are written in, and the Killing-orthonormal frame.
They differ by a constant rescale per block, which the tests pin down.
"""

import random
from itertools import combinations

import pytest

from spin7lab.exterior.scalars import ONE, SQRT3, SQRT6, ZERO, FieldScalar, Q
from spin7lab.invariant.liealg import (GENERATOR_NAMES, SP1_MINUS, SP1_PLUS,
                                       LieFrame, Quaternion, QuatMat2,
                                       build_lie_frame,
                                       build_orthonormal_frame,
                                       generator_coords, is_subalgebra,
                                       killing_matrix, normalizer)

I, J, K = Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)
ONE_Q = Quaternion(1)


def coords(**weights):
    """Coordinate vector from generator names, e.g. coords(A1=1, X4=-2)."""
    out = [ZERO] * len(GENERATOR_NAMES)
    for name, w in weights.items():
        out[GENERATOR_NAMES.index(name)] = FieldScalar.of(w)
    return out


# -- quaternions ---------------------------------------------------------------

def test_quaternion_multiplication_table():
    assert I * I == J * J == K * K == -ONE_Q
    assert I * J == K and J * K == I and K * I == J
    assert J * I == -K and K * J == -I and I * K == -J


def test_quaternion_conjugation_is_an_antihomomorphism():
    p = Quaternion(1, 2, -1, 3)
    q = Quaternion(0, -2, 5, 1)
    assert (p * q).conjugate() == q.conjugate() * p.conjugate()
    assert (p * p.conjugate()).conjugate() == p * p.conjugate()


def test_quat_mat2_bracket():
    a = QuatMat2(I, Quaternion(), Quaternion(), Quaternion())
    b = QuatMat2(Quaternion(), ONE_Q, -ONE_Q, Quaternion())
    assert a.bracket(b) == (a @ b) - (b @ a)
    assert a.is_anti_hermitian()


# -- the two frames ------------------------------------------------------------

def test_frame_generators_are_anti_hermitian():
    for frame in (build_lie_frame(), build_orthonormal_frame()):
        assert frame.names == GENERATOR_NAMES
        for m in frame.matrices:
            assert m.is_anti_hermitian()


def test_structure_constants_of_the_connection_frame():
    frame = build_lie_frame()

    def bracket(x, y):
        out = frame.bracket_coords(coords(**{x: 1}), coords(**{y: 1}))
        return {GENERATOR_NAMES[k]: c for k, c in enumerate(out) if c}

    assert bracket("A1", "A2") == {"A3": FieldScalar(2)}
    assert bracket("A4", "A5") == {"A6": FieldScalar(2)}
    assert bracket("A4", "X1") == {"X4": ONE}
    assert bracket("A1", "X1") == {"X4": -ONE}
    assert bracket("X4", "X1") == {"A1": FieldScalar(Q(1, 2)),
                                   "A4": FieldScalar(Q(-1, 2))}
    # the two sp(1) factors commute with each other
    assert bracket("A1", "A4") == {}
    assert bracket("A3", "A6") == {}


def test_jacobi_identity_for_all_triples():
    frame = build_lie_frame()
    basis = [generator_coords(i) for i in range(10)]
    for i, j, k in combinations(range(10), 3):
        x, y, z = basis[i], basis[j], basis[k]
        total = [a + b + c for a, b, c in zip(
            frame.bracket_coords(x, frame.bracket_coords(y, z)),
            frame.bracket_coords(y, frame.bracket_coords(z, x)),
            frame.bracket_coords(z, frame.bracket_coords(x, y)))]
        assert not any(total), (i, j, k)


def test_bracket_is_bilinear_and_antisymmetric():
    frame = build_lie_frame()
    rng = random.Random("test-liealg:bilinear")
    for _ in range(5):
        x = [FieldScalar(rng.randint(-3, 3)) for _ in range(10)]
        y = [FieldScalar(rng.randint(-3, 3)) for _ in range(10)]
        xy = frame.bracket_coords(x, y)
        yx = frame.bracket_coords(y, x)
        assert xy == tuple(-c for c in yx)
        double = frame.bracket_coords([2 * c for c in x], y)
        assert double == tuple(2 * c for c in xy)


def test_killing_form_of_the_connection_frame():
    k = killing_matrix(build_lie_frame())
    expected_diag = [-12] * 6 + [-6] * 4
    for i in range(10):
        for j in range(10):
            want = FieldScalar(expected_diag[i]) if i == j else ZERO
            assert k[i][j] == want


def test_killing_form_of_the_orthonormal_frame():
    k = killing_matrix(build_orthonormal_frame())
    for i in range(10):
        for j in range(10):
            assert k[i][j] == (-ONE if i == j else ZERO)


def test_killing_form_is_ad_invariant():
    frame = build_lie_frame()
    k = killing_matrix(frame)

    def killing(u, v):
        return sum((u[i] * k[i][j] * v[j]
                    for i in range(10) for j in range(10)), ZERO)

    rng = random.Random("test-liealg:ad-invariance")
    for _ in range(5):
        x = [FieldScalar(rng.randint(-2, 2)) for _ in range(10)]
        y = [FieldScalar(rng.randint(-2, 2)) for _ in range(10)]
        z = [FieldScalar(rng.randint(-2, 2)) for _ in range(10)]
        assert killing(frame.bracket_coords(x, y), z) == \
            killing(x, frame.bracket_coords(y, z))


def test_frames_differ_by_block_rescale():
    conn = build_lie_frame()
    orth = build_orthonormal_frame()
    a_ratio = FieldScalar(0, 0, Q(1, 6), 0)       # sqrt3/6 over 1
    x_ratio = FieldScalar(0, 0, 0, Q(1, 6))       # sqrt6/12 over 1/2
    for i in range(6):
        assert orth.matrices[i] == a_ratio * conn.matrices[i]
    for i in range(6, 10):
        assert orth.matrices[i] == x_ratio * conn.matrices[i]


# -- subalgebras and the normalizer ----------------------------------------------

def test_sp1_blocks_are_subalgebras():
    frame = build_lie_frame()
    plus = [generator_coords(i) for i in SP1_PLUS]
    minus = [generator_coords(i) for i in SP1_MINUS]
    assert is_subalgebra(frame, plus)
    assert is_subalgebra(frame, minus)
    assert is_subalgebra(frame, plus + minus)
    assert is_subalgebra(frame, [])


def test_x_span_is_not_a_subalgebra():
    frame = build_lie_frame()
    xs = [generator_coords(i) for i in range(6, 10)]
    assert not is_subalgebra(frame, xs)
    with pytest.raises(ValueError):
        normalizer(frame, xs)


def test_normalizer_of_the_isotropy_block():
    frame = build_lie_frame()
    minus = [generator_coords(i) for i in SP1_MINUS]
    basis = normalizer(frame, minus)
    assert len(basis) == 6
    # the normalizer is exactly the diagonal block A1..A6: no X component
    for row in basis:
        assert not any(row[6:])
    got = {tuple(1 if c else 0 for c in row) for row in basis}
    expected = {tuple(1 if k == i else 0 for k in range(10)) for i in range(6)}
    assert got == expected


def test_normalizer_of_the_zero_algebra_is_everything():
    frame = build_lie_frame()
    assert len(normalizer(frame, [])) == 10


def test_with_structure_substitutes_constants():
    frame = build_lie_frame()
    mutated = [[[c for c in row] for row in plane] for plane in frame.structure]
    mutated[0][1][2] = FieldScalar(5)
    bad = frame.with_structure(tuple(tuple(tuple(r) for r in p)
                                     for p in mutated))
    out = bad.bracket_coords(generator_coords(0), generator_coords(1))
    assert out[2] == FieldScalar(5)
    # the original frame is untouched
    assert build_lie_frame().bracket_coords(
        generator_coords(0), generator_coords(1))[2] == FieldScalar(2)
