"""The Lie algebra sp(2) as anti-Hermitian quaternionic 2x2 matrices.

The ten generators split as two sp(1) factors (diagonal imaginary units)
and a quaternionic off-diagonal part.  Two normalizations of the same
basis are exposed:

* build_lie_frame() scales the off-diagonal generators by 1/2 and leaves
  the diagonal ones plain.  This is the connection normalization: the
  structure constants are the rationals {±1, ±2, ±1/2}, and it is the
  frame in which the cohomogeneity-one coframe calculus closes the
  Bryant-Salamon 4-form (the radial coefficients 4(1+t)^{-2/5} and
  5(1+t)^{3/5} are tuned to exactly these curvature constants).
* build_orthonormal_frame() scales by 1/sqrt(12) and 1/sqrt(24), making
  the basis orthonormal for the Killing metric (Killing matrix -Id).

Structure constants are extracted exactly by decomposing matrix brackets
back into the basis, and the frame exposes the bracket, the Killing form,
and infinitesimal normalizers of subalgebras.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from ..exterior import linalg
from ..exterior.scalars import ONE, ZERO, Q, FieldScalar

__all__ = ["Quaternion", "QuatMat2", "LieFrame", "build_lie_frame",
           "build_orthonormal_frame", "killing_matrix", "normalizer",
           "is_subalgebra", "generator_coords", "SP1_PLUS", "SP1_MINUS"]

N_GENERATORS = 10
SP1_PLUS = (0, 1, 2)    # A1, A2, A3
SP1_MINUS = (3, 4, 5)   # A4, A5, A6


class Quaternion:
    """w + xi + yj + zk over FieldScalar."""

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0, x=0, y=0, z=0):
        self.w = FieldScalar.of(w)
        self.x = FieldScalar.of(x)
        self.y = FieldScalar.of(y)
        self.z = FieldScalar.of(z)

    def __add__(self, other):
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __sub__(self, other):
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if not isinstance(other, Quaternion):
            s = FieldScalar.of(other)
            return Quaternion(s * self.w, s * self.x, s * self.y, s * self.z)
        w1, x1, y1, z1 = self.w, self.x, self.y, self.z
        w2, x2, y2, z2 = other.w, other.x, other.y, other.z
        return Quaternion(
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        )

    def __rmul__(self, scalar):
        s = FieldScalar.of(scalar)
        return Quaternion(s * self.w, s * self.x, s * self.y, s * self.z)

    def conjugate(self):
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def __eq__(self, other):
        return (isinstance(other, Quaternion) and self.w == other.w
                and self.x == other.x and self.y == other.y
                and self.z == other.z)

    def __hash__(self):
        return hash((self.w, self.x, self.y, self.z))

    def __bool__(self):
        return bool(self.w or self.x or self.y or self.z)

    def __repr__(self):
        return f"Quaternion({self.w}, {self.x}, {self.y}, {self.z})"


_I = Quaternion(0, 1, 0, 0)
_J = Quaternion(0, 0, 1, 0)
_K = Quaternion(0, 0, 0, 1)
_ONE_Q = Quaternion(1, 0, 0, 0)
_ZERO_Q = Quaternion()


class QuatMat2:
    """A 2x2 quaternionic matrix ((a, b), (c, d))."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = a, b, c, d

    def __add__(self, other):
        return QuatMat2(self.a + other.a, self.b + other.b,
                        self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        return QuatMat2(self.a - other.a, self.b - other.b,
                        self.c - other.c, self.d - other.d)

    def __matmul__(self, other):
        return QuatMat2(self.a * other.a + self.b * other.c,
                        self.a * other.b + self.b * other.d,
                        self.c * other.a + self.d * other.c,
                        self.c * other.b + self.d * other.d)

    def __rmul__(self, scalar):
        return QuatMat2(scalar * self.a, scalar * self.b,
                        scalar * self.c, scalar * self.d)

    def conj_transpose(self):
        return QuatMat2(self.a.conjugate(), self.c.conjugate(),
                        self.b.conjugate(), self.d.conjugate())

    def is_anti_hermitian(self):
        zero = self.conj_transpose() + self
        return not (zero.a or zero.b or zero.c or zero.d)

    def bracket(self, other):
        return self @ other - other @ self

    def __eq__(self, other):
        return (isinstance(other, QuatMat2) and self.a == other.a
                and self.b == other.b and self.c == other.c
                and self.d == other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))


# 1/sqrt(12) = sqrt3/6 and 1/sqrt(24) = sqrt6/12, exactly in the field
GENERATOR_NAMES = ("A1", "A2", "A3", "A4", "A5", "A6", "X1", "X2", "X3", "X4")

_CONNECTION_SCALES = (FieldScalar(1), FieldScalar("1/2"))
_ORTHONORMAL_SCALES = (FieldScalar(0, 0, Q(1, 6), 0),     # sqrt(3)/6 = 1/sqrt(12)
                       FieldScalar(0, 0, 0, Q(1, 12)))    # sqrt(6)/12 = 1/sqrt(24)


def _basis_matrices(a_scale: FieldScalar, x_scale: FieldScalar) -> tuple[QuatMat2, ...]:
    diag = lambda p, q: QuatMat2(p, _ZERO_Q, _ZERO_Q, q)
    off = lambda q: QuatMat2(_ZERO_Q, q, -q.conjugate(), _ZERO_Q)
    return (
        a_scale * diag(_I, _ZERO_Q), a_scale * diag(_J, _ZERO_Q),
        a_scale * diag(_K, _ZERO_Q), a_scale * diag(_ZERO_Q, _I),
        a_scale * diag(_ZERO_Q, _J), a_scale * diag(_ZERO_Q, _K),
        x_scale * off(_I), x_scale * off(_J), x_scale * off(_K),
        x_scale * off(_ONE_Q),
    )


def _decompose(m: QuatMat2, a_inv: FieldScalar,
               x_inv: FieldScalar) -> tuple[FieldScalar, ...]:
    """Coordinates of an anti-Hermitian matrix in the ten-generator basis."""
    if m.a.w or m.d.w:
        raise ValueError("diagonal entries must be imaginary")
    coords = (
        a_inv * m.a.x, a_inv * m.a.y, a_inv * m.a.z,
        a_inv * m.d.x, a_inv * m.d.y, a_inv * m.d.z,
        x_inv * m.b.x, x_inv * m.b.y, x_inv * m.b.z, x_inv * m.b.w,
    )
    return coords


@dataclass(frozen=True)
class LieFrame:
    """Ten named generators with exact structure constants c[i][j][k]."""

    names: tuple[str, ...]
    matrices: tuple[QuatMat2, ...]
    structure: tuple[tuple[tuple[FieldScalar, ...], ...], ...]

    def bracket_coords(self, x: Sequence[FieldScalar],
                       y: Sequence[FieldScalar]) -> tuple[FieldScalar, ...]:
        out = [ZERO] * N_GENERATORS
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                cij = self.structure[i][j]
                f = xi * yj
                for k in range(N_GENERATORS):
                    if cij[k]:
                        out[k] = out[k] + f * cij[k]
        return tuple(out)

    def with_structure(self, structure) -> "LieFrame":
        """Same frame with replaced structure constants (fault injection)."""
        return LieFrame(names=self.names, matrices=self.matrices,
                        structure=structure)


def _frame_from_scales(a_scale: FieldScalar, x_scale: FieldScalar) -> LieFrame:
    mats = _basis_matrices(a_scale, x_scale)
    a_inv, x_inv = a_scale.inverse(), x_scale.inverse()
    structure = []
    for i, mi in enumerate(mats):
        row = []
        for j, mj in enumerate(mats):
            br = mi.bracket(mj)
            coords = _decompose(br, a_inv, x_inv)
            # exactness guard: the decomposition must reproduce the bracket
            rebuilt = QuatMat2(_ZERO_Q, _ZERO_Q, _ZERO_Q, _ZERO_Q)
            for c, m in zip(coords, mats):
                rebuilt = rebuilt + c * m
            if rebuilt != br:
                raise ArithmeticError("bracket does not close in the basis")
            row.append(coords)
        structure.append(tuple(row))
    return LieFrame(names=GENERATOR_NAMES, matrices=mats,
                    structure=tuple(structure))


@lru_cache(maxsize=1)
def build_lie_frame() -> LieFrame:
    """The connection-normalized frame (structure constants ±1, ±2, ±1/2)."""
    return _frame_from_scales(*_CONNECTION_SCALES)


@lru_cache(maxsize=1)
def build_orthonormal_frame() -> LieFrame:
    """The same basis rescaled to be Killing-orthonormal (Killing = -Id)."""
    return _frame_from_scales(*_ORTHONORMAL_SCALES)


def killing_matrix(frame: LieFrame) -> list[list[FieldScalar]]:
    """B(e_i, e_j) = tr(ad_i ad_j) from the structure constants."""
    n = N_GENERATORS
    c = frame.structure
    out = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            total = ZERO
            for k in range(n):
                cjk = c[j][k]
                for l in range(n):
                    if cjk[l] and c[i][l][k]:
                        total = total + cjk[l] * c[i][l][k]
            out[i][j] = total
            out[j][i] = total
    return out


def _residual_rows(span_rref: list[list[FieldScalar]],
                   pivots: list[int],
                   vec: Sequence[FieldScalar]) -> list[FieldScalar]:
    """Reduce vec against an RREF span; zero iff vec lies in the span."""
    v = list(vec)
    for row, p in zip(span_rref, pivots):
        f = v[p]
        if f:
            v = [a - f * b for a, b in zip(v, row)]
    return v


def is_subalgebra(frame: LieFrame,
                  basis: Sequence[Sequence[FieldScalar]]) -> bool:
    if not basis:
        return True
    span, pivots = linalg.rref([list(b) for b in basis])
    for x in basis:
        for y in basis:
            res = _residual_rows(span, pivots, frame.bracket_coords(x, y))
            if any(res):
                return False
    return True


def normalizer(frame: LieFrame,
               basis: Sequence[Sequence[FieldScalar]]) -> list[list[FieldScalar]]:
    """Basis of n(h) = {x : [h, x] ⊆ h}, computed infinitesimally.

    Valid as the normalizer of the corresponding connected subgroup.
    Raises if the input does not span a subalgebra.
    """
    if basis and not is_subalgebra(frame, basis):
        raise ValueError("normalizer input must be a subalgebra")
    if not basis:
        return [[ONE if i == j else ZERO for j in range(N_GENERATORS)]
                for i in range(N_GENERATORS)]
    span, pivots = linalg.rref([list(b) for b in basis])
    rows = []
    for h in span:
        # condition rows for [h, e_i] mod span, one per non-pivot coordinate
        images = [frame.bracket_coords(h, [ONE if k == i else ZERO
                                           for k in range(N_GENERATORS)])
                  for i in range(N_GENERATORS)]
        residuals = [_residual_rows(span, pivots, img) for img in images]
        for coord in range(N_GENERATORS):
            if coord in pivots:
                continue
            rows.append([residuals[i][coord] for i in range(N_GENERATORS)])
    return linalg.nullspace(rows, ncols=N_GENERATORS)


def generator_coords(index: int) -> list[FieldScalar]:
    return [ONE if i == index else ZERO for i in range(N_GENERATORS)]
