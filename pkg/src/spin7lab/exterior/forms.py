"""Sparse exterior algebra on R^8 with exact field coefficients.

KForm stores a degree and a map from blade masks to FieldScalar; zero
coefficients are pruned eagerly so equality is structural.  The metric is
the standard Euclidean one with {e^1..e^8} orthonormal and orientation
e^{12345678}, which fixes the Hodge star and the musical isomorphisms.
The interior product contracts the first slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

from . import linalg
from .blades import (DIM, FULL_MASK, blades_of_degree, complement_sign,
                     contract_sign, indices_of, mask_of, wedge_sign)
from .scalars import ONE, ZERO, FieldScalar

__all__ = ["MultiIndex", "Vector", "Covector", "KForm", "wedge", "contract",
           "hodge_star", "inner", "nullspace_on_forms", "basis_blades"]


@dataclass(frozen=True)
class MultiIndex:
    """A strictly increasing tuple of indices in 1..8, i.e. a basis blade."""

    indices: tuple[int, ...]

    def __post_init__(self):
        if list(self.indices) != sorted(set(self.indices)):
            raise ValueError("multi-index must be strictly increasing")
        if self.indices and not (1 <= self.indices[0] and self.indices[-1] <= DIM):
            raise ValueError(f"indices must lie in 1..{DIM}")

    @staticmethod
    def from_unsorted(indices: Iterable[int]) -> tuple[int, "MultiIndex"]:
        """(sign, canonical multi-index); sign 0 when an index repeats."""
        sign, mask = mask_of(indices)
        return sign, MultiIndex(indices_of(mask))

    @property
    def mask(self) -> int:
        return mask_of(self.indices)[1]

    def __len__(self):
        return len(self.indices)

    def __str__(self):
        return "e^{" + "".join(map(str, self.indices)) + "}"


class _EightTuple:
    """Shared implementation for vectors and covectors (8 exact components)."""

    __slots__ = ("components",)

    def __init__(self, components):
        comps = tuple(FieldScalar.of(c) for c in components)
        if len(comps) != DIM:
            raise ValueError(f"expected {DIM} components, got {len(comps)}")
        self.components = comps

    @classmethod
    def zero(cls):
        return cls((0,) * DIM)

    @classmethod
    def basis(cls, i: int):
        if not 1 <= i <= DIM:
            raise ValueError(f"basis index {i} out of range 1..{DIM}")
        return cls(tuple(1 if k == i - 1 else 0 for k in range(DIM)))

    def __getitem__(self, i: int) -> FieldScalar:
        """Component with 1-based index, matching e_i / e^i labels."""
        return self.components[i - 1]

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(tuple(a + b for a, b in
                                zip(self.components, other.components)))

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(tuple(a - b for a, b in
                                zip(self.components, other.components)))

    def __neg__(self):
        return type(self)(tuple(-a for a in self.components))

    def __rmul__(self, scalar):
        s = FieldScalar.of(scalar)
        return type(self)(tuple(s * a for a in self.components))

    __mul__ = __rmul__

    def __eq__(self, other):
        return type(other) is type(self) and self.components == other.components

    def __hash__(self):
        return hash((type(self).__name__, self.components))

    def __bool__(self):
        return any(self.components)

    def __repr__(self):
        inner_ = ", ".join(str(c) for c in self.components)
        return f"{type(self).__name__}({inner_})"


class Vector(_EightTuple):
    """A tangent vector v = sum v_i e_i."""

    def flat(self) -> "Covector":
        """Musical isomorphism: the metric is Euclidean, so components copy."""
        return Covector(self.components)

    def dot(self, other: "Vector") -> FieldScalar:
        return sum((a * b for a, b in zip(self.components, other.components)),
                   ZERO)


class Covector(_EightTuple):
    """A one-form alpha = sum alpha_i e^i."""

    def sharp(self) -> Vector:
        return Vector(self.components)

    def form(self) -> "KForm":
        return KForm(1, {1 << i: c for i, c in enumerate(self.components) if c})

    def __call__(self, v: Vector) -> FieldScalar:
        return sum((a * b for a, b in zip(self.components, v.components)), ZERO)


class KForm:
    """A homogeneous exterior form, degree 0..8, sparse over basis blades."""

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: dict[int, FieldScalar] | None = None):
        if not 0 <= degree:
            raise ValueError("degree must be nonnegative")
        self.degree = degree
        self._terms = {m: c for m, c in (terms or {}).items() if c}
        for m in self._terms:
            if m.bit_count() != degree:
                raise ValueError(f"blade {indices_of(m)} has wrong degree")

    # -- construction --------------------------------------------------

    @staticmethod
    def zero(degree: int) -> "KForm":
        return KForm(degree)

    @staticmethod
    def blade(*indices: int, coeff=1) -> "KForm":
        sign, mask = mask_of(indices)
        if sign == 0:
            return KForm(len(indices))
        c = FieldScalar.of(coeff)
        return KForm(len(indices), {mask: sign * c} if c else {})

    @staticmethod
    def constant(c) -> "KForm":
        c = FieldScalar.of(c)
        return KForm(0, {0: c} if c else {})

    @staticmethod
    def from_terms(degree: int, terms) -> "KForm":
        """Build from (indices, coeff) pairs; unsorted indices are canonicalized."""
        acc: dict[int, FieldScalar] = {}
        for indices, coeff in terms:
            sign, mask = mask_of(indices)
            if sign == 0:
                continue
            c = sign * FieldScalar.of(coeff)
            acc[mask] = acc.get(mask, ZERO) + c
        return KForm(degree, acc)

    # -- inspection -----------------------------------------------------

    def terms(self) -> list[tuple[tuple[int, ...], FieldScalar]]:
        """Sorted (indices, coefficient) pairs; the canonical readout."""
        return [(indices_of(m), c)
                for m, c in sorted(self._terms.items(),
                                   key=lambda mc: indices_of(mc[0]))]

    def mask_items(self):
        return self._terms.items()

    def coefficient(self, *indices: int) -> FieldScalar:
        sign, mask = mask_of(indices)
        if sign == 0:
            return ZERO
        return sign * self._terms.get(mask, ZERO)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        if self._terms == other._terms:
            return self.degree == other.degree or not self._terms
        return False

    def __hash__(self):
        return hash((self.degree, frozenset(self._terms.items())))

    # -- linear structure -------------------------------------------------

    def __add__(self, other: "KForm") -> "KForm":
        if not isinstance(other, KForm):
            return NotImplemented
        if self.degree != other.degree and self and other:
            raise ValueError("cannot add forms of different degrees")
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, ZERO) + c
        return KForm(self.degree if self else other.degree, acc)

    def __sub__(self, other: "KForm") -> "KForm":
        return self + (-other)

    def __neg__(self) -> "KForm":
        return KForm(self.degree, {m: -c for m, c in self._terms.items()})

    def __rmul__(self, scalar) -> "KForm":
        s = FieldScalar.of(scalar)
        if not s:
            return KForm(self.degree)
        return KForm(self.degree, {m: s * c for m, c in self._terms.items()})

    __mul__ = __rmul__

    def __xor__(self, other: "KForm") -> "KForm":
        return wedge(self, other)

    def __str__(self):
        if not self._terms:
            return "0"
        bits = []
        for indices, c in self.terms():
            blade = "e^{" + "".join(map(str, indices)) + "}" if indices else "1"
            bits.append(f"({c})*{blade}")
        return " + ".join(bits)

    __repr__ = __str__

    def to_record(self) -> dict:
        """JSON-ready record; rationals as strings, bit-exact round-trip."""
        return {
            "degree": self.degree,
            "terms": [
                {"indices": list(indices),
                 "coeff": {"a": str(c.a), "b": str(c.b),
                           "c": str(c.c), "d": str(c.d)}}
                for indices, c in self.terms()
            ],
        }

    @staticmethod
    def from_record(record: dict) -> "KForm":
        terms = {}
        for t in record["terms"]:
            sign, mask = mask_of(t["indices"])
            if sign != 1:
                raise ValueError("serialized indices must be strictly increasing")
            co = t["coeff"]
            terms[mask] = FieldScalar.from_quadruple(
                (co["a"], co["b"], co["c"], co["d"]))
        return KForm(int(record["degree"]), terms)


# -- the four classical operations ------------------------------------------


def wedge(a: KForm, b: KForm) -> KForm:
    acc: dict[int, FieldScalar] = {}
    for m1, c1 in a._terms.items():
        for m2, c2 in b._terms.items():
            if m1 & m2:
                continue
            s = wedge_sign(m1, m2)
            m = m1 | m2
            prev = acc.get(m)
            term = c1 * c2 if s == 1 else -(c1 * c2)
            acc[m] = term if prev is None else prev + term
    return KForm(a.degree + b.degree, acc)


def contract(v: Vector, a: KForm) -> KForm:
    """Interior product v ⌟ a, contracting the first slot."""
    if a.degree == 0:
        raise ValueError("cannot contract a scalar")
    acc: dict[int, FieldScalar] = {}
    for slot in range(DIM):
        comp = v.components[slot]
        if not comp:
            continue
        bit = 1 << slot
        for m, c in a._terms.items():
            if not (m & bit):
                continue
            s = contract_sign(slot, m)
            sub = m ^ bit
            term = comp * c if s == 1 else -(comp * c)
            prev = acc.get(sub)
            acc[sub] = term if prev is None else prev + term
    return KForm(a.degree - 1, acc)


def hodge_star(a: KForm) -> KForm:
    """Euclidean Hodge star with orientation e^{12345678}."""
    acc = {}
    for m, c in a._terms.items():
        s = complement_sign(m)
        acc[FULL_MASK ^ m] = s * c
    return KForm(DIM - a.degree, acc)


def inner(a: KForm, b: KForm) -> FieldScalar:
    """The inner product with {e^I} orthonormal: sum of matched coefficients."""
    if len(b._terms) < len(a._terms):
        a, b = b, a
    total = ZERO
    for m, c in a._terms.items():
        other = b._terms.get(m)
        if other is not None:
            total = total + c * other
    return total


def basis_blades(k: int) -> list[KForm]:
    return [KForm(k, {m: ONE}) for m in blades_of_degree(k)]


def nullspace_on_forms(op: Callable[[KForm], KForm] | Sequence[KForm],
                       degree: int) -> list[KForm]:
    """Exact kernel basis of a linear operator on Λ^degree.

    The operator may be a callable on KForms or a precomputed list of the
    images of the canonical basis blades.  Output forms are canonical
    (reduced echelon coordinates over the blade basis) and exactly kill op.
    """
    domain = blades_of_degree(degree)
    if callable(op):
        images = [op(KForm(degree, {m: ONE})) for m in domain]
    else:
        images = list(op)
        if len(images) != len(domain):
            raise ValueError("need one image per basis blade")
    rows_masks = sorted({m for img in images for m, _ in img.mask_items()})
    row_index = {m: i for i, m in enumerate(rows_masks)}
    matrix = [[ZERO] * len(domain) for _ in rows_masks]
    for j, img in enumerate(images):
        for m, c in img.mask_items():
            matrix[row_index[m]][j] = c
    kernel = linalg.nullspace(matrix, ncols=len(domain))
    return [KForm(degree, {m: c for m, c in zip(domain, vec) if c})
            for vec in kernel]
