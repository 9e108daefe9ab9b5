"""Exact function ring and coframe calculus on the cohomogeneity-one chamber.

Radial functions live in the ring F[s, w, w⁻¹]/(w⁵ − 1 − s²) over
F = Q(sqrt2, sqrt3): the substitution s = sqrt(t), w = (1 + s²)^{1/5}
turns every fractional power appearing in the geometry into a Laurent
polynomial, so d, wedge and Lie derivatives stay exact.  The derivation is
determined by ∂_s w = (2/5) s w⁻⁴.

ChamberForm is the exterior algebra over the 11 coframe generators
{ds, A¹..A⁶, X¹..X⁴}; the differential combines ∂_s on coefficients with
the Maurer-Cartan equation de^k = −Σ_{i<j} c^k_{ij} e^i∧e^j.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from ..exterior.blades import contract_sign, wedge_sign
from ..exterior.scalars import ONE, ZERO, Q, FieldScalar
from .liealg import LieFrame, N_GENERATORS, build_lie_frame

__all__ = ["ChamberScalar", "ChamberForm", "COFRAME_NAMES", "S", "W", "W_INV",
           "T", "maurer_cartan_d", "contract_generator", "lie_derivative"]

COFRAME_NAMES = ("ds", "A1", "A2", "A3", "A4", "A5", "A6",
                 "X1", "X2", "X3", "X4")
N_COFRAME = len(COFRAME_NAMES)

_TWO_FIFTHS = FieldScalar(Q(2, 5))


class ChamberScalar:
    """An element of F[s, w, w⁻¹]/(w⁵ − 1 − s²) in canonical form.

    Stored as a map (s_exp, net_w_exp) -> FieldScalar where the net
    exponents are those of the unique representative numerator·w^{-k} with
    k minimal and numerator w-degrees in 0..4.
    """

    __slots__ = ("terms",)

    def __init__(self, raw: dict[tuple[int, int], FieldScalar] | None = None):
        self.terms = _canonical(raw or {})

    # -- constructors ---------------------------------------------------

    @staticmethod
    def of(x) -> "ChamberScalar":
        if isinstance(x, ChamberScalar):
            return x
        return ChamberScalar({(0, 0): FieldScalar.of(x)})

    @staticmethod
    def _coerce(x):
        if isinstance(x, ChamberScalar):
            return x
        if isinstance(x, (int, FieldScalar)):
            return ChamberScalar({(0, 0): FieldScalar.of(x)})
        return None

    @staticmethod
    def monomial(coeff, s_exp: int = 0, w_exp: int = 0) -> "ChamberScalar":
        return ChamberScalar({(s_exp, w_exp): FieldScalar.of(coeff)})

    @staticmethod
    def from_terms(entries: Iterable[tuple[int, int, object]]) -> "ChamberScalar":
        raw: dict[tuple[int, int], FieldScalar] = {}
        for s_exp, w_exp, coeff in entries:
            key = (s_exp, w_exp)
            raw[key] = raw.get(key, ZERO) + FieldScalar.of(coeff)
        return ChamberScalar(raw)

    # -- ring structure ---------------------------------------------------

    def __add__(self, other):
        other = ChamberScalar._coerce(other)
        if other is None:
            return NotImplemented
        raw = dict(self.terms)
        for key, c in other.terms.items():
            raw[key] = raw.get(key, ZERO) + c
        return ChamberScalar(raw)

    __radd__ = __add__

    def __sub__(self, other):
        other = ChamberScalar._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = ChamberScalar._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        out = ChamberScalar.__new__(ChamberScalar)
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, (int, FieldScalar)):
            s = FieldScalar.of(other)
            if not s:
                return ChamberScalar()
            out = ChamberScalar.__new__(ChamberScalar)
            out.terms = {k: s * c for k, c in self.terms.items()}
            return out
        if not isinstance(other, ChamberScalar):
            return NotImplemented
        raw: dict[tuple[int, int], FieldScalar] = {}
        for (s1, w1), c1 in self.terms.items():
            for (s2, w2), c2 in other.terms.items():
                key = (s1 + s2, w1 + w2)
                prev = raw.get(key)
                term = c1 * c2
                raw[key] = term if prev is None else prev + term
        return ChamberScalar(raw)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in the ring")
        out = ChamberScalar.of(1)
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, FieldScalar)):
            other = ChamberScalar.of(other)
        if not isinstance(other, ChamberScalar):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- calculus and predicates -----------------------------------------

    def derivative(self) -> "ChamberScalar":
        """∂_s, with ∂_s w = (2/5) s w⁻⁴."""
        raw: dict[tuple[int, int], FieldScalar] = {}
        for (a, e), c in self.terms.items():
            if a:
                key = (a - 1, e)
                raw[key] = raw.get(key, ZERO) + FieldScalar(a) * c
            if e:
                key = (a + 1, e - 5)
                raw[key] = raw.get(key, ZERO) + (_TWO_FIFTHS * FieldScalar(e)) * c
        return ChamberScalar(raw)

    def is_even_in_s(self) -> bool:
        return all(a % 2 == 0 for (a, _e) in self.terms)

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self.terms)

    def evaluate(self, s_value) -> FieldScalar:
        """Value at a rational point of the s-axis; defined for w-free
        elements only (the canonical form of a genuine w-power never has
        w-exponent zero everywhere)."""
        s_value = FieldScalar.of(s_value)
        out = ZERO
        for (a, e), c in self.terms.items():
            if e:
                raise ValueError("cannot evaluate a w-dependent coefficient at a point")
            out = out + c * s_value ** a
        return out

    def sorted_terms(self) -> list[tuple[int, int, FieldScalar]]:
        return [(a, e, c) for (a, e), c in sorted(self.terms.items())]

    def to_record(self) -> dict:
        return {"terms": [{"s_exp": a, "w_exp": e,
                           "coeff": {"a": str(c.a), "b": str(c.b),
                                     "c": str(c.c), "d": str(c.d)}}
                          for a, e, c in self.sorted_terms()]}

    @staticmethod
    def from_record(record: dict) -> "ChamberScalar":
        raw = {}
        for t in record["terms"]:
            co = t["coeff"]
            raw[(int(t["s_exp"]), int(t["w_exp"]))] = FieldScalar.from_quadruple(
                (co["a"], co["b"], co["c"], co["d"]))
        return ChamberScalar(raw)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for a, e, c in self.sorted_terms():
            mono = "*".join(filter(None, [
                f"({c})", f"s^{a}" if a else "", f"w^{e}" if e else ""]))
            bits.append(mono)
        return " + ".join(bits)

    __repr__ = __str__


def _canonical(raw: dict[tuple[int, int], FieldScalar]) -> dict[tuple[int, int], FieldScalar]:
    """Reduce to the unique representative with minimal w-denominator."""
    terms = {k: c for k, c in raw.items() if c}
    if not terms:
        return {}
    shift = max(0, -min(e for (_a, e) in terms))
    # numerator form: all w-exponents >= 0
    num: dict[tuple[int, int], FieldScalar] = {}
    for (a, e), c in terms.items():
        num[(a, e + shift)] = num.get((a, e + shift), ZERO) + c
    # reduce w-degree into 0..4 using w⁵ = 1 + s²
    while True:
        high = [(a, e) for (a, e) in num if e >= 5]
        if not high:
            break
        for a, e in high:
            c = num.pop((a, e))
            for key in ((a, e - 5), (a + 2, e - 5)):
                num[key] = num.get(key, ZERO) + c
        num = {k: c for k, c in num.items() if c}
    # minimality: divide numerator by w while the shift allows and the
    # w⁰ layer is divisible by 1 + s² in F[s]
    while shift > 0:
        layer0 = {a: c for (a, e), c in num.items() if e == 0}
        quotient = _divide_by_one_plus_s2(layer0)
        if quotient is None:
            break
        nxt: dict[tuple[int, int], FieldScalar] = {}
        for (a, e), c in num.items():
            if e:
                nxt[(a, e - 1)] = nxt.get((a, e - 1), ZERO) + c
        for a, c in quotient.items():
            nxt[(a, 4)] = nxt.get((a, 4), ZERO) + c
        num = {k: c for k, c in nxt.items() if c}
        shift -= 1
        if not num:
            break
    return {(a, e - shift): c for (a, e), c in num.items()}


def _divide_by_one_plus_s2(poly: dict[int, FieldScalar]) -> dict[int, FieldScalar] | None:
    """Exact quotient of a polynomial in s by (1 + s²), or None."""
    if not poly:
        return {}
    rem = dict(poly)
    out: dict[int, FieldScalar] = {}
    for deg in range(max(rem), 1, -1):
        c = rem.get(deg)
        if not c:
            continue
        out[deg - 2] = c
        rem.pop(deg)
        low = rem.get(deg - 2, ZERO) - c
        if low:
            rem[deg - 2] = low
        else:
            rem.pop(deg - 2, None)
    return None if any(rem.values()) else out


S = ChamberScalar.monomial(1, 1, 0)
W = ChamberScalar.monomial(1, 0, 1)
W_INV = ChamberScalar.monomial(1, 0, -1)
T = S * S

_ZERO_SCALAR = ChamberScalar()


class ChamberForm:
    """Exterior form over the 11 chamber coframe generators."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int,
                 terms: dict[int, ChamberScalar] | None = None):
        self.degree = degree
        self.terms = {m: c for m, c in (terms or {}).items() if c}
        for m in self.terms:
            if m.bit_count() != degree:
                raise ValueError("blade has wrong degree")

    @staticmethod
    def zero(degree: int = 0) -> "ChamberForm":
        return ChamberForm(degree)

    @staticmethod
    def generator(slot: int) -> "ChamberForm":
        """The coframe covector for a slot: 0 = ds, 1..6 = A, 7..10 = X."""
        if not 0 <= slot < N_COFRAME:
            raise ValueError(f"slot {slot} out of range 0..{N_COFRAME - 1}")
        return ChamberForm(1, {1 << slot: ChamberScalar.of(1)})

    @staticmethod
    def blade(*slots: int, coeff=1) -> "ChamberForm":
        mask = 0
        sign = 1
        for slot in slots:
            bit = 1 << slot
            if mask & bit:
                return ChamberForm(len(slots))
            if (mask >> (slot + 1)).bit_count() & 1:
                sign = -sign
            mask |= bit
        c = ChamberScalar.of(coeff)
        if sign == -1:
            c = -c
        return ChamberForm(len(slots), {mask: c})

    @staticmethod
    def scalar(coeff) -> "ChamberForm":
        return ChamberForm(0, {0: ChamberScalar.of(coeff)})

    def __add__(self, other: "ChamberForm") -> "ChamberForm":
        if self.terms and other.terms and self.degree != other.degree:
            raise ValueError("cannot add forms of different degrees")
        acc = dict(self.terms)
        for m, c in other.terms.items():
            prev = acc.get(m)
            acc[m] = c if prev is None else prev + c
        return ChamberForm(self.degree if self.terms else other.degree, acc)

    def __sub__(self, other: "ChamberForm") -> "ChamberForm":
        return self + (-other)

    def __neg__(self) -> "ChamberForm":
        out = ChamberForm.__new__(ChamberForm)
        out.degree = self.degree
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __rmul__(self, scalar) -> "ChamberForm":
        c = ChamberScalar.of(scalar)
        return ChamberForm(self.degree,
                           {m: c * x for m, x in self.terms.items()})

    __mul__ = __rmul__

    def wedge(self, other: "ChamberForm") -> "ChamberForm":
        acc: dict[int, ChamberScalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                if m1 & m2:
                    continue
                term = c1 * c2
                if wedge_sign(m1, m2) == -1:
                    term = -term
                key = m1 | m2
                prev = acc.get(key)
                acc[key] = term if prev is None else prev + term
        return ChamberForm(self.degree + other.degree, acc)

    __xor__ = wedge

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ChamberForm):
            return NotImplemented
        if self.terms == other.terms:
            return self.degree == other.degree or not self.terms
        return False

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def coefficient(self, *slots: int) -> ChamberScalar:
        probe = ChamberForm.blade(*slots)
        if not probe.terms:
            return _ZERO_SCALAR
        ((mask, c),) = probe.terms.items()
        got = self.terms.get(mask, _ZERO_SCALAR)
        return got if c == ChamberScalar.of(1) else -got

    def blades(self) -> list[tuple[tuple[int, ...], ChamberScalar]]:
        out = []
        for m in sorted(self.terms, key=_mask_slots):
            out.append((_mask_slots(m), self.terms[m]))
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for slots, c in self.blades():
            label = "^".join(COFRAME_NAMES[s] for s in slots) or "1"
            bits.append(f"[{c}] {label}")
        return "  +  ".join(bits)

    __repr__ = __str__

    def to_record(self) -> dict:
        return {"degree": self.degree,
                "terms": [{"slots": list(slots),
                           "names": [COFRAME_NAMES[s] for s in slots],
                           "coefficient": c.to_record()}
                          for slots, c in self.blades()]}

    @staticmethod
    def from_record(record: dict) -> "ChamberForm":
        acc: dict[int, ChamberScalar] = {}
        for t in record["terms"]:
            mask = 0
            for slot in t["slots"]:
                mask |= 1 << int(slot)
            acc[mask] = ChamberScalar.from_record(t["coefficient"])
        return ChamberForm(int(record["degree"]), acc)


def _mask_slots(mask: int) -> tuple[int, ...]:
    out = []
    t = mask
    while t:
        low = t & -t
        out.append(low.bit_length() - 1)
        t ^= low
    return tuple(out)


def _coframe_differentials(frame: LieFrame) -> list[ChamberForm]:
    """d(e^k) = −Σ_{i<j} c^k_{ij} e^i ∧ e^j for each coframe slot."""
    out = [ChamberForm.zero(2)]  # d(ds) = 0
    for k in range(N_GENERATORS):
        acc: dict[int, ChamberScalar] = {}
        for i in range(N_GENERATORS):
            for j in range(i + 1, N_GENERATORS):
                c = frame.structure[i][j][k]
                if c:
                    # slots are generator index + 1 (slot 0 is ds)
                    mask = (1 << (i + 1)) | (1 << (j + 1))
                    acc[mask] = acc.get(mask, _ZERO_SCALAR) - ChamberScalar.of(c)
        out.append(ChamberForm(2, acc))
    return out


def maurer_cartan_d(form: ChamberForm,
                    frame: LieFrame | None = None) -> ChamberForm:
    """Exterior derivative: ∂_s on coefficients plus Maurer-Cartan terms."""
    frame = frame or build_lie_frame()
    dgen = _coframe_differentials(frame)
    out = ChamberForm.zero(form.degree + 1)
    ds = ChamberForm.generator(0)
    for mask, coeff in form.terms.items():
        dcoeff = coeff.derivative()
        if dcoeff:
            out = out + dcoeff * ds.wedge(ChamberForm(form.degree, {mask: ChamberScalar.of(1)}))
        t = mask
        while t:
            low = t & -t
            t ^= low
            slot = low.bit_length() - 1
            if slot == 0:
                continue  # d(ds) = 0
            d_slot = dgen[slot]
            if not d_slot:
                continue
            sign = contract_sign(slot, mask)
            rest = ChamberForm(form.degree - 1, {mask ^ low: ChamberScalar.of(1)})
            piece = coeff * d_slot.wedge(rest)
            out = out + (piece if sign == 1 else -piece)
    return out


def contract_generator(slot: int, form: ChamberForm) -> ChamberForm:
    """Interior product with a coframe-dual generator (first slot)."""
    if form.degree == 0:
        raise ValueError("cannot contract a scalar")
    bit = 1 << slot
    acc: dict[int, ChamberScalar] = {}
    for mask, coeff in form.terms.items():
        if not (mask & bit):
            continue
        sign = contract_sign(slot, mask)
        acc[mask ^ bit] = coeff if sign == 1 else -coeff
    return ChamberForm(form.degree - 1, acc)


def lie_derivative(slot: int, form: ChamberForm,
                   frame: LieFrame | None = None) -> ChamberForm:
    """Cartan formula L_X = d ∘ ι_X + ι_X ∘ d for a coframe-dual generator."""
    frame = frame or build_lie_frame()
    inner = maurer_cartan_d(contract_generator(slot, form), frame)
    outer = contract_generator(slot, maurer_cartan_d(form, frame))
    return inner + outer
