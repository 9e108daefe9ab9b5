"""Endomorphisms of the covector space and their exterior extensions.

An Endo is an 8x8 exact matrix acting on covectors: entry (i, j) is the
coefficient of e^i in the image of e^j.  Two extensions to Λ^k matter here:

* ``rho(A, a)`` — the derivation (Lie-algebra) action, replacing one slot
  at a time;
* ``pullback(L, a)`` — the multiplicative (group) action Λ^k L.

For nilpotent A the two are linked by pullback(exp A) = exp(rho A); the
Jordan-Chevalley split writes a rational matrix as commuting semisimple
plus nilpotent parts, both polynomials in the input.
"""

from __future__ import annotations

from math import factorial

from . import linalg
from .blades import DIM, contract_sign, wedge_sign
from .scalars import ONE, ZERO, Q, FieldScalar
from .forms import Covector, KForm, Vector, wedge

__all__ = ["Endo", "rho", "pullback", "exp_nilpotent", "char_poly",
           "jordan_chevalley_split", "commutator"]


class Endo:
    """An exact linear map on covectors; rows[i][j] = ⟨e^i | A e^j⟩."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rs = tuple(tuple(FieldScalar.of(x) for x in row) for row in rows)
        if len(rs) != DIM or any(len(r) != DIM for r in rs):
            raise ValueError(f"need an {DIM}x{DIM} matrix")
        self.rows = rs

    # -- construction ---------------------------------------------------

    @staticmethod
    def zero() -> "Endo":
        return Endo([[0] * DIM for _ in range(DIM)])

    @staticmethod
    def identity() -> "Endo":
        return Endo([[1 if i == j else 0 for j in range(DIM)]
                     for i in range(DIM)])

    @staticmethod
    def unit(i: int, j: int) -> "Endo":
        """The elementary map e^j -> e^i (1-based), all else to zero."""
        return Endo([[1 if (r, c) == (i - 1, j - 1) else 0
                      for c in range(DIM)] for r in range(DIM)])

    @staticmethod
    def tensor(v: Vector, alpha: Covector) -> "Endo":
        """v ⊗ alpha as a map on covectors: ε -> ε(v) · alpha."""
        return Endo([[alpha.components[i] * v.components[j]
                      for j in range(DIM)] for i in range(DIM)])

    @staticmethod
    def diagonal(*entries) -> "Endo":
        if len(entries) != DIM:
            raise ValueError(f"need {DIM} diagonal entries")
        return Endo([[entries[i] if i == j else 0 for j in range(DIM)]
                     for i in range(DIM)])

    # -- algebra ----------------------------------------------------------

    def __add__(self, other: "Endo") -> "Endo":
        if not isinstance(other, Endo):
            return NotImplemented
        return Endo([[a + b for a, b in zip(r1, r2)]
                     for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "Endo") -> "Endo":
        if not isinstance(other, Endo):
            return NotImplemented
        return Endo([[a - b for a, b in zip(r1, r2)]
                     for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self) -> "Endo":
        return Endo([[-a for a in r] for r in self.rows])

    def __rmul__(self, scalar) -> "Endo":
        s = FieldScalar.of(scalar)
        return Endo([[s * a for a in r] for r in self.rows])

    __mul__ = __rmul__

    def __matmul__(self, other: "Endo") -> "Endo":
        if not isinstance(other, Endo):
            return NotImplemented
        cols = list(zip(*other.rows))
        return Endo([[sum((a * b for a, b in zip(row, col)), ZERO)
                      for col in cols] for row in self.rows])

    def __pow__(self, n: int) -> "Endo":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = Endo.identity()
        base = self
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, Endo) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __bool__(self):
        return any(any(row) for row in self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"Endo[{body}]"

    # -- actions and predicates ------------------------------------------

    def apply(self, alpha: Covector) -> Covector:
        return Covector(tuple(
            sum((row[j] * alpha.components[j] for j in range(DIM)), ZERO)
            for row in self.rows))

    def transpose(self) -> "Endo":
        return Endo(list(zip(*self.rows)))

    def negative_transpose(self) -> "Endo":
        """The induced action on vectors dual to this action on covectors."""
        return -self.transpose()

    def trace(self) -> FieldScalar:
        return sum((self.rows[i][i] for i in range(DIM)), ZERO)

    def matrix(self) -> list[list[FieldScalar]]:
        return [list(r) for r in self.rows]

    def flatten(self) -> list[FieldScalar]:
        return [x for row in self.rows for x in row]

    def rank(self) -> int:
        return linalg.rank(self.matrix())

    def is_rational(self) -> bool:
        return all(x.is_rational() for row in self.rows for x in row)

    def is_nilpotent(self) -> bool:
        p = self
        for _ in range(3):  # A^8 via three squarings
            if not p:
                return True
            p = p @ p
        return not p

    def is_skew(self) -> bool:
        return all(self.rows[i][j] == -self.rows[j][i]
                   for i in range(DIM) for j in range(i, DIM))

    def to_record(self) -> dict:
        """JSON-ready record; rationals as strings, bit-exact round-trip."""
        return {"rows": [[{"a": str(x.a), "b": str(x.b),
                           "c": str(x.c), "d": str(x.d)} for x in row]
                         for row in self.rows]}

    @staticmethod
    def from_record(record: dict) -> "Endo":
        return Endo([[FieldScalar.from_quadruple((x["a"], x["b"], x["c"], x["d"]))
                      for x in row] for row in record["rows"]])


def commutator(a: Endo, b: Endo) -> Endo:
    return a @ b - b @ a


def rho(a: Endo, form: KForm) -> KForm:
    """Derivation action: replace each slot of each blade by its image."""
    rows = a.rows
    acc: dict[int, FieldScalar] = {}
    for m, coeff in form.mask_items():
        t = m
        while t:
            low = t & -t
            t ^= low
            p = low.bit_length() - 1
            sub = m ^ low
            s_out = contract_sign(p, m)
            for i in range(DIM):
                entry = rows[i][p]
                if not entry:
                    continue
                bit = 1 << i
                if sub & bit:
                    continue
                s_in = wedge_sign(bit, sub)
                term = coeff * entry
                if s_out * s_in == -1:
                    term = -term
                key = sub | bit
                prev = acc.get(key)
                acc[key] = term if prev is None else prev + term
    return KForm(form.degree, acc)


def pullback(l_map: Endo, form: KForm) -> KForm:
    """Λ^k extension: each covector slot is mapped through l_map and wedged."""
    if form.degree == 0:
        return form
    columns = [KForm(1, {1 << i: l_map.rows[i][j]
                         for i in range(DIM) if l_map.rows[i][j]})
               for j in range(DIM)]
    out = KForm(form.degree)
    for m, coeff in form.mask_items():
        image = KForm.constant(1)
        t = m
        while t and image:
            low = t & -t
            t ^= low
            image = wedge(image, columns[low.bit_length() - 1])
        out = out + coeff * image
    return out


def exp_nilpotent(a: Endo) -> Endo:
    """exp of a nilpotent matrix as the finite series sum A^k / k!."""
    if not a.is_nilpotent():
        raise ValueError("exp_nilpotent requires nilpotent input")
    acc = Endo.identity()
    power = Endo.identity()
    for k in range(1, DIM):
        power = power @ a
        if not power:
            break
        acc = acc + FieldScalar(Q(1, factorial(k))) * power
    return acc


# -- characteristic polynomial and the Jordan-Chevalley split ----------------
#
# Rational polynomials are ascending coefficient lists over the rational
# backend Q, trimmed of trailing zeros.  Only the handful of operations the
# Newton iteration needs are implemented.


def char_poly(a: Endo) -> list[FieldScalar]:
    """Monic characteristic polynomial det(λI − A), ascending coefficients."""
    coeffs = [ONE]  # filled from the top degree downward
    m = Endo.identity()
    for k in range(1, DIM + 1):
        am = a @ m
        ck = -(FieldScalar(Q(1, k)) * am.trace())
        coeffs.append(ck)
        m = am + ck * Endo.identity()
    coeffs.reverse()
    return coeffs


def _ptrim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _padd(p, q):
    n = max(len(p), len(q))
    p = p + [Q(0)] * (n - len(p))
    q = q + [Q(0)] * (n - len(q))
    return _ptrim([a + b for a, b in zip(p, q)])


def _pscale(p, s):
    return _ptrim([s * a for a in p]) if s else []


def _pmul(p, q):
    if not p or not q:
        return []
    out = [Q(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _ptrim(out)


def _pdivmod(p, q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quo = [Q(0)] * max(0, len(p) - len(q) + 1)
    inv = Q(1) / q[-1]
    while len(r) >= len(q) and _ptrim(r):
        shift = len(r) - len(q)
        factor = r[-1] * inv
        quo[shift] = factor
        for i, b in enumerate(q):
            r[shift + i] -= factor * b
        r.pop()
    return _ptrim(quo), _ptrim(r)


def _pgcd(p, q):
    p, q = _ptrim(list(p)), _ptrim(list(q))
    while q:
        p, q = q, _pdivmod(p, q)[1]
    if p:
        inv = Q(1) / p[-1]
        p = [a * inv for a in p]
    return p


def _pxgcd(p, q):
    """(g, u, v) with u*p + v*q = g, g monic."""
    r0, r1 = _ptrim(list(p)), _ptrim(list(q))
    u0, u1 = [Q(1)], []
    v0, v1 = [], [Q(1)]
    while r1:
        quo, rem = _pdivmod(r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, _padd(u0, _pscale(_pmul(quo, u1), Q(-1)))
        v0, v1 = v1, _padd(v0, _pscale(_pmul(quo, v1), Q(-1)))
    if r0:
        inv = Q(1) / r0[-1]
        r0 = [a * inv for a in r0]
        u0 = _pscale(u0, inv)
        v0 = _pscale(v0, inv)
    return r0, u0, v0


def _pderiv(p):
    return _ptrim([Q(i) * a for i, a in enumerate(p)][1:])


def _peval_endo(p, a: Endo) -> Endo:
    out = Endo.zero()
    for coeff in reversed(p):
        out = out @ a + FieldScalar(coeff) * Endo.identity()
    return out


def jordan_chevalley_split(a: Endo) -> tuple[Endo, Endo]:
    """A = S + N with S semisimple, N nilpotent, [S, N] = 0, over the rationals.

    Newton iteration against the squarefree part g of the characteristic
    polynomial: S ← S − g(S)·v(S) where u·g + v·g' = 1.  Both outputs are
    polynomials in the input.
    """
    if not a.is_rational():
        raise ValueError("split implemented over the rationals only")
    p = [c.rational_value() for c in char_poly(a)]
    g = _pdivmod(p, _pgcd(p, _pderiv(p)))[0]
    gd = _pderiv(g)
    one, _, v = _pxgcd(g, gd)
    if one != [Q(1)]:
        raise ArithmeticError("squarefree part is not coprime to its derivative")
    s = a
    for _ in range(DIM):
        g_s = _peval_endo(g, s)
        if not g_s:
            break
        s = s - g_s @ _peval_endo(v, s)
    else:
        raise ArithmeticError("Newton iteration failed to converge")
    return s, a - s
