"""Classification of nilpotent perturbation directions for the Cayley form.

For each of the 22 nilpotent Jordan types on R^8 this module builds the
canonical representative A, the kernel K = {ω ∈ Λ⁴ : ρ(A)²ω = 0}, and a
certificate deciding whether K can meet the GL(8)-orbit of the Cayley
form.  The obstruction is degeneracy: if some pair of dual vectors (u, v)
has (u⌟v⌟ω)³ = 0 for EVERY ω ∈ K — proved by expanding the cubic's
coefficients, not by sampling — then no orbit element lies in K and the
type is excluded.  Exactly the rank-one type (2,1,...,1) and the zero type
(1,...,1) survive.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations
from math import gcd, lcm
from typing import Iterator

from .exterior.blades import DIM, blades_of_degree, wedge_sign
from .exterior.forms import Covector, KForm, Vector, contract
from .exterior.endo import Endo, rho
from .exterior.scalars import FieldScalar
from . import cayley
from .sampling import random_rank_one_nilpotent

__all__ = ["YoungDiagram", "JordanRepresentative", "KernelSpace",
           "Certificate", "ClassificationReport", "enumerate_diagrams",
           "representative", "jordan_type_of", "kernel_space",
           "cubic_vanishes_on_subspace", "find_certificate",
           "classification_report"]


@dataclass(frozen=True)
class YoungDiagram:
    """A partition of 8 = the Jordan type of a nilpotent endomorphism."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts or sum(self.parts) != DIM:
            raise ValueError(f"parts must sum to {DIM}")
        if any(p <= 0 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be weakly decreasing")

    @staticmethod
    def of(*parts: int) -> "YoungDiagram":
        return YoungDiagram(tuple(parts))

    def blocks(self) -> list[tuple[int, int]]:
        """(start position, size) for each Jordan block, positions 1-based."""
        out = []
        pos = 1
        for size in self.parts:
            out.append((pos, size))
            pos += size
        return out

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def enumerate_diagrams() -> tuple[YoungDiagram, ...]:
    """All 22 partitions of 8 in descending lexicographic order."""

    def gen(n: int, maxpart: int):
        if n == 0:
            yield ()
            return
        for k in range(min(n, maxpart), 0, -1):
            for rest in gen(n - k, k):
                yield (k,) + rest

    return tuple(YoungDiagram(p) for p in gen(DIM, DIM))


@dataclass(frozen=True)
class JordanRepresentative:
    """Canonical nilpotent matrix for a diagram, with labeled Jordan basis.

    The covector starting a block of size >= 2 at position p is labeled
    ``w{p}``; every other basis covector is ``v{p}``.  The matrix sends
    each chain covector to the next one and the chain ends to zero.
    """

    diagram: YoungDiagram
    matrix: Endo
    labels: tuple[str, ...]

    @property
    def w_positions(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, lab in enumerate(self.labels)
                     if lab.startswith("w"))

    @property
    def v_positions(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, lab in enumerate(self.labels)
                     if lab.startswith("v"))

    def generator(self, label: str) -> Covector:
        return Covector.basis(self.labels.index(label) + 1)

    def dual_vector(self, label: str) -> Vector:
        return Vector.basis(self.labels.index(label) + 1)

    def labeled_duals(self) -> list[tuple[str, Vector]]:
        return [(lab, Vector.basis(i + 1))
                for i, lab in enumerate(self.labels)]

    def tensorial(self) -> list[tuple[Vector, Covector]]:
        """The chain steps as rank-one pieces: A = Σ (dual at p) ⊗ e^{p+1}."""
        out = []
        for start, size in self.diagram.blocks():
            for k in range(size - 1):
                out.append((Vector.basis(start + k),
                            Covector.basis(start + k + 1)))
        return out


def representative(diagram: YoungDiagram) -> JordanRepresentative:
    labels = [""] * DIM
    matrix = Endo.zero()
    for start, size in diagram.blocks():
        labels[start - 1] = (f"w{start}" if size >= 2 else f"v{start}")
        for k in range(1, size):
            labels[start - 1 + k] = f"v{start + k}"
        for k in range(size - 1):
            matrix = matrix + Endo.unit(start + k + 1, start + k)
    return JordanRepresentative(diagram=diagram, matrix=matrix,
                                labels=tuple(labels))


def jordan_type_of(a: Endo) -> YoungDiagram:
    """Recover the partition from the rank sequence of powers."""
    if not a.is_nilpotent():
        raise ValueError("jordan type computed for nilpotent input only")
    ranks = [DIM]
    power = Endo.identity()
    while ranks[-1]:
        power = power @ a
        ranks.append(power.rank())
    blocks_ge = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    blocks_ge.append(0)
    parts = []
    for size in range(len(blocks_ge) - 1, 0, -1):
        parts.extend([size] * (blocks_ge[size - 1] - blocks_ge[size]))
    return YoungDiagram(tuple(sorted(parts, reverse=True)))


@dataclass(frozen=True)
class KernelSpace:
    """K = {ω ∈ Λ⁴ : ρ(A)²ω = 0} for the diagram's representative."""

    diagram: YoungDiagram
    basis: tuple[KForm, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def kernel_space(diagram: YoungDiagram) -> KernelSpace:
    a = representative(diagram).matrix
    from .exterior.forms import nullspace_on_forms
    basis = nullspace_on_forms(lambda b: rho(a, rho(a, b)), 4)
    return KernelSpace(diagram=diagram, basis=tuple(basis))


# -- the cubic certificate ----------------------------------------------------
#
# (u⌟v⌟ Σ xᵢωᵢ)³ is a cubic in x with Λ⁶-valued coefficients.  Since the
# two-forms qᵢ = u⌟v⌟ωᵢ commute, it vanishes identically iff
# qᵢ∧qⱼ∧q_k = 0 for all i ≤ j ≤ k.  Coefficients are scaled to primitive
# integers (allowed: each triple rescales by a nonzero factor), so the
# inner loops run on plain ints.


def _scaled_terms(q: KForm) -> list[tuple[int, int]] | list[tuple[int, FieldScalar]]:
    items = list(q.mask_items())
    if all(c.is_rational() for _, c in items):
        scale = lcm(*(int(c.a.denominator) for _, c in items))
        ints = [(m, int(c.a * scale)) for m, c in items]
        g = gcd(*(abs(x) for _, x in ints))
        return [(m, x // g) for m, x in ints]
    return items


def _wedge_terms(t1, t2):
    acc: dict[int, object] = {}
    for m1, c1 in t1:
        for m2, c2 in t2:
            if m1 & m2:
                continue
            term = c1 * c2 if wedge_sign(m1, m2) == 1 else -(c1 * c2)
            key = m1 | m2
            prev = acc.get(key)
            acc[key] = term if prev is None else prev + term
    return [(m, c) for m, c in acc.items() if c]


def cubic_vanishes_on_subspace(u: Vector, v: Vector,
                               kernel: KernelSpace) -> bool:
    """True iff (u⌟v⌟ω)³ = 0 for every ω in the span of the kernel basis."""
    qs = []
    for omega in kernel.basis:
        q = contract(u, contract(v, omega))
        if q:
            qs.append(_scaled_terms(q))
    for i, qi in enumerate(qs):
        for j in range(i, len(qs)):
            rij = _wedge_terms(qi, qs[j])
            if not rij:
                continue
            for k in range(j, len(qs)):
                if _wedge_terms(rij, qs[k]):
                    return False
    return True


@dataclass(frozen=True)
class LabeledVector:
    """A certificate vector together with its dual-basis label, if it has one."""

    vector: Vector
    label: str | None = None

    def to_record(self) -> dict:
        return {"label": self.label,
                "components": [str(c.a) for c in self.vector.components]}


@dataclass(frozen=True)
class Certificate:
    diagram: YoungDiagram
    verdict: str  # "admissible" | "excluded" | "unresolved"
    dim_kernel: int
    pair: tuple[LabeledVector, LabeledVector] | None = None

    def to_record(self) -> dict:
        rec = {"diagram": list(self.diagram.parts),
               "dim_kernel": self.dim_kernel,
               "verdict": self.verdict,
               "pair": None}
        if self.pair is not None:
            rec["pair"] = {"u": self.pair[0].to_record(),
                           "v": self.pair[1].to_record()}
        return rec


def _candidate_pairs(rep: JordanRepresentative,
                     max_fallback: int) -> Iterator[tuple[LabeledVector, LabeledVector]]:
    """Deterministic search order: w-dual pairs, then v-duals, then combos."""
    w_duals = [LabeledVector(Vector.basis(p), f"w{p}") for p in rep.w_positions]
    v_duals = [LabeledVector(Vector.basis(p), f"v{p}") for p in rep.v_positions]
    yield from combinations(w_duals, 2)
    for wd in w_duals:
        for vd in v_duals:
            yield wd, vd
    yield from combinations(v_duals, 2)
    # fallback: pairs of independent two-index integer combinations
    coeffs = (1, -1, 2, -2)
    combos = []
    for i, j in combinations(range(1, DIM + 1), 2):
        for ci in coeffs:
            for cj in coeffs:
                combos.append(ci * Vector.basis(i) + cj * Vector.basis(j))
    emitted = 0
    for a, b in combinations(combos, 2):
        if emitted >= max_fallback:
            return
        ok = False
        for i, j in combinations(range(DIM), 2):
            if (a.components[i] * b.components[j]
                    - a.components[j] * b.components[i]):
                ok = True
                break
        if not ok:
            continue
        emitted += 1
        yield LabeledVector(a), LabeledVector(b)


def find_certificate(diagram: YoungDiagram, *,
                     max_fallback: int = 2000) -> Certificate:
    kernel = kernel_space(diagram)
    if kernel.dimension == len(blades_of_degree(4)):
        # ρ(A)² kills every 4-form: every orbit element perturbs, admissible.
        return Certificate(diagram, "admissible", kernel.dimension)
    rep = representative(diagram)
    for u, v in _candidate_pairs(rep, max_fallback):
        if cubic_vanishes_on_subspace(u.vector, v.vector, kernel):
            return Certificate(diagram, "excluded", kernel.dimension, (u, v))
    return Certificate(diagram, "unresolved", kernel.dimension)


@dataclass(frozen=True)
class ClassificationReport:
    seed: int
    rows: tuple[tuple[Certificate, int], ...]  # (certificate, millis)
    signature_samples: int
    signature_clean: bool  # p1 and p27 of ρ(A)Ω vanished for every sample

    @property
    def admissible(self) -> tuple[YoungDiagram, ...]:
        return tuple(c.diagram for c, _ in self.rows
                     if c.verdict == "admissible")

    def to_record(self, *, zero_timings: bool = False) -> dict:
        return {
            "seed": self.seed,
            "diagrams": [dict(c.to_record(), millis=0 if zero_timings else ms)
                         for c, ms in self.rows],
            "admissible_diagrams": [list(d.parts) for d in self.admissible],
            "rank_one_signature": {"samples": self.signature_samples,
                                   "pure_7_35": self.signature_clean},
        }


def classification_report(seed: int = 0,
                          signature_samples: int = 25) -> ClassificationReport:
    rows = []
    for diagram in enumerate_diagrams():
        started = time.perf_counter()
        cert = find_certificate(diagram)
        millis = int((time.perf_counter() - started) * 1000)
        rows.append((cert, millis))

    rng = random.Random(f"{seed}:classify:signature")
    ps = cayley.projectors()
    omega = cayley.build_omega().omega
    clean = True
    for _ in range(signature_samples):
        a = random_rank_one_nilpotent(rng)
        delta = rho(a, omega)
        if ps.p1(delta) or ps.p27(delta):
            clean = False
            break
    return ClassificationReport(seed=seed, rows=tuple(rows),
                                signature_samples=signature_samples,
                                signature_clean=clean)
