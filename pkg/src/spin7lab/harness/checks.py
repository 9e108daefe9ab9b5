"""Named verification checks grouped into the five runnable suites.

Every check is deterministic: randomized samples draw from a RNG salted
with the run seed and the check name, so identical (suites, seed) runs
produce identical reports.  A failing check never raises — it returns a
CheckResult carrying a serialized witness of the failure (the offending
form, pair, or residual), which is what makes fault-injection tests
observable rather than crashy.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .. import cayley
from ..cayley import (build_omega, image_dimension, pair_contraction_cube,
                      perturb_rank_one, projectors, skew_perturbation,
                      sl8_basis, so8_basis, stabilizer_algebra)
from ..classify import classification_report, enumerate_diagrams, jordan_type_of
from ..exterior.blades import blades_of_degree
from ..exterior.endo import Endo, exp_nilpotent, pullback, rho
from ..exterior.forms import KForm, hodge_star, inner
from ..exterior.scalars import FieldScalar, Q
from ..invariant.bryant_salamon import (InvariantField, build_bryant_salamon,
                                        build_metric, closure_mechanism_holds,
                                        lemma_invariant_forms,
                                        metric_lie_derivative,
                                        orbit_witness_holds, perturbed_form,
                                        pointwise_rank_one_check,
                                        verify_killing,
                                        verify_pullback_proposition)
from ..invariant.chamber import (ChamberForm, ChamberScalar, lie_derivative,
                                 maurer_cartan_d)
from ..invariant.liealg import (N_GENERATORS, SP1_PLUS, LieFrame,
                                build_lie_frame, build_orthonormal_frame,
                                killing_matrix, normalizer)
from ..sampling import (random_even_scalar, random_form,
                        random_independent_pair, random_rank_one_nilpotent)

__all__ = ["CheckResult", "SUITE_NAMES", "run_suite", "run_all_suites"]

SUITE_NAMES = ("basics", "decomposition", "classify", "bryant-salamon",
               "perturb")

# The displayed value of (e7 <| e8 <| Omega)^3 in the source text; the lab
# recomputes the cube from scratch and reports both, asserting only that
# the computed value is nonzero (which is all the degeneracy argument uses).
QUOTED_CUBE_DISPLAY = "6e^{354867}"


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    duration_millis: int = 0

    def to_record(self, *, zero_timings: bool = False) -> dict:
        return {"name": self.name, "passed": self.passed,
                "detail": self.detail,
                "duration_millis": 0 if zero_timings else self.duration_millis}


def _salted(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


def _timed(name: str, fn) -> CheckResult:
    started = time.perf_counter()
    try:
        passed, detail = fn()
    except Exception as exc:  # a check failure must never crash the run
        passed, detail = False, {"error": f"{type(exc).__name__}: {exc}"}
    millis = int((time.perf_counter() - started) * 1000)
    return CheckResult(name=name, passed=bool(passed), detail=detail,
                       duration_millis=millis)


def _form_witness(f) -> dict:
    return f.to_record()


# --------------------------------------------------------------------------
# basics

def _check_cayley_normalization(seed: int) -> tuple[bool, dict]:
    omega = build_omega().omega
    starred = hodge_star(omega)
    norm = inner(omega, omega)
    ok = starred == omega and norm == FieldScalar(14)
    detail = {"self_dual": starred == omega, "norm": str(norm)}
    if not ok:
        detail["witness"] = _form_witness(starred - omega)
    return ok, detail


def _check_orbit_dimensions(seed: int) -> tuple[bool, dict]:
    stab = len(stabilizer_algebra())
    image_sl8 = image_dimension(sl8_basis())
    image_so8 = image_dimension(so8_basis())
    ok = stab == 21 and image_sl8 == 42 and image_so8 == 7
    return ok, {"stabilizer_dim": stab, "image_dim": image_sl8,
                "skew_image_dim": image_so8}


def _check_contraction_nondegeneracy(seed: int) -> tuple[bool, dict]:
    rng = _salted(seed, "contraction-nondegeneracy")
    omega = build_omega().omega
    for i in range(25):
        u, v = random_independent_pair(rng)
        cube = pair_contraction_cube(u, v, omega)
        if not cube:
            return False, {"samples": i,
                           "witness": {"u": [str(c) for c in u.components],
                                       "v": [str(c) for c in v.components]}}
    return True, {"samples": 25, "all_nonzero": True}


def _check_cube_display(seed: int) -> tuple[bool, dict]:
    from ..exterior.forms import Vector, contract, wedge
    omega = build_omega().omega
    cube = pair_contraction_cube(Vector.basis(7), Vector.basis(8), omega)
    detail = {
        "computed": {f"e^{''.join(map(str, idx))}": str(c)
                     for idx, c in cube.terms()},
        "quoted_display": QUOTED_CUBE_DISPLAY,
        "computed_nonzero": bool(cube),
    }
    if not cube:
        detail["witness"] = _form_witness(cube)
    return bool(cube), detail


# --------------------------------------------------------------------------
# decomposition

def _check_projector_ranks(seed: int) -> tuple[bool, dict]:
    ranks = projectors().ranks()
    return ranks == (1, 7, 27, 35), {"ranks": list(ranks)}


def _check_resolution_of_identity(seed: int) -> tuple[bool, dict]:
    ps = projectors()
    ok = ps.is_resolution()
    idem = {name: op.is_idempotent()
            for name, op in zip(("p1", "p7", "p27", "p35"), ps.all())}
    return ok and all(idem.values()), {"idempotent": idem,
                                       "sums_to_identity": ok}


def _check_star_split(seed: int) -> tuple[bool, dict]:
    rng = _salted(seed, "star-eigenvalue-split")
    ps = projectors()
    detail = {}
    ok = True
    for _ in range(10):
        form = random_form(rng, 4)
        for name, op, sign in (("p1", ps.p1, 1), ("p7", ps.p7, 1),
                               ("p27", ps.p27, 1), ("p35", ps.p35, -1)):
            part = op(form)
            expect = FieldScalar(sign) * part
            if hodge_star(part) != expect:
                ok = False
                detail["witness"] = {"component": name,
                                     "form": _form_witness(form)}
                break
        if not ok:
            break
    detail["samples"] = 10
    detail["eigenvalues"] = {"p1": 1, "p7": 1, "p27": 1, "p35": -1}
    return ok, detail


def _check_rank_one_membership(seed: int) -> tuple[bool, dict]:
    rng = _salted(seed, "rank-one-module-membership")
    ps = projectors()
    omega = build_omega().omega
    for i in range(15):
        a = random_rank_one_nilpotent(rng)
        delta = rho(a, omega)
        if ps.p1(delta) or ps.p27(delta):
            return False, {"samples": i,
                           "witness": {"endo": a.to_record(),
                                       "delta": _form_witness(delta)}}
    return True, {"samples": 15, "pure_7_35": True}


def _check_skew_ansatz(seed: int) -> tuple[bool, dict]:
    rng = _salted(seed, "skew-ansatz-type")
    ps = projectors()
    for i in range(15):
        u, v = random_independent_pair(rng)
        delta = skew_perturbation(u, v)
        residual = delta - ps.p7(delta)
        if residual:
            return False, {"samples": i,
                           "witness": {"residual": _form_witness(residual)}}
    return True, {"samples": 15, "pure_7": True}


# --------------------------------------------------------------------------
# classify

def _classification(seed: int):
    return classification_report(seed=seed, signature_samples=25)


def _check_diagram_enumeration(seed: int) -> tuple[bool, dict]:
    diagrams = enumerate_diagrams()
    ok = len(diagrams) == 22 and len(set(diagrams)) == 22
    return ok, {"count": len(diagrams),
                "first": list(diagrams[0].parts),
                "last": list(diagrams[-1].parts)}


def _check_admissible_set(seed: int) -> tuple[bool, dict]:
    report = _classification(seed)
    admissible = [list(d.parts) for d in report.admissible]
    expected = [[2, 1, 1, 1, 1, 1, 1], [1, 1, 1, 1, 1, 1, 1, 1]]
    ok = sorted(admissible, reverse=True) == sorted(expected, reverse=True)
    detail = {"admissible_diagrams": admissible}
    if not ok:
        detail["witness"] = {"expected": expected}
    return ok, detail


def _check_exclusion_certificates(seed: int) -> tuple[bool, dict]:
    report = _classification(seed)
    rows = []
    ok = True
    for cert, _ms in report.rows:
        if cert.verdict == "admissible":
            continue
        entry = cert.to_record()
        rows.append(entry)
        if cert.verdict != "excluded" or cert.pair is None:
            ok = False
            entry["witness"] = "missing cubic-vanishing certificate"
    return ok and len(rows) == 20, {"excluded_count": len(rows),
                                    "certificates": rows}


def _check_chain_dual_certificates(seed: int) -> tuple[bool, dict]:
    """The four length-capped chain diagrams certify via pairs of w-duals."""
    report = _classification(seed)
    chains = {(3, 2, 2, 1), (2, 2, 2, 2), (2, 2, 2, 1, 1),
              (2, 2, 1, 1, 1, 1)}
    found = {}
    ok = True
    for cert, _ms in report.rows:
        if cert.diagram.parts not in chains:
            continue
        labels = [lv.label or "?" for lv in (cert.pair or ())]
        found[str(cert.diagram)] = labels
        if not (len(labels) == 2 and all(l.startswith("w") for l in labels)):
            ok = False
    return ok and len(found) == 4, {"pairs": found}


def _check_signature_replay(seed: int) -> tuple[bool, dict]:
    rng = _salted(seed, "signature-replay")
    ok = True
    witness = None
    for _ in range(20):
        a = random_rank_one_nilpotent(rng)
        jt = jordan_type_of(a)
        if jt.parts != (2, 1, 1, 1, 1, 1, 1):
            ok = False
            witness = {"endo": a.to_record(), "jordan_type": list(jt.parts)}
            break
    detail = {"samples": 20, "jordan_type": [2, 1, 1, 1, 1, 1, 1]}
    if witness:
        detail["witness"] = witness
    return ok, detail


# --------------------------------------------------------------------------
# bryant-salamon

def _check_lie_frame_consistency(seed: int, frame: LieFrame) -> tuple[bool, dict]:
    from itertools import combinations
    from ..exterior.scalars import ONE, ZERO
    basis = [tuple(ONE if a == i else ZERO for a in range(N_GENERATORS))
             for i in range(N_GENERATORS)]
    for i, j, k in combinations(range(N_GENERATORS), 3):
        t1 = frame.bracket_coords(basis[i], frame.bracket_coords(basis[j], basis[k]))
        t2 = frame.bracket_coords(basis[j], frame.bracket_coords(basis[k], basis[i]))
        t3 = frame.bracket_coords(basis[k], frame.bracket_coords(basis[i], basis[j]))
        total = [a + b + c for a, b, c in zip(t1, t2, t3)]
        if any(total):
            return False, {"witness": {"triple": [i, j, k],
                                       "jacobiator": [str(x) for x in total]}}
    # d^2 = 0 on every coframe generator is the dual statement
    for slot in range(11):
        dd = maurer_cartan_d(maurer_cartan_d(ChamberForm.generator(slot), frame), frame)
        if dd:
            return False, {"witness": {"slot": slot,
                                       "d_squared": _form_witness(dd)}}
    return True, {"jacobi": True, "d_squared_zero": True}


def _check_sp1_normalizer(seed: int, frame: LieFrame) -> tuple[bool, dict]:
    from ..exterior.scalars import ONE, ZERO
    h = [tuple(ONE if a == i else ZERO for a in range(N_GENERATORS))
         for i in SP1_PLUS]
    basis = normalizer(frame, h)
    dim = len(basis)
    # the normalizer must be spanned by the six diagonal generators
    spans_diag = all(all(not x for x in row[6:]) for row in basis)
    ok = dim == 6 and spans_diag
    detail = {"dimension": dim, "inside_diagonal_block": spans_diag}
    if not ok:
        detail["witness"] = [[str(x) for x in row] for row in basis]
    return ok, detail


def _check_orthonormal_killing(seed: int, frame: LieFrame) -> tuple[bool, dict]:
    from ..exterior.scalars import ONE, ZERO
    km = killing_matrix(build_orthonormal_frame())
    ok = all(km[i][j] == (-ONE if i == j else ZERO)
             for i in range(N_GENERATORS) for j in range(N_GENERATORS))
    detail = {"killing_is_minus_identity": ok}
    if not ok:
        detail["witness"] = [[str(x) for x in row] for row in km]
    return ok, detail


def _check_display_transcription(seed: int, frame: LieFrame) -> tuple[bool, dict]:
    from ..invariant.bryant_salamon import proposition_display
    bs = build_bryant_salamon()
    display = proposition_display()
    ok = bs.phi == display
    detail = {"terms": len(bs.phi.terms),
              "spot_ds_A456": str(bs.phi.coefficient(0, 4, 5, 6)),
              "spot_X1234": str(bs.phi.coefficient(7, 8, 9, 10))}
    if not ok:
        detail["witness"] = _form_witness(bs.phi - display)
    return ok, detail


def _check_phi_closedness(seed: int, frame: LieFrame) -> tuple[bool, dict]:
    bs = build_bryant_salamon()
    residual = maurer_cartan_d(bs.phi, frame)
    ok = not residual
    detail = {"d_phi_zero": ok}
    if not ok:
        detail["witness"] = _form_witness(residual)
    return ok, detail


def _check_invariant_forms_lemma(seed: int, frame: LieFrame) -> tuple[bool, dict]:
    first, second = lemma_invariant_forms()
    for slot in (4, 5, 6):
        for label, form in (("mixed", first), ("fiber", second)):
            lied = lie_derivative(slot, form, frame)
            if lied:
                return False, {"witness": {"generator_slot": slot,
                                           "form": label,
                                           "lie_derivative": _form_witness(lied)}}
    return True, {"annihilating_generators": [4, 5, 6]}


def _check_killing_fields(seed: int, frame: LieFrame) -> tuple[bool, dict]:
    metric = build_metric()
    for slot in (4, 5, 6):
        lg = metric_lie_derivative(slot, metric, frame)
        if lg:
            return False, {"witness": {"generator_slot": slot,
                                       "residual": str(lg)}}
    return True, {"killing_generators": [4, 5, 6]}


def _check_metric_positivity(seed: int, frame: LieFrame) -> tuple[bool, dict]:
    metric = build_metric()
    diag = metric.is_diagonal()
    pos = metric.has_positive_coefficients()
    return diag and pos, {"diagonal": diag, "positive_coefficients": pos}


# --------------------------------------------------------------------------
# perturb

def _check_rank_one_square_zero(seed: int) -> tuple[bool, dict]:
    rng = _salted(seed, "rank-one-square-zero")
    for i in range(20):
        a = random_rank_one_nilpotent(rng)
        omega4 = random_form(rng, 4)
        if rho(a, rho(a, omega4)):
            return False, {"samples": i, "witness": {"endo": a.to_record()}}
    return True, {"samples": 20, "rho_squared_zero": True}


def _check_exponential_pullback(seed: int) -> tuple[bool, dict]:
    rng = _salted(seed, "exponential-pullback")
    omega = build_omega().omega
    ts = (FieldScalar(1), FieldScalar(-3), FieldScalar("5/7"))
    for i in range(8):
        a = random_rank_one_nilpotent(rng)
        delta = rho(a, omega)
        for t in ts:
            lhs = pullback(exp_nilpotent(t * a), omega)
            rhs = omega + t * delta
            if lhs != rhs:
                return False, {"witness": {"endo": a.to_record(),
                                           "t": str(t),
                                           "difference": _form_witness(lhs - rhs)}}
    return True, {"samples": 8, "t_values": ["1", "-3", "5/7"]}


def _check_perturbed_closedness(seed: int, frame: LieFrame) -> tuple[bool, dict]:
    rng = _salted(seed, "perturbed-closedness")
    bs = build_bryant_salamon()
    t = ChamberScalar.monomial(1, 2, 0)
    named = [(ChamberScalar.of(1), ChamberScalar.of(0), ChamberScalar.of(0)),
             (t * t, t ** 4 + 1, 3 * t)]
    triples = named + [tuple(random_even_scalar(rng) for _ in range(3))
                       for _ in range(5)]
    for i, triple in enumerate(triples):
        form = perturbed_form(InvariantField.of(*triple), bs)
        residual = maurer_cartan_d(form, frame)
        if residual:
            return False, {"witness": {
                "triple": [str(c) for c in triple],
                "residual": _form_witness(residual)}}
    return True, {"triples": len(triples), "all_closed": True}


def _check_evenness_guard(seed: int) -> tuple[bool, dict]:
    from ..invariant.chamber import S
    try:
        perturbed_form(InvariantField.of(S, 0, 0))
    except ValueError as exc:
        return True, {"rejected": True, "message": str(exc)}
    return False, {"witness": "odd coefficient accepted"}


def _check_closure_mechanism(seed: int, frame: LieFrame) -> tuple[bool, dict]:
    rng = _salted(seed, "closure-mechanism")
    triple = tuple(random_even_scalar(rng) for _ in range(3))
    ok = closure_mechanism_holds(InvariantField.of(*triple), frame=frame)
    detail = {"triple": [str(c) for c in triple]}
    if not ok:
        detail["witness"] = "d(dt ^ Y-|Phi) != -dt ^ L_Y Phi"
    return ok, detail


def _check_orbit_witness(seed: int) -> tuple[bool, dict]:
    rng = _salted(seed, "orbit-witness")
    triple = tuple(random_even_scalar(rng) for _ in range(3))
    ok = orbit_witness_holds(InvariantField.of(*triple))
    detail = {"triple": [str(c) for c in triple]}
    if not ok:
        detail["witness"] = "pullback along Id + Y x dt missed the perturbed form"
    return ok, detail


def _check_pointwise_samples(seed: int) -> tuple[bool, dict]:
    rng = _salted(seed, "pointwise-samples")
    t = ChamberScalar.monomial(1, 2, 0)
    field_ = InvariantField.of(t, 1, t * t)
    records = []
    ok = True
    for _ in range(5):
        s0 = Q(rng.randrange(1, 30), rng.randrange(1, 30))
        rec = pointwise_rank_one_check(field_, s0)
        records.append(rec)
        if not rec["in_orbit"]:
            ok = False
        if not rec.get("trivial") and rec.get("jordan_type") != [2, 1, 1, 1, 1, 1, 1]:
            ok = False
    return ok, {"samples": records}


# --------------------------------------------------------------------------
# suite assembly

def run_suite(name: str, seed: int = 0,
              frame: LieFrame | None = None) -> list[CheckResult]:
    """Run one named suite; `frame` overrides the Lie frame used by the
    chamber-calculus checks (fault injection hooks in here)."""
    frame = frame or build_lie_frame()
    if name == "basics":
        plan = [
            ("cayley-normalization", lambda: _check_cayley_normalization(seed)),
            ("orbit-dimensions", lambda: _check_orbit_dimensions(seed)),
            ("contraction-nondegeneracy",
             lambda: _check_contraction_nondegeneracy(seed)),
            ("cube-display-discrepancy", lambda: _check_cube_display(seed)),
        ]
    elif name == "decomposition":
        plan = [
            ("projector-ranks", lambda: _check_projector_ranks(seed)),
            ("resolution-of-identity",
             lambda: _check_resolution_of_identity(seed)),
            ("star-eigenvalue-split", lambda: _check_star_split(seed)),
            ("rank-one-module-membership",
             lambda: _check_rank_one_membership(seed)),
            ("skew-ansatz-type", lambda: _check_skew_ansatz(seed)),
        ]
    elif name == "classify":
        plan = [
            ("diagram-enumeration", lambda: _check_diagram_enumeration(seed)),
            ("admissible-set", lambda: _check_admissible_set(seed)),
            ("exclusion-certificates",
             lambda: _check_exclusion_certificates(seed)),
            ("chain-dual-certificates",
             lambda: _check_chain_dual_certificates(seed)),
            ("signature-replay", lambda: _check_signature_replay(seed)),
        ]
    elif name == "bryant-salamon":
        plan = [
            ("lie-frame-consistency",
             lambda: _check_lie_frame_consistency(seed, frame)),
            ("sp1-normalizer", lambda: _check_sp1_normalizer(seed, frame)),
            ("orthonormal-killing",
             lambda: _check_orthonormal_killing(seed, frame)),
            ("display-transcription",
             lambda: _check_display_transcription(seed, frame)),
            ("phi-closedness", lambda: _check_phi_closedness(seed, frame)),
            ("invariant-forms-lemma",
             lambda: _check_invariant_forms_lemma(seed, frame)),
            ("killing-fields", lambda: _check_killing_fields(seed, frame)),
            ("metric-positivity",
             lambda: _check_metric_positivity(seed, frame)),
        ]
    elif name == "perturb":
        plan = [
            ("rank-one-square-zero",
             lambda: _check_rank_one_square_zero(seed)),
            ("exponential-pullback",
             lambda: _check_exponential_pullback(seed)),
            ("perturbed-closedness",
             lambda: _check_perturbed_closedness(seed, frame)),
            ("evenness-guard", lambda: _check_evenness_guard(seed)),
            ("closure-mechanism",
             lambda: _check_closure_mechanism(seed, frame)),
            ("orbit-witness", lambda: _check_orbit_witness(seed)),
            ("pointwise-samples", lambda: _check_pointwise_samples(seed)),
        ]
    else:
        raise ValueError(f"unknown suite: {name}")
    return [_timed(check_name, fn) for check_name, fn in plan]


def run_all_suites(suites: tuple[str, ...], seed: int = 0,
                   frame: LieFrame | None = None) -> dict[str, list[CheckResult]]:
    """Run the requested suites in canonical order."""
    unknown = [s for s in suites if s not in SUITE_NAMES]
    if unknown:
        raise ValueError(f"unknown suite: {', '.join(unknown)}")
    ordered = [s for s in SUITE_NAMES if s in suites]
    return {name: run_suite(name, seed=seed, frame=frame) for name in ordered}
