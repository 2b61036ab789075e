"""Congruence checkers for curves on surfaces of characteristic type.

Every checker consumes scheme invariants plus model constants and emits a
CongruenceReport carrying the residues, the hypotheses it relied on, and a
verdict in {pass, fail, forces-type-I, hypothesis-violated}.  The central
relation is the separation congruence

    chi(B_j) = e_A/4 + (chi(RB) - sigma(CB))/4 + beta(q_j)   (mod 8)

for the two halves B_1, B_2 of the complement of the curve; the deficiency
clauses refine it for M, (M-1) and (M-2) curves and for curves whose real
part separates their complexification (type I).  Specialized checkers
cover empty curves (mod 8 and mod 32), the quotient-signature relation
mod 16, orientation integrals on the plane and the torus, halves of
projective complete intersections, and the Fiedler congruence mod 16.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .models import (
    CurveClass,
    SurfaceModel,
    cubic_disjoint_model,
    curve_class_for,
    ellipsoid_model,
    hyperboloid_model,
    plane_double_cover_model,
)
from .regions import (
    RegionDecomposition,
    TwoColoring,
    decompose,
    euler_integral_sq,
    index_function,
    two_coloring,
)
from .scheme import RealScheme, SchemeError, UnorientedSchemeError
from .zform import BrownValue

PASS = "pass"
FAIL = "fail"
FORCES_TYPE_I = "forces-type-I"
HYPOTHESIS_VIOLATED = "hypothesis-violated"


@dataclass(frozen=True)
class Hypothesis:
    name: str
    ok: bool


@dataclass(frozen=True)
class CongruenceReport:
    theorem: str
    hypotheses: tuple[Hypothesis, ...]
    lhs: int | None
    rhs: tuple[int, ...]
    modulus: int
    verdict: str
    notes: tuple[str, ...] = ()

    @property
    def restricts(self) -> bool:
        return self.verdict == FAIL

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "hypotheses": [{"name": h.name, "ok": h.ok} for h in self.hypotheses],
            "lhs": self.lhs,
            "rhs": list(self.rhs),
            "modulus": self.modulus,
            "verdict": self.verdict,
            "notes": list(self.notes),
        }


def _report(theorem, hypotheses, lhs, rhs, modulus, notes=()):
    hyps = tuple(hypotheses)
    if any(not h.ok for h in hyps):
        verdict = HYPOTHESIS_VIOLATED
    elif lhs is not None and lhs % modulus in tuple(r % modulus for r in rhs):
        verdict = PASS
    else:
        verdict = FAIL
    canonical_rhs = tuple(sorted({r % modulus for r in rhs}))
    canonical_lhs = None if lhs is None else lhs % modulus
    return CongruenceReport(
        theorem, hyps, canonical_lhs, canonical_rhs, modulus, verdict, tuple(notes)
    )


def combined_constant(model: SurfaceModel) -> int | None:
    """(e_A + chi(RB) - sigma(CB)) / 4 when integral, else None.

    The summands alone need not be divisible by 4 (odd bidegree on the
    ellipsoid); only the combined constant is evaluated, never floored.
    """
    if model.e_a is None or model.chi_rb is None or model.sigma_cb is None:
        return None
    total = model.e_a + model.chi_rb - model.sigma_cb
    if total % 4:
        return None
    return total // 4


def separation_congruence(
    model: SurfaceModel, chi_bj: int, beta: BrownValue
) -> CongruenceReport:
    """Mod-8 congruence for one separation half against its Brown invariant."""
    const = combined_constant(model)
    hyps = [
        Hypothesis("characteristic-type", model.characteristic_type),
        Hypothesis("integral-constant", const is not None),
        Hypothesis("informative-brown", beta.informative),
    ]
    if const is None or not beta.informative:
        return _report("separation-congruence", hyps, chi_bj, (), 8)
    return _report("separation-congruence", hyps, chi_bj, (const + beta.value,), 8)


def ash_signature(sigma_cb: int, chi_rb: int) -> int:
    """Signature of the quotient: (sigma(CB) - chi(RB)) / 2."""
    if (sigma_cb - chi_rb) % 2:
        raise SchemeError("sigma - chi must be even")
    return (sigma_cb - chi_rb) // 2


def guillou_marin_check(
    sigma_quotient: int, self_intersection: int, beta: BrownValue
) -> CongruenceReport:
    """Mod-16 relation between quotient signature and the surface form."""
    hyps = [Hypothesis("informative-brown", beta.informative)]
    if not beta.informative:
        return _report("quotient-signature-congruence", hyps, sigma_quotient, (), 16)
    rhs = self_intersection + 2 * beta.value
    return _report("quotient-signature-congruence", hyps, sigma_quotient, (rhs,), 16)


def surface_congruence(model: SurfaceModel, connected: bool | None = None) -> tuple[
    CongruenceReport, ...
]:
    """Empty-curve congruences: chi = sigma mod 8, and mod 32 if connected."""
    if connected is None:
        connected = len(model.components) <= 1
    hyps = [Hypothesis("characteristic-type", model.characteristic_type)]
    known = model.chi_rb is not None and model.sigma_cb is not None
    hyps.append(Hypothesis("constants-known", known))
    lhs = model.chi_rb if known else None
    rhs = (model.sigma_cb,) if known else ()
    mod8 = _report("surface-congruence-mod8", hyps, lhs, rhs, 8)
    reports = [mod8]
    hyps32 = hyps + [Hypothesis("one-half-empty", connected)]
    reports.append(_report("surface-congruence-mod32", hyps32, lhs, rhs, 32))
    return tuple(reports)


# ---------------------------------------------------------------------------
# deficiency clauses shared by the separation based checkers


@dataclass(frozen=True)
class SeparationCandidate:
    """One way of splitting the complement into halves B_1 and B_2.

    beta options list the Brown invariants the restricted form can take on
    each half; a half whose homology maps onto nothing essential gets {0},
    one containing a noncontractible core gets {1, 7}.
    """

    chi1: int
    chi2: int
    beta1_options: tuple[int, ...] = (0,)
    beta2_options: tuple[int, ...] = (0,)
    label: str = ""


def _match(value: int, targets, modulus: int) -> bool:
    return value % modulus in tuple(t % modulus for t in targets)


def _candidate_status(const: int, curve: CurveClass, cand: SeparationCandidate) -> str:
    """Status in {"pass", "fail", "forces", "inapplicable"} for one split."""
    j = curve.deficiency
    statuses = []
    if j == 0:
        ok1 = any(_match(cand.chi1, (const + b,), 8) for b in cand.beta1_options)
        ok2 = any(_match(cand.chi2, (const + b,), 8) for b in cand.beta2_options)
        statuses.append(PASS if ok1 and ok2 else FAIL)
    elif j == 1:
        ok = any(
            _match(cand.chi1, (const + b1 + s,), 8)
            and _match(cand.chi2, (const + b2 - s,), 8)
            for s in (1, -1)
            for b1 in cand.beta1_options
            for b2 in cand.beta2_options
        )
        statuses.append(PASS if ok else FAIL)
    elif j == 2:
        forced = any(
            _match(chi, (const + b + 4,), 8)
            for chi, options in (
                (cand.chi1, cand.beta1_options),
                (cand.chi2, cand.beta2_options),
            )
            for b in options
        )
        if forced:
            statuses.append(FAIL if curve.type_flag == "II" else FORCES_TYPE_I)
        else:
            statuses.append(PASS)
    if curve.type_flag == "I":
        ok = _match(cand.chi1, (const,), 4) and _match(cand.chi2, (const,), 4)
        statuses.append(PASS if ok else FAIL)
    if not statuses:
        return "inapplicable"
    if FAIL in statuses:
        return FAIL
    if FORCES_TYPE_I in statuses:
        return FORCES_TYPE_I
    return PASS


def _deficiency_verdict(
    theorem: str,
    const: int,
    curve: CurveClass,
    candidates: list[SeparationCandidate],
    hypotheses: list[Hypothesis],
    notes: tuple[str, ...] = (),
) -> CongruenceReport:
    """Aggregate over candidate splits; some admissible split means pass."""
    hyps = list(hypotheses)
    hyps.append(Hypothesis("deficiency-known", curve.deficiency is not None))
    applicable = curve.deficiency is not None and (
        curve.deficiency <= 2 or curve.type_flag == "I"
    )
    hyps.append(Hypothesis("restricting-clause-applies", applicable))
    base_rhs = tuple((const + k) % 8 for k in (-1, 0, 1, 4))
    lhs = candidates[0].chi1 % 8 if candidates else None
    if any(not h.ok for h in hyps):
        return CongruenceReport(
            theorem, tuple(hyps), lhs, base_rhs, 8, HYPOTHESIS_VIOLATED, tuple(notes)
        )

    ordered = []
    for cand in candidates:
        ordered.append(cand)
        ordered.append(
            SeparationCandidate(
                cand.chi2,
                cand.chi1,
                cand.beta2_options,
                cand.beta1_options,
                cand.label + "/swapped" if cand.label else "swapped",
            )
        )
    statuses = [(c, _candidate_status(const, curve, c)) for c in ordered]
    chosen = None
    verdict = FAIL
    if any(s == PASS for _, s in statuses):
        verdict = PASS
        chosen = next(c for c, s in statuses if s == PASS)
    elif any(s == FORCES_TYPE_I for _, s in statuses):
        verdict = FORCES_TYPE_I
        chosen = next(c for c, s in statuses if s == FORCES_TYPE_I)
    all_notes = list(notes)
    if chosen is not None and chosen.label:
        all_notes.append(f"split: {chosen.label}")
    if verdict == FORCES_TYPE_I:
        all_notes.append(
            f"halves must come from a type I curve; both residues equal "
            f"{const % 4} mod 4"
        )
    rhs = _clause_rhs(const, curve)
    lhs = (chosen or candidates[0]).chi1 % 8
    return CongruenceReport(
        theorem, tuple(hyps), lhs, rhs, 8, verdict, tuple(all_notes)
    )


def _clause_rhs(const: int, curve: CurveClass) -> tuple[int, ...]:
    j = curve.deficiency
    if j == 0:
        return (const % 8,)
    if j == 1:
        return tuple(sorted({(const + 1) % 8, (const - 1) % 8}))
    return tuple(range(8))


def deficiency_filter(
    model: SurfaceModel,
    coloring: TwoColoring,
    curve: CurveClass,
    betas: tuple[BrownValue, BrownValue] = (BrownValue(0), BrownValue(0)),
    restriction_vanishes: bool = True,
    theorem: str = "deficiency-filter",
) -> CongruenceReport:
    """Deficiency clauses for the two halves of one checkerboard coloring.

    ``betas`` are the Brown invariants of the form restricted to each
    color; both assignments of the halves to the colors are tried.
    """
    const = combined_constant(model)
    hyps = [
        Hypothesis("characteristic-type", model.characteristic_type),
        Hypothesis("integral-constant", const is not None),
        Hypothesis("curve-restriction-vanishes", restriction_vanishes),
        Hypothesis(
            "informative-brown", all(b.informative for b in betas)
        ),
    ]
    if const is None or not all(b.informative for b in betas):
        return CongruenceReport(
            theorem, tuple(hyps), None, (), 8, HYPOTHESIS_VIOLATED, ()
        )
    cand = SeparationCandidate(
        coloring.chi1,
        coloring.chi2,
        (betas[0].value,),
        (betas[1].value,),
    )
    return _deficiency_verdict(theorem, const, curve, [cand], hyps)


def ellipsoid_check(
    scheme: RealScheme, d: int, curve: CurveClass | None = None
) -> CongruenceReport:
    """Halves congruence for bidegree (d, d) curves on the ellipsoid."""
    model = ellipsoid_model(d)
    if curve is None:
        curve = curve_class_for(model, scheme.curve_component_count)
    coloring = two_coloring(scheme, model)
    hyps = [Hypothesis("odd-degree", d % 2 == 1)]
    const = combined_constant(model)
    if d % 2 == 0 or const is None:
        hyps.append(Hypothesis("integral-constant", const is not None))
        return CongruenceReport(
            "ellipsoid-congruence",
            tuple(hyps),
            coloring.chi1 % 8,
            (),
            8,
            HYPOTHESIS_VIOLATED,
            (),
        )
    cand = SeparationCandidate(coloring.chi1, coloring.chi2)
    hyps.append(Hypothesis("characteristic-type", model.characteristic_type))
    return _deficiency_verdict("ellipsoid-congruence", const, curve, [cand], hyps)


def disjoint_cubic_filter(
    scheme: RealScheme, curve: CurveClass | None = None
) -> CongruenceReport:
    """Separation filter for degree-2 curves on the non-connected cubic.

    The complement halves mix the two checkerboard classes across the rp2
    and sphere components; a half containing the nonorientable root of the
    rp2 carries an extra Brown contribution of plus or minus one.
    """
    model = cubic_disjoint_model()
    if curve is None:
        curve = curve_class_for(model, scheme.curve_component_count)
    deco = decompose(scheme, model)
    const = combined_constant(model)
    assert const is not None

    def side(component: int, color: int) -> tuple[int, tuple[int, ...]]:
        chi = deco.component_color_chi(component, color)
        root = next(
            r
            for r in deco.regions
            if r.component == component and r.kind == "root"
        )
        essential = root.nonorientable and root.color == color
        return chi, (1, 7) if essential else (0,)

    candidates = []
    for color_rp2 in (1, 2):
        for color_s2 in (1, 2):
            chi_a, beta_a = side(0, color_rp2)
            chi_b, beta_b = side(1, color_s2)
            other_a = side(0, 3 - color_rp2)
            other_b = side(1, 3 - color_s2)
            candidates.append(
                SeparationCandidate(
                    chi1=chi_a + chi_b,
                    chi2=other_a[0] + other_b[0],
                    beta1_options=tuple(
                        sorted({(x + y) % 8 for x in beta_a for y in beta_b})
                    ),
                    beta2_options=tuple(
                        sorted({(x + y) % 8 for x in other_a[1] for y in other_b[1]})
                    ),
                    label=f"rp2:{color_rp2},s2:{color_s2}",
                )
            )
    hyps = [
        Hypothesis("characteristic-type", model.characteristic_type),
        Hypothesis("curve-restriction-vanishes", not curve.disorienting),
    ]
    return _deficiency_verdict(
        "disjoint-cubic-congruence", const, curve, candidates, hyps
    )


# ---------------------------------------------------------------------------
# double cover calculations


@dataclass(frozen=True)
class BoundaryClasses:
    """Separation classes of the boundary circles of one positive region."""

    region: int
    orientable: bool
    classes: tuple[tuple[int, int], ...]  # (curve id, class bit)


def cover_separation(
    scheme: RealScheme, model: SurfaceModel, x_infinity: int | None = None
) -> tuple[BoundaryClasses, ...]:
    """Boundary separation classes for each component of the positive half.

    The positive half consists of the regions of the color opposite to the
    base region.  Two boundary circles carry the same class exactly when
    the complex orientations extend to an orientation of the region; a
    nonorientable positive region is reported as a violation since the
    halves of a separating curve are orientable.
    """
    if not scheme.oriented:
        raise UnorientedSchemeError("cover separation needs an oriented scheme")
    deco = decompose(scheme, model)
    base = 0 if x_infinity is None else x_infinity
    if not 0 <= base < len(deco.regions):
        raise SchemeError(f"no region {base}")
    negative_color = deco.regions[base].color
    out = []
    interior_of = {info.interior_region: info for info in deco.ovals}
    by_id = {info.oid: info for info in deco.ovals}
    for region in deco.regions:
        if region.color == negative_color:
            continue
        if region.nonorientable:
            out.append(BoundaryClasses(region.rid, False, ()))
            continue
        classes = []
        exterior = interior_of.get(region.rid)
        for oid in region.boundary:
            info = by_id.get(oid)
            if info is None:
                continue  # noncontractible circle: no disk side
            inside_it = exterior is not None and info.oid == exterior.oid
            bit = int(info.sign == 1) ^ int(inside_it)
            classes.append((oid, bit))
        out.append(BoundaryClasses(region.rid, True, tuple(classes)))
    return tuple(out)


def viro_loop_value(deco: RegionDecomposition, region_ids, x_infinity: int = 0) -> int:
    """Form value 2*chi(G intersect positive half) mod 4 of a region set G."""
    ids = list(region_ids)
    for rid in ids:
        if not 0 <= rid < len(deco.regions):
            raise SchemeError(f"no region {rid}")
    negative_color = deco.regions[x_infinity].color
    chi = sum(
        deco.regions[rid].chi
        for rid in set(ids)
        if deco.regions[rid].color != negative_color
    )
    return (2 * chi) % 4


def viro_path_value(
    deco: RegionDecomposition,
    oval_a: int,
    oval_b: int,
    x_infinity: int = 0,
) -> int:
    """Form value of the lifted path joining two ovals through the negative half.

    Zero when the path meets the ovals with opposite intersection signs,
    two otherwise; a degenerate loop on a single oval gives zero.
    """
    if oval_a == oval_b:
        return 0
    by_id = {info.oid: info for info in deco.ovals}
    try:
        info_a, info_b = by_id[oval_a], by_id[oval_b]
    except KeyError as exc:
        raise SchemeError(f"no oval {exc}") from exc
    if info_a.sign is None or info_b.sign is None:
        raise UnorientedSchemeError("path values need an oriented scheme")
    negative_color = deco.regions[x_infinity].color
    shared = None
    for rid in (
        set((info_a.exterior_region, info_a.interior_region))
        & set((info_b.exterior_region, info_b.interior_region))
    ):
        if deco.regions[rid].color == negative_color:
            shared = rid
    if shared is None:
        raise SchemeError("ovals do not bound a common negative region")

    def bit(info) -> int:
        # the shared region sits inside this oval exactly when it is the
        # oval's interior region
        inside_it = shared == info.interior_region
        return int(info.sign == 1) ^ int(inside_it)

    return 2 if bit(info_a) == bit(info_b) else 0


# ---------------------------------------------------------------------------
# orientation integrals


def plane_orientation_check(scheme: RealScheme, k: int) -> CongruenceReport:
    """Squared-index integral of a degree-2k curve in the plane, mod 16."""
    model = plane_double_cover_model(k)
    f = index_function(scheme, model, ring="Z")
    integral = euler_integral_sq(f)
    deco = f.decomposition
    odd_chi = sum(
        r.chi for r in deco.regions if abs(f.values[r.rid]) % 8 in (3, 5)
    )
    notes = (
        f"exact integral {integral}",
        f"half form invariant {4 * odd_chi % 8} mod 8",
    )
    hyps = [Hypothesis("type-I-orientation", True)]
    return _report(
        "plane-orientation-integral", hyps, integral, (k * k,), 16, notes
    )


def _winding_data(scheme: RealScheme) -> tuple[int, int, int]:
    comp = scheme.components[0]
    if comp.noncontractible is None:
        return 0, 0, 0
    nc = comp.noncontractible
    return nc.count, nc.s, nc.t


def hyperboloid_orientation_check(
    scheme: RealScheme, d: int, r: int
) -> tuple[CongruenceReport, ...]:
    """Squared-index integrals of a bidegree (d, r) curve on the torus.

    The applicable branch depends on the winding count mod 8 and on
    s*d + t*r mod 4; comparison residues at the weaker moduli are emitted
    alongside.
    """
    model = hyperboloid_model(d, r)
    count, s, t = _winding_data(scheme)
    even = d % 2 == 0 and r % 2 == 0
    base_hyps = [Hypothesis("bidegree-even", even)]
    if not even:
        return (
            CongruenceReport(
                "torus-orientation-integral",
                tuple(base_hyps),
                None,
                (),
                8,
                HYPOTHESIS_VIOLATED,
                (),
            ),
        )
    st_mod = (s * d + t * r) % 4
    half = (d * r) // 2
    reports: list[CongruenceReport] = []

    if count % 4 == 0 and st_mod == 0:
        f = index_function(scheme, model, ring="Z4")
        lhs = euler_integral_sq(f)
        # the chain asserts integral = dr/2 = 0 mod 8, so 0 is the residue
        # a scheme must hit; a target dr/2 off 0 mod 8 is flagged
        notes = [f"chain target dr/2 = {half} ({half % 8} mod 8)"]
        if half % 8 != 0:
            notes.append("model target dr/2 is not 0 mod 8")
        reports.append(
            _report(
                "torus-orientation-integral-z4",
                base_hyps
                + [
                    Hypothesis("winding-count-0-mod-4", True),
                    Hypothesis("orientable-cover", True),
                ],
                lhs,
                (0,),
                8,
                tuple(notes),
            )
        )
    if count % 8 == 4 and st_mod == 2:
        f = index_function(scheme, model, ring="Z4")
        lhs = euler_integral_sq(f)
        reports.append(
            _report(
                "torus-orientation-integral-z4-shifted",
                base_hyps
                + [
                    Hypothesis("winding-count-4-mod-8", True),
                    Hypothesis("nonorientable-cover", True),
                ],
                lhs,
                (half + 4,),
                8,
                (f"comparison: integral = {lhs % 4}, target {half % 4} (mod 4)",),
            )
        )
    if count % 8 == 0 and st_mod == 0:
        f = index_function(scheme, model, ring="Z8")
        lhs = euler_integral_sq(f)
        reports.append(
            _report(
                "torus-orientation-integral-z8",
                base_hyps + [Hypothesis("winding-count-0-mod-8", True)],
                lhs,
                (half,),
                16,
                (f"comparison: integral = {lhs % 8}, target {half % 8} (mod 8)",),
            )
        )
    if not reports:
        return (
            CongruenceReport(
                "torus-orientation-integral",
                tuple(
                    base_hyps
                    + [Hypothesis("branch-applicable", False)]
                ),
                None,
                (),
                8,
                HYPOTHESIS_VIOLATED,
                (f"winding count {count} mod 8 with s*d+t*r {st_mod} mod 4",),
            ),
        )
    return tuple(reports)


def hyperboloid_chi_check(
    scheme: RealScheme,
    d: int,
    r: int,
    curve: CurveClass,
    chi_bplus: int | None = None,
) -> CongruenceReport:
    """Halves congruence for even bidegree curves with noncontractible branches."""
    model = hyperboloid_model(d, r)
    count, s, t = _winding_data(scheme)
    even = d % 2 == 0 and r % 2 == 0
    parity = ((d // 2) * t + (r // 2) * s + s + t) % 2 == 1 if even else False
    hyps = [
        Hypothesis("bidegree-even", even),
        Hypothesis("winding-parity-condition", parity),
        Hypothesis("deficiency-known", curve.deficiency is not None),
    ]
    theorem = "torus-halves-congruence"
    if not even or not parity or curve.deficiency is None:
        return CongruenceReport(
            theorem, tuple(hyps), chi_bplus, (), 8, HYPOTHESIS_VIOLATED, ()
        )
    if chi_bplus is None:
        coloring = two_coloring(scheme, model)
        chis = [coloring.chi1, coloring.chi2]
    else:
        chis = [chi_bplus]
    half = (d * r) // 2
    j = curve.deficiency
    statuses = []
    for chi in chis:
        clause_statuses = []
        if j == 0:
            clause_statuses.append(PASS if chi % 8 == half % 8 else FAIL)
        elif j == 1:
            clause_statuses.append(
                PASS if chi % 8 in ((half + 1) % 8, (half - 1) % 8) else FAIL
            )
        elif j == 2:
            if chi % 8 == (half + 4) % 8:
                clause_statuses.append(
                    FAIL if curve.type_flag == "II" else FORCES_TYPE_I
                )
            else:
                clause_statuses.append(PASS)
        if curve.type_flag == "I":
            clause_statuses.append(PASS if chi % 4 == 0 else FAIL)
        if not clause_statuses:
            statuses.append("inapplicable")
        elif FAIL in clause_statuses:
            statuses.append(FAIL)
        elif FORCES_TYPE_I in clause_statuses:
            statuses.append(FORCES_TYPE_I)
        else:
            statuses.append(PASS)
    if all(s == "inapplicable" for s in statuses):
        hyps.append(Hypothesis("restricting-clause-applies", False))
        return CongruenceReport(
            theorem, tuple(hyps), chis[0] % 8, (), 8, HYPOTHESIS_VIOLATED, ()
        )
    if PASS in statuses:
        verdict = PASS
    elif FORCES_TYPE_I in statuses:
        verdict = FORCES_TYPE_I
    else:
        verdict = FAIL
    if j == 0:
        rhs = (half % 8,)
    elif j == 1:
        rhs = tuple(sorted({(half + 1) % 8, (half - 1) % 8}))
    else:
        rhs = tuple(range(8))
    return CongruenceReport(
        theorem, tuple(hyps), chis[0] % 8, rhs, 8, verdict, ()
    )


# ---------------------------------------------------------------------------
# projective complete intersections


@dataclass(frozen=True)
class ProjectiveHypotheses:
    """Homological hypothesis data supplied by the caller.

    d_rank and e_rank are the ranks of the maps induced on first homology
    by the inclusions of the positive half and of the curve; c_count is
    the number of noncontractible components of the surface missing the
    curve.
    """

    d_rank: int
    e_rank: int
    c_count: int
    bplus_in_one_component: bool = True
    bplus_in_one_separation_surface: bool = True
    m_surface: bool = True

    def __post_init__(self) -> None:
        if self.d_rank < 0 or self.e_rank < 0 or self.c_count < 0:
            raise SchemeError("ranks and counts must be nonnegative")


def projective_check(
    model: SurfaceModel,
    hyp: ProjectiveHypotheses,
    curve: CurveClass,
    chi_bplus: int,
    mode: str = "generalized",
) -> CongruenceReport:
    """Halves congruence for curves of even degree on projective surfaces.

    The classical clause needs an M-surface with the positive half in one
    component and c = 0 when the curve degree is 0 mod 4; the generalized
    clause replaces these by containment in one separation surface, with
    the c condition moved to degrees 2 mod 4.
    """
    if mode not in ("classical", "generalized"):
        raise SchemeError("mode must be classical or generalized")
    degrees = model.degrees
    if len(degrees) < 2:
        raise SchemeError("projective check needs the full degree sequence")
    ms = degrees[-1]
    const4 = prod(degrees[:-1]) * ms * ms
    hyps = [
        Hypothesis("curve-degree-even", ms % 2 == 0),
        Hypothesis("curve-inclusion-trivial", hyp.e_rank == 0),
        Hypothesis("deficiency-known", curve.deficiency is not None),
    ]
    theorem = f"projective-halves-{mode}"
    if mode == "classical":
        hyps.append(Hypothesis("ambient-m-surface", hyp.m_surface))
        hyps.append(
            Hypothesis("bplus-in-one-component", hyp.bplus_in_one_component)
        )
        if ms % 4 == 0:
            hyps.append(Hypothesis("c-condition", hyp.c_count == 0))
    else:
        hyps.append(Hypothesis("surface-type", model.characteristic_type))
        hyps.append(
            Hypothesis(
                "bplus-in-one-separation-surface",
                hyp.bplus_in_one_separation_surface,
            )
        )
        if ms % 4 == 2:
            hyps.append(Hypothesis("c-condition", hyp.c_count == 0))
    if ms % 2 or const4 % 4:
        return CongruenceReport(
            theorem, tuple(hyps), chi_bplus, (), 8, HYPOTHESIS_VIOLATED, ()
        )
    const = const4 // 4
    if any(not h.ok for h in hyps):
        return CongruenceReport(
            theorem, tuple(hyps), chi_bplus % 8, (), 8, HYPOTHESIS_VIOLATED, ()
        )
    n = hyp.d_rank + curve.deficiency
    statuses = []
    notes: list[str] = []
    if n == 0:
        statuses.append(PASS if chi_bplus % 8 == const % 8 else FAIL)
        rhs = (const % 8,)
    elif n == 1:
        rhs = tuple(sorted({(const + 1) % 8, (const - 1) % 8}))
        statuses.append(PASS if chi_bplus % 8 in rhs else FAIL)
    elif mode == "generalized" and n == 2:
        rhs = tuple(range(8))
        if chi_bplus % 8 == (const + 4) % 8:
            statuses.append(FAIL if curve.type_flag == "II" else FORCES_TYPE_I)
            notes.append(f"forced residue {(const + 4) % 8} mod 8")
        else:
            statuses.append(PASS)
    else:
        rhs = tuple(range(8))
    if mode == "generalized" and curve.type_flag == "I":
        statuses.append(PASS if chi_bplus % 4 == const % 4 else FAIL)
        notes.append(f"type I clause: residue {const % 4} mod 4")
    if not statuses:
        hyps.append(Hypothesis("restricting-clause-applies", False))
        return CongruenceReport(
            theorem, tuple(hyps), chi_bplus % 8, (), 8, HYPOTHESIS_VIOLATED, ()
        )
    if FAIL in statuses:
        verdict = FAIL
    elif FORCES_TYPE_I in statuses:
        verdict = FORCES_TYPE_I
    else:
        verdict = PASS
    return CongruenceReport(
        theorem, tuple(hyps), chi_bplus % 8, rhs, 8, verdict, tuple(notes)
    )


def fiedler_check(
    scheme: RealScheme, d: int, curve: CurveClass | None = None
) -> CongruenceReport:
    """Mod-16 congruence for M-curves of even bidegree on the ellipsoid."""
    model = ellipsoid_model(d)
    if curve is None:
        curve = curve_class_for(model, scheme.curve_component_count)
    deco = decompose(scheme, model)
    chis = {color: deco.color_chi(color) for color in (1, 2)}
    evens = {
        color: all(
            r.chi % 2 == 0 for r in deco.regions if r.color == color
        )
        for color in (1, 2)
    }
    return fiedler_residues(
        chis[1], chis[2], evens[1], evens[2], d, curve
    )


def fiedler_residues(
    chi1: int,
    chi2: int,
    components_even_1: bool,
    components_even_2: bool,
    d: int,
    curve: CurveClass,
) -> CongruenceReport:
    hyps = [
        Hypothesis("even-degree", d % 2 == 0),
        Hypothesis("m-curve", curve.deficiency == 0),
    ]
    theorem = "fiedler-congruence"
    applicable = []
    for chi_a, chi_b, even_a in (
        (chi1, chi2, components_even_1),
        (chi2, chi1, components_even_2),
    ):
        if even_a and chi_a % 4 == 2:
            applicable.append((chi_a, chi_b))
    hyps.append(Hypothesis("even-components-and-mod4", bool(applicable)))
    if any(not h.ok for h in hyps):
        return CongruenceReport(
            theorem, tuple(hyps), chi1 % 16, (), 16, HYPOTHESIS_VIOLATED, ()
        )
    target_b = (d * d) % 16
    target_a = (2 - d * d) % 16
    ok = any(
        chi_a % 16 == target_a and chi_b % 16 == target_b
        for chi_a, chi_b in applicable
    )
    chi_a, chi_b = applicable[0]
    return CongruenceReport(
        theorem,
        tuple(hyps),
        chi_a % 16,
        (target_a,),
        16,
        PASS if ok else FAIL,
        (f"other half must be {target_b} mod 16",),
    )
