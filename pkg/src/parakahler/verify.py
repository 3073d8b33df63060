"""Catalog verification driver and report generation.

``verify_entry`` runs the whole chain for one catalog entry: algebra gates
(cached per algebra/form), the three para-complex axioms, metric properties
with sampled signatures, the curvature pipeline with label classification,
entrywise comparison against the published Ricci operator, and a pure-Fraction
re-run of the pipeline at sampled parameter points.  Mathematical failures are
recorded in the finding, never raised; only infrastructure problems (e.g. the
expression-size guard) propagate.

Published labels and matrices that disagree with the exact recomputation are
*discrepancies*: they are reported with the recomputed value but do not count
as failures, mirroring how a typo in a printed table should surface.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from . import numeric
from .catalog import Catalog, CatalogEntry
from .contact import (
    almost_paracontact_residuals,
    build_paracontact,
    central_extend,
    check_compatible_metric,
    check_contact,
    metric_restriction_residuals,
    reeb_residuals,
    verify_lifted_curvature,
    verify_lifted_ricci,
)
from .curvature import (
    anti_invariance_residual,
    classify,
    compare_ric_operator,
    curvature_bundle,
    label_holds,
)
from .expressions import Polynomial, format_expr
from .liealgebra import LieAlgebra, TwoForm, is_symplectic, jacobi_check
from .structures import (
    MetricAsymmetryError,
    SingularMetricError,
    check_involution,
    check_metric_compat,
    check_omega_compat,
    metric_from,
    nijenhuis,
    omega_from,
    signature_at,
)
from .sampling import DeterministicRng, sample_point


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    samples: int = 20
    fmt: str = "json"
    strict: bool = False
    entry_filter: Optional[str] = None


def _axiom_dict(check) -> dict:
    out = {"ok": check.ok}
    if not check.ok:
        out["first_failure"] = {
            "where": check.issues[0].where,
            "residual": check.issues[0].residual,
        }
    return out


def collect_avoid_polynomials(
    algebra: LieAlgebra, form: TwoForm, entry: CatalogEntry
) -> Tuple[Polynomial, ...]:
    """Denominators plus form determinant: the sampler must dodge their zeros."""
    avoid: List[Polynomial] = list(algebra.denominators())
    for _, _, v in form.terms():
        if not v.den.is_const:
            avoid.append(v.den)
    for row in entry.j_matrix.entries:
        for v in row:
            if not v.den.is_const:
                avoid.append(v.den)
    if entry.expected.ric is not None:
        for row in entry.expected.ric.entries:
            for v in row:
                if not v.den.is_const:
                    avoid.append(v.den)
    det = form.matrix.det()
    if not det.is_const:
        avoid.append(det.num)
    return tuple(avoid)


@dataclass
class EntryFinding:
    entry_id: str
    algebra: str
    form: str
    axioms: Dict[str, dict]
    metric: Dict[str, object]
    label: Dict[str, object]
    ric_comparison: Dict[str, object]
    corroboration: Dict[str, int]
    status: str  # ok | discrepancy | failure
    notes: Tuple[str, ...] = ()
    timing_ms: float = 0.0

    def to_document(self) -> dict:
        return {
            "id": self.entry_id,
            "algebra": self.algebra,
            "form": self.form,
            "axioms": self.axioms,
            "metric": self.metric,
            "label": self.label,
            "ric_comparison": self.ric_comparison,
            "corroboration": self.corroboration,
            "status": self.status,
            "notes": list(self.notes),
        }


def _numeric_corroboration(algebra, g, bundle, point) -> bool:
    """Re-run the pipeline on Fractions at a sample; exact agreement required."""
    n = algebra.dim
    c_num = algebra.structure_eval(point)
    g_num = g.matrix.eval_at(point)
    gamma_num = numeric.christoffel(c_num, g_num)
    riem_num = numeric.curvature(c_num, gamma_num)
    ric_num, op_num, s_num = numeric.ricci(riem_num, g_num)
    gamma = bundle.christoffel.gamma
    riem = bundle.riemann.comps
    for i in range(n):
        for j in range(n):
            if bundle.ricci.ricci[i, j].eval(point) != ric_num[i][j]:
                return False
            if bundle.ricci.operator[i, j].eval(point) != op_num[i][j]:
                return False
            for k in range(n):
                if gamma[i][j][k].eval(point) != gamma_num[i][j][k]:
                    return False
                for s in range(n):
                    if riem[i][j][k][s].eval(point) != riem_num[i][j][k][s]:
                        return False
    return bundle.ricci.scalar.eval(point) == s_num


def verify_entry(
    catalog: Catalog, entry: CatalogEntry, config: RunConfig = RunConfig()
) -> EntryFinding:
    start = time.perf_counter()
    algebra = catalog.algebra_of(entry)
    form = catalog.form_of(entry)
    notes: List[str] = []
    if entry.note:
        notes.append(entry.note)

    involution = check_involution(entry.j_matrix)
    compat = check_omega_compat(form, entry.j_matrix)
    integrability = nijenhuis(algebra, entry.j_matrix).as_check()
    axioms = {
        "involution": _axiom_dict(involution),
        "omega_compat": _axiom_dict(compat),
        "nijenhuis": _axiom_dict(integrability),
    }
    axioms_ok = involution.ok and compat.ok and integrability.ok

    metric_info: Dict[str, object] = {
        "symmetric": False,
        "compat": False,
        "roundtrip": False,
        "signature_samples": 0,
        "signature_ok": False,
    }
    label_info: Dict[str, object] = {
        "computed": None,
        "expected": entry.expected.label,
        "match": entry.expected.label is None,
        "einstein_factor": None,
        "expected_factor": None
        if entry.expected.einstein_factor is None
        else format_expr(entry.expected.einstein_factor),
        "anti_invariant": None,
        "operator_commutes": None,
    }
    ric_info: Dict[str, object] = {
        "expected_present": entry.expected.ric is not None,
        "residuals": [],
    }
    corroboration = {"samples": 0, "agree": 0}

    failure = not axioms_ok
    g = None
    bundle = None
    if axioms_ok:
        try:
            g = metric_from(form, entry.j_matrix)
            metric_info["symmetric"] = True
        except MetricAsymmetryError:
            failure = True
    if g is not None:
        metric_info["compat"] = check_metric_compat(g, entry.j_matrix).ok
        metric_info["roundtrip"] = omega_from(g, entry.j_matrix) == form
        bundle = curvature_bundle(algebra, g)
        classification = classify(bundle, entry.j_matrix)
        label_info["computed"] = classification.label
        if classification.einstein_factor is not None:
            label_info["einstein_factor"] = format_expr(classification.einstein_factor)
        label_info["anti_invariant"] = anti_invariance_residual(
            bundle.ricci.ricci, entry.j_matrix
        ).is_zero
        op = bundle.ricci.operator
        label_info["operator_commutes"] = (
            op @ entry.j_matrix - entry.j_matrix @ op
        ).is_zero
        if entry.expected.label is not None:
            label_info["match"] = label_holds(
                entry.expected.label,
                bundle,
                entry.j_matrix,
                factor=entry.expected.einstein_factor,
            )
        if entry.expected.ric is not None:
            residuals = compare_ric_operator(op, entry.expected.ric)
            ric_info["residuals"] = [
                [i, j, format_expr(v)] for (i, j, v) in residuals
            ]
            if residuals:
                ric_info["recomputed"] = [
                    [format_expr(op[i, j]) for j in range(op.cols)]
                    for i in range(op.rows)
                ]
        domains = catalog.domains_of(entry)
        avoid = collect_avoid_polynomials(algebra, form, entry)
        det_g = g.matrix.det()
        if not det_g.is_const:
            avoid = avoid + (det_g.num,)
        rng = DeterministicRng(config.seed * 0x10001 + len(entry.entry_id))
        signature_ok = True
        agree = 0
        for _ in range(config.samples):
            point = sample_point(rng, domains, avoid)
            try:
                if signature_at(g, point) != (algebra.dim // 2, algebra.dim // 2):
                    signature_ok = False
            except SingularMetricError:
                signature_ok = False
            if _numeric_corroboration(algebra, g, bundle, point):
                agree += 1
        metric_info["signature_samples"] = config.samples
        metric_info["signature_ok"] = signature_ok
        corroboration = {"samples": config.samples, "agree": agree}
        if not (
            metric_info["compat"]
            and metric_info["roundtrip"]
            and signature_ok
            and agree == config.samples
        ):
            failure = True

    if failure:
        status = "failure"
    elif not label_info["match"] or ric_info["residuals"]:
        status = "discrepancy"
        if not label_info["match"]:
            notes.append(
                f"published label {entry.expected.label!r} does not hold; "
                f"recomputed label is {label_info['computed']!r}"
            )
        if ric_info["residuals"]:
            notes.append("published Ricci operator differs; recomputed matrix attached")
    else:
        status = "ok"
    return EntryFinding(
        entry_id=entry.entry_id,
        algebra=entry.algebra,
        form=entry.form,
        axioms=axioms,
        metric=metric_info,
        label=label_info,
        ric_comparison=ric_info,
        corroboration=corroboration,
        status=status,
        notes=tuple(notes),
        timing_ms=(time.perf_counter() - start) * 1000.0,
    )


@dataclass
class ExtensionFinding:
    entry_id: str
    contact_ok: bool
    contact_coefficient: str
    almost_paracontact_ok: bool
    compatible_metric_ok: bool
    restriction_ok: bool
    reeb_ok: bool
    phi_vs_deta: str  # equal | negated | mismatch
    curvature_identities: Dict[str, bool]
    ricci_identities: Dict[str, bool]
    residuals: Tuple[Tuple[str, str], ...]
    status: str
    timing_ms: float = 0.0

    def to_document(self) -> dict:
        return {
            "id": self.entry_id,
            "contact": {"ok": self.contact_ok, "coefficient": self.contact_coefficient},
            "almost_paracontact_ok": self.almost_paracontact_ok,
            "compatible_metric_ok": self.compatible_metric_ok,
            "restriction_ok": self.restriction_ok,
            "reeb_ok": self.reeb_ok,
            "phi_vs_deta": self.phi_vs_deta,
            "curvature_identities": self.curvature_identities,
            "ricci_identities": self.ricci_identities,
            "residuals": [list(r) for r in self.residuals],
            "status": self.status,
        }


def verify_extension(
    catalog: Catalog, entry: CatalogEntry, config: RunConfig = RunConfig()
) -> ExtensionFinding:
    """Build the central extension and check the para-Sasakian identities."""
    start = time.perf_counter()
    algebra = catalog.algebra_of(entry)
    form = catalog.form_of(entry)
    ext = central_extend(algebra, form)
    ps = build_paracontact(ext, entry.j_matrix)
    g = metric_from(form, entry.j_matrix)
    base_bundle = curvature_bundle(algebra, g)
    ext_bundle = curvature_bundle(ext.extended, ps.h)
    contact = check_contact(ext)
    apc = almost_paracontact_residuals(ps)
    compat = check_compatible_metric(ps)
    restriction = metric_restriction_residuals(ps, g)
    reeb = reeb_residuals(ps)
    t2 = verify_lifted_curvature(ps, base_bundle, entry.j_matrix, ext_bundle=ext_bundle)
    t3 = verify_lifted_ricci(ps, base_bundle, ext_bundle=ext_bundle)
    if ps.phi_equals_d_eta:
        phi_vs = "equal"
    elif ps.phi_equals_minus_d_eta:
        phi_vs = "negated"
    else:
        phi_vs = "mismatch"
    ok = (
        contact.ok
        and not apc
        and not compat
        and not restriction
        and not reeb
        and phi_vs == "equal"
        and t2.ok
        and t3.ok
    )
    return ExtensionFinding(
        entry_id=entry.entry_id,
        contact_ok=contact.ok,
        contact_coefficient=format_expr(contact.coefficient),
        almost_paracontact_ok=not apc,
        compatible_metric_ok=not compat,
        restriction_ok=not restriction,
        reeb_ok=not reeb,
        phi_vs_deta=phi_vs,
        curvature_identities=dict(t2.identities),
        ricci_identities=dict(t3.identities),
        residuals=t2.residuals + t3.residuals,
        status="ok" if ok else "failure",
        timing_ms=(time.perf_counter() - start) * 1000.0,
    )


@dataclass
class VerificationReport:
    config: RunConfig
    gates: Dict[str, dict]
    findings: List[EntryFinding]
    sasakian: Optional[List[ExtensionFinding]]
    summary: Dict[str, int]

    def to_document(self) -> dict:
        doc = {
            "config": {
                "seed": self.config.seed,
                "samples": self.config.samples,
                "strict": self.config.strict,
                "filter": self.config.entry_filter,
            },
            "gates": self.gates,
            "entries": [f.to_document() for f in self.findings],
        }
        if self.sasakian is not None:
            doc["sasakian"] = [f.to_document() for f in self.sasakian]
        doc["summary"] = self.summary
        return doc


def _algebra_gates(catalog: Catalog, entries, config: RunConfig) -> Dict[str, dict]:
    gates: Dict[str, dict] = {}
    needed = {}
    for e in entries:
        needed.setdefault(e.algebra, set()).add(e.form)
    for name in sorted(needed):
        algebra = catalog.algebras[name]
        jr = jacobi_check(algebra)
        gate = {"jacobi": jr.ok, "forms": {}}
        if not jr.ok:
            gate["jacobi_violation"] = list(jr.violation)
        for fid in sorted(needed[name]):
            form = catalog.forms[(name, fid)]
            rep = is_symplectic(algebra, form)
            det_nonzero = 0
            rng = DeterministicRng(config.seed * 0x20001 + len(name) + len(fid))
            avoid = list(algebra.denominators())
            for _, _, v in form.terms():
                if not v.den.is_const:
                    avoid.append(v.den)
            for _ in range(config.samples):
                point = sample_point(rng, dict(algebra.params), avoid)
                if rep.det.eval(point) != 0:
                    det_nonzero += 1
            gate["forms"][fid] = {
                "closed": rep.closed,
                "nondegenerate": rep.ok,
                "det": format_expr(rep.det),
                "det_nonzero_at_samples": det_nonzero,
            }
        gates[name] = gate
    return gates


def verify_all(
    catalog: Catalog,
    config: RunConfig = RunConfig(),
    include_extensions: bool = False,
) -> VerificationReport:
    entries = catalog.select(pattern=config.entry_filter, variants=True)
    gates = _algebra_gates(catalog, entries, config)
    findings = [verify_entry(catalog, e, config) for e in entries]
    sasakian = None
    if include_extensions:
        sasakian = [verify_extension(catalog, e, config) for e in entries]
    summary = {
        "total": len(findings),
        "ok": sum(1 for f in findings if f.status == "ok"),
        "discrepancies": sum(1 for f in findings if f.status == "discrepancy"),
        "failures": sum(1 for f in findings if f.status == "failure"),
        "label_matches": sum(1 for f in findings if f.label["match"]),
        "ric_exact": sum(
            1
            for f in findings
            if f.ric_comparison["expected_present"] and not f.ric_comparison["residuals"]
        ),
        "gates_ok": int(
            all(
                g["jacobi"] and all(fm["nondegenerate"] for fm in g["forms"].values())
                for g in gates.values()
            )
        ),
    }
    if sasakian is not None:
        summary["sasakian_ok"] = sum(1 for f in sasakian if f.status == "ok")
        summary["sasakian_failures"] = sum(1 for f in sasakian if f.status != "ok")
    return VerificationReport(
        config=config,
        gates=gates,
        findings=findings,
        sasakian=sasakian,
        summary=summary,
    )


def render_report(report: VerificationReport, fmt: str = "json") -> str:
    """Deterministic rendering; wall-clock timings are deliberately omitted."""
    if fmt == "json":
        return json.dumps(report.to_document(), indent=2) + "\n"
    if fmt == "markdown":
        lines = ["# Verification report", ""]
        lines.append(
            "| entry | axioms | computed | expected | ric | corroborated | status |"
        )
        lines.append("|---|---|---|---|---|---|---|")
        for f in report.findings:
            axioms = "pass" if all(a["ok"] for a in f.axioms.values()) else "FAIL"
            ric = (
                "-"
                if not f.ric_comparison["expected_present"]
                else ("match" if not f.ric_comparison["residuals"] else "DIFFERS")
            )
            lines.append(
                f"| {f.entry_id} | {axioms} | {f.label['computed']} | "
                f"{f.label['expected'] or '-'} | {ric} | "
                f"{f.corroboration['agree']}/{f.corroboration['samples']} | {f.status} |"
            )
        if report.sasakian is not None:
            lines.append("")
            lines.append("## Para-Sasakian extensions")
            lines.append("")
            lines.append("| entry | contact | curvature | ricci | status |")
            lines.append("|---|---|---|---|---|")
            for f in report.sasakian:
                t2 = "pass" if all(f.curvature_identities.values()) else "FAIL"
                t3 = "pass" if all(f.ricci_identities.values()) else "FAIL"
                lines.append(
                    f"| {f.entry_id} | {'yes' if f.contact_ok else 'NO'} | {t2} | {t3} |"
                    f" {f.status} |"
                )
        lines.append("")
        lines.append("## Summary")
        lines.append("")
        for key, value in report.summary.items():
            lines.append(f"- {key}: {value}")
        lines.append("")
        return "\n".join(lines)
    raise ValueError(f"unknown report format {fmt!r}")
