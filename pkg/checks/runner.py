"""Suite runner and the identities report.

Suites
------
- ``squares``      δ under ∘₁/∘₂, the 3-cube δ identity, commuting squares,
                   and their symbolic certification.
- ``whisker``      whiskering axioms, the star bimorphism, l/r, and the
                   induced monoidal product when l = r.
- ``commutators``  commutator rules and laws, plus the classical law on
                   one-object groupoids.
- ``linear``       Δ, additions, brackets and the bracket defect in R[C].
- ``all``          every suite the structure supports.

Gating entries decide the exit code.  Informational entries describe the
structure (whether ``[a,a] = 1``, whether l = r, whether plain Leibniz holds)
and never fail a run.
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Optional, Union

from core.category import FiniteCategory, FiniteGroupoid
from core.reports import IdentityResolution, ValidationReport, Verdict, resolve_convention
from commutator.commutators import check_commutativity, check_self_and_antisymmetry, check_self_commutator_formula
from commutator.laws import (
    certify_biderivation_symbolically,
    certify_classical_law_symbolically,
    certify_cube_rule_symbolically,
    check_biderivation,
    group_commutator_law_check,
    scan_cube_faces,
    scan_cube_rule,
)
from cubes.defects import scan_commuting_squares, scan_cube_delta, scan_delta_comp
from linear.category import LinearCategory, linearize
from linear.identities import (
    scan_bracket_bilinearity,
    scan_Delta_additive,
    scan_Delta_comp,
    scan_leibniz,
    scan_leibniz_defect,
    scan_Delta_cube,
    scan_cube_of_three_terms,
    scan_star_defect,
)
from symbolic.oracle import CUBE_DELTA_WORD, certify_cube_delta, certify_delta_comp
from utils.rendering import render_witness
from whisker.monoidal import is_commutative_whiskered
from whisker.validation import check_bimorphism, check_lr_parallel, validate_whiskering
from whisker.whiskering import WhiskeredCategory

logger = logging.getLogger(__name__)

SUITES = ("squares", "whisker", "commutators", "linear", "all")
MAX_WITNESSES = 3


@dataclass
class ReportEntry:
    name: str
    verdict: str
    checked: int
    exhaustive: bool
    gating: bool = True
    witnesses: list[str] = field(default_factory=list)
    note: str = ""

    @property
    def failed(self) -> bool:
        return self.verdict == Verdict.COUNTEREXAMPLE.value


@dataclass
class IdentitiesReport:
    fingerprint: str
    kind: str
    suite: str
    entries: list[ReportEntry] = field(default_factory=list)
    convention: str = "indistinguishable"
    skipped: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not any(e.failed for e in self.entries if e.gating)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


# ── Entry builders ────────────────────────────────────────────────────────

def from_resolution(resolution: IdentityResolution, gating: bool = True) -> ReportEntry:
    failing = [v for v in resolution.candidates.values() if not v.holds]
    witnesses = [
        f"{v.name}: {render_witness(v.counterexample)}" + (f" [{v.detail}]" if v.detail else "")
        for v in failing[:MAX_WITNESSES]
    ]
    holding = resolution.holding()
    return ReportEntry(
        name=resolution.identity,
        verdict=resolution.verdict().value,
        checked=resolution.checked,
        exhaustive=resolution.exhaustive,
        gating=gating,
        witnesses=witnesses,
        note=f"holds: {', '.join(holding)}" if holding else "no candidate holds",
    )


def from_validation(name: str, report: ValidationReport, gating: bool = True, note: str = "") -> ReportEntry:
    witnesses = [
        f"{v.law}: {render_witness(v.witness)}" + (f" [{v.detail}]" if v.detail else "")
        for v in report.violations[:MAX_WITNESSES]
    ]
    verdict = Verdict.HOLDS if report.ok else Verdict.COUNTEREXAMPLE
    if not note and report.violations:
        note = f"{len(report.violations)} violation(s)"
    return ReportEntry(name, verdict.value, report.checked, report.exhaustive, gating, witnesses, note)


def from_flag(name: str, ok: bool, witness: Optional[tuple] = None, gating: bool = True, note: str = "") -> ReportEntry:
    verdict = Verdict.HOLDS if ok else Verdict.COUNTEREXAMPLE
    witnesses = [] if witness is None else [render_witness(witness)]
    return ReportEntry(name, verdict.value, 1, True, gating, witnesses, note)


# ── Suites ────────────────────────────────────────────────────────────────

class _Run:
    def __init__(self):
        self.entries: list[ReportEntry] = []
        self.resolutions: list[IdentityResolution] = []

    def resolution(self, resolution: IdentityResolution, gating: bool = True, symbolic: bool = False) -> None:
        # The convention is read off the finite instance only.
        if not symbolic:
            self.resolutions.append(resolution)
        self.entries.append(from_resolution(resolution, gating))

    def add(self, entry: ReportEntry) -> None:
        self.entries.append(entry)


def _groupoid_of(structure) -> Optional[FiniteGroupoid]:
    W = structure.base if isinstance(structure, LinearCategory) else structure
    C = W.base if isinstance(W, WhiskeredCategory) else W
    return C if isinstance(C, FiniteGroupoid) else None


def _whiskered_of(structure) -> Optional[WhiskeredCategory]:
    if isinstance(structure, LinearCategory):
        return structure.base
    return structure if isinstance(structure, WhiskeredCategory) else None


def run_squares(run: _Run, G: FiniteGroupoid) -> None:
    run.resolution(scan_delta_comp(G, 1))
    run.resolution(scan_delta_comp(G, 2))
    run.resolution(scan_cube_delta(G))
    run.resolution(scan_commuting_squares(G))
    run.resolution(certify_delta_comp(1), symbolic=True)
    run.resolution(certify_delta_comp(2), symbolic=True)
    cube, word = certify_cube_delta()
    run.resolution(cube, symbolic=True)
    run.add(from_flag("cube-delta-word", word == CUBE_DELTA_WORD, None if word == CUBE_DELTA_WORD else (str(word),),
                      note=f"reduces to {word}"))


def run_whisker(run: _Run, W: WhiskeredCategory) -> None:
    run.add(from_validation("whiskering-axioms", validate_whiskering(W)))
    run.add(from_validation("bimorphism", check_bimorphism(W)))
    run.add(from_validation("lr-parallel", check_lr_parallel(W)))
    monoidal = is_commutative_whiskered(W)
    run.add(from_flag(
        "commutative-whiskered", monoidal.commutative, monoidal.witness, gating=False,
        note="strict monoidal" if monoidal.commutative else "l != r: sesquicategory",
    ))
    if monoidal.commutative:
        run.add(from_validation("induced-product", monoidal.report))


def run_commutators(run: _Run, W: WhiskeredCategory) -> None:
    run.add(from_validation("self-commutator-formula", check_self_commutator_formula(W)))
    run.add(from_validation("self-and-antisymmetry", check_self_and_antisymmetry(W), gating=False))
    commutativity = check_commutativity(W)
    run.add(from_flag(
        "commutativity-biconditional", commutativity.holds,
        None if commutativity.holds else (commutativity.rules_witness, commutativity.commutative_witness),
        note=f"rules hold: {commutativity.rules_hold}; commutative: {commutativity.commutative}",
    ))
    left, right = check_biderivation(W)
    run.resolution(left)
    run.resolution(right)
    run.resolution(scan_cube_faces(W))
    run.resolution(scan_cube_rule(W))
    for resolution in (*certify_biderivation_symbolically(), *certify_cube_rule_symbolically()):
        run.resolution(resolution, symbolic=True)
    if W.base.objects == 1:
        run.resolution(group_commutator_law_check(W.base))
        run.resolution(certify_classical_law_symbolically(), symbolic=True)


def run_linear(run: _Run, A: LinearCategory) -> None:
    run.resolution(scan_star_defect(A))
    run.resolution(scan_bracket_bilinearity(A))
    run.resolution(scan_Delta_comp(A, 1))
    run.resolution(scan_Delta_comp(A, 2))
    run.resolution(scan_Delta_additive(A, 1))
    run.resolution(scan_Delta_additive(A, 2))
    run.resolution(scan_Delta_cube(A))
    run.resolution(scan_cube_of_three_terms(A))
    run.resolution(scan_leibniz_defect(A))
    run.resolution(scan_leibniz(A), gating=False)


def run_checks(structure: Union[FiniteCategory, WhiskeredCategory, LinearCategory], suite: str,
               fingerprint: str, kind: str) -> IdentitiesReport:
    """Run ``suite`` on ``structure``; suites it cannot support are skipped and listed."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    selected = SUITES[:-1] if suite == "all" else (suite,)
    G, W = _groupoid_of(structure), _whiskered_of(structure)
    run = _Run()
    skipped = []
    for name in selected:
        if name == "squares" and G is not None:
            run_squares(run, G)
        elif name == "whisker" and W is not None:
            run_whisker(run, W)
        elif name == "commutators" and W is not None and G is not None:
            run_commutators(run, W)
        elif name == "linear" and W is not None:
            run_linear(run, structure if isinstance(structure, LinearCategory) else linearize(W))
        else:
            logger.info("suite %s skipped for kind %s", name, kind)
            skipped.append(name)
    report = IdentitiesReport(
        fingerprint=fingerprint,
        kind=kind,
        suite=suite,
        entries=run.entries,
        convention=resolve_convention(run.resolutions).value,
        skipped=skipped,
    )
    logger.info("suite %s: %d entries, convention %s", suite, len(report.entries), report.convention)
    return report


# ── Rendering ─────────────────────────────────────────────────────────────

def render_json(report: IdentitiesReport) -> str:
    return json.dumps(report.to_dict(), indent=2, ensure_ascii=False)


def render_text(report: IdentitiesReport) -> str:
    lines = [
        f"fingerprint  {report.fingerprint}",
        f"kind         {report.kind}",
        f"suite        {report.suite}",
        f"convention   {report.convention}",
    ]
    if report.skipped:
        lines.append(f"skipped      {', '.join(report.skipped)}")
    lines.append("")
    for e in report.entries:
        scope = "exhaustive" if e.exhaustive else "sampled"
        tag = "" if e.gating else "  (info)"
        lines.append(f"{e.name:<40} {e.verdict:<30} {e.checked}/{scope}{tag}")
        if e.note:
            lines.append(f"    {e.note}")
        for w in e.witnesses:
            lines.append(f"    witness {w}")
    lines.append("")
    lines.append("PASS" if report.ok else "FAIL")
    return "\n".join(lines)
