"""Detection of commutative whiskerings and the induced strict monoidal product.

When ``l(a, b) = r(a, b)`` for every pair the common value ``a ⊗ b`` is a
tensor product on the base; otherwise the structure is only a sesquicategory
and the first failing pair is returned as witness.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Optional

import config
from core.category import MorId
from core.reports import ValidationReport
from core.scan import plan_scan, plan_tuples
from whisker.whiskering import WhiskeredCategory, l_mult, r_mult

logger = logging.getLogger(__name__)


@dataclass
class MonoidalCheck:
    """Outcome of ``is_commutative_whiskered``.

    ``report`` holds the interchange, associativity and unit checks of the
    induced product and is only populated when ``commutative`` is true.
    """
    commutative: bool
    witness: Optional[tuple[MorId, MorId]] = None
    report: ValidationReport = field(default_factory=ValidationReport)

    def __bool__(self) -> bool:
        return self.commutative


def induced_product(W: WhiskeredCategory, a: MorId, b: MorId) -> MorId:
    return l_mult(W, a, b)


def _composable_pairs(W: WhiskeredCategory) -> list[tuple[MorId, MorId]]:
    C = W.base
    return [(a, b) for a in range(C.morphism_count) for b in C.out_of(C.target(a))]


def check_interchange(W: WhiskeredCategory) -> ValidationReport:
    """``(aa') ⊗ (bb') = (a ⊗ b)(a' ⊗ b')`` on every pair of composable pairs."""
    C = W.base
    pairs = _composable_pairs(W)
    report = ValidationReport()
    plan = plan_scan(
        "interchange quadruples",
        lambda: itertools.product(pairs, repeat=2),
        lambda rng: (rng.choice(pairs), rng.choice(pairs)),
        limit=config.TRIPLE_SCAN_LIMIT,
        total=len(pairs) ** 2,
    )
    report.exhaustive = plan.exhaustive
    for (a, a2), (b, b2) in plan:
        report.checked += 1
        lhs = induced_product(W, C.compose(a, a2), C.compose(b, b2))
        rhs = C.compose(induced_product(W, a, b), induced_product(W, a2, b2))
        if lhs != rhs:
            report.add("interchange", (a, a2, b, b2))
    return report


def check_product_laws(W: WhiskeredCategory) -> ValidationReport:
    """Associativity and unit laws of the induced product."""
    C = W.base
    report = ValidationReport()
    one = C.identity(W.unit)
    for a in range(C.morphism_count):
        if induced_product(W, one, a) != a or induced_product(W, a, one) != a:
            report.add("product-unit", (a,))
    plan = plan_tuples("product triples", C.morphism_count, 3, limit=config.TRIPLE_SCAN_LIMIT)
    report.exhaustive = plan.exhaustive
    for a, b, c in plan:
        report.checked += 1
        ab_c = induced_product(W, induced_product(W, a, b), c)
        a_bc = induced_product(W, a, induced_product(W, b, c))
        if ab_c != a_bc:
            report.add("product-associativity", (a, b, c))
    return report


def is_commutative_whiskered(W: WhiskeredCategory) -> MonoidalCheck:
    C = W.base
    for a in range(C.morphism_count):
        for b in range(C.morphism_count):
            if l_mult(W, a, b) != r_mult(W, a, b):
                logger.info("l != r at (%s, %s): sesquicategory only", C.morphism_label(a), C.morphism_label(b))
                return MonoidalCheck(False, (a, b))
    report = check_interchange(W)
    report.extend(check_product_laws(W))
    return MonoidalCheck(True, None, report)
