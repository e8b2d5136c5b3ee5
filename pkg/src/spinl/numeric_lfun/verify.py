"""End-to-end verification: exact critical values rendered numerically
against direct evaluator runs, for all eight critical points.

Three comparisons per s:

  (i)   two_delta_product(s)  * pi^P * <D,D>    vs  L(s-9,D) L(s-10,D)
  (ii)  rankin_g20_value(s)   * pi^P * <g,g>    vs  L(s, D x g20)
  (iii) main_identity(s)      * pi^P * both     vs  the triple product

where the norms are either the stored high-precision constants below or
recomputed at the working precision.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from ..critical_values import main_identity, rankin_g20_value, two_delta_product
from ..qexp import delta_qexp, rankin_coeffs
from .bigfloat import context, round_to
from .evaluators import l_degree2, l_rankin4, petersson_norm

__all__ = [
    "STORED_DELTA_NORM",
    "STORED_G20_NORM",
    "stored_norms",
    "fresh_norms",
    "VerificationRow",
    "VerificationReport",
    "verify_tables",
]

# Petersson norms frozen at 36 digits from petersson_norm(12,4) and
# petersson_norm(20,4) at working precision 42; regenerating them is itself
# a test.  The weight-20 value is identical for r = 4, 6, 8 well beyond
# this length.
STORED_DELTA_NORM = "0.000001035362056804320922347816812225164593"
STORED_G20_NORM = "0.000008265541531659703164230062760258225715"


def stored_norms(dps: int) -> Tuple[object, object]:
    ctx = context(dps)
    return ctx.mpf(STORED_DELTA_NORM), ctx.mpf(STORED_G20_NORM)


def fresh_norms(dps: int) -> Tuple[object, object]:
    return petersson_norm(12, 4, dps).value, petersson_norm(20, 4, dps).value


@dataclass(frozen=True)
class VerificationRow:
    s: int
    branch: str  # "delta_pair", "rankin", "spin"
    exact_value: object  # exact coefficient rendered numerically, with norms
    direct_value: object  # product of independent evaluator runs
    abs_diff: object
    rel_diff: object


@dataclass
class VerificationReport:
    precision_digits: int
    coefficients_used: int
    fresh_norms: bool
    rows: List[VerificationRow] = field(default_factory=list)

    @property
    def max_rel_diff(self):
        return max(r.rel_diff for r in self.rows)

    def failures(self, tolerance) -> List[VerificationRow]:
        return [r for r in self.rows if r.rel_diff > tolerance]

    def as_dict(self) -> Dict:
        return {
            "precision_digits": self.precision_digits,
            "coefficients_used": self.coefficients_used,
            "fresh_norms": self.fresh_norms,
            "rows": [
                {
                    "s": r.s,
                    "branch": r.branch,
                    "exact_value": str(r.exact_value),
                    "direct_value": str(r.direct_value),
                    "abs_diff": str(r.abs_diff),
                    "rel_diff": str(r.rel_diff),
                }
                for r in self.rows
            ],
        }


def _render(ctx, result, norm_factor):
    num = ctx.mpf(result.rational.numerator)
    return num / result.rational.denominator * ctx.pi**result.pi_exponent * norm_factor


def verify_tables(dps: int = 30, M: int = 150, use_fresh_norms: bool = False) -> VerificationReport:
    """Compare all 24 exact renderings against direct numeric products."""
    report = VerificationReport(dps, M, use_fresh_norms)
    ctx = context(dps + 5)
    dn, gn = (fresh_norms(dps + 5) if use_fresh_norms else stored_norms(dps + 5))
    dn, gn = ctx.convert(dn), ctx.convert(gn)
    m_deg2 = max(20, min(M, 60))
    delta = delta_qexp(m_deg2)
    A = rankin_coeffs(M)
    ldelta = {
        j: ctx.convert(l_degree2(delta, 12, j, dps, m_deg2)) for j in range(2, 11)
    }
    for s in range(12, 20):
        pair_direct = ldelta[s - 9] * ldelta[s - 10]
        rank_direct = ctx.convert(l_rankin4(A, s, dps, M))
        rows = (
            ("delta_pair", two_delta_product(s), dn, pair_direct),
            ("rankin", rankin_g20_value(s), gn, rank_direct),
            ("spin", main_identity(s), dn * gn, pair_direct * rank_direct),
        )
        for branch, exact, norm, direct in rows:
            rendered = _render(ctx, exact, norm)
            diff = abs(rendered - direct)
            report.rows.append(
                VerificationRow(
                    s,
                    branch,
                    round_to(dps, rendered),
                    round_to(dps, direct),
                    round_to(dps, diff),
                    round_to(dps, diff / abs(direct)),
                )
            )
    return report
