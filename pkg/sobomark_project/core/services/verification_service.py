"""
Verification Service

Numerical verification of the classical and Sobolev identities for a
family / Sobolev parameter set.

Business Rules:
1. Classical identities (structure relation, hypergeometric equation) run
   for n = 0..n_max on x = 0..grid.
2. Sobolev identities run for n = 1..n_max on x = 0..grid; points where a
   closed-form coefficient is undefined are skipped and counted.
3. The weighted recurrence is checked against direct evaluation for
   degrees 2..min(n_max, N-1) on the block grid x = 0..N-1.
4. A report passes when every worst relative residual is <= EPS_ID.
"""

import logging
from typing import List

from core.conf import sobomark_setting
from core.exceptions import SingularPointError
from core.models.family import FamilyParams
from core.models.report import Residual, VerificationReport
from core.models.sobolev import SobolevParams
from core.numerics.momentbasis import weighted_eval, weighted_recurrence_eval
from core.numerics.polyfamilies import verify_hypergeometric_eq, verify_structure_relation
from core.numerics.sobolev import build_sobolev_family, verify_sobolev_suite
from core.services.preset_service import PresetService

logger = logging.getLogger(__name__)

DEFAULT_N_MAX = 8
DEFAULT_GRID = 20


class VerificationService:
    """Service class for identity verification"""

    def __init__(self, preset_service=None):
        self.preset_service = preset_service or PresetService()

    def verify_classical(self, fam: FamilyParams, n_max: int = DEFAULT_N_MAX,
                         grid: int = DEFAULT_GRID) -> VerificationReport:
        report = VerificationReport(label=f"classical {fam}", tolerance=sobomark_setting('EPS_ID'))
        for n in range(n_max + 1):
            for x in range(grid + 1):
                report.record('structure_relation', verify_structure_relation(fam, n, x))
                report.record('hypergeometric', verify_hypergeometric_eq(fam, n, x))
        return report

    def verify_weighted(self, sf, n_max: int = DEFAULT_N_MAX) -> VerificationReport:
        size = sobomark_setting('BLOCK_SIZE')
        report = VerificationReport(label=f"weighted {sf}", tolerance=sobomark_setting('EPS_ID'))
        for degree in range(2, min(n_max, size - 1, sf.n_max) + 1):
            for x in range(size):
                try:
                    via_recurrence = weighted_recurrence_eval(sf, degree, x)
                except SingularPointError:
                    report.skip('weighted_recurrence')
                    continue
                direct = weighted_eval(sf, degree, x)
                report.record('weighted_recurrence',
                              Residual(abs(via_recurrence - direct), max(1.0, abs(direct))))
        return report

    def verify(self, fam: FamilyParams, sob: SobolevParams, n_max: int = DEFAULT_N_MAX,
               grid: int = DEFAULT_GRID) -> List[VerificationReport]:
        """Run all three suites; returns one report per suite."""
        sf = build_sobolev_family(fam, sob, max(sobomark_setting('N_MAX'), n_max + 1))
        reports = [
            self.verify_classical(fam, n_max, grid),
            verify_sobolev_suite(sf, range(1, n_max + 1), range(grid + 1), label=f"sobolev {sf}"),
            self.verify_weighted(sf, n_max),
        ]
        for report in reports:
            logger.info("%s: %s (%d skipped)", report.label, 'passed' if report.passed else 'FAILED',
                        sum(report.skipped.values()))
        return reports

    def verify_preset(self, name: str, n_max: int = DEFAULT_N_MAX, grid: int = DEFAULT_GRID) -> List[VerificationReport]:
        preset = self.preset_service.get_preset(name)
        return self.verify(preset.family_params(), preset.sobolev_params(), n_max, grid)
