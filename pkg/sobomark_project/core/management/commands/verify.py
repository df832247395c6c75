from django.core.management.base import CommandError

from core.forms.verify_form import VerifyForm
from core.management.commands._base import EXIT_FAILED_CHECK, SobomarkCommand
from core.services.verification_service import DEFAULT_GRID, DEFAULT_N_MAX, VerificationService


class Command(SobomarkCommand):
    help = "Check the polynomial and Sobolev identities numerically and print the worst residuals."

    def add_arguments(self, parser):
        parser.add_argument('--preset', help='preset name (default: CS_I unless parameters are given)')
        parser.add_argument('--family', choices=['charlier', 'meixner'])
        parser.add_argument('--mu', type=float)
        parser.add_argument('--gamma', type=float)
        parser.add_argument('--lam', type=float)
        parser.add_argument('--alpha', type=float)
        parser.add_argument('--j', type=int)
        parser.add_argument('--n-max', type=int, default=DEFAULT_N_MAX)
        parser.add_argument('--grid', type=int, default=DEFAULT_GRID, help='largest x of the point grid')

    def execute_command(self, *args, **options):
        cleaned = self.clean_options(VerifyForm, options)
        service = VerificationService()
        if cleaned.get('preset'):
            reports = service.verify_preset(cleaned['preset'], cleaned['n_max'], cleaned['grid'])
        else:
            reports = service.verify(cleaned['family_params'], cleaned['sobolev_params'],
                                     cleaned['n_max'], cleaned['grid'])
        failed = False
        for report in reports:
            self.stdout.write(report.label)
            for identity, worst in sorted(report.worst.items()):
                mark = 'ok' if worst <= report.tolerance else 'FAIL'
                self.stdout.write(f"  {identity:<24} {worst:.3e} ({report.checked[identity]} points) {mark}")
            for identity, count in sorted(report.skipped.items()):
                self.stdout.write(f"  {identity:<24} skipped at {count} points")
            failed = failed or not report.passed
        if failed:
            raise CommandError("identity residuals above tolerance", returncode=EXIT_FAILED_CHECK)
