"""
Shared plumbing of the sobomark management commands.

Exit codes:
    0  success
    1  verification residuals above tolerance
    2  invalid input (form errors, any SobomarkError)
    3  extracted image failed the fragile check
"""

import math

from django.core.management.base import BaseCommand, CommandError

from core.exceptions import SobomarkError

EXIT_FAILED_CHECK = 1
EXIT_INVALID = 2
EXIT_INAUTHENTIC = 3


def add_watermark_options(parser) -> None:
    parser.add_argument('--key-file', required=True, help='key=value file with kappa, x0 and mu_c')
    parser.add_argument('--preset', default='CS_I', help='preset name (default: CS_I)')
    parser.add_argument('--x0', type=float, help='override the chaos key initial value')
    parser.add_argument('--chaos-mu', dest='mu_c', type=float, help='override the chaos key control parameter')
    parser.add_argument('--delta', type=float, help='override the QIM step')
    parser.add_argument('--coeff-index', type=int, help='zigzag index of the carrying coefficient')
    parser.add_argument('--channels', choices=['blue', 'all'], help='robust channel policy')


def json_ready(value):
    """Copy of `value` with non-finite floats spelled 'inf', '-inf' or 'nan'."""
    if isinstance(value, dict):
        return {key: json_ready(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_ready(item) for item in value]
    if isinstance(value, float) and not math.isfinite(value):
        return 'nan' if math.isnan(value) else ('inf' if value > 0 else '-inf')
    return value


class SobomarkCommand(BaseCommand):
    """Runs `execute_command` and maps domain errors onto exit codes."""

    def clean_options(self, form_class, options: dict) -> dict:
        data = {name: value for name, value in options.items() if value is not None}
        form = form_class(data=data)
        if not form.is_valid():
            problems = []
            for field, messages in form.errors.items():
                text = ' '.join(messages)
                problems.append(text if field == '__all__' else f"--{field.replace('_', '-')}: {text}")
            raise CommandError('; '.join(problems), returncode=EXIT_INVALID)
        return form.cleaned_data

    def handle(self, *args, **options):
        try:
            return self.execute_command(*args, **options)
        except SobomarkError as exc:
            raise CommandError('; '.join(exc.messages), returncode=EXIT_INVALID)

    def execute_command(self, *args, **options):
        raise NotImplementedError
