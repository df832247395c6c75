import csv
from pathlib import Path

from core.management.commands._base import SobomarkCommand
from core.numerics.momentbasis import basis_rows, gram_deviation
from core.services.preset_service import PresetService


class Command(SobomarkCommand):
    help = "Write the moment basis of a preset as CSV (row x, column n, 17 significant digits)."

    def add_arguments(self, parser):
        parser.add_argument('--preset', default='CS_I')
        parser.add_argument('--size', type=int, default=None)
        parser.add_argument('--out', required=True)

    def execute_command(self, *args, **options):
        basis = PresetService().get_basis(options['preset'], options['size'])
        path = Path(options['out'])
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open('w', newline='', encoding='utf-8') as handle:
            csv.writer(handle).writerows(basis_rows(basis))
        self.stdout.write(f"wrote {basis.size}x{basis.size} basis to {path} "
                          f"(max |A^T A - I| = {gram_deviation(basis):.3e})")
