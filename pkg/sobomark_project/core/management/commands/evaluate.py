from core.forms.evaluate_form import EvaluateForm
from core.management.commands._base import SobomarkCommand
from core.services.evaluation_service import EvaluationService


class Command(SobomarkCommand):
    help = "Embed, attack and extract over a directory of covers; write PSNR/BER rows as CSV."

    def add_arguments(self, parser):
        parser.add_argument('cover_dir')
        parser.add_argument('watermark')
        parser.add_argument('--key-file', required=True)
        parser.add_argument('--preset', action='append', dest='presets',
                            help='preset name; repeat for several (default: CS_I)')
        parser.add_argument('--csv', required=True)
        parser.add_argument('--seed', type=int, default=0)

    def execute_command(self, *args, **options):
        options['presets'] = ','.join(options['presets'] or ['CS_I'])
        cleaned = self.clean_options(EvaluateForm, options)
        rows = EvaluationService().evaluate_directory(
            options['cover_dir'], options['watermark'], options['key_file'],
            cleaned['presets'], options['csv'], cleaned['seed'],
        )
        self.stdout.write(f"wrote {len(rows)} rows to {options['csv']}")
