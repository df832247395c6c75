from core.forms.attack_form import AttackForm
from core.management.commands._base import SobomarkCommand
from core.services.attack_service import AttackService


class Command(SobomarkCommand):
    help = "Apply one robustness attack to an image."

    def add_arguments(self, parser):
        parser.add_argument('image')
        parser.add_argument('attack', help='cropping, fourier-ellipsoid, gaussian, gaussian-laplace, '
                                           'minimum-filter or salt-pepper')
        parser.add_argument('param', type=float)
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--out', required=True)

    def execute_command(self, *args, **options):
        cleaned = self.clean_options(AttackForm, options)
        AttackService().attack_file(options['image'], cleaned['attack'], cleaned['param'],
                                    cleaned['seed'], options['out'])
        self.stdout.write(f"wrote {options['out']}")
