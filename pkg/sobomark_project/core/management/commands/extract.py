from django.core.management.base import CommandError

from core.forms.watermark_form import WatermarkOptionsForm
from core.management.commands._base import EXIT_INAUTHENTIC, SobomarkCommand, add_watermark_options
from core.services.watermark_service import Overrides, WatermarkService


class Command(SobomarkCommand):
    help = "Extract the robust watermark and check the fragile signature of every block."

    def add_arguments(self, parser):
        parser.add_argument('image', help='watermarked (possibly attacked) image')
        parser.add_argument('--out', required=True, help='recovered 64x64 watermark image')
        parser.add_argument('--tamper-map', help='block grid image: white = intact, black = tampered')
        add_watermark_options(parser)

    def execute_command(self, *args, **options):
        cleaned = self.clean_options(WatermarkOptionsForm, options)
        result = WatermarkService().extract_file(
            options['image'], options['key_file'], cleaned['preset'], options['out'],
            options['tamper_map'], Overrides.from_options(cleaned),
        )
        self.stdout.write(f"authentic: {'true' if result.authentic else 'false'}")
        self.stdout.write(f"tampered blocks: {result.tampered_blocks}/{result.tamper_map.size}")
        if not result.authentic:
            raise CommandError(
                f"{options['image']} failed the fragile check in {result.tampered_blocks} blocks",
                returncode=EXIT_INAUTHENTIC,
            )
