import json
from pathlib import Path

from django.core.serializers.json import DjangoJSONEncoder

from core.forms.watermark_form import WatermarkOptionsForm
from core.management.commands._base import SobomarkCommand, add_watermark_options, json_ready
from core.services.watermark_service import Overrides, WatermarkService


class Command(SobomarkCommand):
    help = "Embed a 64x64 robust watermark and the fragile signature into a cover image."

    def add_arguments(self, parser):
        parser.add_argument('cover', help='cover image (PNG/BMP/TIFF, sides multiple of 8)')
        parser.add_argument('watermark', help='64x64 watermark image or 512-byte .bin')
        parser.add_argument('--out', required=True, help='lossless output image')
        parser.add_argument('--sidecar', help='JSON run record (default: <out>.json)')
        add_watermark_options(parser)

    def execute_command(self, *args, **options):
        cleaned = self.clean_options(WatermarkOptionsForm, options)
        service = WatermarkService()
        summary = service.embed_file(options['cover'], options['watermark'], options['key_file'],
                                     cleaned['preset'], options['out'], Overrides.from_options(cleaned))
        sidecar = Path(options['sidecar'] or options['out'] + '.json')
        record = json.dumps(json_ready(summary), cls=DjangoJSONEncoder, indent=2, allow_nan=False)
        sidecar.write_text(record + '\n', encoding='utf-8')
        self.stdout.write(f"wrote {options['out']} (PSNR {summary['psnr_db']:.2f} dB)")
