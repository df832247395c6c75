from core.management.commands._base import SobomarkCommand
from core.repositories.preset_repository import format_preset
from core.services.preset_service import PresetService


class Command(SobomarkCommand):
    help = "List presets, or dump them as key=value files."

    def add_arguments(self, parser):
        parser.add_argument('--name', help='only this preset')
        parser.add_argument('--out', help='directory to write <NAME>.preset files into')

    def execute_command(self, *args, **options):
        service = PresetService()
        if options['out']:
            for path in service.dump_presets(options['out'], options['name']):
                self.stdout.write(f"wrote {path}")
            return
        presets = [service.get_preset(options['name'])] if options['name'] else service.get_all_presets()
        self.stdout.write('\n'.join(format_preset(preset) for preset in presets), ending='')
