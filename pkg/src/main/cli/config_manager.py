import configparser
import sys
from pathlib import Path

from ffla.FieldSpec import DEFAULT_PRIME


class ConfigManager:
    def __init__(self, argv: list[str] | None = None):
        self.config_file = self._find_config_file(sys.argv if argv is None else argv)
        self.config = configparser.ConfigParser()
        self._load_config()

    @classmethod
    def _find_config_file(cls, argv: list[str]) -> Path:
        """Find the config file, checking command line args first."""
        for flag in ('-p', '--properties'):
            if flag in argv:
                try:
                    index = argv.index(flag)
                    return Path(argv[index + 1])
                except (IndexError, ValueError):
                    pass
        # Default path
        return Path("config.ini")

    def _set_defaults(self):
        """Sets in-memory defaults for a clean config object."""
        self.config['General'] = {
            'prime': str(DEFAULT_PRIME),
            'seed': '0',
            'trials': '5',
            'quotient_samples': '3',
            'format': 'json',
            'logging': 'warning'
        }

    def _create_default_config_file(self):
        """Creates a default config file on disk using the in-memory defaults."""
        try:
            self.config_file.parent.mkdir(parents=True, exist_ok=True)
            with open(self.config_file, 'w', encoding='utf-8') as f:
                self.config.write(f)
            print(f"Default config file created at {self.config_file}", file=sys.stderr)
        except IOError as e:
            print(f"Error: Unable to create default config file: {e}", file=sys.stderr)

    def _load_config(self):
        """
        Load the config file. If it doesn't exist, create one from defaults.
        If it's corrupt, load in-memory defaults.
        """
        if not self.config_file.exists():
            print(f"Warning: Config file not found at {self.config_file}. Creating default.", file=sys.stderr)
            self._set_defaults()
            self._create_default_config_file()
            return

        try:
            self.config.read(self.config_file)
            if not self.config.sections():
                raise configparser.Error("Config file is empty or corrupt.")
        except Exception as e:
            print(f"Error reading config file: {e}. Loading in-memory defaults.", file=sys.stderr)
            self.config = configparser.ConfigParser()
            self._set_defaults()

    def _get_int(self, key: str, fallback: int) -> int:
        """Helper to read an integer from the [General] section; unparsable values give the fallback."""
        try:
            return self.config.getint('General', key, fallback=fallback)
        except ValueError:
            return fallback

    def get_prime(self) -> int:
        return self._get_int('prime', DEFAULT_PRIME)

    def get_seed(self) -> int:
        return self._get_int('seed', 0)

    def get_trials(self) -> int:
        return self._get_int('trials', 5)

    def get_quotient_samples(self) -> int:
        return self._get_int('quotient_samples', 3)

    def get_format(self) -> str:
        return self.config.get('General', 'format', fallback='json').strip().lower()

    def get_log_level(self) -> str:
        """
        Returns the log level from the [General] section.
        Defaults to 'warning' if not specified or invalid.
        Valid values: debug, info, warning, error
        """
        level = self.config.get('General', 'logging', fallback='warning').lower()
        valid_levels = ['debug', 'info', 'warning', 'error']
        if level in valid_levels:
            return level
        return 'warning'
