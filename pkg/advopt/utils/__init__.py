from . import files, system, constants, rationals
from .settings_reader import SettingsReader
from .progress_bar import ProgressBar
