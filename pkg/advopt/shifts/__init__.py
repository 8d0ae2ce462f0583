from .alphabet import Alphabet
from .word import Word, join_letters, split_letters
from .sft import Sft
from .orbit import PeriodicOrbit
from .recoding import RecodingMap, recode, higher_block, recoding_window
from .sft_parser import load_sft, read_document
from . import presets
