# external package imports
import sys
from enum import Enum

def format_print(string, bold = False, italics = False, color = None, replace_with_next_line = False):
    """
    Prints a status message to stderr, leaving stdout to the results.
    """
    if bold:
        string = '\33[1m' + string + '\33[0m'
    if italics:
        string = '\33[3m' + string + '\33[0m'
    if color is not None:
        string = '\33[{}m'.format(color.value) + string + '\33[0m'

    if replace_with_next_line:
        string = "\r" + string
        print(string, end='', file=sys.stderr)
    else:
        print(string, file=sys.stderr)

def log(logging, string, **kwargs):
    """
    Prints a progress message through format_print if logging is turned on.

    Args:
        logging             - Whether to print anything at all.
        string              - The message.
        kwargs              - Passed on to format_print.

    Returns:
        None.
    """
    if logging:
        format_print(string, **kwargs)

class Color(Enum):
    RED = 31
    GREEN = 92
    BLUE = 34
    NORMAL = 0
    YELLOW = 33
    PURPLE = 95
