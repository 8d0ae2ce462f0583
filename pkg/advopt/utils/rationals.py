# external package imports
import math
from decimal import Decimal, localcontext
from fractions import Fraction
from numbers import Rational

# absolute module imports
from advopt.exceptions import SchemaError

INFINITY = math.inf

DECIMAL_DIGITS = 12

def normalize(value):
    """
    Normalizes an exact value so that integral rationals are plain ints.

    Args:
        value               - An int, a Fraction, or +/- INFINITY.

    Returns:
        The same value, as an int if it is integral.
    """
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value

def divide(numerator, denominator):
    """
    Exact division of two rationals.

    Args:
        numerator           - Rational numerator.
        denominator         - Nonzero rational denominator.

    Returns:
        numerator / denominator as an int or Fraction.
    """
    return normalize(Fraction(numerator) / Fraction(denominator))

def parse_rational(value, document = "<input>"):
    """
    Parses a rational from a document value.

    Integer strings, "p/q" strings and ints are accepted. Floats, and strings that look like floats, are rejected so
    that no value is ever rounded.

    Args:
        value               - The value to parse.
        document            - Name of the document, used in error messages.

    Returns:
        The value as an int or Fraction.
    """
    if isinstance(value, bool):
        raise SchemaError(document, "'{}' is a boolean, not a rational".format(value))
    if isinstance(value, int):
        return value
    if isinstance(value, Rational):
        return normalize(Fraction(value))
    if isinstance(value, float):
        raise SchemaError(document, "float value {} is not allowed; write rationals as \"p/q\" strings".format(value))
    if not isinstance(value, str):
        raise SchemaError(document, "'{}' is not a rational string".format(value))

    text = value.strip()
    if any(character in text for character in ".eE"):
        raise SchemaError(document, "'{}' looks like a float; write rationals as \"p/q\" strings".format(value))
    try:
        parsed = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise SchemaError(document, "'{}' is not a rational string".format(value)) from None
    return normalize(parsed)

def format_rational(value):
    """
    Formats an exact value as its authoritative string, "p/q", an integer, or +/-inf.
    """
    if value == INFINITY:
        return "inf"
    if value == -INFINITY:
        return "-inf"
    return str(normalize(Fraction(value)))

def format_decimal(value, digits = DECIMAL_DIGITS):
    """
    Renders a rational as a decimal string with the given number of digits after the point.

    Decimal renderings are for reading only; the exact string from format_rational is authoritative.

    Args:
        value               - The rational to render.
        digits              - Number of digits after the decimal point.

    Returns:
        The decimal string.
    """
    if value in (INFINITY, -INFINITY):
        return format_rational(value)
    fraction = Fraction(value)
    with localcontext() as context:
        context.prec = digits + 30
        decimal = Decimal(fraction.numerator) / Decimal(fraction.denominator)
        return "{:.{}f}".format(decimal, digits)

def is_rational(value):
    return not isinstance(value, bool) and (isinstance(value, Rational) or value in (INFINITY, -INFINITY))

def to_plain(value):
    """
    Converts a value into JSON-ready data: rationals become exact strings, objects with to_document are expanded,
    and containers are converted recursively.
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if is_rational(value):
        return format_rational(value)
    if hasattr(value, "to_document"):
        return to_plain(value.to_document())
    if isinstance(value, dict):
        return {str(key): to_plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(item) for item in value]
    return str(value)
