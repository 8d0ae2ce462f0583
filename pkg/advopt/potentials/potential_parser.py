# absolute module imports
from advopt.exceptions import SchemaError, UnknownLetterError
from advopt.shifts import read_document

# local module imports
from .potential import Potential, hamming_preset, constant_potential, y_weights_potential

PRESETS = ("hamming", "constant", "y_weights")

def _keyed(sft, known):
    """
    Maps the letters of sft to letters in known, falling back to the center letter of recoded blocks.
    """
    def key(letter):
        if letter in known:
            return letter
        center = sft.center_letter(letter)
        if center in known:
            return center
        raise UnknownLetterError(sft.get_name(), letter)
    return key

def load_potential(document, x_sft, y_sft):
    """
    Loads a potential document for a pair of shifts.

    The document is either {"x_letters": [...], "y_letters": [...], "values": [[...], ...]} with rational strings,
    or a preset: {"preset": "hamming"}, {"preset": "constant", "value": "c"} or
    {"preset": "y_weights", "weights": {letter: "w", ...}}. Letters of recoded shifts may be given by their center
    source letter.

    Args:
        document            - A parsed dict or a path to a JSON file.
        x_sft               - The X shift.
        y_sft               - The Y shift.

    Returns:
        A Potential over the alphabets of x_sft and y_sft, in their order.
    """
    parsed, document_name = read_document(document)
    x_alphabet = x_sft.get_alphabet()
    y_alphabet = y_sft.get_alphabet()

    if "preset" in parsed:
        preset = parsed["preset"]
        if preset == "hamming":
            return hamming_preset(x_alphabet, y_alphabet, x_sft.center_letter, y_sft.center_letter)
        if preset == "constant":
            if "value" not in parsed:
                raise SchemaError(document_name, "preset 'constant' needs a 'value'")
            return constant_potential(x_alphabet, y_alphabet, parsed["value"])
        if preset == "y_weights":
            weights = parsed.get("weights")
            if not isinstance(weights, dict):
                raise SchemaError(document_name, "preset 'y_weights' needs a 'weights' object")
            try:
                return y_weights_potential(x_alphabet, y_alphabet, weights, _keyed(y_sft, set(map(str, weights))))
            except UnknownLetterError as e:
                raise SchemaError(document_name, "no weight for letter '{}'".format(e.letter)) from None
        raise SchemaError(document_name, "unknown preset '{}', expected one of {}".format(preset, list(PRESETS)))

    for field in ("x_letters", "y_letters", "values"):
        if field not in parsed:
            raise SchemaError(document_name, "missing field '{}'".format(field))
    values = parsed["values"]
    if not isinstance(values, list) or not all(isinstance(row, list) for row in values):
        raise SchemaError(document_name, "'values' must be a list of rows")

    potential = Potential([str(letter) for letter in parsed["x_letters"]],
            [str(letter) for letter in parsed["y_letters"]], values, document_name)

    x_key = _keyed(x_sft, set(potential.get_x_alphabet()))
    y_key = _keyed(y_sft, set(potential.get_y_alphabet()))
    try:
        return Potential.from_function(x_alphabet, y_alphabet,
                lambda u, v: potential.evaluate(x_key(u), y_key(v)), document_name)
    except UnknownLetterError as e:
        raise SchemaError(document_name, "no values for letter '{}'".format(e.letter)) from None
