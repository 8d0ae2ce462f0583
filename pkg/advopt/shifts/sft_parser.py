# external package imports
import os, json

# absolute module imports
from advopt.exceptions import SchemaError, ParsingError, FileDoesNotExistError

# local module imports
from .sft import Sft
from .recoding import recode

SFT_KEYS = {"letters", "allowed", "forbidden_words", "step", "name"}

def read_document(document):
    """
    Reads a JSON document.

    Args:
        document            - A dict that is already parsed, or a local path to a ".json" file.

    Returns:
        (parsed_dict, document_name)
    """
    if isinstance(document, dict):
        return document, document.get("name", "<document>")

    if not os.path.isfile(document):
        raise FileDoesNotExistError(document)

    with open(document, "r", encoding="utf-8") as file:
        try:
            parsed = json.load(file)
        except json.JSONDecodeError as e:
            raise ParsingError(document, str(e)) from None

    if not isinstance(parsed, dict):
        raise SchemaError(document, "top level must be a JSON object")
    return parsed, document

def _letter_list(value, document, field):
    if not isinstance(value, list):
        raise SchemaError(document, "'{}' must be a list".format(field))
    for letter in value:
        if isinstance(letter, bool) or not isinstance(letter, (str, int)):
            raise SchemaError(document, "letters must be strings, got '{}' in '{}'".format(letter, field))
    return [str(letter) for letter in value]

def load_sft(document, name = None, potential_window = 0):
    """
    Loads a shift of finite type document and normalizes it to a pruned one-step Sft.

    The document is either {"letters": [...], "allowed": [[u, v], ...]} or
    {"letters": [...], "forbidden_words": [[...], ...], "step": M}. Documents of the second form, and any document
    when potential_window > 0, are recoded to a one-step Sft over blocks.

    Args:
        document            - A parsed dict or a path to a JSON file.
        name                - Name of the Sft, default the document's "name" field or its path.
        potential_window    - L, the radius of the potential the Sft will be paired with.

    Returns:
        The Sft. Raises SchemaError on a malformed document and EmptyShiftError if nothing survives pruning.
    """
    parsed, document_name = read_document(document)
    if name is None:
        name = str(parsed.get("name", document_name))

    unknown = set(parsed) - SFT_KEYS
    if unknown:
        raise SchemaError(document_name, "unknown fields {}".format(sorted(unknown)))
    if "letters" not in parsed:
        raise SchemaError(document_name, "missing field 'letters'")

    letters = _letter_list(parsed["letters"], document_name, "letters")
    if len(letters) == 0:
        raise SchemaError(document_name, "'letters' must not be empty")
    if len(set(letters)) != len(letters):
        raise SchemaError(document_name, "'letters' must be pairwise distinct")

    has_allowed = "allowed" in parsed
    has_forbidden = "forbidden_words" in parsed
    if has_allowed == has_forbidden:
        raise SchemaError(document_name, "exactly one of 'allowed' and 'forbidden_words' must be given")

    if has_allowed:
        if "step" in parsed and parsed["step"] != 1:
            raise SchemaError(document_name, "'allowed' pairs describe a one-step shift, 'step' must be 1")
        pairs = _pair_list(parsed["allowed"], document_name)
        _check_letters(pairs, letters, document_name)
        if potential_window == 0:
            return Sft(letters, pairs, name)
        allowed = set(pairs)
        forbidden = [(u, v) for u in letters for v in letters if (u, v) not in allowed]
        sft, recoding_map = recode(letters, forbidden, 1, potential_window, name)
        return sft

    if not isinstance(parsed["forbidden_words"], list):
        raise SchemaError(document_name, "'forbidden_words' must be a list of words")
    forbidden = [_letter_list(word, document_name, "forbidden_words") for word in parsed["forbidden_words"]]
    _check_letters(forbidden, letters, document_name)

    step = parsed.get("step")
    if step is None:
        step = max([len(word) - 1 for word in forbidden] + [1])
    if isinstance(step, bool) or not isinstance(step, int) or step < 1:
        raise SchemaError(document_name, "'step' must be a positive integer")
    if any(len(word) == 0 or len(word) > step + 1 for word in forbidden):
        raise SchemaError(document_name, "forbidden words must have length between 1 and step + 1 = {}".format(step + 1))

    sft, recoding_map = recode(letters, forbidden, step, potential_window, name)
    return sft

def _pair_list(value, document):
    if not isinstance(value, list):
        raise SchemaError(document, "'allowed' must be a list of letter pairs")
    pairs = []
    for pair in value:
        pair = _letter_list(pair, document, "allowed")
        if len(pair) != 2:
            raise SchemaError(document, "allowed entry {} is not a pair".format(pair))
        pairs.append(tuple(pair))
    return pairs

def _check_letters(words, letters, document):
    known = set(letters)
    for word in words:
        for letter in word:
            if letter not in known:
                raise SchemaError(document, "letter '{}' is not listed in 'letters'".format(letter))
