# external package imports
import math

# absolute module imports
from advopt.exceptions import InvalidValueError, InvalidInputError, BudgetExceededError, UnknownLetterError

# local module imports
from .alphabet import Alphabet
from .sft import Sft
from .word import Word, join_letters

def recoding_window(step, potential_window):
    """
    Gets the source window N of the sliding block code.

    Blocks have length 2N + 1. They must be at least step long so that overlapping blocks see every forbidden word,
    and they must cover the potential's dependence on [-L, L].

    Args:
        step                - M, the memory of the source shift.
        potential_window    - L, the radius the potential depends on.

    Returns:
        N = max(ceil((M - 1) / 2), L).
    """
    return max(math.ceil((step - 1) / 2), potential_window, 0)

def block_name(block):
    """
    Names a block letter after its source word: the letter itself for blocks of length 1, the concatenated letters
    if they are all single characters, and the letters joined by "." otherwise.
    """
    if len(block) == 1:
        return block[0]
    if all(len(letter) == 1 for letter in block):
        return "".join(block)
    return ".".join(block)

class RecodingMap(object):
    """
    The sliding block code x -> (c x)(j) = x|_{j-N}^{j+N} between a source shift and its one-step image.

    Block letters name source words of length 2N + 1.
    """

    def __init__(self, source_alphabet, source_window, blocks):
        """
        Creates a new RecodingMap.

        Args:
            source_alphabet - Alphabet of the source shift.
            source_window   - N.
            blocks          - Iterable of source letter tuples of length 2N + 1, in the order of the block alphabet.

        Returns:
            A new RecodingMap.
        """
        self.source_alphabet = source_alphabet
        self.source_window = source_window
        self.decode_table = {}
        self.encode_table = {}
        for block in blocks:
            block = tuple(block)
            name = block_name(block)
            self.decode_table[name] = block
            self.encode_table[block] = name
        self.block_alphabet = Alphabet(self.decode_table.keys(), "blocks of {}".format(source_alphabet.get_name()))

    def get_source_window(self):
        return self.source_window

    def get_block_length(self):
        return 2 * self.source_window + 1

    def get_source_alphabet(self):
        return self.source_alphabet

    def get_block_alphabet(self):
        return self.block_alphabet

    def block_of(self, letter):
        """
        Gets the source word a block letter stands for.
        """
        try:
            return self.decode_table[letter]
        except KeyError:
            raise UnknownLetterError(self.block_alphabet.get_name(), letter) from None

    def letter_of(self, block):
        try:
            return self.encode_table[tuple(block)]
        except KeyError:
            raise InvalidInputError("'{}' is not a legal block of the source shift".format(join_letters(block))) from None

    def center_letter(self, letter):
        return self.block_of(letter)[self.source_window]

    def encode(self, word):
        """
        Encodes a legal source word of length n >= 2N + 1 on [a, b] as the block word of length n - 2N on
        [a + N, b - N].
        """
        letters = tuple(word)
        start = word.get_start_index() if isinstance(word, Word) else 0
        length = self.get_block_length()
        if len(letters) < length:
            raise InvalidInputError("word '{}' is shorter than the block length {}".format(join_letters(letters),
                    length))
        blocks = [self.letter_of(letters[i:i + length]) for i in range(len(letters) - length + 1)]
        return Word(blocks, start + self.source_window)

    def decode(self, word):
        """
        Decodes a block word back to the source word it was encoded from.
        """
        letters = tuple(word)
        start = word.get_start_index() if isinstance(word, Word) else self.source_window
        if len(letters) == 0:
            return Word((), start - self.source_window)
        source = list(self.block_of(letters[0]))
        for letter in letters[1:]:
            source.append(self.block_of(letter)[-1])
        return Word(source, start - self.source_window)

def _contains_forbidden(letters, forbidden_by_length):
    for length, forbidden in forbidden_by_length.items():
        for i in range(len(letters) - length + 1):
            if letters[i:i + length] in forbidden:
                return True
    return False

def recode(letters, forbidden_words, step, potential_window = 0, name = "shift", budget = None):
    """
    Recodes an M-step shift given by forbidden words into a one-step Sft over blocks of length 2N + 1.

    Args:
        letters             - Ordered letters of the source shift.
        forbidden_words     - Iterable of forbidden letter sequences, each of length at most M + 1.
        step                - M, at least 1.
        potential_window    - L, the radius of dependence the recoding must absorb.
        name                - Name of the resulting Sft.
        budget              - Maximum number of candidate blocks. If None, no check is made.

    Returns:
        (sft, recoding_map). Raises EmptyShiftError if the shift is empty.
    """
    if step < 1:
        raise InvalidValueError("step", step, "at least 1")
    if potential_window < 0:
        raise InvalidValueError("potential_window", potential_window, "at least 0")

    source_alphabet = Alphabet(letters, name)
    forbidden_by_length = {}
    for word in forbidden_words:
        word = tuple(str(letter) for letter in word)
        if len(word) == 0 or len(word) > step + 1:
            raise InvalidValueError("forbidden word '{}'".format(join_letters(word)), len(word),
                    "a length between 1 and step + 1 = {}".format(step + 1))
        source_alphabet.to_indices(word)
        forbidden_by_length.setdefault(len(word), set()).add(word)

    window = recoding_window(step, potential_window)
    length = 2 * window + 1

    if budget is not None and len(source_alphabet)**length > budget:
        raise BudgetExceededError("candidate blocks of length {} for '{}'".format(length, name),
                len(source_alphabet)**length, budget)

    blocks = []
    stack = [()]
    while stack:
        prefix = stack.pop()
        if len(prefix) == length:
            blocks.append(prefix)
            continue
        for letter in reversed(source_alphabet.get_letters()):
            candidate = prefix + (letter,)
            # only suffixes can be new forbidden occurrences
            if not any(candidate[-size:] in forbidden for size, forbidden in forbidden_by_length.items()
                    if size <= len(candidate)):
                stack.append(candidate)

    allowed = []
    block_set = set(blocks)
    for block in blocks:
        for letter in source_alphabet.get_letters():
            extended = block + (letter,)
            successor = extended[1:]
            if successor in block_set and not _contains_forbidden(extended, forbidden_by_length):
                allowed.append((block, successor))

    recoding_map = RecodingMap(source_alphabet, window, blocks)
    sft = Sft([recoding_map.letter_of(block) for block in blocks],
            [(recoding_map.letter_of(u), recoding_map.letter_of(v)) for u, v in allowed],
            name, recoding_map)
    return sft, recoding_map

def higher_block(sft, radius, name = None):
    """
    Recodes a one-step Sft by windows of radius radius, giving the one-step Sft over its legal words of length
    2 * radius + 1.

    Args:
        sft                 - A one-step Sft.
        radius              - The window radius, at least 0.
        name                - Name of the resulting Sft, default derived from sft.

    Returns:
        (block_sft, recoding_map).
    """
    if radius < 0:
        raise InvalidValueError("radius", radius, "at least 0")
    if name is None:
        name = "{}[{}]".format(sft.get_name(), radius)

    alphabet = sft.get_alphabet()
    length = 2 * radius + 1
    blocks = [word.get_letters() for word in sft.enumerate_words(length)]
    recoding_map = RecodingMap(alphabet, radius, blocks)

    allowed = []
    for block in blocks:
        for v in sft.successors[alphabet.index(block[-1])]:
            successor = block[1:] + (alphabet.letter(v),)
            allowed.append((recoding_map.letter_of(block), recoding_map.letter_of(successor)))

    block_sft = Sft(recoding_map.get_block_alphabet().get_letters(), allowed, name, recoding_map)
    return block_sft, recoding_map
