# absolute module imports
from advopt.exceptions import InvalidInputError

def join_letters(letters):
    """
    Renders a letter sequence compactly: concatenated if every letter is a single character, comma separated
    otherwise.
    """
    letters = tuple(letters)
    if all(len(letter) == 1 for letter in letters):
        return "".join(letters)
    return ",".join(letters)

def split_letters(string, alphabet):
    """
    Reads a word written by join_letters, or any comma separated list of letters, back into a letter tuple.

    Args:
        string              - The word as a string, e.g. "1,0" or "10".
        alphabet            - The Alphabet the letters belong to.

    Returns:
        Tuple of letters.
    """
    string = string.strip()
    if "," in string:
        letters = tuple(letter.strip() for letter in string.split(","))
    elif string in alphabet:
        letters = (string,)
    else:
        letters = tuple(string)
    for letter in letters:
        alphabet.index(letter)
    return letters

class Word(object):
    """
    A finite letter sequence placed at absolute positions start_index, ..., start_index + len - 1.

    Words are immutable. Legality is a property of a word relative to an Sft, see Sft.is_legal.
    """

    def __init__(self, letters, start_index = 0):
        self.letters = tuple(str(letter) for letter in letters)
        self.start_index = start_index

    def get_letters(self):
        return self.letters

    def get_start_index(self):
        return self.start_index

    def get_end_index(self):
        return self.start_index + len(self.letters) - 1

    def covers(self, a, b):
        return self.start_index <= a and b <= self.get_end_index()

    def letter_at(self, position):
        """
        Gets the letter at an absolute position.
        """
        if not self.covers(position, position):
            raise InvalidInputError("position {} is outside word {} starting at {}".format(position, self,
                    self.start_index))
        return self.letters[position - self.start_index]

    def restrict(self, a, b):
        """
        Gets the subword on the absolute positions [a, b].
        """
        if not self.covers(a, b):
            raise InvalidInputError("[{}, {}] is outside word {} starting at {}".format(a, b, self, self.start_index))
        return Word(self.letters[a - self.start_index:b - self.start_index + 1], a)

    def replace(self, a, letters):
        """
        Gets a copy of this word with the letters starting at absolute position a replaced.
        """
        letters = tuple(letters)
        b = a + len(letters) - 1
        if not self.covers(a, b):
            raise InvalidInputError("[{}, {}] is outside word {} starting at {}".format(a, b, self, self.start_index))
        offset = a - self.start_index
        return Word(self.letters[:offset] + letters + self.letters[offset + len(letters):], self.start_index)

    def shifted(self, start_index):
        return Word(self.letters, start_index)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, index):
        return self.letters[index]

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters and self.start_index == other.start_index

    def __hash__(self):
        return hash((self.letters, self.start_index))

    def __str__(self):
        return join_letters(self.letters)

    def __repr__(self):
        return "Word({!r}, start_index={})".format(str(self), self.start_index)

    def to_document(self):
        return {"start_index": self.start_index, "letters": list(self.letters)}
