"""Exception types shared across the package."""


class KoverbsError(Exception):
    """Base class for every error this package raises on purpose."""


class NonHangulInput(KoverbsError):
    """A character that is neither a precomposed syllable nor a known jamo."""

    def __init__(self, char, position):
        super().__init__(f"non-Hangul character {char!r} at position {position}")
        self.char = char
        self.position = position


class Uncomposable(KoverbsError):
    """A letter sequence that cannot be packed into syllable blocks."""

    def __init__(self, letters, position):
        shown = "".join(letters)
        super().__init__(f"cannot compose {shown!r}: stuck at letter {position}")
        self.letters = tuple(letters)
        self.position = position


class MalformedRule(KoverbsError):
    """A combination-rule string that does not follow the 3-field format."""

    def __init__(self, text, reason):
        super().__init__(f"bad rule {text!r}: {reason}")
        self.text = text
        self.reason = reason


class ParseError(KoverbsError):
    """A data file line that cannot be read."""

    def __init__(self, path, line, reason):
        super().__init__(f"{path}:{line}: {reason}")
        self.path = str(path)
        self.line = line
        self.reason = reason


class RangeError(KoverbsError):
    """A class id outside its valid range."""

    def __init__(self, value, low, high):
        super().__init__(f"class id {value} out of range {low}..{high}")
        self.value = value
        self.low = low
        self.high = high


class DuplicateVerb(KoverbsError):
    """The same stem surface listed twice in the verb file."""

    def __init__(self, surface):
        super().__init__(f"duplicate verb entry {surface!r}")
        self.surface = surface


class NotFound(KoverbsError):
    """A stem, ending, or scope member missing from the lexicon."""

    def __init__(self, query):
        super().__init__(f"not in lexicon: {query!r}")
        self.query = query


class IndexOutOfBounds(KoverbsError):
    """A rule slice index that reaches past the sequence it slices."""

    def __init__(self, which, index, length):
        super().__init__(
            f"{which} slice index {index} out of bounds for {length} letters"
        )
        self.which = which
        self.index = index
        self.length = length
