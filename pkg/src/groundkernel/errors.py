"""Exception hierarchy shared by every module."""


class GroundKernelError(Exception):
    pass


class EmptyToken(GroundKernelError, ValueError):
    """Nothing is left of a raw token after trimming and punctuation stripping."""


class DictionarySyntaxError(GroundKernelError, ValueError):
    """Malformed dictionary source.

    ``lineno`` is 1-based for the text format and ``None`` for JSON input.
    """

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class DuplicateEntry(GroundKernelError, ValueError):
    def __init__(self, word):
        self.word = word
        super().__init__(f"duplicate definiendum: {word!r}")


class NotClosed(GroundKernelError, ValueError):
    """Raised when building a strict Dictionary from entries that fail validation."""

    def __init__(self, report):
        self.report = report
        super().__init__(report.summary())


class UnknownWord(GroundKernelError, KeyError):
    def __init__(self, words):
        self.words = tuple(sorted(words))
        super().__init__(f"unknown word(s): {', '.join(self.words)}")

    def __str__(self):
        return self.args[0]


class InvalidPercent(GroundKernelError, ValueError):
    pass


class TooLarge(GroundKernelError, ValueError):
    pass


class InvalidToken(GroundKernelError, ValueError):
    pass
