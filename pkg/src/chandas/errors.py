"""Exception types raised across the package."""


class ChandasError(ValueError):
    """Base class for every input the algorithms refuse to process."""


class EmptyInput(ChandasError):
    def __init__(self, what="sequence"):
        super().__init__(f"empty {what}")


class InvalidCharacter(ChandasError):
    def __init__(self, position, char):
        self.position = position
        self.char = char
        super().__init__(f"invalid character {char!r} at position {position}")


class GuardExceeded(ChandasError):
    """Raised when a materializing enumeration would exceed the size guard."""

    def __init__(self, n, guard):
        self.n = n
        self.guard = guard
        super().__init__(f"n={n} exceeds enumeration guard {guard} (2^{n} rows)")


class IndexOutOfRange(ChandasError):
    def __init__(self, k, n):
        self.k = k
        self.n = n
        super().__init__(f"row index {k} outside 1..2^{n}")


class DigitOutOfRange(ChandasError):
    def __init__(self, index, digit, base):
        self.index = index
        self.digit = digit
        self.base = base
        super().__init__(f"digit {digit} at index {index} not in [0, {base - 1}]")


class InvalidBase(ChandasError):
    def __init__(self, base):
        self.base = base
        super().__init__(f"base must be >= 2, got {base}")


class InvalidArgs(ChandasError):
    pass


class Overflow(ChandasError):
    def __init__(self, value, width):
        self.value = value
        self.width = width
        super().__init__(f"{value} does not fit in {width} bits")
