"""Exception hierarchy shared by every maxplus module."""


class MaxPlusError(Exception):
    """Base class for all errors raised by this package."""


class IntegerOverflow(MaxPlusError, ArithmeticError):
    """A finite result does not fit in a signed 64-bit integer."""


class DimensionMismatch(MaxPlusError, ValueError):
    def __init__(self, expected, got, what="operand"):
        self.expected = tuple(expected)
        self.got = tuple(got)
        super().__init__(
            f"dimension mismatch for {what}: expected "
            f"{_shape(self.expected)}, got {_shape(self.got)}"
        )


class NotSquare(MaxPlusError, ValueError):
    def __init__(self, shape):
        self.shape = tuple(shape)
        super().__init__(f"matrix must be square, got {_shape(self.shape)}")


class RaggedRows(MaxPlusError, ValueError):
    def __init__(self, line_no, expected, got):
        self.line_no = line_no
        self.expected = expected
        self.got = got
        super().__init__(
            f"line {line_no}: expected {expected} entries, got {got}"
        )


class BadToken(MaxPlusError, ValueError):
    def __init__(self, token, line_no=None, col_no=None):
        self.token = token
        self.line_no = line_no
        self.col_no = col_no
        where = "" if line_no is None else f"line {line_no}, column {col_no}: "
        super().__init__(f"{where}bad token {token!r} (expected 'E' or an integer)")


class EmptyInput(MaxPlusError, ValueError):
    def __init__(self):
        super().__init__("no matrix rows found")


def _shape(shape):
    return "x".join(str(d) for d in shape)
