class BinMachError(ValueError):
    """Root of every error raised by the synthesis toolkit."""


class SequenceError(BinMachError):
    pass


class FormatErrorMixin:
    """Parse error that remembers where it happened."""

    def __init__(self, message: str, line: int | None = None, token: str | None = None):
        self.line = line
        self.token = token
        where = []
        if line is not None:
            where.append(f"line {line}")
        if token is not None:
            where.append(f"token {token!r}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class SequenceFormatError(FormatErrorMixin, SequenceError):
    pass


class MachineError(BinMachError):
    pass


class UnspecifiedStateError(MachineError):
    def __init__(self, state: int):
        self.state = state
        super().__init__(f"state {state} is a don't care of an incompletely specified machine")


class MachineFormatError(FormatErrorMixin, MachineError):
    pass


class LogicError(BinMachError):
    pass


class PlaFormatError(FormatErrorMixin, LogicError):
    pass


class LfsrError(BinMachError):
    pass


class LfsrFormatError(FormatErrorMixin, LfsrError):
    pass
