class InfeasibleParameters(ValueError):
    """The requested object provably does not exist (or cannot be built by
    the design route) for these parameters."""


class UnsupportedConstruction(Exception):
    """The parameters are feasible but no implemented construction covers
    them.  This is not a proof of nonexistence."""


class MalformedProblem(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
