"""Exception hierarchy shared by every pipeline stage."""


class PlpError(Exception):
    """Base class for all toolkit errors."""


class SourceError(PlpError):
    def __init__(self, line, column, message):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message


class ProgramError(PlpError):
    """A program violates a structural invariant (duplicate names, dangling set members, ...)."""


class GroundingError(PlpError):
    pass


class NameCollisionError(GroundingError):
    def __init__(self, first, second, flat):
        super().__init__(f"name terms {first} and {second} both flatten to {flat}")
        self.terms = (first, second)
        self.flat = flat


class CompileError(PlpError):
    pass


class EmitError(PlpError):
    pass


class SolverError(PlpError):
    pass


class BudgetExceeded(SolverError):
    def __init__(self, n_atoms, budget):
        super().__init__(
            f"enumeration over {n_atoms} undetermined atoms exceeds budget {budget}"
        )
        self.n_atoms = n_atoms
        self.budget = budget


class AnswerSetFormatError(PlpError):
    def __init__(self, line, message="unparseable answer set"):
        super().__init__(f"{message}: {line!r}")
        self.line = line


class ExternalSolverError(SolverError):
    """Failure of an external solver run.

    ``kind`` is one of ``"launch"``, ``"exit"``, ``"timeout"`` or ``"format"``.
    """

    def __init__(self, kind, message, transcript=None):
        super().__init__(f"{kind}: {message}")
        self.kind = kind
        self.transcript = transcript
