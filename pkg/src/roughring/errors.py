"""Exception types shared across the package."""


class RoughRingError(Exception):
    """Base class for every error raised by roughring."""


class StructuralError(RoughRingError, ValueError):
    """Operands are not shaped the way an operation needs."""


class UniverseMismatch(StructuralError):
    pass


class SizeCapExceeded(RoughRingError, ValueError):
    pass


class BudgetExceeded(SizeCapExceeded):
    def __init__(self, count, budget):
        super().__init__(f"enumeration needs {count} instances, budget is {budget}")
        self.count = count
        self.budget = budget


class AxiomViolation(RoughRingError, ValueError):
    def __init__(self, axiom, witness):
        super().__init__(f"ring axiom {axiom!r} fails at {witness}")
        self.axiom = axiom
        self.witness = witness


class NotAPartition(StructuralError):
    pass


class CompatibilityViolation(RoughRingError, ValueError):
    def __init__(self, operation, witness):
        super().__init__(f"relation is not compatible with {operation}: {witness}")
        self.operation = operation
        self.witness = witness


class NotAnIdeal(RoughRingError, ValueError):
    def __init__(self, reason, witness):
        super().__init__(f"not an ideal ({reason}): {witness}")
        self.reason = reason
        self.witness = witness


class NotASubgroup(StructuralError):
    def __init__(self, reason, witness):
        super().__init__(f"not an additive subgroup ({reason}): {witness}")
        self.reason = reason
        self.witness = witness


class NotAHomomorphism(RoughRingError, ValueError):
    def __init__(self, law, witness):
        super().__init__(f"map does not preserve {law}: {witness}")
        self.law = law
        self.witness = witness


class NotSurjective(RoughRingError, ValueError):
    pass


class NotTotal(RoughRingError, ValueError):
    """A set-valued map has an empty image where a total map is required."""


class NotPowerful(RoughRingError, ValueError):
    def __init__(self, report):
        super().__init__(f"set-valued map is not powerful: {report.first_failure()}")
        self.report = report


class NotASubring(RoughRingError, ValueError):
    pass


class ParseError(RoughRingError, ValueError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message
