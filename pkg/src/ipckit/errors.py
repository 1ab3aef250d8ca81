"""Exception types shared across the package."""


class IpckitError(Exception):
    pass


class DuplicateElement(IpckitError):
    pass


class UnknownElement(IpckitError):
    pass


class CycleDetected(IpckitError):
    """The given pairs force x <= y and y <= x for distinct x, y."""


class NotAPartialOrder(IpckitError):
    """mode=full input relation is not reflexive-transitive."""


class BudgetExceeded(IpckitError):
    def __init__(self, message="work budget exceeded", spent=None):
        super().__init__(message)
        self.spent = spent


class FormulaSyntaxError(IpckitError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NotIntuitionistic(IpckitError):
    pass


class VariableUnassigned(IpckitError):
    pass


class NotAnEPartition(IpckitError):
    pass


class UnknownKey(IpckitError):
    pass


class ParameterOutOfRange(IpckitError):
    pass


class UnknownScenario(IpckitError):
    pass


class SchemaError(IpckitError):
    pass
