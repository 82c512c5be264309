"""
Error types raised by the computation services
"""


class ComputationError(ValueError):
    """Base class for every error raised by the services"""


class BoundExceededError(ComputationError):
    def __init__(self, what: str, value: int, bound: int):
        super().__init__(f"{what} = {value} exceeds configured bound {bound}")
        self.what = what
        self.value = value
        self.bound = bound


class SizeMismatchError(ComputationError):
    pass


class UnknownNameError(ComputationError):
    def __init__(self, kind: str, name: str, known):
        super().__init__(f"unknown {kind} '{name}'; expected one of: {', '.join(sorted(known))}")
        self.kind = kind
        self.name = name


class WeightExpressionError(ComputationError):
    pass


class InvalidOrbitError(ComputationError):
    pass


class IncompatibleCaseError(ComputationError):
    pass


class NonIntegralMultiplicityError(ComputationError):
    pass


class RouteMismatchError(ComputationError):
    def __init__(self, case: str, involution: int, character: int):
        super().__init__(f"{case}: involution route {involution} != character route {character}")
        self.involution = involution
        self.character = character


class ClosedFormMismatchError(ComputationError):
    pass


def check_bound(what: str, value: int, bound: int) -> None:
    """Raise BoundExceededError when value > bound"""
    if value > bound:
        raise BoundExceededError(what, value, bound)
