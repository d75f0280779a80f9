"""Exception hierarchy shared by all modules."""


class BryophyllumError(Exception):
    """Base class for every error raised by this package."""


class DegenerateInput(BryophyllumError, ValueError):
    pass


class PointNotOnCircline(BryophyllumError, ValueError):
    pass


class InvalidParameters(BryophyllumError, ValueError):
    pass


class ExcludedLocus(BryophyllumError, ValueError):
    """(phi, psi) lies on a locus where no canonical bryophyllum exists."""


class StraightEdge(BryophyllumError, ValueError):
    pass


class DegenerateConfiguration(BryophyllumError, ValueError):
    pass


class NotFarey(BryophyllumError, ValueError):
    pass


class NoConvergence(BryophyllumError, RuntimeError):
    pass


class ReferenceDegenerate(BryophyllumError, RuntimeError):
    pass


class EmptyWord(BryophyllumError, ValueError):
    pass


class OutOfRange(BryophyllumError, ValueError):
    pass


class EmptyCF(BryophyllumError, ValueError):
    pass
