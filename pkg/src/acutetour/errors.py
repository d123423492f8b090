"""Exception hierarchy shared by every module."""


class AcuteTourError(Exception):
    pass


class InvalidInputError(AcuteTourError, ValueError):
    """Input violates a documented precondition (odd n, duplicates, bad ranges)."""


class DegenerateInputError(InvalidInputError):
    """A predicate was asked about coincident points."""


class PreconditionError(InvalidInputError):
    pass


class UnsupportedSizeError(AcuteTourError):
    """Even n below the construction's lower limit."""


class ParityError(AcuteTourError):
    """Alternating path counts do not match the requested endpoints."""


class InternalInvariantError(AcuteTourError):
    """Something that the construction guarantees did not hold.

    ``bundle`` carries whatever diagnostic state the raiser had at hand
    (partition, quadruples, case taken) so the failure can be replayed.
    """

    def __init__(self, message, bundle=None):
        super().__init__(message)
        self.bundle = bundle or {}
