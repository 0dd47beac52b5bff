from django.core.exceptions import ValidationError


class GridAtlasError(Exception):
    """Base class for every domain error raised by grid_atlas."""


class InvalidGrid(GridAtlasError, ValidationError):
    def __str__(self) -> str:
        return str(self.message)


class NotPermutation(InvalidGrid):
    pass


class SharedSquare(InvalidGrid):
    pass


class SizeMismatch(InvalidGrid):
    pass


class GridParseError(GridAtlasError):
    pass


class MultiComponent(GridAtlasError):
    pass


class IllegalCommutation(GridAtlasError):
    pass


class IllegalMove(GridAtlasError):
    pass


class InvalidLetter(GridAtlasError):
    pass


class TooManyCrossings(GridAtlasError):
    pass


class InvariantMismatch(GridAtlasError):
    pass


class NonZeroRotation(GridAtlasError):
    pass


class Disconnected(GridAtlasError):
    pass


class InconsistentPotential(GridAtlasError):
    pass


class InternalConsistencyError(GridAtlasError):
    """Raised when a computation contradicts an identity that always holds."""


class AtlasSchemaError(GridAtlasError):
    pass


class InvalidBudget(GridAtlasError):
    pass
