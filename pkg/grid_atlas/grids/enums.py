from django.db import models


class Corner(models.TextChoices):
    """Compass type of a marker, named by where the curve bends."""

    NE = ("NE", "North-east")
    NW = ("NW", "North-west")
    SE = ("SE", "South-east")
    SW = ("SW", "South-west")


class MarkerKind(models.TextChoices):
    X = ("X", "X")
    O = ("O", "O")  # noqa: E741


class Axis(models.TextChoices):
    ROW = ("row", "Row")
    COL = ("col", "Column")


class Direction(models.TextChoices):
    UP = ("up", "Up")
    DOWN = ("down", "Down")
    LEFT = ("left", "Left")
    RIGHT = ("right", "Right")

    @property
    def offset(self) -> tuple[int, int]:
        """(column shift, row shift) applied to every marker."""
        return {
            Direction.UP: (0, 1),
            Direction.DOWN: (0, -1),
            Direction.LEFT: (-1, 0),
            Direction.RIGHT: (1, 0),
        }[self]


class EquivalenceMode(models.TextChoices):
    TOPOLOGICAL = ("top", "Topological")
    LEGENDRIAN = ("leg", "Legendrian")
    TRANSVERSE = ("trans", "Transverse")

    @classmethod
    def get_stabilization_map(cls) -> dict:
        return {
            cls.LEGENDRIAN: frozenset({Corner.NE, Corner.SW}),
            cls.TRANSVERSE: frozenset({Corner.NE, Corner.SW, Corner.SE}),
            cls.TOPOLOGICAL: frozenset(Corner),
        }

    @property
    def stabilizations(self) -> frozenset[Corner]:
        return self.get_stabilization_map()[self]


class KeyMode(models.TextChoices):
    ORIENTED = ("oriented", "Oriented")
    UNORIENTED = ("unoriented", "Unoriented")
