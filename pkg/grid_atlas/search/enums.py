from django.db import models

from grid_atlas.grids.enums import Corner


class StopReason(models.TextChoices):
    MET = ("met", "Frontiers met")
    EXHAUSTED = ("exhausted", "Component exhausted")
    MAX_VISITED = ("max_visited", "Visited ceiling reached")
    MAX_MILLIS = ("max_millis", "Time ceiling reached")


class SearchSide(models.TextChoices):
    FORWARD = ("forward", "Forward")
    BACKWARD = ("backward", "Backward")


class StabilizationSign(models.TextChoices):
    PLUS = ("+", "Positive stabilization")
    MINUS = ("-", "Negative stabilization")

    @property
    def variant(self) -> Corner:
        return Corner.NW if self == StabilizationSign.PLUS else Corner.SE

    @property
    def shift(self) -> tuple[int, int]:
        """Change of (tb, r)."""
        return (-1, 1) if self == StabilizationSign.PLUS else (-1, -1)


class MergeRelation(models.TextChoices):
    MERGED = (",", "Merged after one stabilization")
    PROVEN = ("|", "Proven distinct")
    CONJECTURED = (":", "Conjectured distinct")


class ThetaStatus(models.TextChoices):
    NONZERO = ("nonzero", "Theta nonzero")
    ZERO = ("zero", "Theta vanishes")
    UNKNOWN = ("unknown", "Unknown")
