from django.db import models


class RulingMode(models.TextChoices):
    UNGRADED = ("ungraded", "Ungraded")
    ZERO_GRADED = ("zero", "Zero-graded")


class FrontEventKind(models.TextChoices):
    LEFT_CUSP = ("left_cusp", "Left cusp")
    RIGHT_CUSP = ("right_cusp", "Right cusp")
    CROSSING = ("crossing", "Crossing")
    SMOOTH = ("smooth", "Smoothed corner")
