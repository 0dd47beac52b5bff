from django.db import models


class RelationStatus(models.TextChoices):
    PROVEN = ("proven", "Proven")
    CONJECTURED = ("conjectured", "Conjectured")
    FALSE = ("false", "False")


class Symmetry(models.TextChoices):
    REVERSE = ("L=-L", "Orientation reversal")
    MU = ("L=mu(L)", "Legendrian mirror")
    MINUS_MU = ("L=-mu(L)", "Transverse mirror")


class RenderFormat(models.TextChoices):
    SVG = ("svg", "SVG")
    TXT = ("txt", "Text")
