from django.db import models


class ThetaVerdict(models.TextChoices):
    OBSTRUCTED = ("OBSTRUCTED", "OBSTRUCTED (theta nonzero)")
    INCONCLUSIVE = ("INCONCLUSIVE", "INCONCLUSIVE")
