from django.db import models


class BracketMethod(models.TextChoices):
    AUTO = ("auto", "Automatic")
    STATES = ("states", "State sum")
    CONTRACTION = ("contraction", "Crossing contraction")
