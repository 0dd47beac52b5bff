import uuid

from django.db import models
from model_utils.models import TimeStampedModel


class ValidatedModel(TimeStampedModel):
    """
    Timestamped model with a public uuid that runs full_clean() on every save.

    Pass clean=False to store a row whose payload was validated elsewhere.
    """

    uuid = models.UUIDField(default=uuid.uuid4, editable=False, unique=True)

    class Meta:
        abstract = True

    def is_new(self) -> bool:
        return self.pk is None

    def save(self, *args, clean=True, **kwargs):
        if clean:
            self.full_clean()
        return super().save(*args, **kwargs)
