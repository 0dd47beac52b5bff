from django.core.exceptions import ValidationError
from django.db import models

from grid_atlas.atlas.export import record_from_dict
from grid_atlas.atlas.managers import AtlasEntryManager
from grid_atlas.atlas.records import AtlasRecord
from grid_atlas.core.exceptions import AtlasSchemaError
from grid_atlas.core.models import ValidatedModel


class AtlasEntry(ValidatedModel):
    knot = models.CharField(max_length=64, unique=True)

    arc_index = models.PositiveSmallIntegerField(db_index=True)

    max_tb = models.SmallIntegerField()

    nonsimple_candidate = models.BooleanField(default=False)

    proven_nonsimple = models.BooleanField(default=False)

    record = models.JSONField()

    objects: AtlasEntryManager = AtlasEntryManager()

    class Meta:
        ordering = ["arc_index", "knot"]
        verbose_name_plural = "atlas entries"

    def __str__(self):
        return f"{self.knot} (arc index {self.arc_index}, max tb {self.max_tb})"

    def clean(self):
        super().clean()
        try:
            record = self.to_record()
        except AtlasSchemaError as exc:
            raise ValidationError({"record": str(exc)}) from exc

        if record.knot != self.knot:
            error_message = f"Stored record is for {record.knot}, not {self.knot}"
            raise ValidationError({"record": error_message})
        if (record.arc_index, record.max_tb) != (self.arc_index, self.max_tb):
            error_message = "arc_index and max_tb must match the stored record"
            raise ValidationError(error_message)

    def to_record(self) -> AtlasRecord:
        return record_from_dict(self.record)
