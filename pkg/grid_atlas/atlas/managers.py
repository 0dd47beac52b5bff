from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from django.db import models
from django.db import transaction

from grid_atlas.atlas.export import record_to_dict

if TYPE_CHECKING:
    from grid_atlas.atlas.models import AtlasEntry
    from grid_atlas.atlas.records import AtlasRecord

logger = logging.getLogger(__name__)


class AtlasEntryQuerySet(models.QuerySet["AtlasEntry"]):
    """Custom QuerySet for AtlasEntry model with chainable methods"""

    def by_knot(self, knot: str) -> AtlasEntryQuerySet:
        """Get entries for one knot name"""
        return self.filter(knot=knot)

    def at_arc_index(self, arc_index: int) -> AtlasEntryQuerySet:
        return self.filter(arc_index=arc_index)

    def nonsimple_candidates(self) -> AtlasEntryQuerySet:
        """Get knots with some (tb, r) point carrying more than one class"""
        return self.filter(nonsimple_candidate=True)

    def proven_nonsimple(self) -> AtlasEntryQuerySet:
        return self.filter(proven_nonsimple=True)


class AtlasEntryManager(models.Manager["AtlasEntry"]):
    """Custom Manager for AtlasEntry model with persistence helpers"""

    def get_queryset(self) -> AtlasEntryQuerySet:
        """Return custom QuerySet"""
        return AtlasEntryQuerySet(self.model, using=self._db)

    @transaction.atomic
    def store_record(self, record: AtlasRecord) -> tuple[AtlasEntry, bool]:
        """
        Create or replace the entry for the record's knot.
        """
        entry, created = self.update_or_create(
            knot=record.knot,
            defaults={
                "arc_index": record.arc_index,
                "max_tb": record.max_tb,
                "nonsimple_candidate": record.nonsimple_candidate,
                "proven_nonsimple": record.proven_nonsimple,
                "record": record_to_dict(record),
            },
        )
        logger.info("%s atlas entry for %s", "Created" if created else "Updated", record.knot)
        return entry, created

    # Delegate QuerySet methods to get IntelliSense support
    def by_knot(self, knot: str) -> AtlasEntryQuerySet:
        """Get entries for one knot name"""
        return self.get_queryset().by_knot(knot)

    def at_arc_index(self, arc_index: int) -> AtlasEntryQuerySet:
        return self.get_queryset().at_arc_index(arc_index)

    def nonsimple_candidates(self) -> AtlasEntryQuerySet:
        """Get knots with some (tb, r) point carrying more than one class"""
        return self.get_queryset().nonsimple_candidates()

    def proven_nonsimple(self) -> AtlasEntryQuerySet:
        return self.get_queryset().proven_nonsimple()
