"""
JSON export and import of atlas records.

Records are written in knot-name order with sorted keys, so the same
records always produce the same bytes. Import validates every record and
recomputes each class's classical invariants from its representative.
"""

import json
import logging
from collections.abc import Iterable

from grid_atlas.atlas.api.serializers import AtlasRecordSerializer
from grid_atlas.atlas.records import AtlasRecord
from grid_atlas.atlas.records import ClassEntry
from grid_atlas.atlas.records import TransverseClass
from grid_atlas.core.exceptions import AtlasSchemaError
from grid_atlas.search.enums import MergeRelation
from grid_atlas.search.enums import StabilizationSign
from grid_atlas.search.mountain import MergeRow

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


def record_to_dict(record: AtlasRecord) -> dict:
    return json.loads(json.dumps(AtlasRecordSerializer(record).data))


def record_from_dict(data: dict) -> AtlasRecord:
    serializer = AtlasRecordSerializer(data=data)
    if not serializer.is_valid():
        error_message = f"Invalid atlas record {data.get('knot', '?')!r}: {serializer.errors}"
        raise AtlasSchemaError(error_message)

    attrs = serializer.validated_data
    return AtlasRecord(
        knot=attrs["knot"],
        arc_index=attrs["arc_index"],
        max_tb=attrs["max_tb"],
        classes=tuple(
            ClassEntry(
                label=entry["label"],
                representative=entry["representative"],
                tb=entry["tb"],
                r=entry["r"],
                ruling=entry["ruling"],
                theta=entry["theta"],
                symmetries=entry["symmetries"],
            )
            for entry in attrs["classes"]
        ),
        merge_table=tuple(
            MergeRow(
                point=(row["tb"], row["r"]),
                sign=StabilizationSign(row["sign"]),
                groups=tuple(tuple(group) for group in row["groups"]),
                separators=tuple(MergeRelation(separator) for separator in row["separators"]),
            )
            for row in attrs.get("merge_table", [])
        ),
        transverse_classes=tuple(
            TransverseClass(sl=entry["sl"], members=tuple(entry["members"]), theta=entry["theta"])
            for entry in attrs.get("transverse_classes", [])
        ),
        nonsimple_candidate=attrs.get("nonsimple_candidate", False),
        mfw_bound=attrs.get("mfw_bound"),
    )


def records_to_json(records: Iterable[AtlasRecord]) -> str:
    document = {
        "version": SCHEMA_VERSION,
        "records": [record_to_dict(record) for record in sorted(records, key=lambda record: record.knot)],
    }
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def records_from_json(text: str) -> list[AtlasRecord]:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        error_message = f"Atlas document is not JSON: {exc}"
        raise AtlasSchemaError(error_message) from exc

    if not isinstance(document, dict) or document.get("version") != SCHEMA_VERSION:
        error_message = f"Expected an atlas document of version {SCHEMA_VERSION}"
        raise AtlasSchemaError(error_message)

    records = [record_from_dict(data) for data in document.get("records", [])]
    logger.info("Read %d atlas records", len(records))
    return records
