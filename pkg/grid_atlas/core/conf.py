from typing import Any

from django.conf import settings

DEFAULTS: dict[str, Any] = {
    "CACHE_DIR": ".gridatlas-cache",
    "BRACKET_MAX_CROSSINGS": 24,
    "BRACKET_NAIVE_MAX_CROSSINGS": 8,
    "DEFAULT_MAX_VISITED": 200_000,
    "DEFAULT_MAX_MILLIS": 60_000,
    "MAX_SIZE_SLACK": 2,
    "KNOT_BRAIDS_PATH": None,
    "KNOT_TABLE_PATH": None,
    "MFW_BOUNDS_PATH": None,
}


def atlas_setting(name: str) -> Any:
    """
    Look up a key of the GRID_ATLAS settings dict, falling back to DEFAULTS.
    """
    if name not in DEFAULTS:
        error_message = f"Unknown grid atlas setting '{name}'"
        raise KeyError(error_message)

    configured = getattr(settings, "GRID_ATLAS", {})
    return configured.get(name, DEFAULTS[name])
