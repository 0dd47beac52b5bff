def to_int(value) -> int | None:
    """
    Read ``value`` as an int.

    Returns:
        int | None: The integer, or None when ``value`` does not read as one.
    """
    try:
        return int(value)
    except (TypeError, ValueError):
        return None


def int_tokens(text: str) -> list[int] | None:
    """Whitespace-separated integers of ``text``, or None if any token is not one."""
    values = [to_int(token) for token in text.split()]
    if None in values:
        return None
    return values  # type: ignore[return-value]
