import inflect

_inflector = inflect.engine()


def pluralize(word: str, count: int) -> str:
    """``word`` in the grammatical number that agrees with ``count``."""
    return _inflector.plural(word, count)


def count_phrase(count: int, word: str) -> str:
    return f"{count} {pluralize(word, count)}"
