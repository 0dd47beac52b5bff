from dataclasses import dataclass

from grid_atlas.core.conf import atlas_setting
from grid_atlas.core.exceptions import InvalidBudget


@dataclass(frozen=True)
class SearchBudget:
    """Ceilings for one search: grid size of the subgraph, nodes visited, wall-clock milliseconds."""

    max_size: int
    max_visited: int
    max_millis: int

    def __post_init__(self):
        for name in ("max_size", "max_visited", "max_millis"):
            value = getattr(self, name)
            if value <= 0:
                error_message = f"Search budget {name} must be positive, got {value}"
                raise InvalidBudget(error_message)

    @classmethod
    def default(
        cls,
        arc_index: int,
        *,
        max_size: int | None = None,
        max_visited: int | None = None,
        max_millis: int | None = None,
    ) -> "SearchBudget":
        return cls(
            max_size=max_size or arc_index + atlas_setting("MAX_SIZE_SLACK"),
            max_visited=max_visited or atlas_setting("DEFAULT_MAX_VISITED"),
            max_millis=max_millis or atlas_setting("DEFAULT_MAX_MILLIS"),
        )

    def widened(self, extra_size: int) -> "SearchBudget":
        return SearchBudget(self.max_size + extra_size, self.max_visited, self.max_millis)

    def serialize(self) -> dict[str, int]:
        return {"max_size": self.max_size, "max_visited": self.max_visited, "max_millis": self.max_millis}
