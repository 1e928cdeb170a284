"""Lines printed by the acceptance tests, repeated in the terminal summary."""

LINES: list[str] = []
