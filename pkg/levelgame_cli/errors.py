"""
Exceptions raised by the levelgame library
Command handlers catch LevelGameError and print it as "Error: <message>".
"""

from typing import Sequence


class LevelGameError(ValueError):
    """Base class for every error the library raises on bad input"""


class StructureError(LevelGameError):
    """A partition or level structure violates its invariants"""


class MissingCoalitionError(LevelGameError, KeyError):
    """A worth was requested for a coalition the characteristic function does not define"""

    def __init__(self, coalition: int, labels: Sequence[str] | None = None, context: str | None = None):
        self.coalition = coalition
        self.labels = tuple(labels) if labels is not None else None
        self.context = context
        super().__init__(self._message())

    def describe(self) -> str:
        """Return the coalition as a brace-delimited list of labels (or 1-based indices)"""
        members = [i for i in range(self.coalition.bit_length()) if self.coalition >> i & 1]
        if self.labels is not None and all(i < len(self.labels) for i in members):
            names = [self.labels[i] for i in members]
        else:
            names = [str(i + 1) for i in members]
        return "{" + ", ".join(names) + "}"

    def _message(self) -> str:
        message = f"missing worth for coalition {self.describe()}"
        if self.context:
            message += f" (required by {self.context})"
        return message

    def __str__(self) -> str:
        # KeyError would otherwise quote the message
        return self._message()


class GameFileError(LevelGameError):
    """A game file could not be parsed or validated"""

    def __init__(self, message: str, path: str | None = None, field: str | None = None):
        self.path = path
        self.field = field
        location = path or "<game>"
        if field:
            location += f" [{field}]"
        super().__init__(f"{location}: {message}")


class UnknownExampleError(LevelGameError):
    """The requested bundled example does not exist"""
