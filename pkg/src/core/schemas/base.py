from typing import Any, Optional, TypeVar, Generic, TypeAlias
from pydantic import BaseModel, ConfigDict

from src.core.utils import to_camel

T = TypeVar("T")
ErrorList: TypeAlias = list[dict[str, Any]]


class CamelModel(BaseModel):
    """Wire model: snake_case attributes, camelCase JSON keys in declaration order."""
    model_config = ConfigDict(
        alias_generator=to_camel,
        populate_by_name=True,
        frozen=True,
    )

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)


class CommandResult(CamelModel, Generic[T]):
    data: Optional[T] = None
    message: Optional[str] = ""
    errors: Optional[ErrorList] = []
