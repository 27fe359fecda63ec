from typing import Annotated, Any

from pydantic import BeforeValidator

from src.core.utils import normalize


def _prepare_literal(value: Any) -> str:
    # JSON written by hand often has bare numbers where a literal is expected
    if isinstance(value, bool):
        raise ValueError("Expected an element literal, got a boolean")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return normalize(value)
    return value


ElementLiteral = Annotated[str, BeforeValidator(_prepare_literal)]
