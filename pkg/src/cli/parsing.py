"""Command-line literals: the ring, multiplicative sets and the element/ideal grammar."""
from src.certificates.mult_set import MultSet, standard_mult_set
from src.ideals.parsing import (
    parse_element,
    parse_element_set,
    parse_ideal,
    parse_module,
    parse_subquotient,
    parse_vector,
    parse_vector_or_element,
)
from src.ideals.printing import format_element, format_ideal, format_module, format_target
from src.rings.descriptors import Ring, ring_from_spec

STANDARD_SSET = "standard"


def parse_mult_set(text: str, ring: Ring, allow_zero: bool = False) -> MultSet:
    """`standard` for the ring's default S, otherwise generators written `{g1, g2}`."""
    if text.strip().lower() == STANDARD_SSET:
        return standard_mult_set(ring)
    return MultSet(ring, parse_element_set(text, ring), allow_zero=allow_zero)


__all__ = [
    "STANDARD_SSET",
    "parse_mult_set",
    "parse_element",
    "parse_element_set",
    "parse_ideal",
    "parse_module",
    "parse_subquotient",
    "parse_vector",
    "parse_vector_or_element",
    "ring_from_spec",
    "format_element",
    "format_ideal",
    "format_module",
    "format_target",
]
