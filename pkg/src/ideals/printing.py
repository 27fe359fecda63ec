"""
Canonical text forms shared by logs, reports and the command line.

The grammar is the one `src.ideals.parsing` reads back:
integers `-12`, residues as plain integers, pairs `(3; {1,4,7})`, vectors
`[x, y]`, ideals `<g1, g2>` with `<0>` and `<1>` for the zero and unit
ideals, and `Split(d, full)` for the non-finitely-generated descriptors.
"""
from typing import Sequence

from src.rings.elements import Element, Int, Pair, Res, Vector
from src.ideals.models import FinIdeal, FreeSubmodule, SplitIdeal, StructuredIdeal, Subquotient, Target


def format_element(x: Element) -> str:
    if isinstance(x, Pair):
        return f"({x.a}; {{{','.join(str(i) for i in sorted(x.support))}}})"
    if isinstance(x, (Int, Res)):
        return str(x.value)
    raise TypeError(f"Not a ring element: {x!r}")


def format_vector(v: Sequence[Element]) -> str:
    return "[" + ", ".join(format_element(x) for x in v) + "]"


def format_ideal(ideal: StructuredIdeal) -> str:
    if isinstance(ideal, SplitIdeal):
        return f"Split({ideal.z_part}, full)"
    if ideal.is_zero:
        return "<0>"
    if ideal.is_unit:
        return "<1>"
    return "<" + ", ".join(format_element(g) for g in ideal.gens) + ">"


def format_nil(nil_span: Sequence[int], rank: int) -> str:
    return "[" + ", ".join(
        "[" + ", ".join(str((c >> i) & 1) for i in range(rank)) + "]" for c in nil_span
    ) + "]"


def format_module(module: FreeSubmodule) -> str:
    body = "<" + ", ".join(format_vector(g) for g in module.gens) + ">" if module.gens else "<0>"
    if module.nil_span:
        body += f" + nil{format_nil(module.nil_span, module.rank)}"
    return body


def format_target(target: Target) -> str:
    if isinstance(target, (FinIdeal, SplitIdeal)):
        return format_ideal(target)
    if isinstance(target, FreeSubmodule):
        return format_module(target)
    if target.relations.is_zero:
        return format_module(target.sub)
    return f"{format_module(target.sub)} / {format_module(target.relations)}"


def format_exponents(exponents: Sequence[int]) -> str:
    return "(" + ", ".join(str(e) for e in exponents) + ")"


def format_vector_or_element(v: Vector) -> str:
    return format_element(v[0]) if len(v) == 1 else format_vector(v)
