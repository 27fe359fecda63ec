"""
Reader for the literal grammar written by `src.ideals.printing`.

Parse errors carry the position in the whitespace-normalized text, which is
also the text quoted in the error message.
"""
from typing import Callable, Optional, TypeVar

from src.core.exceptions import LiteralParseError
from src.core.utils import normalize
from src.rings.descriptors import IdealizationZF2, Ring
from src.rings.elements import Element, Pair, Vector
from src.ideals.models import FinIdeal, FreeSubmodule, SplitIdeal, StructuredIdeal, Subquotient

T = TypeVar("T")


class _Cursor:
    def __init__(self, text: str):
        self.text = normalize(text)
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] == " ":
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, expected: str, position: Optional[int] = None) -> LiteralParseError:
        return LiteralParseError(self.text, self.pos if position is None else position, expected)

    def expect(self, token: str) -> None:
        self.skip()
        if not self.text.startswith(token, self.pos):
            raise self.fail(f"'{token}'")
        self.pos += len(token)

    def accept(self, token: str) -> bool:
        self.skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def integer(self) -> int:
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            raise self.fail("an integer")
        return int(self.text[start:self.pos])

    def end(self) -> None:
        self.skip()
        if self.pos != len(self.text):
            raise self.fail("end of input")

    def items(self, close: str, item: Callable[[], T]) -> list[T]:
        """Comma separated items up to and including `close`."""
        out: list[T] = []
        if self.accept(close):
            return out
        while True:
            out.append(item())
            if self.accept(close):
                return out
            self.expect(",")


def _element(cur: _Cursor, ring: Ring) -> Element:
    if isinstance(ring, IdealizationZF2):
        if not cur.accept("("):
            return Pair(cur.integer())
        a = cur.integer()
        cur.expect(";")
        cur.expect("{")
        indices: list[int] = []
        if not cur.accept("}"):
            while True:
                cur.skip()
                at = cur.pos
                i = cur.integer()
                if i < 0:
                    raise cur.fail("a natural-number index", at)
                if i in indices:
                    raise cur.fail(f"no repeated index ({i} appears twice)", at)
                indices.append(i)
                if cur.accept("}"):
                    break
                cur.expect(",")
        cur.expect(")")
        return Pair(a, frozenset(indices))
    return ring.from_int(cur.integer())


def _vector(cur: _Cursor, ring: Ring) -> Vector:
    cur.expect("[")
    at = cur.pos
    out = tuple(cur.items("]", lambda: _element(cur, ring)))
    if not out:
        raise cur.fail("a non-empty vector", at)
    return out


def _ideal(cur: _Cursor, ring: Ring) -> StructuredIdeal:
    if cur.accept("Split("):
        if not isinstance(ring, IdealizationZF2):
            raise cur.fail("an ideal '<...>' (Split descriptors exist over the idealization only)")
        at = cur.pos
        d = cur.integer()
        cur.expect(",")
        cur.expect("full")
        cur.expect(")")
        if d & 1:
            raise cur.fail("an even z-part (odd z-parts give the principal ideal)", at)
        return SplitIdeal(ring, d)
    cur.expect("<")
    return FinIdeal(ring, tuple(cur.items(">", lambda: _element(cur, ring))))


def _module(cur: _Cursor, ring: Ring, rank: Optional[int]) -> FreeSubmodule:
    cur.expect("<")
    at = cur.pos
    if cur.accept("0"):
        cur.expect(">")
        gens: list[Vector] = []
    else:
        cur.pos = at
        gens = cur.items(">", lambda: _vector(cur, ring))
    if gens:
        ranks = {len(g) for g in gens}
        if len(ranks) > 1 or (rank is not None and ranks != {rank}):
            raise cur.fail(f"vectors of one length{'' if rank is None else f' {rank}'}", at)
        rank = len(gens[0])
    if rank is None:
        raise cur.fail("at least one vector (the rank is unknown)", at)
    nil: list[int] = []
    if cur.accept("+"):
        cur.expect("nil")
        cur.expect("[")
        for bits in cur.items("]", lambda: _bits(cur, rank)):
            nil.append(bits)
    return FreeSubmodule(ring, rank, tuple(gens), tuple(nil))


def _bits(cur: _Cursor, rank: int) -> int:
    cur.expect("[")
    at = cur.pos
    values = cur.items("]", cur.integer)
    if len(values) != rank or any(v not in (0, 1) for v in values):
        raise cur.fail(f"{rank} bits", at)
    return sum(v << i for i, v in enumerate(values))


def _parse(text: str, read: Callable[[_Cursor], T]) -> T:
    cur = _Cursor(text)
    out = read(cur)
    cur.end()
    return out


def parse_element(text: str, ring: Ring) -> Element:
    """`-12`, `5` (a residue when the ring is ℤ/n), `(3; {1,4,7})` or a bare integer n for (n; {})."""
    return _parse(text, lambda cur: _element(cur, ring))


def parse_vector(text: str, ring: Ring) -> Vector:
    return _parse(text, lambda cur: _vector(cur, ring))


def parse_vector_or_element(text: str, ring: Ring) -> Vector:
    """A bracketed vector, or a single element read as a vector of length one."""
    cur = _Cursor(text)
    if cur.peek() == "[":
        out = _vector(cur, ring)
    else:
        out = (_element(cur, ring),)
    cur.end()
    return out


def parse_ideal(text: str, ring: Ring) -> StructuredIdeal:
    """`<g1, g2>`, `<0>`, `<1>` or `Split(d, full)`."""
    return _parse(text, lambda cur: _ideal(cur, ring))


def parse_module(text: str, ring: Ring, rank: Optional[int] = None) -> FreeSubmodule:
    """`<[a, b], [c, d]>` with an optional `+ nil[[1, 0]]` part; `<0>` needs `rank`."""
    return _parse(text, lambda cur: _module(cur, ring, rank))


def parse_subquotient(text: str, ring: Ring, rank: Optional[int] = None) -> Subquotient:
    """A module, optionally followed by `/ relations`."""
    def read(cur: _Cursor) -> Subquotient:
        sub = _module(cur, ring, rank)
        if cur.accept("/"):
            return Subquotient(sub, _module(cur, ring, sub.rank))
        return Subquotient.of(sub)

    return _parse(text, read)


def parse_element_set(text: str, ring: Ring) -> tuple[Element, ...]:
    """`{g1, g2}` or `{}`, as printed for multiplicative-set generators."""
    def read(cur: _Cursor) -> tuple[Element, ...]:
        cur.expect("{")
        return tuple(cur.items("}", lambda: _element(cur, ring)))
    return _parse(text, read)
