import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from loguru import logger

from src.config import budget_settings
from src.core.exceptions import InconclusiveError, InvalidClaimError
from src.ideals.printing import format_element
from src.rings.descriptors import IdealizationZF2, Integers, ModularIntegers, Ring
from src.rings.elements import Element, Int, Pair, Res


def _int_part(x: Element) -> int:
    if isinstance(x, Pair):
        return x.a
    return x.value


def _log_floor(base: int, n: int) -> int:
    """Largest e with base**e <= n, for base >= 2 and n >= 1."""
    e, power = 0, base
    while power <= n:
        e += 1
        power *= base
    return e


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Exponent vectors of length `parts` summing to `total`, earlier generators first."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class MultSet:
    """
    The monoid generated by `gens`, with 1 always included.

    A set containing 0 is degenerate (every module is S-finite through s = 0)
    and has to be requested with `allow_zero=True`.
    """
    ring: Ring
    gens: tuple[Element, ...] = ()
    allow_zero: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "gens", tuple(self.gens))
        self.ring.check(*self.gens)
        if self.contains_zero and not self.allow_zero:
            raise InvalidClaimError("0 ∉ S", f"the generators {self.describe()} reach zero; pass allow_zero to opt in")

    @property
    def contains_zero(self) -> bool:
        if not self.gens:
            return False
        if isinstance(self.ring, ModularIntegers):
            product = 1
            for g in self.gens:
                product *= g.value  # type: ignore[union-attr]
            n = self.ring.modulus
            return pow(product, n, n) == 0
        # ℤ is a domain; over the idealization (0, v)² = 0
        return any(_int_part(g) == 0 for g in self.gens)

    def describe(self) -> str:
        return "{" + ", ".join(format_element(g) for g in self.gens) + "}"

    def power(self, exponents: Sequence[int]) -> Element:
        if len(exponents) != len(self.gens):
            raise ValueError(f"Exponent vector of length {len(exponents)} for {len(self.gens)} generators")
        out: Element = self.ring.one
        for g, e in zip(self.gens, exponents):
            if e < 0:
                raise ValueError(f"Negative exponent {e}")
            for _ in range(e):
                out = self.ring.mul(out, g)  # type: ignore[arg-type]
        return out

    def elements(self, budget: Optional[int] = None) -> Iterator[tuple[tuple[int, ...], Element]]:
        """Pairs (exponents, element) by ascending total degree, at most `budget` of them."""
        budget = budget if budget is not None else budget_settings.EXPONENT_BUDGET
        produced = 0
        for degree in itertools.count():
            for exponents in compositions(degree, len(self.gens)):
                yield exponents, self.power(exponents)
                produced += 1
                if produced >= budget:
                    return
            if not self.gens:
                return

    def _caps(self, t: Element, budget: int) -> tuple[list[int], bool]:
        # per-generator exponent bounds and whether failing within them is a definitive "no"
        if isinstance(self.ring, ModularIntegers):
            cap = min(self.ring.modulus, budget)
            return [cap] * len(self.gens), budget >= self.ring.modulus
        target = abs(_int_part(t))
        caps = []
        for g in self.gens:
            a = abs(_int_part(g))
            if a >= 2:
                caps.append(_log_floor(a, target) if target else 0)
            elif a == 1:
                # ±1, and (±1, v) over the idealization, repeat with period two
                caps.append(1)
            else:
                caps.append(2 if target == 0 else 0)
        return caps, True

    def contains(self, t: Element, budget: Optional[int] = None) -> Optional[tuple[int, ...]]:
        """
        An exponent vector e with Π gens^e = t, or None when t ∉ S.

        Over ℤ and the idealization the search is bounded by the size of the
        ℤ-part, so None is definitive. Over ℤ/n the bound is n; a smaller
        budget that finds nothing raises InconclusiveError.
        """
        budget = budget if budget is not None else budget_settings.EXPONENT_BUDGET
        if budget < 1:
            raise ValueError(f"Budget must be at least 1, got {budget}")
        self.ring.check(t)
        caps, definitive = self._caps(t, budget)
        candidates = sorted(itertools.product(*(range(c + 1) for c in caps)), key=lambda e: (sum(e), [-x for x in e]))
        for exponents in candidates:
            if self.power(exponents) == t:
                logger.debug(f"Found exponents {exponents} for {format_element(t)} in S")
                return tuple(exponents)
        if not definitive:
            raise InconclusiveError(f"membership of {format_element(t)} in S", budget)
        return None


def standard_mult_set(ring: Ring) -> MultSet:
    """S = {(2, 0)ⁿ} over the idealization, {2ⁿ} over ℤ and ℤ/n (odd n), and {1} otherwise."""
    if isinstance(ring, IdealizationZF2):
        return MultSet(ring, (Pair(2),))
    if isinstance(ring, Integers):
        return MultSet(ring, (Int(2),))
    if ring.modulus % 2:
        return MultSet(ring, (Res(2, ring.modulus),))
    return MultSet(ring)
