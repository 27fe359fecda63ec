import random
from itertools import combinations

import pytest

from oracles import annihilator_set, colon_set, ideal_set, submodule_colon_set, submodule_set
from src.core.exceptions import InvalidClaimError, LiteralParseError
from src.ideals import (
    FinIdeal,
    FreeSubmodule,
    SplitIdeal,
    annihilator,
    colon,
    component_projection,
    coordinate_colon,
    ideal_contains,
    ideal_equal,
    ideal_sum,
    intersect,
    is_member,
    member,
    scale,
    split_ideal,
    submodule_colon,
)
from src.ideals.parsing import parse_element, parse_ideal, parse_module, parse_subquotient
from src.ideals.printing import format_element, format_ideal, format_module
from src.rings import Int, ModularIntegers, Pair, Res


def e(*indices: int) -> frozenset[int]:
    return frozenset(indices)


def ints(ring, *values):
    return tuple(ring.from_int(v) for v in values)


class TestCanonicalForms:
    def test_integer_gcd(self, zz):
        assert FinIdeal(zz, ints(zz, 4, 6)).gens == (Int(2),)
        assert FinIdeal(zz, ints(zz, -3)).gens == (Int(3),)

    def test_zero_ideal_has_no_generators(self, zz, z12, idealization):
        for ring in (zz, z12, idealization):
            assert FinIdeal(ring, (ring.zero,)).is_zero

    def test_modular_gcd_with_modulus(self, z12):
        assert FinIdeal(z12, ints(z12, 8)).gens == (Res(4, 12),)
        assert FinIdeal(z12, ints(z12, 5)).is_unit

    def test_odd_generator_over_idealization(self, idealization):
        # an odd ℤ-part lets the ideal absorb every support
        assert FinIdeal(idealization, (Pair(3, e(1)),)) == FinIdeal(idealization, (Pair(3),))

    def test_split_with_odd_z_part_is_principal(self, idealization):
        assert split_ideal(idealization, 3) == FinIdeal(idealization, (Pair(3),))
        assert isinstance(split_ideal(idealization, 4), SplitIdeal)

    def test_split_with_odd_z_part_and_finite_f2_part_rejected(self, idealization):
        with pytest.raises(InvalidClaimError):
            split_ideal(idealization, 3, [e(1)])


class TestMembership:
    def test_integer_witness(self, zz):
        ideal = FinIdeal(zz, ints(zz, 4, 6))
        witness = member(ideal, Int(10))
        assert witness is not None and not isinstance(witness, bool)
        assert witness.recombine(zz, [(g,) for g in ideal.gens]) == (Int(10),)

    def test_zero_is_everywhere(self, any_ring):
        assert is_member(FinIdeal(any_ring), any_ring.zero)

    def test_split_membership(self, idealization):
        full = SplitIdeal(idealization, 0)
        assert is_member(full, Pair(0, e(7)))
        assert not is_member(full, Pair(2))

    def test_idealization_multiplier_fixes_parity(self, idealization):
        # (3, 0)·(2, e₁) = (6, e₁)
        assert is_member(FinIdeal(idealization, (Pair(2, e(1)),)), Pair(6, e(1)))
        assert not is_member(FinIdeal(idealization, (Pair(2, e(1)),)), Pair(6))


class TestArithmetic:
    def test_integer_examples(self, zz):
        assert colon(FinIdeal(zz, ints(zz, 6)), Int(4)) == FinIdeal(zz, ints(zz, 3))
        assert intersect(FinIdeal(zz, ints(zz, 4)), FinIdeal(zz, ints(zz, 6))) == FinIdeal(zz, ints(zz, 12))
        assert ideal_sum(FinIdeal(zz, ints(zz, 4)), FinIdeal(zz, ints(zz, 6))) == FinIdeal(zz, ints(zz, 2))
        assert annihilator((Int(5),)) == FinIdeal(zz)

    def test_modular_colon(self, z12):
        assert colon(FinIdeal(z12, ints(z12, 4)), Res(2, 12)) == FinIdeal(z12, ints(z12, 2))

    def test_colon_by_one_and_self_intersection(self, any_ring):
        rng = random.Random(3)
        for _ in range(20):
            gens = tuple(any_ring.random_element(rng, 12, 4) for _ in range(2))
            ideal = FinIdeal(any_ring, gens)
            assert ideal_equal(colon(ideal, any_ring.one), ideal)
            assert ideal_equal(intersect(ideal, ideal), ideal)
            assert ideal_equal(ideal_sum(ideal, FinIdeal(any_ring)), ideal)

    def test_idealization_intersection(self, idealization):
        left = FinIdeal(idealization, (Pair(2, e(1)),))
        right = FinIdeal(idealization, (Pair(2, e(2)),))
        assert intersect(left, right) == FinIdeal(idealization, (Pair(4),))

    def test_annihilator_of_two_zero(self, idealization):
        assert annihilator((Pair(2),)) == SplitIdeal(idealization, 0)

    def test_annihilator_of_nil_element(self, idealization):
        assert annihilator((Pair(0, e(1)),)) == SplitIdeal(idealization, 2)

    def test_scale_two_zero(self, idealization):
        assert scale(FinIdeal(idealization, (Pair(2),)), Pair(2)) == FinIdeal(idealization, (Pair(4),))
        assert scale(SplitIdeal(idealization, 2), Pair(2)) == FinIdeal(idealization, (Pair(4),))

    def test_split_plus_odd_ideal(self, idealization):
        # ⟨(3, ∅)⟩ = 3ℤ(+)F₂^(ℕ) already contains Split(0, full)
        three = FinIdeal(idealization, (Pair(3),))
        assert ideal_contains(three, SplitIdeal(idealization, 0))
        assert ideal_equal(intersect(SplitIdeal(idealization, 0), three), SplitIdeal(idealization, 0))


class TestSubmoduleColon:
    def test_anchor_instance(self, zz):
        module = FreeSubmodule(zz, 2, (ints(zz, 1, 2),))
        m = ints(zz, 1, 1)
        assert submodule_colon(module, m) == FinIdeal(zz)
        assert coordinate_colon(module, m) == FinIdeal(zz, ints(zz, 2))

    def test_full_module(self, any_ring):
        module = FreeSubmodule.full(any_ring, 2)
        m = ints(any_ring, 3, 5)
        assert submodule_colon(module, m) == FinIdeal(any_ring, (any_ring.one,))
        assert coordinate_colon(module, m) == FinIdeal(any_ring, (any_ring.one,))

    def test_modular_example(self, z12):
        module = FreeSubmodule(z12, 2, (ints(z12, 2, 0), ints(z12, 0, 2)))
        assert submodule_colon(module, ints(z12, 1, 1)) == FinIdeal(z12, ints(z12, 2))

    def test_component_projection(self, zz):
        assert component_projection(FreeSubmodule(zz, 2, (ints(zz, 1, 2),)), 2) == FinIdeal(zz, ints(zz, 2))
        assert component_projection(FreeSubmodule(zz, 2), 1).is_zero
        module = FreeSubmodule(zz, 2, (ints(zz, 2, 0), ints(zz, 0, 2)))
        assert component_projection(module, 1) == FinIdeal(zz, ints(zz, 2))


class TestModularOracle:
    """Ideal arithmetic over ℤ/n against residue enumeration."""

    def test_random_cases(self):
        rng = random.Random(2024)
        checked = 0
        for _ in range(2500):
            n = rng.randint(2, 36)
            ring = ModularIntegers(n)
            raw = [rng.randrange(n) for _ in range(rng.randint(1, 3))]
            other_raw = [rng.randrange(n) for _ in range(rng.randint(1, 2))]
            a = rng.randrange(n)
            ideal = FinIdeal(ring, ints(ring, *raw))
            other = FinIdeal(ring, ints(ring, *other_raw))
            expected = ideal_set(n, raw)

            assert ideal_set(n, [g.value for g in ideal.gens]) == expected
            assert ideal_set(n, [g.value for g in colon(ideal, Res(a, n)).gens]) == colon_set(n, expected, a)
            meet = intersect(ideal, other)
            assert ideal_set(n, [g.value for g in meet.gens]) == expected & ideal_set(n, other_raw)
            assert ideal_set(n, [g.value for g in annihilator((Res(a, n),)).gens]) == annihilator_set(n, [a])
            checked += 4
        assert checked >= 10_000

    @pytest.mark.parametrize("n", [4, 6, 8, 12])
    def test_submodule_colon_rank_two(self, n):
        rng = random.Random(n)
        ring = ModularIntegers(n)
        for _ in range(25):
            gens = [tuple(rng.randrange(n) for _ in range(2)) for _ in range(2)]
            m = tuple(rng.randrange(n) for _ in range(2))
            module = FreeSubmodule(ring, 2, tuple(ints(ring, *g) for g in gens))
            out = submodule_colon(module, ints(ring, *m))
            expected = submodule_colon_set(n, submodule_set(n, 2, gens), m)
            assert ideal_set(n, [g.value for g in out.gens]) == expected
            assert ideal_contains(coordinate_colon(module, ints(ring, *m)), out)

    def test_rank_one_formula_is_the_colon(self, z12):
        rng = random.Random(12)
        for _ in range(200):
            gens = tuple((z12.from_int(rng.randrange(12)),) for _ in range(rng.randint(1, 3)))
            m = (z12.from_int(rng.randrange(12)),)
            module = FreeSubmodule(z12, 1, gens)
            assert coordinate_colon(module, m) == submodule_colon(module, m)


class TestTruncatedAnnihilators:
    """ann((a, S)) over the idealization against brute force on small elements."""

    @staticmethod
    def closed_form(ring, x):
        if x == ring.zero:
            return FinIdeal(ring, (ring.one,))
        if x.a == 0:
            return SplitIdeal(ring, 2)
        if x.a % 2 == 0:
            return SplitIdeal(ring, 0)
        return FinIdeal(ring)

    def test_all_truncated_elements(self, idealization):
        ring = idealization
        supports = [frozenset(c) for k in range(5) for c in combinations(range(1, 5), k)]
        probes = [Pair(c, frozenset(t)) for c in range(-2, 3) for k in range(6) for t in combinations(range(1, 6), k)]
        for a in range(-8, 9):
            for support in supports:
                x = Pair(a, support)
                ann = annihilator((x,))
                assert ideal_equal(ann, self.closed_form(ring, x))
                for y in probes:
                    assert is_member(ann, y) == (ring.mul(y, x) == ring.zero)


class TestLiterals:
    def test_element_grammar(self, idealization, zz, z12):
        assert parse_element("(3; {1,4,7})", idealization) == Pair(3, e(1, 4, 7))
        assert parse_element("(3; {})", idealization) == Pair(3)
        assert parse_element("5", idealization) == Pair(5)
        assert parse_element("-12", zz) == Int(-12)
        assert parse_element("14", z12) == Res(2, 12)

    def test_duplicate_index_rejected(self, idealization):
        with pytest.raises(LiteralParseError) as info:
            parse_element("(3; {1,1})", idealization)
        assert info.value.position == 7

    @pytest.mark.parametrize("text", ["(3 {1})", "(3; {1,})", "", "(3; {-1})", "(3; {1}) 4"])
    def test_malformed_elements(self, idealization, text):
        with pytest.raises(LiteralParseError):
            parse_element(text, idealization)

    @pytest.mark.parametrize("text", ["<1, 2", "<1 2>", "1, 2"])
    def test_malformed_ideals(self, zz, text):
        with pytest.raises(LiteralParseError):
            parse_ideal(text, zz)

    def test_ideal_grammar(self, zz, idealization):
        assert parse_ideal("<4, 6>", zz) == FinIdeal(zz, ints(zz, 2))
        assert parse_ideal("<0>", zz).is_zero
        assert parse_ideal("Split(0, full)", idealization) == SplitIdeal(idealization, 0)
        with pytest.raises(LiteralParseError):
            parse_ideal("Split(3, full)", idealization)
        with pytest.raises(LiteralParseError):
            parse_ideal("Split(0, full)", zz)

    def test_module_grammar(self, zz, idealization):
        module = parse_module("<[1, 2], [0, 3]>", zz)
        assert module.rank == 2 and module.gens == (ints(zz, 1, 2), ints(zz, 0, 3))
        assert parse_module("<0>", zz, rank=3).rank == 3
        with pytest.raises(LiteralParseError):
            parse_module("<[1, 2], [3]>", zz)
        nil = parse_module("<[2]> + nil[[1]]", idealization)
        assert not nil.finitely_generated
        quotient = parse_subquotient("<[1]> / <[4]>", zz)
        assert quotient.relations.gens == ((Int(4),),)

    def test_print_parse_identity(self, any_ring):
        rng = random.Random(11)
        for _ in range(500):
            x = any_ring.random_element(rng, 20, 6)
            assert parse_element(format_element(x), any_ring) == x
            ideal = FinIdeal(any_ring, tuple(any_ring.random_element(rng, 20, 6) for _ in range(rng.randint(0, 3))))
            assert parse_ideal(format_ideal(ideal), any_ring) == ideal

    def test_module_print_parse_identity(self, idealization):
        module = FreeSubmodule(idealization, 2, ((Pair(2), Pair(0, e(1))),), (0b01,))
        assert parse_module(format_module(module), idealization) == module
