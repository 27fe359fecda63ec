import random

import pytest

from oracles import span_set, syzygy_set
from src.core.exceptions import LiteralParseError, RingMismatchError
from src.rings import (
    ElemOp,
    IdealizationZF2,
    Int,
    Integers,
    ModularIntegers,
    Pair,
    Res,
    elem_op,
    lin_solve,
    ring_from_spec,
    syzygy_basis,
)
from src.rings import gf2, lattice


class TestElements:
    def test_residue_is_reduced(self):
        assert Res(14, 12) == Res(2, 12)
        assert Res(-1, 12).value == 11

    def test_pair_support_must_be_natural(self):
        with pytest.raises(ValueError):
            Pair(1, frozenset({-1}))

    def test_pair_mask_round_trip(self):
        x = Pair(3, frozenset({1, 4, 7}))
        assert Pair.from_mask(3, x.mask) == x


class TestIdealizationArithmetic:
    def test_even_times_nil_vanishes(self, idealization):
        assert idealization.mul(Pair(2), Pair(3, frozenset({1}))) == Pair(6)

    def test_odd_times_nil_survives(self, idealization):
        assert idealization.mul(Pair(3), Pair(0, frozenset({1}))) == Pair(0, frozenset({1}))

    def test_nil_squared_is_zero(self, idealization):
        e1 = Pair(0, frozenset({1}))
        assert idealization.mul(e1, e1) == idealization.zero

    def test_product_rule(self, idealization):
        # (a, v)(c, w) = (ac, a·w + c·v)
        x = Pair(3, frozenset({1, 2}))
        y = Pair(5, frozenset({2, 3}))
        assert idealization.mul(x, y) == Pair(15, frozenset({1, 3}))

    def test_addition_is_xor_on_supports(self, idealization):
        x = Pair(1, frozenset({1, 2}))
        y = Pair(1, frozenset({2}))
        assert idealization.add(x, y) == Pair(2, frozenset({1}))

    def test_powers_of_two_zero_grow_exactly(self, idealization):
        x = idealization.one
        for _ in range(70):
            x = idealization.mul(x, Pair(2))
        assert x == Pair(2 ** 70)


class TestRingAxioms:
    def test_random_triples(self, any_ring):
        rng = random.Random(11)
        add, mul = any_ring.add, any_ring.mul
        for _ in range(1000):
            a, b, c = (any_ring.random_element(rng, 20, 6) for _ in range(3))
            assert add(add(a, b), c) == add(a, add(b, c))
            assert mul(mul(a, b), c) == mul(a, mul(b, c))
            assert add(a, b) == add(b, a)
            assert mul(a, b) == mul(b, a)
            assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
            assert add(a, any_ring.neg(a)) == any_ring.zero
            assert mul(a, any_ring.one) == a


class TestElemOp:
    def test_dispatch_by_element(self):
        assert elem_op(ElemOp.ADD, Int(2), Int(3)) == Int(5)
        assert elem_op(ElemOp.MUL, Res(5, 12), Res(5, 12)) == Res(1, 12)
        assert elem_op(ElemOp.NEG, Pair(2, frozenset({1}))) == Pair(-2, frozenset({1}))
        assert elem_op(ElemOp.EQ, Int(1), Int(1)) is True

    def test_mixed_rings_rejected(self):
        with pytest.raises(RingMismatchError):
            elem_op(ElemOp.ADD, Int(1), Res(1, 5))

    def test_different_moduli_rejected(self):
        with pytest.raises(RingMismatchError):
            elem_op(ElemOp.MUL, Res(1, 4), Res(1, 6))


class TestRingSpec:
    @pytest.mark.parametrize(
        "text, expected",
        [("z", Integers()), ("zmod:12", ModularIntegers(12)), ("idealization", IdealizationZF2()), (" Z ", Integers())],
    )
    def test_known_rings(self, text, expected):
        assert ring_from_spec(text) == expected

    @pytest.mark.parametrize("text", ["q", "zmod:1", "zmod:", "zmod:x"])
    def test_bad_rings(self, text):
        with pytest.raises(LiteralParseError):
            ring_from_spec(text)


class TestLinSolve:
    def test_integers_witness_recombines(self, zz):
        gens = [(Int(4), Int(6)), (Int(6), Int(9))]
        target = (Int(2), Int(3))
        witness = lin_solve(zz, gens, target)
        assert witness is not None
        assert witness.recombine(zz, gens) == target

    def test_integers_nonmember(self, zz):
        assert lin_solve(zz, [Int(4), Int(6)], Int(3)) is None

    def test_modular_uses_the_modulus(self, z12):
        # 5 is a unit mod 12
        witness = lin_solve(z12, [Res(5, 12)], Res(1, 12))
        assert witness is not None
        assert witness.recombine(z12, [(Res(5, 12),)]) == (Res(1, 12),)

    def test_idealization_nil_parts(self, idealization):
        gens = [(Pair(1, frozenset({1})),)]
        assert lin_solve(idealization, gens, (Pair(0, frozenset({2})),)) is not None
        assert lin_solve(idealization, [(Pair(2),)], (Pair(0, frozenset({2})),)) is None

    def test_random_targets_in_span(self, any_ring):
        rng = random.Random(7)
        for _ in range(50):
            gens = [(any_ring.random_element(rng, 9, 4), any_ring.random_element(rng, 9, 4)) for _ in range(2)]
            coefficients = [any_ring.random_element(rng, 9, 4) for _ in range(2)]
            target = any_ring.combine(coefficients, gens, 2)
            witness = lin_solve(any_ring, gens, target)
            assert witness is not None
            assert witness.recombine(any_ring, gens) == target


class TestSyzygies:
    def test_integers(self, zz):
        basis = syzygy_basis(zz, [Int(4), Int(6)])
        assert basis.finitely_generated
        for v in basis.vectors:
            assert zz.add(zz.mul(v[0], Int(4)), zz.mul(v[1], Int(6))) == zz.zero

    def test_idealization_even_generator_is_not_finitely_generated(self, idealization):
        basis = syzygy_basis(idealization, [Pair(2)])
        assert not basis.finitely_generated

    def test_idealization_odd_generator(self, idealization):
        basis = syzygy_basis(idealization, [Pair(3)])
        assert basis.finitely_generated

    @pytest.mark.parametrize("n", range(2, 31))
    def test_modular_relations_match_enumeration(self, n):
        ring = ModularIntegers(n)
        rng = random.Random(n)
        k_max = 4 if n <= 12 else 3
        for k in range(1, k_max + 1):
            xs = [rng.randrange(n) for _ in range(k)]
            basis = syzygy_basis(ring, [Res(x, n) for x in xs])
            assert basis.finitely_generated
            vectors = [tuple(c.value for c in v) for v in basis.vectors]
            assert span_set(n, k, vectors) == syzygy_set(n, xs)


class TestLinearAlgebra:
    def test_integer_kernel(self):
        for v in lattice.kernel([[2, 4, 6]], 3):
            assert 2 * v[0] + 4 * v[1] + 6 * v[2] == 0
        assert len(lattice.kernel([[2, 4, 6]], 3)) == 2

    def test_integer_solve(self):
        x = lattice.solve([[4, 6]], 2, [2])
        assert x is not None and 4 * x[0] + 6 * x[1] == 2
        assert lattice.solve([[4, 6]], 2, [3]) is None

    def test_gf2_span(self):
        basis = gf2.echelon([0b011, 0b110])
        assert gf2.in_span(0b101, basis)
        assert not gf2.in_span(0b001, basis)
        assert gf2.rank([0b011, 0b110, 0b101]) == 2
