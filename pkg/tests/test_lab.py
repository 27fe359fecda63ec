import pytest

from src.core.exceptions import InvalidClaimError
from src.ideals import FinIdeal, SplitIdeal, is_member
from src.ideals.parsing import parse_element
from src.lab import (
    PRONG_NOT_FP,
    PRONG_POWER,
    classify_ideals_inside_2_0,
    example_demo,
    refute_csfp,
    refute_finitely_presented,
    sample_claimed_syzygies,
)
from src.rings import Pair


def nil(*indices):
    return Pair(0, frozenset(indices))


class TestClassification:
    def test_listed_ideals(self, idealization):
        ideals = classify_ideals_inside_2_0(3, samples=50, seed=1)
        assert ideals == [
            FinIdeal(idealization),
            FinIdeal(idealization, (Pair(2),)),
            FinIdeal(idealization, (Pair(4),)),
            FinIdeal(idealization, (Pair(6),)),
        ]

    def test_bound_must_be_positive(self):
        with pytest.raises(ValueError):
            classify_ideals_inside_2_0(0)


class TestRefuteFinitelyPresented:
    def test_witness_beyond_claimed_supports(self):
        trace = refute_finitely_presented(1, [nil(1, 2), nil(3)])
        assert trace.refuted
        assert trace.witness == "(0; {4})"
        assert [c.name for c in trace.checks] == [
            "is-relation",
            "outside-claimed-span",
            "annihilator-not-finitely-generated",
        ]

    def test_empty_claim(self):
        trace = refute_finitely_presented(2, [])
        assert trace.refuted
        assert trace.witness == "(0; {1})"

    def test_non_relation_rejected(self):
        with pytest.raises(InvalidClaimError):
            refute_finitely_presented(1, [Pair(1)])

    def test_m_must_be_positive(self):
        with pytest.raises(ValueError):
            refute_finitely_presented(0, [])

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_sampled_claims(self, idealization, m, rng):
        generator = Pair(2 * m)
        for _ in range(50):
            claimed = sample_claimed_syzygies(m, rng, 5)
            assert all(idealization.mul(c, generator) == idealization.zero for c in claimed)
            trace = refute_finitely_presented(m, claimed)
            assert trace.refuted
            witness = parse_element(trace.witness, idealization)
            assert idealization.mul(witness, generator) == idealization.zero
            assert not is_member(FinIdeal(idealization, tuple(claimed)), witness)


class TestRefuteCSFP:
    def test_zero_candidate_misses_a_power(self, idealization):
        trace = refute_csfp(FinIdeal(idealization), 3)
        assert trace.refuted
        assert trace.prong == PRONG_POWER
        assert trace.witness == "(16; {})"

    @pytest.mark.parametrize("n", [1, 4, 16])
    def test_nonzero_candidate_is_not_finitely_presented(self, idealization, n):
        trace = refute_csfp(FinIdeal(idealization, (Pair(6),)), n, [nil(2), nil(5)])
        assert trace.refuted
        assert trace.prong == PRONG_NOT_FP
        assert trace.witness == "(0; {6})"

    def test_candidate_is_canonicalized(self, idealization):
        # ⟨(4), (6)⟩ = ⟨(2)⟩
        trace = refute_csfp(FinIdeal(idealization, (Pair(4), Pair(6))), 2)
        assert trace.prong == PRONG_NOT_FP
        assert "<(2; {})>" in trace.claim

    def test_candidate_outside_two_zero(self, idealization):
        with pytest.raises(InvalidClaimError):
            refute_csfp(FinIdeal(idealization, (Pair(3),)), 1)
        with pytest.raises(InvalidClaimError):
            refute_csfp(SplitIdeal(idealization, 2), 1)

    def test_exponent_must_be_positive(self, idealization):
        with pytest.raises(ValueError):
            refute_csfp(FinIdeal(idealization), 0)


class TestDemo:
    def test_every_step_passes(self):
        report = example_demo(seed=0)
        assert report.passed
        assert [s.name for s in report.steps] == [
            "annihilator",
            "s-noetherian",
            "classification",
            "refute-finitely-presented",
            "refute-c-s-finitely-presented",
            "s-finitely-presented",
        ]

    def test_step_data(self):
        steps = {s.name: s for s in example_demo(seed=0).steps}
        assert steps["annihilator"].data == {"annihilator": "Split(0, full)"}
        assert steps["s-finitely-presented"].data["s"] == "(2; {})"
        assert steps["s-finitely-presented"].data["status"] == "verified"
        assert steps["s-noetherian"].data == {"scale-principal": "500/500", "s-finite": "500/500"}

    def test_deterministic(self):
        assert example_demo(seed=7).to_json() == example_demo(seed=7).to_json()
