import random

import pytest

from src.certificates import MultSet, dump_certificate, find_csfp, find_s_finite, standard_mult_set, verify
from src.core.exceptions import InvalidClaimError, NotExactError, UnsupportedRingError
from src.ideals import FinIdeal, SplitIdeal
from src.ideals.models import FreeSubmodule, Subquotient
from src.ideals.modules import ideal_module
from src.rings import Int, ModularIntegers, Pair, ring_from_spec
from src.theorems import (
    ExtensionData,
    PullbackData,
    SamplerConfig,
    cap_compose,
    chase_audit,
    colon_formula_audit,
    compose_sfp,
    cs_implies_s_derivation,
    exccs_kernel_cert,
    formula_audit_passed,
    fp_scoherent_cert,
    free_scoherent_cert,
    kernel_s_finite,
    provenance,
    quotient_sfp,
    s_noetherian_sample_check,
    shrink_s,
    usfp_from_csfp,
)
from src.theorems.sampling import sample_ideal, sample_rank, sample_submodule


def cyclic_cert(ring, r, mult_set):
    """Certificate for R/⟨r⟩ through the pull-back of ⟨1⟩ ⊆ R/⟨r⟩."""
    return fp_scoherent_cert(FreeSubmodule(ring, 1, ((r,),)), [(ring.one,)], mult_set)


def principal(ring, *values):
    return Subquotient.of(FreeSubmodule(ring, 1, tuple((ring.from_int(v),) for v in values)))


class TestExtensionData:
    def test_quotient_sequence(self, zz):
        ext = ExtensionData.quotient_sequence(Subquotient.of(FreeSubmodule.full(zz, 2)), FreeSubmodule(zz, 2, ((Int(2), Int(0)),)))
        assert ext.right.relations == FreeSubmodule(zz, 2, ((Int(2), Int(0)),))

    def test_direct_sum(self, zz):
        ext = ExtensionData.direct_sum(Subquotient.cyclic(zz, [Int(2)]), Subquotient.cyclic(zz, [Int(3)]))
        assert ext.middle.rank == 2

    def test_nonzero_composite_rejected(self, zz):
        with pytest.raises(NotExactError):
            ExtensionData(
                principal(zz, 2), principal(zz, 1), Subquotient.cyclic(zz, [Int(3)]), ((Int(1),),), ((Int(1),),)
            )

    def test_non_injective_rejected(self, zz):
        # ℤ/2 → ℤ/4 → ℤ/2 through 1 ↦ 1 is not injective on the left
        with pytest.raises(NotExactError):
            ExtensionData(
                Subquotient.cyclic(zz, [Int(4)]),
                Subquotient.cyclic(zz, [Int(4)]),
                Subquotient.cyclic(zz, [Int(1)]),
                ((Int(2),),),
                ((Int(1),),),
            )

    def test_wrong_matrix_shape(self, zz):
        with pytest.raises(NotExactError):
            ExtensionData(principal(zz, 1), principal(zz, 1), principal(zz, 1), ((Int(1), Int(0)),), ((Int(1),),))

    def test_mixed_rings(self, zz, z12):
        with pytest.raises(InvalidClaimError):
            ExtensionData(principal(zz, 1), principal(z12, 1), principal(zz, 1), ((Int(1),),), ((Int(1),),))


class TestPullback:
    def test_relations_must_be_finitely_generated(self, idealization):
        with pytest.raises(InvalidClaimError):
            PullbackData(idealization, 1, FreeSubmodule(idealization, 1, (), (1,)), ((Pair(1),),))

    def test_lift_length(self, zz):
        with pytest.raises(InvalidClaimError):
            PullbackData(zz, 2, FreeSubmodule.zero(zz, 2), ((Int(1),),))

    def test_x_contains_relations(self, zz):
        pullback = PullbackData(zz, 1, FreeSubmodule(zz, 1, ((Int(4),),)), ((Int(2),),))
        assert pullback.x.gens == ((Int(4),), (Int(2),))
        assert pullback.cokernel.relations == pullback.x


class TestFreeCertificates:
    def test_integers(self, zz, s_two):
        cert = free_scoherent_cert(FreeSubmodule(zz, 2, ((Int(1), Int(2)), (Int(1), Int(1)))), s_two)
        assert verify(cert).ok
        assert cert.s == Int(1)

    def test_zero_module(self, zz, s_two):
        assert verify(free_scoherent_cert(FreeSubmodule.zero(zz, 2), s_two)).ok

    def test_two_zero(self, idealization, s_2_0):
        cert = free_scoherent_cert(FreeSubmodule(idealization, 1, ((Pair(2),),)), s_2_0)
        assert verify(cert).ok
        assert cert.s == Pair(2)
        assert cert.kernel.nil_span

    def test_product_of_steps(self, idealization, s_2_0):
        module = FreeSubmodule(idealization, 1, ((Pair(2),), (Pair(0, frozenset({1})),)))
        cert = free_scoherent_cert(module, s_2_0)
        assert verify(cert).ok
        assert provenance(cert.kernel_cert) == (Pair(2), Pair(2))
        assert cert.s == Pair(4)

    def test_modular(self, z12):
        mult_set = MultSet(z12)
        module = FreeSubmodule(z12, 2, ((z12.from_int(2), z12.from_int(4)), (z12.from_int(3), z12.from_int(0))))
        assert verify(free_scoherent_cert(module, mult_set)).ok

    def test_not_finitely_generated(self, idealization, s_2_0):
        with pytest.raises(InvalidClaimError):
            free_scoherent_cert(FreeSubmodule(idealization, 1, (), (1,)), s_2_0)

    def test_ring_mismatch(self, zz, s_2_0):
        with pytest.raises(InvalidClaimError):
            free_scoherent_cert(FreeSubmodule.full(zz, 1), s_2_0)

    def test_finitely_presented_quotient(self, idealization, s_2_0):
        cert = cyclic_cert(idealization, Pair(2), s_2_0)
        assert verify(cert).ok
        assert cert.module == Subquotient.cyclic(idealization, [Pair(2)])


class TestTransformers:
    def test_compose_over_direct_sum(self, zz, s_two):
        left, right = Subquotient.cyclic(zz, [Int(2)]), Subquotient.cyclic(zz, [Int(3)])
        ext = ExtensionData.direct_sum(left, right)
        cert = compose_sfp(ext, cyclic_cert(zz, Int(2), s_two), cyclic_cert(zz, Int(3), s_two))
        assert verify(cert).ok
        assert cert.module == ext.middle
        assert len(cert.presentation) == 4

    def test_compose_multiplies_s(self, idealization, s_2_0):
        two = principal(idealization, 2)
        ext = ExtensionData.direct_sum(two, two)
        half = free_scoherent_cert(two.sub, s_2_0)
        cert = compose_sfp(ext, half, half)
        assert verify(cert).ok
        assert cert.s == Pair(4)
        assert cert.kernel_cert.s_exponents == (2,)
        assert cert.kernel_cert.factors == (Pair(2), Pair(2))

    def test_compose_rejects_bad_input(self, zz, s_two):
        ext = ExtensionData.direct_sum(Subquotient.cyclic(zz, [Int(2)]), Subquotient.cyclic(zz, [Int(3)]))
        wrong = cyclic_cert(zz, Int(5), s_two)
        with pytest.raises(InvalidClaimError):
            compose_sfp(ext, wrong, cyclic_cert(zz, Int(3), s_two))

    def test_quotient_and_kernel(self, zz, s_two):
        module = Subquotient.of(FreeSubmodule.full(zz, 1))
        ext = ExtensionData.quotient_sequence(module, FreeSubmodule(zz, 1, ((Int(4),),)))
        middle = free_scoherent_cert(module.sub, s_two)

        quotient = quotient_sfp(ext, find_s_finite(ext.left, s_two), middle)
        assert verify(quotient).ok
        assert quotient.module == ext.right

        right = cyclic_cert(zz, Int(4), s_two)
        kernel = kernel_s_finite(ext, right, find_s_finite(module, s_two))
        assert verify(kernel).ok

    def test_cap_of_split_ideals(self, idealization, s_2_0):
        certs = [find_s_finite(SplitIdeal(idealization, 2), s_2_0), find_s_finite(SplitIdeal(idealization, 0), s_2_0)]
        cert = cap_compose(certs)
        assert verify(cert).ok
        assert cert.target == SplitIdeal(idealization, 0)
        assert cert.s == Pair(4)
        assert cert.factors == (Pair(2), Pair(2))

        smaller = shrink_s(cert)
        assert smaller.s == Pair(2)
        assert verify(smaller).ok

    def test_cap_of_integer_ideals(self, zz, s_two):
        certs = [find_s_finite(FinIdeal(zz, (Int(4),)), s_two), find_s_finite(FinIdeal(zz, (Int(6),)), s_two)]
        cert = cap_compose(certs)
        assert cert.target == FinIdeal(zz, (Int(12),))
        assert verify(cert).ok

    def test_cap_needs_shared_set(self, zz, s_two):
        certs = [find_s_finite(FinIdeal(zz, (Int(4),)), s_two), find_s_finite(FinIdeal(zz, (Int(6),)), MultSet(zz))]
        with pytest.raises(InvalidClaimError):
            cap_compose(certs)

    def test_cap_needs_input(self):
        with pytest.raises(ValueError):
            cap_compose([])

    def test_shrink_keeps_minimal_certificate(self, zz, s_two):
        cert = find_s_finite(FinIdeal(zz, (Int(4),)), s_two)
        assert shrink_s(cert) == cert


class TestCSFPConsequences:
    def test_usfp_from_csfp(self, zz, s_two):
        module = Subquotient.of(ideal_module(FinIdeal(zz, (Int(4),))))
        usfp = usfp_from_csfp(module, find_csfp(module, s_two))
        assert verify(usfp).ok

    def test_kernel_certificate(self, zz, s_two):
        module = principal(zz, 4, 6)
        cert = exccs_kernel_cert(module, find_csfp(module, s_two))
        assert verify(cert).ok
        for j in cert.j_gens:
            assert 4 * j[0].value + 6 * j[1].value == 0

    def test_kernel_certificate_modular(self, z12):
        module = principal(z12, 4, 6)
        cert = exccs_kernel_cert(module, find_csfp(module, MultSet(z12)))
        assert verify(cert).ok

    def test_colon_from_csfp(self, zz, s_two):
        ideal = FinIdeal(zz, (Int(6),))
        csfp = find_csfp(principal(zz, 6, 4), s_two)
        cert = cs_implies_s_derivation(ideal, Int(4), csfp)
        assert cert.target == FinIdeal(zz, (Int(3),))
        assert verify(cert).ok

    def test_colon_needs_matching_module(self, zz, s_two):
        csfp = find_csfp(principal(zz, 6, 5), s_two)
        with pytest.raises(InvalidClaimError):
            cs_implies_s_derivation(FinIdeal(zz, (Int(6),)), Int(4), csfp)


class TestAudits:
    @pytest.mark.parametrize("spec_ring", ["z", "zmod:12", "idealization"])
    def test_chase_audit_passes(self, spec_ring):
        report = chase_audit(ring_from_spec(spec_ring), trials=25, seed=1, workers=1, show_progress=False)
        assert report.passed
        assert [c.condition for c in report.conditions] == ["colon", "annihilator", "intersect"]
        assert all(c.trials == 25 for c in report.conditions)

    def test_idealization_needs_nontrivial_s(self, idealization):
        report = chase_audit(idealization, trials=40, seed=2, workers=1, show_progress=False)
        annihilator = next(c for c in report.conditions if c.condition == "annihilator")
        assert annihilator.max_s_exponent <= 1
        assert annihilator.nontrivial_s >= 1

    def test_chase_is_deterministic(self, z12):
        first = chase_audit(z12, trials=20, seed=5, workers=1, show_progress=False)
        assert chase_audit(z12, trials=20, seed=5, workers=1, show_progress=False) == first

    def test_worker_count_does_not_change_the_report(self, zz):
        serial = chase_audit(zz, trials=12, seed=9, workers=1, show_progress=False)
        parallel = chase_audit(zz, trials=12, seed=9, workers=2, show_progress=False)
        assert parallel.to_json() == serial.to_json()

    def test_exhaustive_modular(self):
        report = chase_audit(ModularIntegers(6), exhaustive=True, workers=1, show_progress=False)
        assert report.passed
        assert report.trials > 0

    def test_exhaustive_needs_modular_ring(self, zz):
        with pytest.raises(UnsupportedRingError):
            chase_audit(zz, exhaustive=True, show_progress=False)

    def test_s_noetherian(self):
        report = s_noetherian_sample_check(trials=50, seed=3, workers=1, show_progress=False)
        assert report.passed
        assert report.ring == "idealization"
        assert all(c.certified == 50 for c in report.conditions)

    def test_colon_formula(self, zz):
        report = colon_formula_audit(zz, trials=20, seed=4, workers=1, show_progress=False)
        assert formula_audit_passed(report)
        equal = next(c for c in report.conditions if c.condition == "equal")
        assert equal.failed >= 1
        assert report.discrepancies[0].trial == 0
        assert report.discrepancies[0].condition == "equal"


class TestSeededFamilies:
    """Every emitted certificate verifies over seeded inputs."""

    RINGS = ["z", "zmod:6", "zmod:9", "zmod:12", "idealization"]

    @staticmethod
    def family(spec, seed):
        ring = ring_from_spec(spec)
        config = SamplerConfig(max_gens=2, int_bound=9, support_bound=3, max_rank=2)
        return ring, standard_mult_set(ring), random.Random(f"{seed}:{spec}"), config

    @pytest.mark.parametrize("spec", RINGS)
    def test_cap_compose(self, spec):
        ring, mult_set, rng, config = self.family(spec, 41)
        for _ in range(40):
            ideals = [sample_ideal(ring, rng, config) for _ in range(rng.randint(1, 4))]
            cert = cap_compose([find_s_finite(i, mult_set) for i in ideals])
            assert verify(cert).ok
            product = ring.one
            for f in provenance(cert):
                product = ring.mul(product, f)
            assert product == cert.s

    @pytest.mark.parametrize("spec", ["z", "zmod:6", "zmod:9", "zmod:12"])
    def test_extension_transformers(self, spec):
        ring, mult_set, rng, config = self.family(spec, 42)
        for _ in range(50):
            rank = sample_rank(rng, config)
            sub = sample_submodule(ring, rng, rank, config)
            module = Subquotient.of(FreeSubmodule.full(ring, rank))
            ext = ExtensionData.quotient_sequence(module, sub)
            units = [ring.unit_vector(rank, i) for i in range(rank)]

            middle = free_scoherent_cert(module.sub, mult_set)
            right = fp_scoherent_cert(sub, units, mult_set)
            left = free_scoherent_cert(sub, mult_set)
            assert verify(compose_sfp(ext, left, right)).ok
            assert verify(quotient_sfp(ext, find_s_finite(ext.left, mult_set), middle)).ok
            assert verify(kernel_s_finite(ext, right, find_s_finite(module, mult_set))).ok

    @pytest.mark.parametrize("spec", RINGS)
    def test_zero_relations_match_free_certificate(self, spec):
        ring, mult_set, rng, config = self.family(spec, 43)
        for _ in range(20):
            rank = sample_rank(rng, config)
            sub = sample_submodule(ring, rng, rank, config)
            free = free_scoherent_cert(sub, mult_set)
            presented = fp_scoherent_cert(FreeSubmodule.zero(ring, rank), sub.gens, mult_set)
            assert dump_certificate(presented) == dump_certificate(free)


class TestAuditAcceptance:
    def test_integers_need_no_s(self, zz):
        report = chase_audit(zz, trials=1000, seed=0, workers=1, show_progress=False)
        assert report.passed
        assert all(c.max_s_exponent == 0 for c in report.conditions)

    def test_idealization_uses_two_zero(self, idealization):
        report = chase_audit(idealization, trials=200, seed=0, workers=1, show_progress=False)
        assert report.passed
        assert sum(c.nontrivial_s for c in report.conditions) >= 1

    @pytest.mark.parametrize("spec", ["z", "zmod:12"])
    def test_formula_containment(self, spec):
        report = colon_formula_audit(ring_from_spec(spec), trials=500, seed=0, workers=1, show_progress=False)
        assert formula_audit_passed(report)
        assert next(c for c in report.conditions if c.condition == "equal").failed >= 1
