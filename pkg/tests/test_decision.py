import json
import random
import warnings

import pytest

import snbraid as sb
from conftest import conjugated_kernel_part, random_kernel_word, random_word

A1 = sb.BraidWord(3, (2, 1, 1, -2))
A2 = sb.BraidWord(3, (2, 2))


def verify(inst: sb.SNInstance, verdict: sb.SNVerdict):
    assert verdict.status == sb.EQUIVALENT
    c = verdict.witness
    assert sb.is_kernel(inst.n, inst.m, c)
    bx, by = inst.mixed_x().word, inst.mixed_y().word
    assert sb.equal(bx, sb.compose(sb.compose(c, by), sb.invert(c)))


class TestBraidTypeEqual:
    def test_reflexive(self):
        w = sb.BraidWord(3, (1, 2))
        res = sb.braid_type_equal(w, w)
        assert res.conjugate and res.witness.letters == ()

    def test_exponent_gap(self):
        res = sb.braid_type_equal(sb.BraidWord(2, (1, 1)), sb.BraidWord(2, (1,) * 4))
        assert not res.conjugate

    def test_roundtrip(self):
        rng = random.Random(41)
        for _ in range(30):
            b = random_word(rng, 4, 12)
            c = random_word(rng, 4, 8)
            a = sb.free_reduce(sb.compose(sb.compose(c, b), sb.invert(c)))
            res = sb.braid_type_equal(a, b)
            assert res.conjugate
            w = res.witness
            assert sb.equal(a, sb.compose(sb.compose(w, b), sb.invert(w)))


class TestRelA:
    def test_identical_orbits(self):
        inst = sb.SNInstance(2, 1, sb.BraidWord(2, (1,)), A2, A2)
        v = sb.sn_equivalent_rel_A(inst)
        assert v.status == sb.EQUIVALENT and v.witness.letters == ()

    def test_exponent_certificate(self):
        inst = sb.SNInstance(
            1, 1, sb.BraidWord(1, ()), sb.BraidWord(2, (1, 1)), sb.BraidWord(2, (1,) * 4)
        )
        v = sb.sn_equivalent_rel_A(inst)
        assert v.status == sb.NOT_EQUIVALENT
        assert v.certificate.invariant == "exponent_sum"
        assert (v.certificate.lhs, v.certificate.rhs) == (2, 4)

    def test_constructed_equivalence(self):
        beta_A = sb.BraidWord(2, (1,))
        ox = conjugated_kernel_part(2, 1, beta_A, A2, A1)
        inst = sb.SNInstance(2, 1, beta_A, ox, A2)
        verify(inst, sb.sn_equivalent_rel_A(inst))

    def test_non_kernel_conjugation_detected(self):
        # sigma_1 conjugates beta_y inside B_{2,1} but outside the kernel;
        # the loop moves to the other puncture and linking catches it
        ox = sb.free_reduce(sb.BraidWord(3, (1,)) * A1 * sb.BraidWord(3, (-1,)))
        inst = sb.SNInstance(2, 1, sb.BraidWord(2, ()), ox, A1)
        v = sb.sn_equivalent_rel_A(inst)
        assert v.status == sb.NOT_EQUIVALENT
        assert v.certificate.invariant == "linking_matrix"

    def test_honest_inconclusive_under_tight_budget(self):
        c = sb.free_reduce(A1 * A2 * A1)
        ox = conjugated_kernel_part(2, 1, sb.BraidWord(2, ()), A2, c)
        inst = sb.SNInstance(2, 1, sb.BraidWord(2, ()), ox, A2)
        v = sb.sn_equivalent_rel_A(inst, sb.Budget(max_length=1, max_states=500))
        assert v.status == sb.INCONCLUSIVE
        assert v.budget_report is not None
        doc = v.to_json()
        assert set(doc["budget"]) == {"max_len", "states"}

    def test_budget_monotone(self):
        beta_A = sb.BraidWord(2, (1,))
        c = sb.free_reduce(A1 * A2 * A1)
        ox = conjugated_kernel_part(2, 1, beta_A, A2, c)
        inst = sb.SNInstance(2, 1, beta_A, ox, A2)
        small = sb.sn_equivalent_rel_A(inst, sb.Budget(max_length=1, max_states=50))
        big = sb.sn_equivalent_rel_A(inst, sb.Budget(max_length=6, max_states=50000))
        assert small.status == sb.INCONCLUSIVE
        verify(inst, big)

    def test_symmetry_of_settled_statuses(self):
        rng = random.Random(42)
        for _ in range(20):
            gx = random_kernel_word(rng, 2, 1, 2)
            gy = random_kernel_word(rng, 2, 1, 2)
            beta_A = random_word(rng, 2, 4)
            vxy = sb.sn_equivalent_rel_A(sb.SNInstance(2, 1, beta_A, gx, gy))
            vyx = sb.sn_equivalent_rel_A(sb.SNInstance(2, 1, beta_A, gy, gx))
            if sb.INCONCLUSIVE not in (vxy.status, vyx.status):
                assert vxy.status == vyx.status


class TestTwisted:
    def test_agrees_on_fixed_examples(self):
        beta_A = sb.BraidWord(2, (1,))
        ox = conjugated_kernel_part(2, 1, beta_A, A2, A1)
        for inst in (
            sb.SNInstance(2, 1, beta_A, A2, A2),
            sb.SNInstance(2, 1, beta_A, ox, A2),
            sb.SNInstance(
                1, 1, sb.BraidWord(1, ()), sb.BraidWord(2, (1, 1)), sb.BraidWord(2, (1,) * 4)
            ),
        ):
            assert (
                sb.sn_equivalent_twisted(inst).status
                == sb.sn_equivalent_rel_A(inst).status
            )

    def test_trivial_base_is_plain_kernel_conjugacy(self):
        c = A1
        ox = sb.free_reduce(sb.compose(sb.compose(c, A2), sb.invert(c)))
        inst = sb.SNInstance(2, 1, sb.BraidWord(2, ()), ox, A2)
        v = sb.sn_equivalent_twisted(inst)
        assert v.status == sb.EQUIVALENT
        verify(inst, v)


class TestFixedPointCase:
    def test_equal_words(self):
        v = sb.fixed_point_case(2, sb.BraidWord(2, (1,)), A1, A1)
        assert v.status == sb.EQUIVALENT

    def test_loops_around_distinct_punctures(self):
        v = sb.fixed_point_case(2, sb.BraidWord(2, ()), A1, A2)
        assert v.status == sb.NOT_EQUIVALENT
        assert v.certificate.invariant == "linking_matrix"

    def test_conjugate_loops(self):
        rng = random.Random(43)
        for _ in range(20):
            gamma = random_kernel_word(rng, 2, 1, 3)
            c = random_kernel_word(rng, 2, 1, 2)
            u = sb.free_reduce(sb.compose(sb.compose(c, gamma), sb.invert(c)))
            v = sb.fixed_point_case(2, sb.BraidWord(2, ()), u, gamma)
            assert v.status == sb.EQUIVALENT


class TestEmptyInvariantSet:
    def test_degenerates_to_braid_type(self):
        rng = random.Random(44)
        for _ in range(40):
            m = rng.randint(2, 4)
            a = random_word(rng, m, 8)
            if rng.random() < 0.5:
                c = random_word(rng, m, 5)
                b = sb.free_reduce(sb.compose(sb.compose(c, a), sb.invert(c)))
            else:
                b = random_word(rng, m, 8)
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                inst = sb.SNInstance(0, m, sb.BraidWord(0, ()), a, b)
                v = sb.sn_equivalent_rel_A(inst)
            expect = sb.braid_type_equal(a, b).conjugate
            assert (v.status == sb.EQUIVALENT) == expect
            assert v.status != sb.INCONCLUSIVE


class TestInstanceValidation:
    def test_base_strand_count(self):
        with pytest.raises(ValueError):
            sb.SNInstance(2, 1, sb.BraidWord(3, (1,)), A1, A1)

    def test_kernel_membership_enforced(self):
        with pytest.raises(sb.KernelMembershipError):
            sb.SNInstance(2, 1, sb.BraidWord(2, ()), sb.BraidWord(3, (1,)), A1)

    def test_non_primitive_orbit_warns(self):
        with pytest.warns(UserWarning):
            sb.SNInstance(
                1, 2, sb.BraidWord(1, ()), sb.BraidWord(3, ()), sb.BraidWord(3, ())
            )


class TestPartition:
    def test_invariant_distinguished(self):
        res = sb.partition_sn_classes(
            2, 1, sb.BraidWord(2, ()), [A2, A2, sb.free_reduce(A2 * A2)]
        )
        assert res.classes == ((0, 1), (2,))
        assert res.unresolved == ()

    def test_exponent_split(self):
        res = sb.partition_sn_classes(
            1,
            1,
            sb.BraidWord(1, ()),
            [sb.BraidWord(2, (1, 1)), sb.BraidWord(2, (1,) * 4)],
        )
        assert res.classes == ((0,), (1,))

    def test_conjugates_merge(self):
        c = A1
        other = sb.free_reduce(sb.compose(sb.compose(c, A2), sb.invert(c)))
        res = sb.partition_sn_classes(2, 1, sb.BraidWord(2, ()), [A2, other])
        assert res.classes == ((0, 1),)

    def test_unresolved_pairs_not_merged(self):
        c = sb.free_reduce(A1 * A2 * A1)
        deep = conjugated_kernel_part(2, 1, sb.BraidWord(2, ()), A2, c)
        res = sb.partition_sn_classes(
            2, 1, sb.BraidWord(2, ()), [A2, deep], sb.Budget(max_length=1, max_states=500)
        )
        assert res.classes == ((0,), (1,))
        assert res.unresolved == ((0, 1),)

    def test_workers_do_not_change_output(self):
        orbits = [A1, A2, sb.free_reduce(A2 * A2), sb.free_reduce(A1 * A2)]
        seq = sb.partition_sn_classes(2, 1, sb.BraidWord(2, ()), orbits, workers=1)
        par = sb.partition_sn_classes(2, 1, sb.BraidWord(2, ()), orbits, workers=4)
        assert json.dumps(seq.to_json()) == json.dumps(par.to_json())


def test_verdict_json_shapes():
    inst = sb.SNInstance(2, 1, sb.BraidWord(2, ()), A2, A2)
    doc = sb.sn_equivalent_rel_A(inst).to_json()
    assert doc["status"] == "Equivalent" and "witness" in doc
    inst2 = sb.SNInstance(
        1, 1, sb.BraidWord(1, ()), sb.BraidWord(2, (1, 1)), sb.BraidWord(2, (1,) * 4)
    )
    doc2 = sb.sn_equivalent_rel_A(inst2).to_json()
    assert set(doc2["certificate"]) == {"invariant", "lhs", "rhs"}
