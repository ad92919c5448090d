"""Hilbert series, multiplicities, local lengths, symbolic powers, and
orders of vanishing."""

import itertools
import random

import pytest

from oracles import monomial_dimension, multiplicity_by_differences
from vanish.errors import (
    OrdSearchCapError,
    UncertifiedSymbolicPowerError,
    UnitIdealError,
    WitnessError,
)
from vanish.fields import QQ
from vanish.ideals import Ideal, coordinate_prime
from vanish.local import (
    HilbertData,
    PrimeWitness,
    associativity_check,
    graded_hilbert_data,
    hilbert_series,
    local_length_at_monomial_prime,
    multiplicity_graded,
    ord_along,
    symbolic_power,
    verify_isolated_singularity,
)
from vanish.poly import PolyRing
from vanish.theorems import monomial_curve_prime


@pytest.fixture
def curve345(r3):
    return monomial_curve_prime(r3, (3, 4, 5))


class TestHilbertSeries:
    def test_principal_coordinate(self, r2):
        x, _ = r2.gens()
        data = graded_hilbert_data(Ideal(r2, [x]))
        assert data == HilbertData((1,), 1, 1)

    def test_artinian(self, r2):
        x, y = r2.gens()
        assert graded_hilbert_data(Ideal(r2, [x**2, y])) == \
            HilbertData((1, 1), 0, 2)

    def test_embedded_component_cancels(self, r2):
        x, y = r2.gens()
        assert graded_hilbert_data(Ideal(r2, [x**2, x * y])) == \
            HilbertData((1, 1, -1), 1, 1)

    def test_zero_ideal(self, r2):
        assert graded_hilbert_data(Ideal(r2, [])) == HilbertData((1,), 2, 1)

    def test_square_of_maximal(self, r3):
        x, y, z = r3.gens()
        assert graded_hilbert_data(Ideal(r3, [x, y, z]) ** 2) == \
            HilbertData((1, 3), 0, 4)

    def test_unit_input(self, r2):
        with pytest.raises(UnitIdealError):
            graded_hilbert_data(Ideal(r2, [r2.one()]))
        assert hilbert_series([(0, 0)], r2) == HilbertData((0,), -1, 0)

    def test_numerator_nonzero_at_one(self, r3):
        # h(1) = 0 would mean an uncancelled (1 - t) factor
        rng = random.Random(5)
        monos = all_monomials_up_to(3, 3)
        for _ in range(40):
            picks = rng.sample(monos, rng.randint(1, 4))
            ideal = Ideal(r3, [r3.monomial(e) for e in picks])
            data = graded_hilbert_data(ideal)
            assert sum(data.numerator) != 0
            assert data.multiplicity >= 1

    def test_accepts_polynomials_or_exponents(self, r2):
        x, y = r2.gens()
        via_polys = hilbert_series([x**2, x * y], r2)
        via_exps = hilbert_series([(2, 0), (1, 1)], r2)
        assert via_polys == via_exps


def all_monomials_up_to(nvars, maxdeg):
    out = []
    for total in range(1, maxdeg + 1):
        for combo in itertools.combinations_with_replacement(range(nvars), total):
            e = [0] * nvars
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


class TestMultiplicity:
    def test_monomial_curve(self, r3, curve345):
        assert multiplicity_graded(curve345.ideal) == 5

    def test_fermat_cubic(self, r3):
        x, y, z = r3.gens()
        assert multiplicity_graded(Ideal(r3, [x**3 + y**3 + z**3])) == 3

    def test_degree_filtration_of_affine_curve(self, r3):
        # non-homogeneous input is measured through its leading terms
        x, y, z = r3.gens()
        twisted = Ideal(r3, [y - x**2, z - x**3])
        assert multiplicity_graded(twisted) == 3

    def test_matches_difference_oracle(self, r3):
        rng = random.Random(23)
        monos = all_monomials_up_to(3, 3)
        for _ in range(50):
            picks = rng.sample(monos, rng.randint(1, 4))
            ideal = Ideal(r3, [r3.monomial(e) for e in picks])
            data = graded_hilbert_data(ideal)
            dim_oracle = monomial_dimension(picks, 3)
            assert data.dimension == dim_oracle
            assert data.multiplicity == multiplicity_by_differences(
                picks, 3, dim_oracle)


class TestLocalLength:
    def test_fat_plane(self, r2):
        x, _ = r2.gens()
        assert local_length_at_monomial_prime(Ideal(r2, [x**2]), ("x",)) == 2

    def test_embedded_part_invisible(self, r2):
        x, y = r2.gens()
        assert local_length_at_monomial_prime(
            Ideal(r2, [x**2, x * y]), ("x",)) == 1

    def test_localization_inverts_other_variables(self, r3):
        x, y, z = r3.gens()
        assert local_length_at_monomial_prime(
            Ideal(r3, [x**3, x**2 * y]), ("x",)) == 2

    def test_artinian_box(self, r3):
        x, y, z = r3.gens()
        assert local_length_at_monomial_prime(
            Ideal(r3, [x, y, z]) ** 2, ("x", "y", "z")) == 4

    def test_zero_ideal_at_zero_prime(self, r3):
        assert local_length_at_monomial_prime(Ideal(r3, []), ()) == 1

    def test_prime_must_contain_ideal(self, r3):
        x, y, z = r3.gens()
        with pytest.raises(ValueError):
            local_length_at_monomial_prime(Ideal(r3, [y]), ("x",))

    def test_infinite_length_rejected(self, r3):
        # (x*y) localized at (x,y) is not artinian
        x, y, z = r3.gens()
        with pytest.raises(ValueError):
            local_length_at_monomial_prime(Ideal(r3, [x * y]), ("x", "y"))


class TestAssociativity:
    def test_single_plane_with_embedded_line(self, r3):
        x, y, z = r3.gens()
        rep = associativity_check(Ideal(r3, [x**2, x * y]))
        assert rep.holds
        assert rep.data["multiplicity"] == 1
        assert rep.data["terms"] == [
            {"prime": ["x"], "local_length": 1, "quotient_multiplicity": 1}]

    def test_two_planes(self, r3):
        x, y, z = r3.gens()
        rep = associativity_check(Ideal(r3, [x * y]))
        assert rep.holds
        assert rep.data["multiplicity"] == 2
        assert rep.data["local_sum"] == 2
        assert [t["prime"] for t in rep.data["terms"]] == [["y"], ["x"]]

    def test_lower_dimensional_component_ignored(self, r3):
        x, y, z = r3.gens()
        rep = associativity_check(Ideal(r3, [x**2 * y, x * z**2]))
        assert rep.holds
        assert rep.data["terms"] == [
            {"prime": ["x"], "local_length": 1, "quotient_multiplicity": 1}]

    def test_zero_ideal(self, r3):
        rep = associativity_check(Ideal(r3, []))
        assert rep.holds
        assert rep.data["multiplicity"] == 1
        assert rep.data["terms"][0]["prime"] == []

    def test_claim_label(self, r3):
        x, _, _ = r3.gens()
        rep = associativity_check(Ideal(r3, [x]))
        assert rep.claim == "multiplicity-additivity"
        assert rep.applicable and rep.certified


class TestPrimeWitness:
    def test_coordinate_certification(self, r3):
        p = PrimeWitness(coordinate_prime(r3, ["x", "y"]))
        assert p.is_coordinate_subspace
        assert p.certified
        assert str(p.witness) == "z"

    def test_principal_certification(self, r3):
        x, y, z = r3.gens()
        p = PrimeWitness(Ideal(r3, [x**2 + y**2 + z**2]))
        assert p.is_principal
        assert p.certified
        assert p.isolated_singularity_certified

    def test_claimed_dim_checked(self, r3):
        x, _, _ = r3.gens()
        with pytest.raises(ValueError):
            PrimeWitness(Ideal(r3, [x]), claimed_dim=1)
        assert PrimeWitness(Ideal(r3, [x]), claimed_dim=2).claimed_dim == 2

    def test_witness_not_in_prime(self, r3):
        x, y, z = r3.gens()
        with pytest.raises(WitnessError):
            PrimeWitness(Ideal(r3, [x, y]), witness=x)
        with pytest.raises(WitnessError):
            PrimeWitness(Ideal(r3, [x, y]), witness=r3.zero())

    def test_constant_witness_only_for_full_prime(self, r3):
        x, y, z = r3.gens()
        with pytest.raises(WitnessError):
            PrimeWitness(Ideal(r3, [x, y]), witness=r3.one())
        full = PrimeWitness(Ideal(r3, [x, y, z]), witness=r3.one())
        assert full.witness == r3.one()

    def test_unit_ideal_rejected(self, r3):
        with pytest.raises(UnitIdealError):
            PrimeWitness(Ideal(r3, [r3.one()]))

    def test_weights_validation(self, r3):
        x, y, z = r3.gens()
        ideal = Ideal(r3, [y**2 - x * z, x**2 * y - z**2, x**3 - y * z])
        with pytest.raises(ValueError):
            PrimeWitness(ideal, weights=(3, 4))
        with pytest.raises(ValueError):
            PrimeWitness(ideal, weights=(3, 0, 5))

    def test_probe_elements_avoid_prime(self, r3, curve345):
        probes = curve345.probe_elements()
        assert probes
        for u in probes:
            assert u not in curve345.ideal


class TestJacobianCertificate:
    def test_twisted_cubic(self, r3):
        tc = monomial_curve_prime(r3, (1, 2, 3))
        assert [str(g) for g in tc.ideal.gens] == \
            ["x^2 - y", "x*y - z", "y^2 - x*z"]
        assert tc.isolated_singularity_certified

    def test_weighted_curve(self, r3, curve345):
        # plain-homogeneous it is not; the weight vector rescues the check
        assert curve345.isolated_singularity_certified
        assert curve345.certified

    def test_smooth_plane_conic_cone(self, r3):
        x, y, z = r3.gens()
        p = PrimeWitness(Ideal(r3, [x**2 + y**2 + z**2]))
        assert verify_isolated_singularity(p)

    def test_crossing_planes_fail(self, r3):
        x, y, z = r3.gens()
        p = PrimeWitness(Ideal(r3, [x * y]))
        # the singular locus is a pair of lines, not just the origin; the
        # principal trust route still certifies the witness object
        assert not verify_isolated_singularity(p)
        assert p.certified

    def test_characteristic_p_refused(self, gf7):
        a, b = gf7.gens()
        p = PrimeWitness(Ideal(gf7, [a]))
        assert not verify_isolated_singularity(p)


class TestSymbolicPower:
    def test_coordinate_symbolic_equals_ordinary(self, r3):
        p = PrimeWitness(coordinate_prime(r3, ["x", "y"]))
        for m in (1, 2, 3, 4):
            assert symbolic_power(p, m) == p.ideal**m

    def test_principal_symbolic_equals_ordinary(self, r3):
        x, y, z = r3.gens()
        p = PrimeWitness(Ideal(r3, [x**2 + y**2 + z**2]))
        assert symbolic_power(p, 3) == p.ideal**3

    def test_curve_symbolic_square_strict(self, r3, curve345):
        sp2 = symbolic_power(curve345, 2)
        assert sp2 != curve345.ideal**2
        assert [str(g) for g in sp2.groebner_basis()] == [
            "x^5 + x*y^3 - 3*x^2*y*z + z^3",
            "x^3*y^2 - x^4*z - y^3*z + x*y*z^2",
            "x^2*y^3 - x^3*y*z - y^2*z^2 + x*z^3",
            "y^4 - 2*x*y^2*z + x^2*z^2",
        ]
        # ordinary square sits inside, and the symbolic square sits in p
        for g in (curve345.ideal**2).gens:
            assert g in sp2
        for g in sp2.groebner_basis():
            assert g in curve345.ideal

    def test_first_symbolic_power_is_prime(self, r3, curve345):
        assert symbolic_power(curve345, 1) == curve345.ideal

    def test_memoized(self, r3, curve345):
        assert symbolic_power(curve345, 2) is symbolic_power(curve345, 2)

    def test_bad_exponent(self, r3, curve345):
        with pytest.raises(ValueError):
            symbolic_power(curve345, 0)

    def test_fake_prime_fails_certification(self, r3):
        x, y, z = r3.gens()
        fake = PrimeWitness(Ideal(r3, [x, y * z]), witness=y)
        with pytest.raises(UncertifiedSymbolicPowerError) as exc:
            symbolic_power(fake, 2)
        assert exc.value.diagnostics
        assert exc.value.ideal is not None

    def test_full_prime_constant_witness(self, r3):
        x, y, z = r3.gens()
        m = PrimeWitness(Ideal(r3, [x, y, z]), witness=r3.one())
        assert symbolic_power(m, 2) == m.ideal**2


class TestOrdAlong:
    def test_coordinate_orders(self, r3):
        x, y, z = r3.gens()
        p = PrimeWitness(coordinate_prime(r3, ["x", "y"]))
        assert ord_along(p, y) == 1
        assert ord_along(p, z) == 0
        assert ord_along(p, x**3) == 3
        assert ord_along(p, x**2 * y**3) == 5

    def test_curve_generator_order_one(self, r3, curve345):
        x, y, z = r3.gens()
        assert ord_along(curve345, y**2 - x * z) == 1

    def test_curve_symbolic_square_elements(self, r3, curve345):
        for g in symbolic_power(curve345, 2).groebner_basis():
            assert ord_along(curve345, g) == 2

    def test_origin_order_via_full_prime(self, r3):
        x, y, z = r3.gens()
        m = PrimeWitness(Ideal(r3, [x, y, z]), witness=r3.one())
        f = x * y + z**3
        assert ord_along(m, f) == f.order_at_origin() == 2

    def test_zero_poly_rejected(self, r3, curve345):
        with pytest.raises(ValueError):
            ord_along(curve345, r3.zero())

    def test_search_cap(self, r3):
        x, y, z = r3.gens()
        p = PrimeWitness(coordinate_prime(r3, ["x"]))
        with pytest.raises(OrdSearchCapError):
            ord_along(p, x**5, max_order=4)
