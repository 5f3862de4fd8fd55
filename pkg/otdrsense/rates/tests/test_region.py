import numpy as np
import pytest

from ... import fiber, rates
from ...base import ValidationError
from ...fiber.tests import tools as fiber_tools
from ...spectral import NumericsParams

REFERENCE_SPEC = fiber.FiberSpec.uniform(100, 0.99, 0.5, 1e7)
REFERENCE_ATTACK = fiber.AttackSpec(50, 0.4, 0.5)


def flat_spec_and_attack():
    # attacking the only block of a lossless fiber leaves a single tap of height sqrt(theta' tau')
    spec = fiber.FiberSpec(1, (1.0,), (0.0,), 2.0)
    return spec, fiber.AttackSpec(1, 0.0, 0.0)


def test_empty_attack_list_is_rejected():
    with pytest.raises(ValidationError):
        rates.d_maxD_quantum(fiber_tools.WORKED_SPEC, [])
    with pytest.raises(ValidationError):
        rates.assemble_region(fiber_tools.WORKED_SPEC, [])


def test_flat_symbol_closed_values():
    spec, attack = flat_spec_and_attack()
    point, exponents = rates.d_maxD_quantum(spec, [attack])
    assert exponents[0].sup_f == pytest.approx(1.0)
    assert point.D == pytest.approx(2.0)
    unit = fiber.FiberSpec(1, (1.0,), (0.0,), 1.0)
    assert rates.d_maxR_quantum(unit, [attack]).D == pytest.approx(np.log(2.0), rel=1e-12)


def test_null_attack_gives_zero_everywhere():
    spec = fiber_tools.WORKED_SPEC
    report = rates.assemble_region(spec, [fiber.null_attack(spec, 1), fiber_tools.WORKED_ATTACK])
    assert all(point.D == 0.0 for point in report.points)
    assert all(point.D == 0.0 for point in report.boundary)
    assert report.worst_attack_per_quantity["d_maxD_quantum"] == 0
    assert not report.f0_disagreement


def test_attack_exponents_table():
    spec = fiber_tools.WORKED_SPEC
    table = rates.attack_exponents(spec, [fiber.null_attack(spec, 2), fiber_tools.WORKED_ATTACK])
    assert [e.index for e in table] == [0, 1]
    worked = table[1]
    assert worked.d_maxD_quantum == pytest.approx(spec.energy * worked.sup_f, rel=1e-12)
    assert worked.d_maxD_f0 == pytest.approx(spec.energy * worked.f0, rel=1e-12)
    assert worked.d_maxD_classical == pytest.approx(0.5 * worked.d_maxD_quantum, rel=1e-12)
    assert 0 < worked.d_maxR_quantum < worked.d_maxD_quantum
    for quantity in rates.QUANTITIES:
        assert rates.worst(table, quantity).index == 0


@pytest.mark.parametrize("seed", range(10))
def test_classical_exponent_is_half_of_quantum(seed):
    spec, attack = fiber_tools.random_scenario(np.random.default_rng(seed), max_L=20)
    quantum, _ = rates.d_maxD_quantum(spec, [attack])
    classical = rates.d_maxD_classical(spec, [attack])
    assert classical.D == pytest.approx(0.5 * quantum.D, rel=1e-12)
    assert rates.d_maxR_quantum(spec, [attack]).D <= quantum.D


def test_reference_orderings_are_strict():
    point, exponents = rates.d_maxD_quantum(REFERENCE_SPEC, [REFERENCE_ATTACK])
    assert rates.d_maxR_quantum(REFERENCE_SPEC, [REFERENCE_ATTACK]).D < point.D
    assert rates.capacity_classical(REFERENCE_SPEC) < rates.capacity_quantum(REFERENCE_SPEC)
    assert exponents[0].d_maxD_classical_f0 == pytest.approx(0.5 * exponents[0].d_maxD_f0, rel=1e-12)


@pytest.mark.parametrize("kappa", [0.1, 10.0])
def test_detection_exponent_is_linear_in_energy(kappa):
    spec = REFERENCE_SPEC
    scaled = fiber.FiberSpec(spec.L, spec.tau, spec.theta, kappa * spec.energy)
    base, _ = rates.d_maxD_quantum(spec, [REFERENCE_ATTACK])
    other, _ = rates.d_maxD_quantum(scaled, [REFERENCE_ATTACK])
    assert other.D == pytest.approx(kappa * base.D, rel=1e-12)


def test_adding_attacks_never_increases_exponents():
    spec = fiber.FiberSpec.uniform(6, 0.9, 0.5, 3.0)
    attacks = fiber.expand_attack_grid(spec, [2, 4], [0.3, 0.8], [0.5])
    first = rates.assemble_region(spec, attacks[:1])
    every = rates.assemble_region(spec, attacks)
    for quantity in rates.QUANTITIES:
        assert getattr(every.exponents[every.worst_attack_per_quantity[quantity]], quantity) <= \
            getattr(first.exponents[0], quantity)
    assert every.exponents[0] == first.exponents[0]


def test_region_corners_and_nesting():
    spec = fiber.FiberSpec.uniform(20, 0.98, 0.5, 50.0)
    attacks = fiber.expand_attack_grid(spec, [5, 10], [0.5], [0.3, 0.7])
    report = rates.assemble_region(spec, attacks, NumericsParams(lambda_points=11))
    quantum_d = report.corner(rates.Strategy.QUANTUM, rates.Provenance.DETECTION_OPTIMAL)
    quantum_r = report.corner(rates.Strategy.QUANTUM, rates.Provenance.RATE_OPTIMAL)
    classical_d = report.corner(rates.Strategy.CLASSICAL, rates.Provenance.DETECTION_OPTIMAL)
    classical_r = report.corner(rates.Strategy.CLASSICAL, rates.Provenance.RATE_OPTIMAL)
    assert quantum_r.R == rates.capacity_quantum(spec)
    assert classical_r.R == rates.capacity_classical(spec)
    assert classical_r.D == 0.0
    assert classical_d.D == pytest.approx(0.5 * quantum_d.D, rel=1e-12)
    assert len(report.boundary) == 22
    assert rates.region_boundary_at(report, "quantum", 0.0) == pytest.approx(quantum_d.D)
    assert rates.region_boundary_at(report, "quantum", quantum_r.R) == pytest.approx(quantum_r.D)
    assert rates.region_boundary_at(report, "classical", 2 * quantum_r.R) == 0.0
    assert rates.region_is_nested(report)
    by_worst = report.worst_attack_per_quantity
    assert quantum_d.worst_attack_index == by_worst["d_maxD_quantum"]
    assert quantum_r.worst_attack_index == by_worst["d_maxR_quantum"]


def test_reference_region_flags_the_f0_formula():
    report = rates.assemble_region(REFERENCE_SPEC, [REFERENCE_ATTACK])
    e = report.exponents[0]
    assert e.sup_f >= e.f0 * (1 - 1e-12)
    assert report.f0_disagreement == (abs(e.sup_f - e.f0) > 1e-9 * e.sup_f)
    assert rates.region_is_nested(report)
    assert report.metadata["D_units"] == "nats per channel use"


def test_f0_points_carry_their_own_provenance():
    spec = fiber_tools.WORKED_SPEC
    report = rates.assemble_region(spec, [fiber_tools.WORKED_ATTACK])
    assert [p.provenance.value for p in report.f0_points] == ["f0_formula", "f0_formula"]
    assert [p.strategy for p in report.f0_points] == [rates.Strategy.QUANTUM, rates.Strategy.CLASSICAL]
    assert report.f0_points[0].D == pytest.approx(spec.energy * report.exponents[0].f0, rel=1e-12)
    assert "f0_formula" in report.metadata
    assert all(p.provenance is not rates.Provenance.F0_FORMULA for p in report.points)
