import typing as T

import numpy as np

from ..base import get_logger
from ..fiber import FiberSpec, AttackSpec
from ..spectral import NumericsParams
from .capacity import capacity_quantum, capacity_classical
from .exponents import attack_exponents, worst
from .models import RegionReport, RatePoint, Strategy, Provenance, QUANTITIES

log = get_logger(__name__)

DISAGREEMENT_TOLERANCE = 1e-9
NESTING_TOLERANCE = 1e-12

METADATA = {
    "R_units": "bits per channel use",
    "D_units": "nats per channel use",
    "quantum_capacity": "gordon(eta E)",
    "classical_capacity": "max(log2(1 + eta E), 1/2 log2(1 + 4 eta E)), heterodyne vs homodyne",
    "d_maxD_quantum": "E min_s sup_xi f(xi, s)",
    "d_maxD_f0": "E min_s f(0, s)",
    "f0_formula": "provenance of the E f(0) = E (sum_k c_k)^2 points, exact only when every c_k >= 0",
    "d_maxD_classical": "Chernoff information of N(0, 1/2) vs N(sqrt(2 E sup f), 1/2)",
    "d_maxR_quantum": "min_s (1 / 2 pi) int ln(E f(xi, s) + 1) d xi",
    "classical_boundary": "inner bound, D = 0 assumed at the classical capacity",
    "time_sharing": "linear combination of rates and exponents between corner points",
}


def assemble_region(spec: FiberSpec, attacks: T.Sequence[AttackSpec],
                    numerics: NumericsParams = NumericsParams()) -> RegionReport:
    exponents = attack_exponents(spec, attacks, numerics)
    report = RegionReport(spec, list(attacks), exponents=exponents, metadata=dict(METADATA))
    for quantity in QUANTITIES:
        report.worst_attack_per_quantity[quantity] = worst(exponents, quantity).index

    def worst_value(quantity: str) -> float:
        return getattr(exponents[report.worst_attack_per_quantity[quantity]], quantity)

    def corner(R: float, quantity: str, strategy: Strategy, provenance: Provenance) -> RatePoint:
        index = report.worst_attack_per_quantity.get(quantity)
        return RatePoint(R, worst_value(quantity) if quantity else 0.0, strategy, provenance,
                         worst_attack_index=index)

    r_quantum, r_classical = capacity_quantum(spec), capacity_classical(spec)
    report.points = [
        corner(0.0, "d_maxD_quantum", Strategy.QUANTUM, Provenance.DETECTION_OPTIMAL),
        corner(r_quantum, "d_maxR_quantum", Strategy.QUANTUM, Provenance.RATE_OPTIMAL),
        corner(0.0, "d_maxD_classical", Strategy.CLASSICAL, Provenance.DETECTION_OPTIMAL),
        corner(r_classical, "", Strategy.CLASSICAL, Provenance.RATE_OPTIMAL),
    ]
    report.f0_points = [
        corner(0.0, "d_maxD_f0", Strategy.QUANTUM, Provenance.F0_FORMULA),
        corner(0.0, "d_maxD_classical_f0", Strategy.CLASSICAL, Provenance.F0_FORMULA),
    ]

    for strategy in Strategy:
        start = report.corner(strategy, Provenance.DETECTION_OPTIMAL)
        end = report.corner(strategy, Provenance.RATE_OPTIMAL)
        for lam in np.linspace(0.0, 1.0, numerics.lambda_points):
            lam = float(lam)
            report.boundary.append(RatePoint(lam * end.R,
                                             max((1 - lam) * start.D + lam * end.D, 0.0),
                                             strategy, Provenance.TIME_SHARE, lam))

    exact, at_zero = worst_value("d_maxD_quantum"), worst_value("d_maxD_f0")
    report.f0_disagreement = abs(exact - at_zero) > DISAGREEMENT_TOLERANCE * max(abs(exact), abs(at_zero))
    if report.f0_disagreement:
        log.warning(f"E sup f = {exact} differs from E f(0) = {at_zero}: the symbol peaks away from xi = 0")
    log.info(f"region corners: {[(p.R, p.D) for p in report.points]}")
    return report


def region_boundary_at(report: RegionReport, strategy: T.Union[str, Strategy], R: float) -> float:
    """D of the time-sharing boundary at rate R; zero past the strategy's capacity."""
    strategy = Strategy(strategy)
    boundary = sorted(report.boundary_of(strategy), key=lambda p: p.R)
    rates = np.array([p.R for p in boundary])
    exponents = np.array([p.D for p in boundary])
    if rates[-1] == 0:
        return float(exponents.max()) if R == 0 else 0.0
    if R > rates[-1]:
        return 0.0
    return float(np.interp(R, rates, exponents))


def region_is_nested(report: RegionReport) -> bool:
    """The classical boundary never rises above the quantum one."""
    for point in report.boundary_of(Strategy.CLASSICAL):
        quantum = region_boundary_at(report, Strategy.QUANTUM, point.R)
        if point.D > quantum + NESTING_TOLERANCE * max(1.0, quantum):
            return False
    return True
