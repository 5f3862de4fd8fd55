from .models import RatePoint, RegionReport, AttackExponents, Strategy, Provenance, QUANTITIES
from .capacity import gordon, capacity_quantum, capacity_classical
from .chernoff import chernoff_gaussian, chernoff_information, ChernoffResult
from .exponents import attack_exponents, d_maxD_quantum, d_maxD_classical, d_maxR_quantum, worst
from .region import assemble_region, region_boundary_at, region_is_nested, METADATA
