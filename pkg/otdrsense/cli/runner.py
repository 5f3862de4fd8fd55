import dataclasses
import json
import math
import typing as T

import numpy as np

from .. import detection, fiber, rates, spectral
from ..base import BaseObject
from ..loggers import TensorBoardLogger
from . import outputs
from .params import ScenarioConfig, emit_config
from .verify import VerifySuite, COLUMNS as VERIFY_COLUMNS, failed

SUBCOMMANDS = ("coeffs", "spectrum", "region", "mc", "verify")

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_VERIFY = 2


class Runner(BaseObject):
    def __init__(self, config: ScenarioConfig, tensorboard: T.Optional[TensorBoardLogger] = None):
        super(Runner, self).__init__()
        self.config: ScenarioConfig = config
        self.tensorboard: T.Optional[TensorBoardLogger] = tensorboard

    @property
    def out(self) -> str:
        return self.config.output

    def metadata(self, **extra: T.Any) -> T.Dict[str, T.Any]:
        spec = self.config.fiber
        result = {"L": spec.L, "energy": spec.energy, "forward_loss": fiber.forward_loss(spec)}
        for i, attack in enumerate(self.config.attacks):
            result[f"attack {i}"] = attack.label()
        result.update(extra)
        return result

    def run(self, subcommand: str) -> int:
        if subcommand not in SUBCOMMANDS:
            raise ValueError(f"unknown subcommand {subcommand}, expected one of {SUBCOMMANDS}")
        self.log.info(f"running {subcommand}, writing into {self.out}")
        if self.tensorboard:
            self.tensorboard.add_text("config", emit_config(self.config))
        return getattr(self, f"run_{subcommand}")()

    def run_coeffs(self) -> int:
        spec = self.config.fiber
        baseline = fiber.backscatter_coefficients(spec)
        rows = []
        for i, attack in enumerate(self.config.attacks):
            attacked = fiber.backscatter_coefficients(spec, attack)
            table = fiber.response_table(baseline, attacked, fiber.gram_symbol(baseline, attacked).g)
            rows += zip([i] * len(table.index), table.index, table.a_baseline, table.a_attacked, table.c, table.g)
        outputs.write_csv(self.out, "coeffs.csv", ("attack", "k", "a_baseline", "a_attacked", "c", "g"), rows,
                          self.metadata(g_index="g column holds g_(k-1), lags 0..2L-1"))
        return EXIT_OK

    def run_spectrum(self) -> int:
        spec, numerics = self.config.fiber, self.config.numerics
        rows, summary, extrema = [], [], {}
        for i, attack in enumerate(self.config.attacks):
            sym = fiber.attack_symbol(spec, attack)
            limit = spectral.szego_functional(sym, spectral.Functional.LOG1P_SCALED, spec.energy, numerics=numerics)
            sup = spectral.symbol_supremum(sym, numerics)
            extrema[f"attack {i} sup f"] = f"{sup.value!r} at xi={sup.xi!r}"
            for n in numerics.n_list:
                report = spectral.toeplitz_eigenvalues(sym, n, numerics)
                rows += [(i, n, j, lam) for j, lam in enumerate(report.eigenvalues)]
                finite = float(np.mean(np.log1p(spec.energy * report.eigenvalues)))
                gap = abs(finite - limit.limit_value)
                summary.append((i, n, finite, limit.limit_value, gap))
                if self.tensorboard:
                    self.tensorboard.add_scalar(f"spectrum/attack {i} abs gap", gap, n)
        metadata = self.metadata(functional="ln(1 + E lambda)", quadrature_nodes=numerics.quadrature_nodes,
                                 **extrema)
        outputs.write_csv(self.out, "spectrum.csv", ("attack", "n", "lambda_index", "lambda"), rows, metadata)
        outputs.write_csv(self.out, "spectrum_summary.csv",
                          ("attack", "n", "szego_finite", "szego_limit", "abs_gap"), summary, metadata)
        return EXIT_OK

    def run_region(self) -> int:
        report = rates.assemble_region(self.config.fiber, list(self.config.attacks), self.config.numerics)
        config = json.loads(emit_config(self.config))
        config.pop("output")
        rows = [(p.strategy, p.provenance, p.lam, p.R, p.D, p.worst_attack_index)
                for p in report.points + report.f0_points + report.boundary]
        metadata = self.metadata(**report.metadata, f0_disagreement=report.f0_disagreement)
        outputs.write_csv(self.out, "region.csv",
                          ("strategy", "provenance", "lambda", "R_bits", "D_nats", "worst_attack_index"),
                          rows, metadata)
        outputs.write_json(self.out, "region_meta.json", {
            "metadata": report.metadata,
            "worst_attack_per_quantity": report.worst_attack_per_quantity,
            "f0_disagreement": report.f0_disagreement,
            "attacks": [dataclasses.asdict(e) for e in report.exponents],
            "config": config,
        })
        outputs.write_plot_script(self.out)
        return EXIT_OK

    def estimator(self, tag: str) -> detection.MonteCarloEstimator:
        estimator = detection.MonteCarloEstimator(self.config.mc.params())
        if self.tensorboard:
            estimator.add_progress_callback("tensorboard", self.tensorboard.progress_callback(tag))
        return estimator

    def run_mc(self) -> int:
        spec, mc = self.config.fiber, self.config.mc
        energy = spec.energy if mc.energy is None else mc.energy
        rows = []

        def row(name: str, n: int, e: float, report: detection.MCReport) -> None:
            rows.append((name, n, e, report.samples, report.seed, report.workers, report.estimate,
                         report.std_error, report.analytic_value, report.z_score))

        symbols = [fiber.attack_symbol(spec, a) for a in self.config.attacks]
        for i, sym in enumerate(symbols):
            for n in mc.n_list:
                name = f"codebook[attack {i}]"
                row(name, n, energy, detection.expected_error_mc(sym, n, energy, mc.params(), self.config.numerics,
                                                                 self.estimator(f"{name} n={n}")))

        single = detection.homodyne_mc(mc.homodyne_alpha, mc.homodyne_pulses, mc.params(),
                                       estimator=self.estimator("homodyne"))
        row("homodyne", mc.homodyne_pulses, mc.homodyne_alpha ** 2, single.mc)

        amplitudes = [detection.steady_state_amplitude(sym, spec.energy) for sym in symbols]
        composite = detection.homodyne_composite_mc(amplitudes, mc.homodyne_pulses, mc.params(),
                                                    estimator=self.estimator("homodyne composite"))
        for i, report in enumerate(composite.reports):
            row(f"homodyne_composite[attack {i}]", mc.homodyne_pulses, report.alpha ** 2, report.mc)

        metadata = self.metadata(
            codebook="mean of exp(-alpha^H G_n alpha), analytic det(I + E G_n)^-1, 1/2 prefactor not included",
            homodyne="average error of the midpoint test, analytic from the normal CDF; E column holds alpha^2",
            homodyne_corrected_exponent=single.corrected_exponent,
            homodyne_chernoff=rates.chernoff_gaussian(0.0, math.sqrt(2) * mc.homodyne_alpha, 0.5),
            composite_worst_attack=composite.worst_index,
            composite_max_error=composite.max_error,
        )
        outputs.write_csv(self.out, "mc.csv", ("oracle_name", "n", "E", "samples", "seed", "workers", "estimate",
                                               "std_error", "analytic_value", "z_score"), rows, metadata)
        return EXIT_OK

    def run_verify(self) -> int:
        results = VerifySuite(self.config, self.tensorboard).run()
        outputs.write_csv(self.out, "verify.csv", VERIFY_COLUMNS, [r.row() for r in results],
                          self.metadata(seed=self.config.mc.seed, workers=self.config.mc.workers))
        failures = failed(results)
        if failures:
            self.log.error(f"{len(failures)} checks failed: {[r.check for r in failures]}")
            return EXIT_VERIFY
        return EXIT_OK
