"""
Scenario configuration, read from JSON:

    {
      "fiber": {"L": 100, "tau": 0.99, "theta": 0.5, "energy": 1e7},
      "attacks": [{"position": 50, "tau": 0.4, "theta": 0.5}],
      "attack_grids": [{"positions": [10, 20], "tau": [0.4, 0.8], "theta": [0.5]}],
      "numerics": {"xi_grid": 65536, "quadrature_nodes": 4096, "dense_n_limit": 2048,
                   "n_list": [50, 100, 200, 400], "lambda_points": 101},
      "mc": {"samples": 1000000, "seed": 0, "workers": 1, "chunk_size": 65536, "use_gpu": false,
             "n_list": [8, 16], "energy": null, "homodyne_alpha": 1.0, "homodyne_pulses": 20,
             "calibration_scenarios": 20},
      "output": "out"
    }

tau and theta take a scalar (repeated for every block) or a list of length L. attack_grids expand into
the cartesian product of their entries and are appended to attacks. numerics, mc and output are optional.
Unknown keys are rejected.
"""
import dataclasses
import json
import numbers
import typing as T
from dataclasses import dataclass

from ..base.errors import ConfigError, ValidationError
from ..detection import MonteCarloParams
from ..fiber import FiberSpec, AttackSpec
from ..spectral import NumericsParams

DEFAULT_OUTPUT = "out"
TOP_LEVEL_KEYS = ("fiber", "attacks", "attack_grids", "numerics", "mc", "output")
FIBER_KEYS = ("L", "tau", "theta", "energy")
ATTACK_KEYS = ("position", "tau", "theta")
GRID_KEYS = ("positions", "tau", "theta")


@dataclass(frozen=True)
class McConfig:
    samples: int = 1_000_000
    seed: int = 0
    workers: int = 1
    chunk_size: int = 65536
    use_gpu: bool = False
    n_list: T.Tuple[int, ...] = (8, 16)
    energy: T.Optional[float] = None
    homodyne_alpha: float = 1.0
    homodyne_pulses: int = 20
    calibration_scenarios: int = 20

    def __post_init__(self):
        object.__setattr__(self, "n_list", tuple(self.n_list))
        self.params()
        if len(self.n_list) == 0 or any(n < 1 for n in self.n_list):
            raise ValidationError("n_list must hold positive dimensions")
        if self.energy is not None and self.energy < 0:
            raise ValidationError(f"energy must be non-negative, got {self.energy}")
        if self.homodyne_alpha < 0:
            raise ValidationError(f"homodyne_alpha must be non-negative, got {self.homodyne_alpha}")
        if self.homodyne_pulses < 1:
            raise ValidationError(f"homodyne_pulses must be at least 1, got {self.homodyne_pulses}")
        if self.calibration_scenarios < 1:
            raise ValidationError(f"calibration_scenarios must be at least 1, got {self.calibration_scenarios}")

    def params(self) -> MonteCarloParams:
        return MonteCarloParams(self.samples, self.seed, self.workers, self.chunk_size, self.use_gpu)


@dataclass(frozen=True)
class ScenarioConfig:
    fiber: FiberSpec
    attacks: T.Tuple[AttackSpec, ...]
    numerics: NumericsParams = NumericsParams()
    mc: McConfig = McConfig()
    output: str = DEFAULT_OUTPUT

    def with_overrides(self, seed: T.Optional[int] = None, workers: T.Optional[int] = None,
                       output: T.Optional[str] = None) -> "ScenarioConfig":
        mc = self.mc
        for field, value in (("seed", seed), ("workers", workers)):
            if value is None:
                continue
            try:
                mc = dataclasses.replace(mc, **{field: value})
            except ValidationError as e:
                raise ConfigError(f"mc.{field}", str(e))
        return dataclasses.replace(self, mc=mc, output=self.output if output is None else output)


def _is_number(value: T.Any) -> bool:
    return isinstance(value, numbers.Real) and not isinstance(value, bool)


def _is_integer(value: T.Any) -> bool:
    return isinstance(value, numbers.Integral) and not isinstance(value, bool)


def _object(data: T.Any, path: str, allowed: T.Sequence[str], required: T.Sequence[str] = ()) -> dict:
    if not isinstance(data, dict):
        raise ConfigError(path or "<root>", "expected an object")
    for key in data:
        if key not in allowed:
            raise ConfigError(f"{path}.{key}" if path else key, "unknown key")
    for key in required:
        if key not in data:
            raise ConfigError(f"{path}.{key}" if path else key, "missing required key")
    return data


def _number(data: dict, key: str, path: str) -> float:
    value = data[key]
    if not _is_number(value):
        raise ConfigError(f"{path}.{key}", f"expected a number, got {value!r}")
    return float(value)


def _integer(data: dict, key: str, path: str) -> int:
    value = data[key]
    if not _is_integer(value):
        raise ConfigError(f"{path}.{key}", f"expected an integer, got {value!r}")
    return int(value)


def _numbers(data: dict, key: str, path: str) -> T.List[float]:
    value = data[key]
    items = value if isinstance(value, list) else [value]
    for i, item in enumerate(items):
        if not _is_number(item):
            raise ConfigError(f"{path}.{key}[{i}]", f"expected a number, got {item!r}")
    return [float(item) for item in items]


def _per_block(data: dict, key: str, L: int, low: float, high: float, low_open: bool) -> T.Tuple[float, ...]:
    values = _numbers(data, key, "fiber")
    if not isinstance(data[key], list):
        values = values * L
    elif len(values) != L:
        raise ConfigError(f"fiber.{key}", f"expected {L} values, got {len(values)}")
    for i, v in enumerate(values):
        if v > high or v < low or (low_open and v == low):
            bracket = "(" if low_open else "["
            raise ConfigError(f"fiber.{key}[{i}]", f"{v} is outside {bracket}{low}, {high}]")
    return tuple(values)


def parse_fiber(data: T.Any) -> FiberSpec:
    data = _object(data, "fiber", FIBER_KEYS, FIBER_KEYS)
    L = _integer(data, "L", "fiber")
    if L < 1:
        raise ConfigError("fiber.L", f"must be at least 1, got {L}")
    energy = _number(data, "energy", "fiber")
    if energy < 0:
        raise ConfigError("fiber.energy", f"must be non-negative, got {energy}")
    tau = _per_block(data, "tau", L, 0.0, 1.0, True)
    theta = _per_block(data, "theta", L, 0.0, 1.0, False)
    try:
        return FiberSpec(L, tau, theta, energy)
    except ValidationError as e:
        raise ConfigError("fiber", str(e))


def _attack(spec: FiberSpec, position: int, tau: float, theta: float, path: str) -> AttackSpec:
    if not 1 <= position <= spec.L:
        raise ConfigError(f"{path}.position", f"{position} is outside [1, {spec.L}]")
    for key, value in (("tau", tau), ("theta", theta)):
        if not 0 <= value <= 1:
            raise ConfigError(f"{path}.{key}", f"{value} is outside [0, 1]")
    attack = AttackSpec(position, tau, theta)
    try:
        attack.validate_against(spec)
    except ValidationError as e:
        raise ConfigError(f"{path}.tau", str(e))
    return attack


def parse_attacks(spec: FiberSpec, attacks: T.Any, grids: T.Any) -> T.Tuple[AttackSpec, ...]:
    result = []
    if not isinstance(attacks, list):
        raise ConfigError("attacks", "expected a list")
    for i, item in enumerate(attacks):
        path = f"attacks[{i}]"
        item = _object(item, path, ATTACK_KEYS, ATTACK_KEYS)
        result.append(_attack(spec, _integer(item, "position", path), _number(item, "tau", path),
                              _number(item, "theta", path), path))
    if not isinstance(grids, list):
        raise ConfigError("attack_grids", "expected a list")
    for i, item in enumerate(grids):
        path = f"attack_grids[{i}]"
        item = _object(item, path, GRID_KEYS, GRID_KEYS)
        positions = item["positions"] if isinstance(item["positions"], list) else [item["positions"]]
        for j, p in enumerate(positions):
            if not _is_integer(p):
                raise ConfigError(f"{path}.positions[{j}]", f"expected an integer, got {p!r}")
        for p in positions:
            for a in _numbers(item, "tau", path):
                for b in _numbers(item, "theta", path):
                    result.append(_attack(spec, int(p), a, b, path))
    if len(result) == 0:
        raise ConfigError("attacks", "at least one attack is needed")
    return tuple(result)


def _check_field(cls: type, key: str, value: T.Any, path: str) -> T.Any:
    default = next(f.default for f in dataclasses.fields(cls) if f.name == key)
    if isinstance(default, bool):
        ok = isinstance(value, bool)
    elif isinstance(default, int):
        ok = _is_integer(value)
    elif isinstance(default, float) or default is None:
        ok = _is_number(value) or (default is None and value is None)
        value = float(value) if ok and value is not None else value
    elif isinstance(default, tuple):
        ok = isinstance(value, list) and all(_is_integer(v) for v in value)
        value = tuple(value) if ok else value
    else:
        ok = True
    if not ok:
        raise ConfigError(f"{path}.{key}", f"unexpected value {value!r}")
    return value


def _build(cls: type, data: T.Any, path: str) -> T.Any:
    """Builds a dataclass with defaults, validating one field at a time so errors name the field."""
    data = _object(data, path, [f.name for f in dataclasses.fields(cls)])
    values = {key: _check_field(cls, key, value, path) for key, value in data.items()}
    for key, value in values.items():
        try:
            cls(**{key: value})
        except ValidationError as e:
            raise ConfigError(f"{path}.{key}", str(e))
    try:
        return cls(**values)
    except ValidationError as e:
        raise ConfigError(path, str(e))


def config_from_dict(data: T.Any) -> ScenarioConfig:
    data = _object(data, "", TOP_LEVEL_KEYS, ("fiber", ))
    spec = parse_fiber(data["fiber"])
    attacks = parse_attacks(spec, data.get("attacks", []), data.get("attack_grids", []))
    output = data.get("output", DEFAULT_OUTPUT)
    if not isinstance(output, str) or output == "":
        raise ConfigError("output", f"expected a directory path, got {output!r}")
    return ScenarioConfig(spec,
                          attacks,
                          _build(NumericsParams, data.get("numerics", {}), "numerics"),
                          _build(McConfig, data.get("mc", {}), "mc"),
                          output)


def parse_config(text: str, source: str = "<config>") -> ScenarioConfig:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(source, e.msg, e.lineno)
    return config_from_dict(data)


def load_config(path: str) -> ScenarioConfig:
    with open(path) as f:
        text = f.read()
    try:
        return parse_config(text, path)
    except ConfigError as e:
        if e.path == path:
            raise
        raise ConfigError(e.path, f"{e.reason} (in {path})", e.line)


def emit_config(config: ScenarioConfig) -> str:
    """Fully expanded JSON; parse_config(emit_config(c)) == c."""
    data = {
        "fiber": {
            "L": config.fiber.L,
            "tau": list(config.fiber.tau),
            "theta": list(config.fiber.theta),
            "energy": config.fiber.energy,
        },
        "attacks": [{"position": a.position, "tau": a.tau, "theta": a.theta} for a in config.attacks],
        "numerics": {k: list(v) if isinstance(v, tuple) else v for k, v in dataclasses.asdict(config.numerics).items()},
        "mc": {k: list(v) if isinstance(v, tuple) else v for k, v in dataclasses.asdict(config.mc).items()},
        "output": config.output,
    }
    return json.dumps(data, indent=2) + "\n"
