from .params import ScenarioConfig, McConfig, parse_config, load_config, emit_config, config_from_dict
from .verify import VerifySuite, CheckResult, verify_suite, PASS, FAIL, FLAG
from .runner import Runner, SUBCOMMANDS, EXIT_OK, EXIT_VALIDATION, EXIT_VERIFY
from .main import main, build_parser, DEFAULT_CONFIG
