import typing as T


class ValidationError(ValueError):
    pass


class DenseLimitError(ValidationError):
    def __init__(self, n: int, limit: int):
        super(DenseLimitError, self).__init__(f"dense rendering of size {n} exceeds the configured limit {limit}")
        self.n = n
        self.limit = limit


class ConfigError(ValidationError):
    def __init__(self, path: str, reason: str, line: T.Optional[int] = None):
        location = path if line is None else f"{path} (line {line})"
        super(ConfigError, self).__init__(f"{location}: {reason}")
        self.path = path
        self.reason = reason
        self.line = line


class NumericalCheckError(RuntimeError):
    pass
