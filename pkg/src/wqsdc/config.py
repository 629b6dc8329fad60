"""Command-line configuration: flag parsing, validation and YAML defaults."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import yaml

from wqsdc.cloning import Convention
from wqsdc.protocol import InvalidParametersError, RunConfig, SecretState, WStateParams

LOGGER = logging.getLogger(__name__)

TRIPLE_TOLERANCE = 1e-6
DEFAULT_TRIPLE = (0.25, 0.5, 0.25)
FIG1_DEFAULT_TRIPLE = (0.1, 0.8, 0.1)
COMMANDS = ("run", "sweep", "figures", "attack", "clone-analysis", "selfcheck")


class ConfigError(Exception):
    """Invalid command-line or config-file value."""

    def __init__(self, flag: str, reason: str) -> None:
        self.flag = flag
        self.reason = reason
        super().__init__(f"{flag}: {reason}")


def parse_complex(text: str, flag: str = "value") -> complex:
    """``re,im`` or ``re``."""
    parts = [p.strip() for p in str(text).split(",")]
    if not 1 <= len(parts) <= 2 or any(not p for p in parts):
        raise ConfigError(flag, f"expected 're,im' or 're', got {text!r}")
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise ConfigError(flag, f"not a number: {text!r}") from None
    if not all(math.isfinite(v) for v in values):
        raise ConfigError(flag, f"non-finite value: {text!r}")
    return complex(values[0], values[1] if len(values) == 2 else 0.0)


def parse_amplitudes(text: str, count: int, flag: str) -> tuple[complex, ...]:
    """``count`` complex components separated by ``:``."""
    components = str(text).split(":")
    if len(components) != count:
        raise ConfigError(flag, f"expected {count} components separated by ':', got {text!r}")
    return tuple(parse_complex(c, flag) for c in components)


def parse_secret(text: str) -> SecretState:
    """Secret amplitudes ``a:b`` with complex components.

    Without a ``:`` the value is read as two real amplitudes ``a,b``, since a
    single complex number cannot describe a qubit.
    """
    if ":" in str(text):
        a, b = parse_amplitudes(text, 2, "--secret")
    else:
        a, b = (complex(v) for v in _two_reals(text))
    try:
        return SecretState(a, b)
    except InvalidParametersError as exc:
        raise ConfigError("--secret", str(exc)) from None


def _two_reals(text: str) -> tuple[float, float]:
    parts = str(text).split(",")
    if len(parts) != 2:
        raise ConfigError("--secret", f"expected 'a:b' or 'a,b', got {text!r}")
    return parse_complex(parts[0], "--secret").real, parse_complex(parts[1], "--secret").real


def check_squared_triple(alpha2: float, beta2: float, gamma2: float) -> tuple[float, float, float]:
    """Each in [0, 1] and summing to 1 within 1e-6; returns the renormalized triple."""
    for flag, value in (("--alpha2", alpha2), ("--beta2", beta2), ("--gamma2", gamma2)):
        if not 0.0 <= value <= 1.0:
            raise ConfigError(flag, f"must lie in [0, 1], got {value!r}")
    total = alpha2 + beta2 + gamma2
    if abs(total - 1.0) > TRIPLE_TOLERANCE:
        raise ConfigError(
            "--alpha2/--beta2/--gamma2",
            f"squared magnitudes sum to {total:.12g}, expected 1 +- {TRIPLE_TOLERANCE:g}",
        )
    return alpha2 / total, beta2 / total, gamma2 / total


def load_config_file(path: Path, known: set[str]) -> dict[str, Any]:
    """YAML mapping of flag defaults; keys use the flag's dest name."""
    path = Path(path)
    if not path.exists():
        raise ConfigError("--config", f"file not found: {path}")
    with open(path, encoding="utf-8") as f:
        data = yaml.safe_load(f)
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError("--config", f"expected a mapping, got {type(data).__name__}")
    data = {str(k).replace("-", "_"): v for k, v in data.items()}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError("--config", f"unknown keys: {', '.join(unknown)}")
    LOGGER.info("Loaded %d defaults from %s", len(data), path)
    return data


def _optional_float(value: Any, flag: str) -> float | None:
    if value is None:
        return None
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ConfigError(flag, f"not a number: {value!r}") from None


@dataclass
class CliConfig:
    """Validated settings for one command."""

    command: str
    alpha2: float | None = None
    beta2: float | None = None
    gamma2: float | None = None
    wparams: WStateParams | None = None
    secret: SecretState = field(default_factory=lambda: SecretState(0.6, 0.8))
    seed: int = 0
    shots: int = 10_000
    max_retries: int = 10
    out: Path = Path("out")
    convention: Convention = Convention.PAPER_LITERAL
    svg: bool = False
    fmt: str = "json"
    options: dict[str, Any] = field(default_factory=dict)

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ConfigError("command", f"unknown command '{self.command}'")
        if self.shots < 1:
            raise ConfigError("--shots", f"must be >= 1, got {self.shots}")
        if self.max_retries < 0:
            raise ConfigError("--max-retries", f"must be >= 0, got {self.max_retries}")
        if self.fmt not in ("json", "yaml"):
            raise ConfigError("--format", f"expected json or yaml, got {self.fmt!r}")
        if self.beta2 is not None and not 0.0 <= self.beta2 <= 1.0:
            raise ConfigError("--beta2", f"must lie in [0, 1], got {self.beta2!r}")
        if self.needs_triple and self.wparams is None:
            self.wparams = WStateParams.from_squared(*self.triple())

    @property
    def needs_triple(self) -> bool:
        if self.command in ("run", "attack"):
            return True
        return self.command == "figures" and self.options.get("fig") == "fig1"

    def triple(self) -> tuple[float, float, float]:
        """Validated squared magnitudes, falling back to the command default."""
        given = (self.alpha2, self.beta2, self.gamma2)
        if all(v is None for v in given):
            given = FIG1_DEFAULT_TRIPLE if self.command == "figures" else DEFAULT_TRIPLE
        elif any(v is None for v in given):
            raise ConfigError("--alpha2/--beta2/--gamma2", "give all three squared magnitudes")
        return check_squared_triple(*(float(v) for v in given))

    def run_config(self) -> RunConfig:
        self.validate()
        if self.wparams is None:
            self.wparams = WStateParams.from_squared(*self.triple())
        return RunConfig(self.secret, self.wparams, self.convention, self.seed, self.max_retries)

    @classmethod
    def from_args(cls, args: Any) -> CliConfig:
        """Build from an argparse namespace; unknown attributes go to ``options``."""
        values = vars(args).copy()
        command = values.pop("command")
        try:
            convention = Convention.parse(values.pop("convention", Convention.PAPER_LITERAL))
        except ValueError as exc:
            raise ConfigError("--convention", str(exc)) from None
        wparams = None
        raw_wparams = values.pop("wparams", None)
        if raw_wparams:
            try:
                wparams = WStateParams(*parse_amplitudes(raw_wparams, 3, "--wparams"))
            except InvalidParametersError as exc:
                raise ConfigError("--wparams", str(exc)) from None
        raw_secret = values.pop("secret", None)
        config = cls(
            command=command,
            alpha2=_optional_float(values.pop("alpha2", None), "--alpha2"),
            beta2=_optional_float(values.pop("beta2", None), "--beta2"),
            gamma2=_optional_float(values.pop("gamma2", None), "--gamma2"),
            wparams=wparams,
            secret=parse_secret(raw_secret) if raw_secret else SecretState(0.6, 0.8),
            seed=int(values.pop("seed", 0)),
            shots=int(values.pop("shots", 10_000)),
            max_retries=int(values.pop("max_retries", 10)),
            out=Path(values.pop("out", "out")),
            convention=convention,
            svg=bool(values.pop("svg", False)),
            fmt=values.pop("format", "json"),
        )
        for key in ("config", "log_file", "verbose"):
            values.pop(key, None)
        config.options = values
        config.validate()
        return config
