"""
Run configuration for the phasewalk command line.

Everything a command needs lives on RunConfig. Values arrive as strings from
argparse; parse_tau and parse_initial turn them into numbers once, and
validate() reports every violated precondition in a single ConfigError.
"""

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from .errors import ConfigError

COMMANDS = ("simulate", "asymptotic", "compare", "density", "spectrum", "moments")
FORMATS = ("csv", "json")

# CLI input only; exactsim.initial_state keeps its own 1e-10 check
INITIAL_NORM_TOLERANCE = 1e-6

_HALF = 1.0 / math.sqrt(2.0)

INITIAL_PRESETS = {
    "left": (1.0, 0.0, 0.0, 0.0),
    "right": (0.0, 0.0, 1.0, 0.0),
    "symmetric": (_HALF, 0.0, _HALF, 0.0),
    "balanced-i": (_HALF, 0.0, 0.0, _HALF),
}


def parse_tau(text: str) -> float:
    """Accept decimals and fractions ("0.75", "3/4"); range is checked by validate()."""
    try:
        return float(Fraction(str(text).strip()))
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"tau must be a decimal or fraction, got {text!r}")


def parse_initial(text: str) -> Tuple[complex, complex]:
    """Parse "re,im,re,im" or a preset name into (alpha_left, alpha_right).

    Inputs within 1e-6 of unit norm are renormalized exactly.
    """
    text = str(text).strip()
    if text in INITIAL_PRESETS:
        values = INITIAL_PRESETS[text]
    else:
        parts = [part.strip() for part in text.split(",")]
        if len(parts) != 4:
            raise ConfigError(
                f"initial state needs four comma-separated numbers re,im,re,im "
                f"or one of {', '.join(INITIAL_PRESETS)}; got {text!r}"
            )
        try:
            values = tuple(float(part) for part in parts)
        except ValueError:
            raise ConfigError(f"initial state contains a non-number: {text!r}")
    left = complex(values[0], values[1])
    right = complex(values[2], values[3])
    norm = abs(left) ** 2 + abs(right) ** 2
    if not math.isfinite(norm) or abs(norm - 1.0) > INITIAL_NORM_TOLERANCE:
        raise ConfigError(
            f"initial state must have unit norm |left|^2 + |right|^2 = 1, got {norm!r}"
        )
    scale = 1.0 / math.sqrt(norm)
    return left * scale, right * scale


@dataclass
class RunConfig:
    """One CLI invocation."""

    command: str = "simulate"
    tau1: str = "1/2"
    tau2: str = "0"
    steps: int = 100
    initial: str = "symmetric"
    output: Optional[str] = None  # None writes to stdout
    format: str = "csv"
    nodes: Optional[int] = None  # quadrature override for the spectral route
    two_saddle: bool = True
    seed: Optional[int] = None
    grid: int = 401  # density / spectrum sample count
    margin: float = 0.01
    every: int = 10  # moments row spacing

    def problems(self) -> List[str]:
        found = []
        if self.command not in COMMANDS:
            found.append(f"unknown command {self.command!r}; choose from {', '.join(COMMANDS)}")
        for name in ("tau1", "tau2"):
            try:
                tau = parse_tau(getattr(self, name))
            except ConfigError as exc:
                found.extend(f"{name}: {problem}" for problem in exc.problems)
                continue
            if not 0.0 <= tau <= 1.0:
                found.append(f"{name} must lie in [0, 1], got {getattr(self, name)!r}")
        if self.steps < 0:
            found.append(f"steps must be nonnegative, got {self.steps}")
        if self.command in ("asymptotic", "compare", "density") and self.steps < 1:
            found.append(f"{self.command} needs steps >= 1, got {self.steps}")
        try:
            parse_initial(self.initial)
        except ConfigError as exc:
            found.extend(exc.problems)
        if self.format not in FORMATS:
            found.append(f"format must be one of {', '.join(FORMATS)}, got {self.format!r}")
        if self.nodes is not None and self.nodes < 2 * self.steps + 4:
            found.append(
                f"nodes={self.nodes} is below the exact-quadrature minimum {2 * self.steps + 4} "
                f"for steps={self.steps}"
            )
        if self.grid < 2:
            found.append(f"grid must be at least 2, got {self.grid}")
        if not 0.0 <= self.margin < 1.0:
            found.append(f"margin must lie in [0, 1), got {self.margin}")
        if self.every < 1:
            found.append(f"every must be at least 1, got {self.every}")
        return found

    def validate(self) -> bool:
        found = self.problems()
        if found:
            raise ConfigError(found)
        return True

    @property
    def taus(self) -> Tuple[float, float]:
        return parse_tau(self.tau1), parse_tau(self.tau2)

    @property
    def alpha0(self) -> Tuple[complex, complex]:
        return parse_initial(self.initial)

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)
