"""
Shared helpers for the command modules.
"""

from typing import List, Tuple

from ..config import RunConfig
from ..output import Table
from ..params import PhaseParams, make_params


def load_run(config: RunConfig) -> Tuple[PhaseParams, Tuple[complex, complex]]:
    """Parsed coin parameters and initial amplitudes for ``config``."""
    tau1, tau2 = config.taus
    return make_params(tau1, tau2), config.alpha0


def new_table(config: RunConfig, columns: List[str]) -> Table:
    return Table(columns=list(columns), config=config.as_dict())


def even_parity(n: int, t: int) -> bool:
    return (n + t) % 2 == 0
