"""
simulate: exact amplitudes and probabilities after ``steps`` steps.

Positions of the wrong parity are always empty and are left out.
"""

import logging

from ..exactsim import evolve, initial_state, moments, peak_positions, probability
from ..output import AMPLITUDE_COLUMNS, amplitude_row
from ..registry import command
from ._utils import even_parity, load_run, new_table

log = logging.getLogger(__name__)


@command("simulate", help="exact amplitudes and probabilities")
def simulate(config):
    p, alpha0 = load_run(config)
    state = evolve(initial_state(*alpha0), p, config.steps)
    prob = probability(state)

    table = new_table(config, AMPLITUDE_COLUMNS)
    for n in range(-state.t, state.t + 1):
        if even_parity(n, state.t):
            table.rows.append(amplitude_row(n, *state.amplitude(n)))

    mean, variance = moments(state)
    left_peak, right_peak = peak_positions(state)
    table.summary.update(
        total_probability=float(prob.sum()),
        mean=mean,
        variance=variance,
        left_peak=left_peak,
        right_peak=right_peak,
    )
    log.info("simulated %d steps for tau=(%s, %s): variance %.6g", config.steps, config.tau1, config.tau2, variance)
    return table
