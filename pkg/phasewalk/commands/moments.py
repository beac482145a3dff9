"""
moments: mean and variance of the exact walk every ``every`` steps.
"""

from ..exactsim import VARIANCE_FLOOR, evolve_history, initial_state, moments as state_moments, variance_exponent
from ..registry import command
from ._utils import load_run, new_table


@command("moments", help="mean and variance against t")
def moments(config):
    p, alpha0 = load_run(config)
    table = new_table(config, ["t", "mean", "variance", "total_probability"])
    for state in evolve_history(initial_state(*alpha0), p, config.steps, config.every):
        mean, variance = state_moments(state)
        table.rows.append([state.t, mean, variance, state.total_probability()])

    sampled = [row for row in table.rows if row[0] > 0]
    times = [row[0] for row in sampled]
    # a walk that never spreads has no exponent
    if len(times) >= 2 and all(row[2] > VARIANCE_FLOOR for row in sampled):
        table.summary["variance_exponent"] = variance_exponent(p, alpha0, times)
    return table
