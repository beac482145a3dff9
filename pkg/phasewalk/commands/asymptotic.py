"""
asymptotic: the stationary-phase amplitude curve.

Rows beyond the support carry zero amplitudes and ``decay=1``; rows in the
caustic band next to it carry ``valid=0``.
"""

import logging

from ..asymptotics import asymptotic_curve
from ..output import AMPLITUDE_COLUMNS, amplitude_row
from ..registry import command
from ._utils import even_parity, load_run, new_table

log = logging.getLogger(__name__)


@command("asymptotic", help="large-t closed-form amplitude curve")
def asymptotic(config):
    p, alpha0 = load_run(config)
    t = config.steps
    curve = asymptotic_curve(p, alpha0, t, two_saddle=config.two_saddle, margin=config.margin)

    table = new_table(config, AMPLITUDE_COLUMNS + ["valid", "decay"])
    for row in curve:
        if even_parity(row.n, t):
            table.rows.append(amplitude_row(row.n, row.alpha_left, row.alpha_right, [row.valid, row.decay]))

    table.summary.update(
        half_width=p.half_width,
        valid_rows=sum(1 for row in table.rows if row[-2]),
        decay_rows=sum(1 for row in table.rows if row[-1]),
        total_probability=sum(row.probability for row in curve),
    )
    return table
