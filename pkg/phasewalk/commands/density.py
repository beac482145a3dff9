"""
density: the limit density and CDF on a grid over the open support, plus the
KS distance of the exact walk at ``steps``.
"""

import logging

import numpy as np

from ..registry import command
from ..weaklimit import (
    density_mass,
    is_symmetric_initial,
    ks_distance,
    limit_cdf,
    limit_cdf_closed_form,
    limit_density,
)
from ._utils import load_run, new_table

log = logging.getLogger(__name__)


@command("density", help="limit density, CDF and KS distance")
def density(config):
    p, alpha0 = load_run(config)
    p.require_nondegenerate("density")
    p.require_spread("density")
    half_width = p.half_width
    ys = np.linspace(-half_width, half_width, config.grid + 2)[1:-1]

    table = new_table(config, ["y", "density", "cdf", "cdf_closed"])
    densities = limit_density(p, ys)
    closed = limit_cdf_closed_form(p, ys)
    for y, f, c in zip(ys, densities, closed):
        table.rows.append([float(y), float(f), limit_cdf(p, float(y)), float(c)])

    distance = ks_distance(p, alpha0, config.steps)
    table.summary.update(
        half_width=half_width,
        mass=density_mass(p),
        symmetric_initial=is_symmetric_initial(p, alpha0),
        ks_distance=distance,
    )
    log.info("KS distance at t=%d: %.6g", config.steps, distance)
    return table
