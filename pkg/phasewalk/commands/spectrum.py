"""
spectrum: eigenvalues, eigenvectors and group velocities of M_k on a k grid.
"""

import numpy as np

from ..registry import command
from ..spectral import spectrum_grid
from ._utils import load_run, new_table

COLUMNS = [
    "k",
    "re_lambda1", "im_lambda1", "re_lambda2", "im_lambda2",
    "re_v1_left", "im_v1_left", "re_v1_right", "im_v1_right",
    "re_v2_left", "im_v2_left", "re_v2_right", "im_v2_right",
    "norm1", "norm2", "velocity1", "velocity2",
]


@command("spectrum", help="eigen data of M_k over [-pi, pi]")
def spectrum(config):
    p, _ = load_run(config)
    grid = spectrum_grid(p, config.grid)

    table = new_table(config, COLUMNS)
    for i, k in enumerate(grid.ks):
        lam = grid.eigenvalues[i]
        v = grid.vectors[i]
        row = [float(k)]
        for value in (lam[0], lam[1], v[0, 0], v[0, 1], v[1, 0], v[1, 1]):
            row.extend([float(value.real), float(value.imag)])
        row.extend(float(x) for x in grid.normalizers[i])
        row.extend(float(x) for x in grid.velocities[i])
        table.rows.append(row)

    table.summary.update(
        max_jump=grid.max_jump,
        max_modulus_err=float(np.max(np.abs(np.abs(grid.eigenvalues) - 1.0))),
    )
    return table
