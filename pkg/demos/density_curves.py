"""Density curves of standardized symmetric stable laws.

The smaller the stability index, the heavier the tails: the curves below
are computed by Fourier cosine inversion for several indices, with the
Gaussian case (index 2) as reference.  Writes density_curves.png.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from stabletail import density_figure_data

alphas = [0.6, 1.0, 1.5, 2.0]
grid = np.linspace(-5.0, 5.0, 201)
table = density_figure_data(alphas, grid)

fig, ax = plt.subplots(figsize=(8, 4.5))
for alpha in alphas:
    rows = table[table[:, 1] == alpha]
    style = "-" if alpha == 2.0 else "--"
    ax.plot(rows[:, 0], rows[:, 2], style, label=f"alpha = {alpha}")
ax.set_xlabel("x")
ax.set_ylabel("density")
ax.legend()
fig.tight_layout()
fig.savefig("density_curves.png", dpi=150)
print("wrote density_curves.png")
