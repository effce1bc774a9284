"""Hill trajectories for a light and a heavy stability index.

For index 1.1 the trajectory stabilizes near the true value over a wide
range of k; for 1.8 there is no good k and the estimates drift above 2,
the classic overestimation of Hill's estimator on stable samples of
typical size.  Writes hill_plots.png.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from stabletail import StableParams, hill_plot_data

n, k_max, seed = 5000, 1000, 12

fig, axes = plt.subplots(1, 2, figsize=(10, 4), sharex=True)
for ax, alpha in zip(axes, (1.1, 1.8)):
    table = hill_plot_data(StableParams(alpha), n, k_max, seed)
    ax.plot(table[:, 0], table[:, 1], lw=0.8)
    ax.axhline(alpha, color="k", lw=1)
    ax.set_title(f"alpha = {alpha}")
    ax.set_xlabel("k")
    ax.set_ylabel("Hill estimate")
fig.tight_layout()
fig.savefig("hill_plots.png", dpi=150)
print("wrote hill_plots.png")
