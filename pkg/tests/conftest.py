import pytest

import stabletail as st


@pytest.fixture(scope="session")
def mc():
    """Cached Monte Carlo runs shared between harness and acceptance tests."""
    cache = {}

    def run(alpha, sigma, reps=200, n=3000, seed=42):
        key = (alpha, sigma, reps, n, seed)
        if key not in cache:
            cfg = st.ExperimentConfig(params=st.StableParams(alpha, sigma),
                                      n=n, reps=reps, master_seed=seed)
            cache[key] = (cfg, st.run_experiment(cfg, workers=4))
        return cache[key]

    return run
