"""How finished episodes become per-step preference rates.

A successful episode spreads positive credit backward from its goal steps;
a failed one spreads negative credit backward from its last step. Expert
steps of a successful episode are pinned near +1.

    python demos/preference_rates.py
"""
import numpy as np

from raif import EpisodeFlags, RevisionConfig, compute_preference_rates

cfg = RevisionConfig(alpha=0.95, beta=0.97, epsilon=0.05)
T = 12

cases = {
    "failed, agent only": (np.zeros(T), np.zeros(T)),
    "success at the end": (np.zeros(T), np.eye(T)[-1]),
    "success mid-episode": (np.zeros(T), np.eye(T)[6]),
    "expert demonstration": (np.ones(T), np.eye(T)[-1]),
}

np.set_printoptions(precision=2, suppress=True, linewidth=120)
for name, (p, d) in cases.items():
    rho = compute_preference_rates(EpisodeFlags.from_success(p, d), cfg)
    print(f"{name:>22}: {rho}")
