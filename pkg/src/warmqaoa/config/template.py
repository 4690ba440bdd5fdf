"""Starter experiment configuration for ``warmqaoa init``."""

STARTER_CONFIG = """\
# Instance: either an edge-list file ...
# instance: "graphs/er-8.txt"
# ... or a generator (kinds: er, karloff)
generator:
  kind: er
  n: 6
  edge_prob: 0.5
  weights: "unit"      # or "uniform:a,b"
  seed: 0

# QAOA variants: standard, warm, warmest, single_cut_epsilon, random, gw
variants: [standard, warm, warmest]
depths: [1, 2, 4, 8]
seeds: [0]

# Warm-start construction
method: bm             # bm or gw_projected
ranks: [2]             # 2 and/or 3
rotations: [vertex]    # vertex and/or uniform
attempts: 5            # solves/projections, best kept by BM objective
rotations_per_solution: 5

# Optimizer
starts: 1
optimizer:
  init_scale: 0.01
  termination_tol_factor: 1.0e-6
  max_iters: 2000
  fd_step: 1.0e-4

# single_cut_epsilon distance from the poles, phase-damping probability
epsilon: 0.5
noise_q: 0.0

output: "results.csv"
"""
