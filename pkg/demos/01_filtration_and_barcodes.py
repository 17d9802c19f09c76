"""A guided tour of clique-complex filtrations and persistence barcodes.

We build a small weighted network whose topology we can reason about by
hand — a hollow octahedron plus a dangling path — and watch cycles being
born and filled in as edges enter the filtration strongest-first.

Run:  python demos/01_filtration_and_barcodes.py
"""

import numpy as np

from topotax import (
    WeightedNetwork,
    build_filtration,
    compute_persistence,
    betti_curves,
    jitter,
)
from topotax.persistence import step_grid

# ----------------------------------------------------------------------
# The octahedron is the complete graph on six nodes minus a perfect
# matching: every node is connected to all but its "antipode".  Its
# clique complex is a hollow sphere — one connected component, no
# 1-dimensional holes, and a single 2-dimensional void.
n = 9
w = np.zeros((n, n))
for i in range(6):
    for j in range(i + 1, 6):
        w[i, j] = w[j, i] = 1.0
for a, b in [(0, 1), (2, 3), (4, 5)]:       # remove the matching
    w[a, b] = w[b, a] = 0.0

# A three-node path hangs off node 0 with weaker weights, so it enters
# the filtration late and briefly adds extra connected components.
w[0, 6] = w[6, 0] = 0.5
w[6, 7] = w[7, 6] = 0.4
w[7, 8] = w[8, 7] = 0.3

net = jitter(WeightedNetwork(w), seed=0)    # break the weight ties
filt = build_filtration(net)

print(f"network: {net.n} nodes, {net.edge_count} edges, "
      f"density {net.density:.3f}")
print(f"filtration: edges enter strongest-first; edge t has density "
      f"(t+1)/{net.max_edges}")

# ----------------------------------------------------------------------
# Persistence pairs each cycle's birth density with the density at which
# it becomes a boundary (is "filled in").  Pairs that never die are the
# network's final homology.
diag = compute_persistence(filt, d_max=3)

print("\nbarcode (birth density, death density) per dimension:")
for d in range(4):
    pairs = diag.dim(d)
    label = {0: "components", 1: "loops", 2: "voids", 3: "3-voids"}[d]
    print(f"  dimension {d} ({label}): {len(pairs)} bars")
    for b, y in pairs:
        mark = "infinite" if np.isinf(y) else f"dies {y:.3f}"
        print(f"    born {b:.3f}  {mark}")

# The one infinite bar in dimension 2 is the octahedron's hollow
# interior; dimension 0 keeps a single infinite bar for the component.

# ----------------------------------------------------------------------
# Betti curves read the barcode as counts of live cycles per density.
grid = step_grid(net.n, rho_max=1.0)
curves = betti_curves(diag, grid)
print("\nBetti curves at a few densities:")
print("  rho     b0  b1  b2")
for t in np.linspace(0, len(grid) - 1, 8, dtype=int):
    print(f"  {grid[t]:.3f}   {curves[0].values[t]:2d}  "
          f"{curves[1].values[t]:2d}  {curves[2].values[t]:2d}")
