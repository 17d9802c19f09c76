"""Gallery of the fourteen weighted-network models.

Draws one 40-node sample from each model and prints a structural
snapshot: edge density, the clique number at a quarter of full density,
and the lifetime sums of its persistence diagram.  The contrasts that
drive the classification are already visible at this scale — geometric
models fill in cliques quickly, random models accumulate many short
cycles, modular models sit in between.

Run:  python demos/02_model_gallery.py   (about a minute)
"""

from topotax import build_filtration, compute_persistence, generate
from topotax.cliques import maximal_vector_at
from topotax.models import STANDARD_MODELS
from topotax.topostats import beta_bar

N = 40

print(f"{'model':10s} {'density':>8s} {'omega@.25':>10s} "
      f"{'b0_bar':>8s} {'b1_bar':>8s} {'b2_bar':>8s}")

for spec in STANDARD_MODELS(n=N, seed=7):
    net = generate(spec)
    # jittering is only needed when weights tie; sample_batch does it
    # automatically, here we do it on demand
    from topotax.core import TiedWeightsError, jitter

    try:
        filt = build_filtration(net)
    except TiedWeightsError:
        filt = build_filtration(jitter(net, seed=spec.seed))

    omega = maximal_vector_at(filt, rho=0.25).omega
    diag = compute_persistence(filt, d_max=2)
    print(
        f"{spec.name:10s} {net.density:8.3f} {omega:10d} "
        f"{beta_bar(diag, 0):8.3f} {beta_bar(diag, 1):8.3f} "
        f"{beta_bar(diag, 2):8.3f}"
    )

print(
    "\nReading the table: a large clique number at low density signals"
    "\ngeometrically organized weights (the strongest edges agree about"
    "\nwhere the cliques are); large lifetime sums in dimensions 1-2"
    "\nsignal disordered weights whose cycles take long to fill in."
)
