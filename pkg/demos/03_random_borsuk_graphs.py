"""Random G-Borsuk graphs on the circle: thresholds and clique numbers."""
from gborsuk import random_graphs as rg

circle2, circle3 = rg.AnalyticSpace.circle(2), rg.AnalyticSpace.circle(3)

# %% Antipodal Z_2 on the circle.  Above eps ~ log n / n the graph contains
# odd cycles (chi = 3); far below it, the graph is bipartite.
for coef in (0.01, 0.1, 1.0, 6.0):
    res = rg.threshold_sweep(rg.ExperimentConfig(circle2, 5000, coef=coef, trials=10, seed=0,
                                                 mode="bipartite"))
    print(f"Z2 coef={coef:<5} eps={res.config.epsilon:.2e} bipartite fraction {res.fraction('bipartite'):.2f}")

# %% Rotation by 2pi/3.  Dense samples need m+1 = 4 colours.
res = rg.threshold_sweep(rg.ExperimentConfig(circle3, 300, trials=10, seed=0))
print("Z3 dense:", res.verdict_counts())

# %% The clique number is |G| for a dense sample.
for m in (2, 3, 4):
    res = rg.clique_sweep(rg.ExperimentConfig(rg.AnalyticSpace.circle(m), 2000, eps=0.1, trials=5, seed=m))
    print(f"Z{m}: ", res.verdict_counts())

# %% A delta-net on the 2-sphere with its certificate.
pts, cert = rg.greedy_net(rg.AnalyticSpace.sphere(2), 0.3)
print(f"net of {cert.size} points, separation {cert.min_separation:.3f}, "
      f"covering radius {cert.covering_radius:.3f}")
