"""Covering numbers of E_d G: constructive upper bounds meeting the lower bound d + |G|."""
import time

from gborsuk import bounds, one_dim_cover, parse_group, pipeline
from gborsuk.covers import MaxKExceeded

# %% Dimension one: an explicit |G|+1 colouring for every group.
for name in ("Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "S3"):
    g = parse_group(name)
    c = one_dim_cover(g)
    print(f"d=1 {name:6s} {c.num_colors_used} colours on {c.triangulation.num_vertices} vertices ({c.status})")

# %% Dimension two (and three for Z_3): subdivide G * L until the inherited
# colouring of L is proper, then extend with one new colour.
print()
print(f"{'group':6s} d  lower  found  k  vertices  seconds")
for name, d in (("Z2", 2), ("Z3", 2), ("Z4", 2), ("Z5", 2), ("Z6", 2), ("Z2xZ2", 2), ("Z3", 3)):
    g = parse_group(name)
    t0 = time.perf_counter()
    try:
        rep = pipeline(g, d, max_k=4)
    except MaxKExceeded as exc:
        print(name, d, "no cover up to k=4:", [s.outcome for s in exc.report.trace])
        continue
    last = rep.trace[-1]
    print(f"{name:6s} {d}  {bounds(g, d).lower:5d}  {rep.achieved:5d}  {last.k}  {last.vertices:8d}  "
          f"{time.perf_counter() - t0:7.2f}")
