"""Exporting a colouring instance for an external ILP solver and checking its answer."""
from gborsuk import build_cyclic, pipeline
from gborsuk.solver import export_ilp, extend_precoloring, format_solution, import_solution

# %% The 9,129-vertex instance for E_3 Z_3 at three subdivisions.
rep = pipeline(build_cyclic(3), 3, min_k=3, max_k=3, method="export")
p = rep.problem
print(f"{p.graph.n} vertices, {p.graph.num_edges} edges, {len(p.precolored)} forced, {p.num_colors} colours")
lp = export_ilp(p)
print("LP size:", len(lp) // 1024, "KiB")

# %% Any solver that writes "v <vertex> <colour>" lines (or x_v_c values) can
# be checked; here the built-in search stands in for it.
sol = format_solution(extend_precoloring(p))
print("accepted:", import_solution(p, sol).num_colors_used, "colours")
