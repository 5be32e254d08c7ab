"""Free G-complexes, their subdivisions, and the quotient (Borsuk) graphs they induce."""
from gborsuk import (build_cyclic, check_free, classifying_space, cycle_complex, medial_subdivide,
                     quotient_graph)
from gborsuk.solver import exact_chromatic

# %% The hexagon with Z_3 rotating by two steps.  Every vertex is joined in the
# quotient graph to every other one: a K_6, so six colours are needed.
c6 = cycle_complex(6, order=3)
h = quotient_graph(c6)
print(c6.describe(), "->", h.n, "vertices,", h.num_edges, "edges")
print("chi =", exact_chromatic(h)[0])

# %% Refining to twelve vertices leaves the circulant C12(3,4,5): four colours.
h12 = quotient_graph(cycle_complex(12, order=3))
print("C12/Z3: chi =", exact_chromatic(h12)[0])

# %% The triangle C_3 with its rotation is free as a space but not as a
# simplicial complex: each edge meets its rotated copy.  The quotient has loops.
c3 = cycle_complex(3)
print("C3 free (simplicial):", check_free(c3)[0], " free (geometric):", check_free(c3, strict=False)[0])
print("loops:", sorted(quotient_graph(c3).loops))

# %% One medial subdivision of E_2 Z_3 = Z_3 * C_3 makes the action free.
e2 = classifying_space(build_cyclic(3), 2)
for k in range(3):
    t = medial_subdivide(e2, k)
    hq = quotient_graph(t)
    print(f"k={k}: f-vector {t.f_vector()}, free={check_free(t)[0]}, loops={len(hq.loops)}")
