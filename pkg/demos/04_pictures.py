"""Pictures of the covers of E_2 Z_m: one disk per cone over the circle."""
import sys
from pathlib import Path

from gborsuk import build_cyclic, pipeline
from gborsuk.render import RenderSpec, render_cover

out = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
out.mkdir(parents=True, exist_ok=True)
for m in (3, 4, 5, 6):
    rep = pipeline(build_cyclic(m), 2)
    svg = render_cover(RenderSpec(rep.cover))
    path = out / f"cover_E2_Z{m}.svg"
    path.write_text(svg)
    print(f"{path}: {rep.achieved} colours")
