"""
From a tableau to a web
=======================

Walk the five standard tableaux of shape 3 x 2 through the pipeline:
tableau, m-diagram, crossings, resolved web, and back again through the
depth map.  Pass a directory as the first argument to also write SVGs.
"""
import sys
from pathlib import Path

from sl3webs import tableau, mdiagram, webmap
from sl3webs.render import render_svg

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else None

for t in tableau.enumerate_standard((2, 2, 2)):
    d = mdiagram.from_tableau(t)
    print(tableau.format_tableau(t))

    # each entry above the bottom row hangs an arc down to the row below
    for a in d.arcs:
        print(f"  arc {a.lo}-{a.hi} on level {a.level}")

    # crossings are exact rationals
    for c in mdiagram.crossings(d):
        print(f"  crossing at x = {c.x}, y^2 = {c.y_squared}")

    w = webmap.web_of(t)
    inner = [v for v in w.vertices if not v.is_boundary]
    print(f"  web: {len(inner)} internal vertices, {len(w.edges)} edges")

    profile = webmap.boundary_depth_profile(w)
    print("  depth steps along the boundary:", " ".join(f"{x:+d}" for x in profile.deltas))

    # the depth map reads the tableau back off those steps
    assert webmap.depth_map(w) == t
    print()

    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
        stem = tableau.format_tableau(t).replace(" / ", "_").replace(" ", "")
        (out_dir / f"m_{stem}.svg").write_text(render_svg(d, depths=True))
        (out_dir / f"web_{stem}.svg").write_text(render_svg(w, depths=True))
