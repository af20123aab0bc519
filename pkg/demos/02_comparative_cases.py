"""
Five simple layouts under four skies
====================================

Each case is a 50 x 50 m plot sampled every metre at eye height. One
raycast pass builds the all-to-all visibility graph; weather only changes
the edge weights, so the four conditions cost almost nothing extra.
Heatmaps go to ``demos/output/cases`` with one colour scale per metric
shared across conditions, so darker really means "less visible".
"""
import os

import numpy as np

from weathervg import scenes
from weathervg.attenuation import WeatherCondition, resolve_condition
from weathervg.geometry import build_bvh
from weathervg.heatmap import export_heatmap
from weathervg.sampling import GridSpec, generate_grid
from weathervg.visgraph import build_visibility_graph, compute_scores

out = os.path.join(os.path.dirname(os.path.abspath(__file__)), "output", "cases")
os.makedirs(out, exist_ok=True)

skies = [resolve_condition(WeatherCondition.parse(c))
         for c in ("clear", "rain:8", "fog-ha", "snow-dry:4")]

for scene in scenes.comparative_cases():
    bvh = build_bvh(scene.mesh)
    nodes = generate_grid(GridSpec(scene.bounds, 1.0), bvh)
    graph = build_visibility_graph(nodes, bvh)
    fields = [compute_scores(graph, c) for c in skies]
    lo = min(f.s_sum.min() for f in fields)
    hi = max(f.s_sum.max() for f in fields)
    print(f"\n{scene.name}: {len(nodes)} nodes, {graph.n_edges} sight lines")
    for f in fields:
        # the best-placed node under each sky
        best = nodes[int(f.node_ids[np.argmax(f.s_sum)])].position
        print(f"  {f.label:<11} S_S {f.s_sum.min():7.1f} .. {f.s_sum.max():7.1f}"
              f"   best at ({best[0]:.1f}, {best[1]:.1f})")
        export_heatmap(f.s_sum, nodes, os.path.join(out, f"{scene.name}_{f.label}_sum.ppm"),
                       lo, hi, "shared", meta={"metric": "sum", "condition": f.label})

print(f"\nheatmaps written to {out}")
