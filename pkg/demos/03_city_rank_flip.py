"""
Which corner is most visible? It depends on the weather
=======================================================

A 140 x 140 m block with two narrow crossing streets, an alley and a
walled plaza. P3 stands where the streets cross and sees far along all
four arms; P1 stands in the plaza and sees fewer nodes, but most of them
are close. In clear air the long sight lines win. In snow they fade out
and the plaza comes first.

Each query is a subset graph: the three points against every node.
"""
import numpy as np

from weathervg import scenes
from weathervg.attenuation import WeatherCondition, resolve_condition
from weathervg.geometry import build_bvh
from weathervg.sampling import GridSpec, generate_grid
from weathervg.visgraph import build_subset_graph, compute_scores

scene = scenes.city_block()
bvh = build_bvh(scene.mesh)
nodes = generate_grid(GridSpec(scene.bounds, 1.0), bvh)
names = sorted(scene.points)
ids = [nodes.nearest(scene.points[n], 0.5) for n in names]
graph = build_subset_graph(nodes, ids, nodes.ids, bvh)
print(f"{len(nodes)} nodes, {scene.mesh.n_triangles} triangles\n")

print(f"{'condition':<12}" + "".join(f"{n:>16}" for n in names) + "   leader")
for text in ("clear", "rain:8", "fog-mr", "fog-ha", "snow-wet:4", "snow-dry:4"):
    f = compute_scores(graph, resolve_condition(WeatherCondition.parse(text)))
    k = np.searchsorted(f.node_ids, ids)
    cells = [f"{f.s_sum[i]:8.1f} ({f.degree[i]:4d})" for i in k]
    print(f"{f.label:<12}" + "".join(f"{c:>16}" for c in cells)
          + f"   {names[int(np.argmax(f.s_sum[k]))]}")

# Average contrast per visible node tells the same story from the other side:
# the plaza's neighbours are simply closer.
f = compute_scores(graph, resolve_condition(WeatherCondition.parse("snow-dry:4")))
k = np.searchsorted(f.node_ids, ids)
print("\nmean surviving contrast in dry snow:",
      ", ".join(f"{n} {v:.3f}" for n, v in zip(names, f.s_avg[k])))
