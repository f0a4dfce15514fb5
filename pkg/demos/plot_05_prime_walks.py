"""
Walking on primes with steps of length sqrt 8
=============================================

Build the road network of first-quadrant primes, take the component of sqrt2,
run a few seeded random walks and compare Gaussian moats.
"""

from pathlib import Path

from primewalk import QuadInt, Rect, Disk, build_walk_graph, component_of, moat_scan, random_walk
from primewalk.svg import scatter_svg

g = build_walk_graph(2, Rect(0, 1500, 0, 1500), 8)
comp = component_of(g, QuadInt(0, 1))
print(f"{len(g)} primes; component of √2 has {comp.size} members, reaches x={comp.max_coordinate}")
print("cut off by the sieve bound:", comp.boundary_touched)

Path("component_sqrt8.svg").write_text(
    scatter_svg([m.xy for m in comp.members], asymptotes=True, title="component of √2, k = √8"))

# norm-increasing random walks from √2 and from 13+15√2
for start in (QuadInt(0, 1), QuadInt(13, 15)):
    for seed in range(3):
        path = random_walk(g, start, seed)
        print(f"start {start}, seed {seed}: {len(path.steps)} steps, ends at {path.steps[-1]}")

# Gaussian components stay finite for small step bounds
for k2, summary in moat_scan(-1, QuadInt(1, 1, -1), [2, 4, 8], Disk(3000)):
    print(f"Z[i] k2={k2}: size {summary.size}, farthest {summary.farthest}, "
          f"finite={not summary.boundary_touched}")
