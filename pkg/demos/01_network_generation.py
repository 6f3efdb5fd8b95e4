"""Generate the two community networks and print their whole-graph features.

A small-world network (ring lattice with rewired edges) and a scale-free
network (degree-proportional growth) of 100 vertices each, sized so both
carry roughly 200 edges. Rerun with another seed to see instance spread.
"""

from mixbiotic import BaParams, WsParams, generate_ba, generate_ws, graph_stats

SEED = 42

ws = generate_ws(WsParams(n=100, k=4, p=0.7), seed=SEED)
ba = generate_ba(BaParams(n=100, n_a=3, k=2), seed=SEED)

print(f"{'feature':<26}{'small-world':>14}{'scale-free':>14}")
for name, value_ws, value_ba in [
    ("vertex count", ws.n, ba.n),
    ("edge count", ws.edge_count, ba.edge_count),
]:
    print(f"{name:<26}{value_ws:>14}{value_ba:>14}")

sw, sb = graph_stats(ws), graph_stats(ba)
for name, attr in [
    ("diameter", "diameter"),
    ("mean distance", "mean_distance"),
    ("density", "density"),
    ("mean clustering", "mean_clustering"),
]:
    print(f"{name:<26}{getattr(sw, attr):>14.4g}{getattr(sb, attr):>14.4g}")

degrees_ba = sorted((ba.degree(v) for v in range(ba.n)), reverse=True)
print("\nscale-free top degrees:", degrees_ba[:8])
print("small-world degree range:", min(ws.degree(v) for v in range(ws.n)),
      "-", max(ws.degree(v) for v in range(ws.n)))
