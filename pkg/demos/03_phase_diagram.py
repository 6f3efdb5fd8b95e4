"""Sweep the generation/disappearance plane and draw the phase diagram.

Every mesh point is simulated for a number of trials, the three composite
measures are normalized over the grid, and each point is labeled
nihilism / atomism / mixism / mobism. Writes grid CSV + SVG next to this
script. Trials are kept low here so the demo finishes in ~15 seconds;
raise TRIALS for a production-quality diagram.
"""

from pathlib import Path

from mixbiotic import MeshSpec, SweepConfig, WsParams, build_mesh, render_phase_svg, run_sweep
from mixbiotic.sweep import save_grid_csv, save_grid_metadata

TRIALS = 5
OUT = Path(__file__).resolve().parent

cfg = SweepConfig(network=WsParams(100, 4, 0.7), trials=TRIALS, base_seed=42)
mesh = build_mesh(MeshSpec())
print(f"sweeping {len(mesh)} mesh points x {TRIALS} trials ...")
grid = run_sweep(cfg, mesh, workers=2)

counts = {}
for p in grid.points:
    counts[p.phase] = counts.get(p.phase, 0) + 1
print("phase counts:", counts)

print("\nd \\ g  " + " ".join(f"{g:.1f}" for g in [i / 10 for i in range(11)]))
for di in range(10, -1, -1):
    d = di / 10
    row = []
    for gi in range(11):
        row.append(grid.point_at(gi / 10, d).phase[0])
    print(f"{d:5.1f}  " + "   ".join(row))

save_grid_csv(grid, OUT / "phase_grid.csv")
save_grid_metadata(grid, OUT / "phase_grid.meta.json")
(OUT / "phase_diagram.svg").write_text(render_phase_svg(grid))
print(f"\nwrote {OUT / 'phase_grid.csv'}")
print(f"wrote {OUT / 'phase_diagram.svg'}")
