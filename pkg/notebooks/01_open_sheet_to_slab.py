"""
Open sheets close into thin slabs
=================================

A plate has no inside. The narrow band around it is sealed by the flood
fill, and corners near the sheet keep the interior label only within the
sheet half-thickness eta, so the zero level set becomes a slab about two
voxels thick.
"""

# %%
import numpy as np

from sparcubes import shapes
from sparcubes.metrics import watertight_audit
from sparcubes.pipeline import PipelineConfig, remesh

plate = shapes.grid_plate(8, size=(1.0, 0.6))
print("input:", watertight_audit(plate))

# %% remesh at a coarse and a finer lattice
for R in (64, 128):
    res = remesh(plate, PipelineConfig(resolution=R))
    lo, hi = res.mesh.bounds()
    h = (2.0 / R) / 1.9          # one voxel in input units (the plate spans 1.9 lattice units)
    a = watertight_audit(res.mesh)
    print(f"R={R:4d} faces={res.mesh.n_faces:6d} boundary={a.boundary_edge_count} "
          f"thickness={(hi[2] - lo[2]) / h:.2f} h  sign flips={res.diagnostics['sign_flips']}")

# %% eta sets the slab half-thickness (in voxels on the command line, lattice units here).
# This plate lies exactly on a lattice plane, so below one voxel only the corners
# on the plane stay inside and the slab collapses onto it: closed, but zero thickness.
for eta_vox in (0.5, 1.0, 1.5):
    res = remesh(plate, PipelineConfig(resolution=64, eta=eta_vox * 2.0 / 64))
    lo, hi = res.mesh.bounds()
    print(f"eta={eta_vox} h -> thickness {(hi[2] - lo[2]) * 1.9 / (2.0 / 64):.2f} h")
