"""
Small parts survive, holes get filled
=====================================

A car-like fixture (body plus two detached wheels) keeps all three
components, and the ear-clipping filler closes a hole cut into a sphere.
"""

# %%
import numpy as np

from sparcubes import shapes
from sparcubes.hole_fill import fill_all_holes, find_boundary_loops
from sparcubes.mesh_io import TriMesh
from sparcubes.metrics import watertight_audit
from sparcubes.pipeline import PipelineConfig, remesh

car = shapes.corpus()["car"]
res = remesh(car, PipelineConfig(resolution=96))
a = watertight_audit(res.mesh)
print(f"car: components {a.connected_components}, euler {a.euler_characteristic}, watertight {a.is_watertight}")

# %% cut the faces around one vertex out of a sphere and fill the loop
s = shapes.icosphere(2)
holed = TriMesh(s.vertices, s.faces[~np.any(s.faces == 0, axis=1)])
loops = find_boundary_loops(holed).loops
print("loop lengths:", [len(l) for l in loops])
filled, rep = fill_all_holes(holed)
print(rep.to_text())
print("after filling:", watertight_audit(filled))
