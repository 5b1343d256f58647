"""Hot numeric kernels, in two interchangeable builds (numba / pure numpy).

Callers go through :func:`mimicarm.backend.get_kernels`; both modules expose
the same functions with the same array contracts:

  depth_to_points(depth, fx, fy, cx, cy, pose, stride) -> (points, pix_flat)
  voxel_accumulate(points, colors, lo, res, nx, ny, nz) -> (counts, color_sums)
  sphere_voxel_contacts(centers, radii, occ, lo, res) -> (sphere_idx, vox_ijk, penetration)
  fk_mats(origins, axes, is_rev, base, tcp_off, angles) -> (link_mats, tcp)
  ik_dls(...) -> (q, iters, pos_err, rot_err, converged)
"""
