"""
Shrinking unlinked rings apart
==============================

Round circles shrink by slicing their orthogonal hemispheres.  Parking each
circle at a small radius just before it vanishes leaves a configuration whose
flat disks are disjoint, which certifies that the rings are unlinked.
"""

from ringgroups.geometry import (
    Circle, complexity, disks_disjoint, format_trajectory, generic_unlink_certificate,
    linked, reduce_complexity, validate,
)

big = Circle((0.0, 0.0, 0.0), 4.0, (0.0, 0.0, 1.0))
small = Circle((2.0, 0.0, 0.5), 1.0, (1.0, 0.0, 0.0))  # dips through the big disk
print("linking verdict:", linked(big, small))
print("disks disjoint at the start:", disks_disjoint(big, small))

cert = generic_unlink_certificate(validate([big, small]), grid=(0.5,))
print(format_trajectory(cert.trajectory), end="")
print("parked radii:", cert.frozen_radii)
print("disks disjoint at the end:", cert.disks_disjoint())

# Shrinking in place drives the complexity to zero.
print("complexity:", complexity(cert.final), "->", complexity(reduce_complexity(cert.final, 0.01)))
