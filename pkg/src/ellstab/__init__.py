"""Exact-arithmetic verification of the supersingular-curve deformation
calculus at the prime 2: elliptic formal group laws, the quaternionic
stabilizer order and its action on the deformation ring, finite-subgroup
cohomology through explicit resolutions, the u1-filtration spectral
sequence, and the duality-resolution differential checks."""

__version__ = "0.1.0"
