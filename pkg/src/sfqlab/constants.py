"""Physical constants (SI, 2019 redefinition). Compile-time fixed, never configurable."""

FLUX_QUANTUM = 2.067833848e-15
"""Magnetic flux quantum Phi_0 in Wb."""

HBAR = 1.054571817e-34
"""Reduced Planck constant in J*s."""

BOLTZMANN = 1.380649e-23
"""Boltzmann constant k_B in J/K."""

TWO_PI = 6.283185307179586
