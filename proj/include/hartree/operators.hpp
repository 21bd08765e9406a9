#pragma once

#include <memory>
#include <vector>

#include "hartree/fft.hpp"
#include "hartree/field.hpp"

namespace hartree {

// Mass parameter of the pseudo-relativistic operator sqrt(-Laplacian + m^2),
// realized as the Fourier multiplier sqrt(|2 pi xi|^2 + m^2).
struct KineticSpec {
    double m = 0.0;
};

// Apply the kinetic multiplier coefficientwise; result is real (imaginary
// residue verified < 1e-10 of the real norm, then dropped).
Field apply_kinetic(const Field& u, const KineticSpec& spec);

// (sqrt(-Lap+m^2) u, u), evaluated as a frequency-domain sum. Nonnegative,
// >= m * mass(u).
double kinetic_energy(const Field& u, const KineticSpec& spec);

// Half-Laplacian quadratic form: same multiplier with m = 0.
double quarter_laplacian_energy(const Field& u);

// Spectral transform of the truncated free-space 1/r kernel on the grid's
// frequency lattice: Khat(k) = 4 pi (1 - cos(k Rc)) / k^2 with Rc = L/2 and
// Khat(0) = 2 pi Rc^2, k = 2 pi |xi|. Cached per grid.
using CoulombKernel = std::shared_ptr<const std::vector<double>>;
CoulombKernel coulomb_kernel(const Grid3& grid);

// phi_u = 1/|x| * u^2 with the truncated kernel (free-space convolution for
// charges supported well inside the box).
Field coulomb_potential(const Field& u);
Field coulomb_potential(const Field& u, const CoulombKernel& kernel);

// Double integral of u^2(x) v^2(y) / |x-y|; symmetric in (u, v).
double hartree_energy(const Field& u, const Field& v);

}  // namespace hartree
