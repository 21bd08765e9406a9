#pragma once

#include <complex>
#include <vector>

#include "hartree/field.hpp"

namespace hartree::spectral {

using cvector = std::vector<std::complex<double>>;

// Unnormalized forward DFT of the sample array (FFTW sign convention
// e^{-2pi i jk/n}); index order matches Grid3::freq_int.
cvector forward(const Field& u);

// Inverse DFT including the 1/n^3 factor. The imaginary residue must stay
// below tol * ||real part||; it is verified and then dropped.
Field inverse_real(const Grid3& grid, const cvector& spec, double tol = 1e-10);

// Complex-to-complex transforms for utility code (chirp-z).
void fft_pow2(cvector& data, bool inverse);

}  // namespace hartree::spectral
