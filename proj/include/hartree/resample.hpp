#pragma once

#include <array>

#include "hartree/fft.hpp"
#include "hartree/field.hpp"

namespace hartree {

// Evaluate the trigonometric interpolant of a field on a uniform output
// grid of scaled/shifted arguments: out(y) = in(scale * (y - center)) for y
// on out_grid. Exact for band-limited data (Bluestein chirp-z per axis).
// With zero_outside (the free-space reading for decaying fields) arguments
// beyond in's box give 0; otherwise they fold periodically.
Field resample_affine(const Field& in, const Grid3& out_grid, double scale, const Vec3& center,
                      bool zero_outside = true);

// in(x / lambda) on the same grid (dilation u -> u(x/lambda)).
Field resample_dilate(const Field& in, double lambda);

// Exact translation by whole lattice steps.
Field circular_shift(const Field& in, const std::array<int, 3>& steps);

// Periodic Catmull-Rom interpolation at an arbitrary point; local and free
// of ringing, used for sampled potentials.
double tricubic(const Field& f, const Vec3& x);

}  // namespace hartree
