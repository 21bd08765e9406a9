#pragma once

#include <array>
#include <cstddef>

namespace hartree {

// Periodic cubic grid: n points per axis on [-L/2, L/2), spacing h = L/n.
// Frequency lattice in cycles per unit length: xi = f/L with integer
// f in {-n/2, ..., n/2-1} (FFT wrap order, zero frequency present once).
struct Grid3 {
    int n = 0;
    double box_length = 0.0;
    double spacing = 0.0;
    double cell_volume = 0.0;

    std::size_t size() const { return static_cast<std::size_t>(n) * n * n; }

    // Coordinate of lattice index i along one axis.
    double coord(int i) const { return (i - n / 2) * spacing; }

    // Signed integer frequency for FFT index i.
    int freq_int(int i) const { return i < n / 2 ? i : i - n; }

    // Frequency in cycles per unit length.
    double freq(int i) const { return freq_int(i) / box_length; }

    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * n + j) * n + k;
    }

    bool operator==(const Grid3&) const = default;
};

// n must be >= 16 and FFT-friendly (2^a * 3^b); box_length > 0.
Grid3 make_grid(int n, double box_length);

using Vec3 = std::array<double, 3>;

}  // namespace hartree
