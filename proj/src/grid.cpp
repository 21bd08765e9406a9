#include "hartree/grid.hpp"

#include <stdexcept>
#include <string>

namespace hartree {

namespace {

bool fft_friendly(int n) {
    while (n % 2 == 0) n /= 2;
    while (n % 3 == 0) n /= 3;
    return n == 1;
}

}  // namespace

Grid3 make_grid(int n, double box_length) {
    if (n < 16 || !fft_friendly(n))
        throw std::invalid_argument("make_grid: n must be >= 16 with only factors 2 and 3, got " +
                                    std::to_string(n));
    if (!(box_length > 0.0))
        throw std::invalid_argument("make_grid: box_length must be positive");
    Grid3 g;
    g.n = n;
    g.box_length = box_length;
    g.spacing = box_length / n;
    g.cell_volume = g.spacing * g.spacing * g.spacing;
    return g;
}

}  // namespace hartree
