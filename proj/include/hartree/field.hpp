#pragma once

#include <functional>
#include <vector>

#include "hartree/grid.hpp"

namespace hartree {

// Real scalar function sampled on a Grid3, value count = n^3.
struct Field {
    Grid3 grid;
    std::vector<double> values;

    Field() = default;
    explicit Field(const Grid3& g) : grid(g), values(g.size(), 0.0) {}
    Field(const Grid3& g, std::vector<double> v);

    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }
    std::size_t size() const { return values.size(); }
};

using ScalarFn = std::function<double(double, double, double)>;

// Pointwise evaluation at lattice points; throws naming the offending
// point if f evaluates non-finite.
Field sample(const ScalarFn& f, const Grid3& grid);

// sum a_i b_i * cell_volume (trapezoidal quadrature of the L2 pairing).
double inner_product(const Field& a, const Field& b);

// integral of u^2 dx.
double mass(const Field& u);

// Rescale so that the mass equals target; throws on the zero field.
Field normalize_mass(const Field& u, double target);

void check_finite(const Field& u, const char* what);

// In-place helpers used throughout the solvers.
void axpy(Field& y, double alpha, const Field& x);  // y += alpha*x
void scale(Field& u, double alpha);
Field multiply(const Field& a, const Field& b);  // pointwise product

}  // namespace hartree
