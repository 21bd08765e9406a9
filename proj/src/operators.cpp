#include "hartree/operators.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hartree {

namespace {

constexpr double two_pi = 2.0 * M_PI;

// |2 pi xi|^2 for FFT index (i, j, k).
inline double kmag2(const Grid3& g, int i, int j, int k) {
    double fx = two_pi * g.freq(i);
    double fy = two_pi * g.freq(j);
    double fz = two_pi * g.freq(k);
    return fx * fx + fy * fy + fz * fz;
}

std::mutex kernel_mutex;

}  // namespace

Field apply_kinetic(const Field& u, const KineticSpec& spec) {
    if (!(spec.m >= 0.0) || !std::isfinite(spec.m))
        throw std::invalid_argument("apply_kinetic: m must be finite and >= 0");
    check_finite(u, "apply_kinetic");
    auto spec_u = spectral::forward(u);
    const Grid3& g = u.grid;
    double m2 = spec.m * spec.m;
    std::size_t idx = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int k = 0; k < g.n; ++k, ++idx)
                spec_u[idx] *= std::sqrt(kmag2(g, i, j, k) + m2);
    return spectral::inverse_real(g, spec_u);
}

double kinetic_energy(const Field& u, const KineticSpec& spec) {
    if (!(spec.m >= 0.0) || !std::isfinite(spec.m))
        throw std::invalid_argument("kinetic_energy: m must be finite and >= 0");
    check_finite(u, "kinetic_energy");
    auto spec_u = spectral::forward(u);
    const Grid3& g = u.grid;
    double m2 = spec.m * spec.m;
    double sum = 0.0;
    std::size_t idx = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int k = 0; k < g.n; ++k, ++idx)
                sum += std::sqrt(kmag2(g, i, j, k) + m2) * std::norm(spec_u[idx]);
    // Plancherel: |Fu(xi)|^2 d xi  ->  |h^3 U_j|^2 / L^3  =  |U_j|^2 h^3 / n^3.
    return sum * g.cell_volume / static_cast<double>(g.size());
}

double quarter_laplacian_energy(const Field& u) { return kinetic_energy(u, KineticSpec{0.0}); }

CoulombKernel coulomb_kernel(const Grid3& grid) {
    static std::map<std::pair<int, double>, CoulombKernel> cache;
    std::lock_guard<std::mutex> lock(kernel_mutex);
    auto key = std::make_pair(grid.n, grid.box_length);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    double rc = 0.5 * grid.box_length;
    auto kern = std::make_shared<std::vector<double>>(grid.size());
    std::size_t idx = 0;
    for (int i = 0; i < grid.n; ++i)
        for (int j = 0; j < grid.n; ++j)
            for (int k = 0; k < grid.n; ++k, ++idx) {
                double k2 = kmag2(grid, i, j, k);
                if (k2 == 0.0) {
                    (*kern)[idx] = two_pi * rc * rc;
                } else {
                    double kk = std::sqrt(k2);
                    (*kern)[idx] = 4.0 * M_PI * (1.0 - std::cos(kk * rc)) / k2;
                }
            }
    cache.emplace(key, kern);
    return kern;
}

Field coulomb_potential(const Field& u) { return coulomb_potential(u, coulomb_kernel(u.grid)); }

Field coulomb_potential(const Field& u, const CoulombKernel& kernel) {
    check_finite(u, "coulomb_potential");
    if (kernel->size() != u.size())
        throw std::invalid_argument("coulomb_potential: kernel does not match grid");
    Field rho = multiply(u, u);
    auto spec_rho = spectral::forward(rho);
    for (std::size_t i = 0; i < spec_rho.size(); ++i) spec_rho[i] *= (*kernel)[i];
    // The h^3 of the forward quadrature and the 1/L^3 of the inverse combine
    // to the plain 1/n^3 already applied by inverse_real.
    return spectral::inverse_real(u.grid, spec_rho);
}

double hartree_energy(const Field& u, const Field& v) {
    if (!(u.grid == v.grid)) throw std::invalid_argument("hartree_energy: grid mismatch");
    Field phi = coulomb_potential(u);
    Field v2 = multiply(v, v);
    return inner_product(phi, v2);
}

}  // namespace hartree
