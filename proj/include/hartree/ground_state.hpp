#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hartree/field.hpp"
#include "hartree/operators.hpp"

namespace hartree {

// Scale-invariant quotient K(u) * M(u) / D(u) with K the half-Laplacian
// energy, M the mass and D the Hartree self-energy. Its infimum over
// localized fields is a_star / 2, attained exactly at the scalar ground
// state Q of  sqrt(-Lap) u + u = (1/|x| * u^2) u.
double weinstein_quotient(const Field& u);

struct GroundState {
    Field q;                        // solution-normalized profile
    double a_star = 0.0;            // ||Q||_2^2
    double weinstein_min = 0.0;     // converged quotient value
    double pohozaev_residual = 0.0; // |K(Q) - M(Q)| / M(Q)
    double el_residual = 0.0;       // ||sqrt(-Lap)Q + Q - phi_Q Q|| / ||Q||
    double decay_constant = 0.0;
    double coulomb_decay_constant = 0.0;
    bool converged = false;
    int iterations = 0;
    std::vector<std::pair<double, double>> trace;  // (quotient, step)
};

struct GroundStateOptions {
    double tol = 1e-10;
    int max_iter = 20000;
    std::optional<Field> seed;  // default: isotropic Gaussian of width L/8
};

GroundState solve_scalar_ground_state(const Grid3& grid, double tol = 1e-10, int max_iter = 20000);
GroundState solve_scalar_ground_state(const Grid3& grid, const GroundStateOptions& opts);

// sup over |x| in [L/8, 3L/8] of Q(x)(1+|x|)^4, and the Coulomb potential's
// large-radius constant phi_Q(x)(1+|x|) measured on the outermost shell of
// that window (Newton: tends to ||Q||_2^2).
std::pair<double, double> check_decay(const GroundState& gs);

// Cache container "HARTREE-GS-1" keyed by grid parameters.
void write_ground_state(const GroundState& gs, const std::string& path);
GroundState read_ground_state(const std::string& path);
std::string ground_state_cache_name(const Grid3& grid);

}  // namespace hartree
