#include "hartree/field.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hartree {

Field::Field(const Grid3& g, std::vector<double> v) : grid(g), values(std::move(v)) {
    if (values.size() != g.size())
        throw std::invalid_argument("Field: value count does not match grid");
}

Field sample(const ScalarFn& f, const Grid3& grid) {
    Field out(grid);
    std::size_t idx = 0;
    for (int i = 0; i < grid.n; ++i) {
        double x = grid.coord(i);
        for (int j = 0; j < grid.n; ++j) {
            double y = grid.coord(j);
            for (int k = 0; k < grid.n; ++k, ++idx) {
                double z = grid.coord(k);
                double v = f(x, y, z);
                if (!std::isfinite(v)) {
                    std::ostringstream msg;
                    msg << "sample: non-finite value at point (" << x << ", " << y << ", " << z
                        << ")";
                    throw std::invalid_argument(msg.str());
                }
                out.values[idx] = v;
            }
        }
    }
    return out;
}

double inner_product(const Field& a, const Field& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("inner_product: grid mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) s += a.values[i] * b.values[i];
    return s * a.grid.cell_volume;
}

double mass(const Field& u) { return inner_product(u, u); }

Field normalize_mass(const Field& u, double target) {
    if (!(target > 0.0)) throw std::invalid_argument("normalize_mass: target must be positive");
    double m = mass(u);
    if (m <= 0.0) throw std::invalid_argument("normalize_mass: zero field");
    Field out = u;
    double s = std::sqrt(target / m);
    for (double& v : out.values) v *= s;
    return out;
}

void check_finite(const Field& u, const char* what) {
    for (double v : u.values)
        if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + ": non-finite field");
}

void axpy(Field& y, double alpha, const Field& x) {
    for (std::size_t i = 0; i < y.values.size(); ++i) y.values[i] += alpha * x.values[i];
}

void scale(Field& u, double alpha) {
    for (double& v : u.values) v *= alpha;
}

Field multiply(const Field& a, const Field& b) {
    Field out(a.grid);
    for (std::size_t i = 0; i < a.values.size(); ++i) out.values[i] = a.values[i] * b.values[i];
    return out;
}

}  // namespace hartree
