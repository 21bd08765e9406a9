#include "hartree/ground_state.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hartree/io.hpp"
#include "hartree/resample.hpp"

namespace hartree {

namespace {

struct QuotientParts {
    double K = 0.0;  // half-Laplacian energy
    double M = 0.0;  // mass
    double D = 0.0;  // Hartree self-energy
    double W = 0.0;  // K*M/D
};

QuotientParts eval_quotient(const Field& u) {
    QuotientParts p;
    p.K = quarter_laplacian_energy(u);
    p.M = mass(u);
    p.D = hartree_energy(u, u);
    if (!(p.D > 0.0)) throw std::invalid_argument("weinstein_quotient: zero Hartree energy");
    p.W = p.K * p.M / p.D;
    return p;
}

// L2 gradient of the quotient: (2/D) [ M*Au + K*u - (2KM/D) phi_u u ],
// together with Au = sqrt(-Lap) u for the scale-constraint direction.
struct QuotientGradient {
    Field g;
    Field au;
};

QuotientGradient quotient_gradient(const Field& u, const QuotientParts& p) {
    QuotientGradient out{Field(u.grid), apply_kinetic(u, KineticSpec{0.0})};
    Field phi = coulomb_potential(u);
    double c_phi = 2.0 * p.K * p.M / p.D;
    for (std::size_t i = 0; i < u.size(); ++i)
        out.g.values[i] =
            (2.0 / p.D) *
            (p.M * out.au.values[i] + p.K * u.values[i] - c_phi * phi.values[i] * u.values[i]);
    return out;
}

// The quotient on the torus is degenerate in two ways that do not exist over
// R^3: pumping mass into a constant pedestal sends W to zero (constants are
// not square-integrable in free space), and bulk mass beyond |x| ~ L/4 gains
// spurious Coulomb energy from periodic images closer than the kernel cutoff
// (image distance L - 2a < Rc once the support radius a exceeds L/4).
// Restricting the descent to fields supported inside the L/4 ball removes
// both sectors; the limit point satisfies the Euler-Lagrange equation
// wherever the mask is 1, and Q's own tail at the mask onset is below the
// solver tolerances for the production boxes.
Field localization_mask(const Grid3& g) {
    double r0 = 0.20 * g.box_length;
    double r1 = 0.26 * g.box_length;
    return sample(
        [r0, r1](double x, double y, double z) {
            double r = std::sqrt(x * x + y * y + z * z);
            if (r <= r0) return 1.0;
            if (r >= r1) return 0.0;
            double t = (r - r0) / (r1 - r0);
            return 1.0 - t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
        },
        g);
}

double boundary_mass_fraction(const Field& u) {
    const Grid3& g = u.grid;
    double layer = 0.0, total = 0.0;
    std::size_t idx = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int k = 0; k < g.n; ++k, ++idx) {
                double v2 = u.values[idx] * u.values[idx];
                total += v2;
                bool edge = i == 0 || i == g.n - 1 || j == 0 || j == g.n - 1 || k == 0 || k == g.n - 1;
                if (edge) layer += v2;
            }
    return total > 0.0 ? layer / total : 0.0;
}

Field default_seed(const Grid3& grid) {
    double w = grid.box_length / 8.0;
    return sample(
        [w](double x, double y, double z) { return std::exp(-(x * x + y * y + z * z) / (w * w)); },
        grid);
}

// Spectral-renormalization fixed point for  sqrt(-Lap) u + u = phi_u u:
//   u <- S^{3/2} (sqrt(-Lap) + 1)^{-1} [phi_u u],   S = (K + M) / D.
// The stabilizing power 3/2 matches the cubic homogeneity of the Hartree
// term. Converges linearly from a localized seed and lands directly on the
// unit-coefficient normalization. Returns the applied-update count.
int spectral_renormalization(Field& u, double stop_residual, int max_iter, double& residual) {
    const Grid3& g = u.grid;
    int updates = 0;
    residual = std::numeric_limits<double>::infinity();
    for (int it = 0; it < max_iter; ++it) {
        Field au = apply_kinetic(u, KineticSpec{0.0});
        Field phi = coulomb_potential(u);
        Field rhs = multiply(phi, u);
        double km = inner_product(u, au) + mass(u);
        double d = inner_product(rhs, u);
        if (!(d > 0.0)) throw std::runtime_error("ground state: degenerate Hartree term");
        double res2 = 0.0, un2 = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            double r = au.values[i] + u.values[i] - rhs.values[i];
            res2 += r * r;
            un2 += u.values[i] * u.values[i];
        }
        residual = std::sqrt(res2 / un2);
        if (residual < stop_residual) break;
        double s = km / d;
        auto spec = spectral::forward(rhs);
        std::size_t idx = 0;
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                for (int k = 0; k < g.n; ++k, ++idx) {
                    double fx = 2.0 * M_PI * g.freq(i);
                    double fy = 2.0 * M_PI * g.freq(j);
                    double fz = 2.0 * M_PI * g.freq(k);
                    spec[idx] /= 1.0 + std::sqrt(fx * fx + fy * fy + fz * fz);
                }
        u = spectral::inverse_real(g, spec);
        scale(u, std::pow(s, 1.5));
        ++updates;
    }
    return updates;
}

// Descent until the relative quotient change stays below tol (streak of 3)
// or the iteration budget runs out.
struct DescentOutcome {
    int accepted = 0;
    bool settled = false;  // streak criterion reached within budget
};

// Retract onto the K = M slice by the spectral reweighting
// u_s = F^-1[ F u * exp(-s (|2 pi xi| - 1)) ]: f(s) = K(u_s) - M(u_s) is
// strictly decreasing, so the root is unique and Newton converges fast.
// Exact on the grid (no interpolation), unlike a chirp-z dilation. The
// direction d/ds at s = 0 is u - Au, i.e. minus the constraint normal.
QuotientParts retract_and_eval(Field& u) {
    const Grid3& g = u.grid;
    auto spec = spectral::forward(u);
    std::vector<double> kmag(spec.size());
    std::vector<double> pw(spec.size());
    std::size_t idx = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int k = 0; k < g.n; ++k, ++idx) {
                double fx = 2.0 * M_PI * g.freq(i);
                double fy = 2.0 * M_PI * g.freq(j);
                double fz = 2.0 * M_PI * g.freq(k);
                kmag[idx] = std::sqrt(fx * fx + fy * fy + fz * fz);
                pw[idx] = std::norm(spec[idx]);
            }
    double s = 0.0;
    for (int it = 0; it < 60; ++it) {
        double kk = 0.0, mm = 0.0, dk = 0.0, dm = 0.0;
        for (std::size_t q = 0; q < pw.size(); ++q) {
            double w = pw[q] * std::exp(-2.0 * s * (kmag[q] - 1.0));
            kk += kmag[q] * w;
            mm += w;
            dk += -2.0 * (kmag[q] - 1.0) * kmag[q] * w;
            dm += -2.0 * (kmag[q] - 1.0) * w;
        }
        double f = kk - mm;
        if (std::abs(f) <= 1e-13 * mm) break;
        double fp = dk - dm;
        s -= f / fp;
    }
    if (s != 0.0) {
        for (std::size_t q = 0; q < spec.size(); ++q)
            spec[q] *= std::exp(-s * (kmag[q] - 1.0));
        u = normalize_mass(spectral::inverse_real(g, spec), 1.0);
    } else {
        u = normalize_mass(u, 1.0);
    }
    return eval_quotient(u);
}

// (1 + 2 pi |xi|)^-1, the half-Laplacian preconditioner; the bare flow is
// stiff at high frequencies.
Field precondition(const Field& f) {
    const Grid3& g = f.grid;
    auto spec = spectral::forward(f);
    std::size_t idx = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int k = 0; k < g.n; ++k, ++idx) {
                double fx = 2.0 * M_PI * g.freq(i);
                double fy = 2.0 * M_PI * g.freq(j);
                double fz = 2.0 * M_PI * g.freq(k);
                spec[idx] /= 1.0 + std::sqrt(fx * fx + fy * fy + fz * fz);
            }
    return spectral::inverse_real(g, spec);
}

// Preconditioned descent on W restricted to the localized sector, with the
// step projected tangent to the scale-fixing constraint K(u) = M(u). The
// constraint pins the unit-coefficient normalization and removes the
// degenerate dilation mode along which the discrete quotient drifts toward
// grid-scale spikes.
DescentOutcome descend(Field& u, QuotientParts& p, const Field& mask, double tol, int budget,
                       double& tau, std::vector<std::pair<double, double>>& trace) {
    int accepted = 0;
    int streak = 0;
    while (accepted < budget && streak < 3) {
        QuotientGradient qg = quotient_gradient(u, p);
        Field cdir(u.grid);  // constraint normal: grad(K - M) = 2 (Au - u)
        for (std::size_t i = 0; i < u.size(); ++i)
            cdir.values[i] = qg.au.values[i] - u.values[i];
        double cc = inner_product(cdir, cdir);

        Field d = multiply(mask, precondition(multiply(mask, qg.g)));
        if (cc > 0.0) axpy(d, -inner_product(d, cdir) / cc, cdir);
        double gn2 = inner_product(d, qg.g);  // directional derivative along -d
        if (!(gn2 > 0.0)) {
            // fall back to the unpreconditioned masked gradient before
            // declaring stationarity
            d = multiply(mask, qg.g);
            if (cc > 0.0) axpy(d, -inner_product(d, cdir) / cc, cdir);
            gn2 = inner_product(d, qg.g);
            if (!(gn2 > 0.0)) {
                streak = 3;  // stationary within the constrained sector
                break;
            }
        }
        bool ok = false;
        double t = tau;
        Field trial(u.grid);
        QuotientParts pt;
        for (int back = 0; back < 45; ++back) {
            trial = u;
            axpy(trial, -t, d);
            if (mass(trial) > 0.0) {
                // acceptance is judged after the retraction, so the descent
                // contract covers the whole update
                pt = retract_and_eval(trial);
                if (pt.W <= p.W - 1e-4 * t * gn2) {
                    ok = true;
                    break;
                }
            }
            t *= 0.5;
        }
        if (!ok) {
            streak = 3;  // stationary to line-search precision
            break;
        }
        if (pt.W > p.W * (1.0 + 1e-14))
            throw std::logic_error("ground state descent: accepted step increased the quotient");
        double rel = (p.W - pt.W) / pt.W;
        u = std::move(trial);
        p = pt;
        ++accepted;
        trace.emplace_back(p.W, t);
        tau = std::min(t * 1.5, 4.0);

        // keep iterates nonnegative when the pointwise |u| move also descends
        double mn = *std::min_element(u.values.begin(), u.values.end());
        double mx = *std::max_element(u.values.begin(), u.values.end());
        if (mn < -1e-10 * std::max(mx, -mn)) {
            Field au = u;
            for (double& v : au.values) v = std::abs(v);
            QuotientParts pa = retract_and_eval(au);
            if (pa.W <= p.W) {
                u = std::move(au);
                p = pa;
            }
        }

        streak = rel < tol ? streak + 1 : 0;
    }
    return {accepted, streak >= 3};
}

}  // namespace

double weinstein_quotient(const Field& u) {
    check_finite(u, "weinstein_quotient");
    return eval_quotient(u).W;
}

GroundState solve_scalar_ground_state(const Grid3& grid, double tol, int max_iter) {
    GroundStateOptions opts;
    opts.tol = tol;
    opts.max_iter = max_iter;
    return solve_scalar_ground_state(grid, opts);
}

GroundState solve_scalar_ground_state(const Grid3& grid, const GroundStateOptions& opts) {
    Field u = opts.seed ? normalize_mass(*opts.seed, 1.0) : normalize_mass(default_seed(grid), 1.0);
    if (!(u.grid == grid))
        throw std::invalid_argument("solve_scalar_ground_state: seed grid mismatch");
    if (boundary_mass_fraction(u) > 1e-8)
        throw std::invalid_argument(
            "solve_scalar_ground_state: seed has > 1e-8 boundary mass; box too small");
    
    GroundState gs;
    Field mask = localization_mask(grid);
    u = normalize_mass(multiply(mask, u), 1.0);  // start inside the admissible sector
    QuotientParts p = eval_quotient(u);
    double tau = 0.25;
    int used = 0;
    double lambda = p.K / p.M;
    const double scale_tol = 3e-4;

    const bool debug = std::getenv("HARTREE_GS_DEBUG") != nullptr;
    // Fixed-point stage does the bulk of the work: it has no scale freedom
    // to drift along, unlike the raw quotient flow on the torus.
    double fp_residual = 0.0;
    used = spectral_renormalization(u, 1e-11, opts.max_iter, fp_residual);
    p = eval_quotient(u);
    if (debug)
        std::fprintf(stderr, "gs fixed point: iters=%d residual=%.3e W=%.12f lambda=%.6f\n", used,
                     fp_residual, p.W, p.K / p.M);

    // Quotient-descent finisher: from the fixed point the backtracking
    // search either confirms stationarity immediately or makes a few
    // strictly monotone improvements.
    DescentOutcome out =
        descend(u, p, mask, opts.tol, std::max(0, opts.max_iter - used), tau, gs.trace);
    used += out.accepted;
    bool settled = out.settled || fp_residual < 1e-6;
    lambda = p.K / p.M;
    if (debug)
        std::fprintf(stderr, "gs descent: iters=%d W=%.12f lambda=%.6f settled=%d\n", used, p.W,
                     lambda, settled);

    // amplitude so the Euler-Lagrange equation holds with unit coefficients
    double alpha = std::sqrt(2.0 * p.K / p.D);
    Field q = u;
    scale(q, alpha);

    Field aq = apply_kinetic(q, KineticSpec{0.0});
    Field phiq = coulomb_potential(q);
    Field res(grid);
    for (std::size_t i = 0; i < q.size(); ++i)
        res.values[i] = aq.values[i] + q.values[i] - phiq.values[i] * q.values[i];
    double qn = std::sqrt(mass(q));
    gs.el_residual = std::sqrt(mass(res)) / qn;

    gs.q = std::move(q);
    gs.a_star = alpha * alpha * p.M;
    gs.weinstein_min = p.W;
    gs.pohozaev_residual = std::abs(p.K - p.M) / p.M;
    gs.iterations = used;
    gs.converged = settled && gs.el_residual < 1e-3;
    auto decay = check_decay(gs);
    gs.decay_constant = decay.first;
    gs.coulomb_decay_constant = decay.second;
    return gs;
}

std::pair<double, double> check_decay(const GroundState& gs) {
    const Grid3& g = gs.q.grid;
    double r_lo = g.box_length / 8.0;
    double r_hi = 3.0 * g.box_length / 8.0;
    Field phi = coulomb_potential(gs.q);
    double dq = 0.0, dphi = 0.0;
    std::size_t idx = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int k = 0; k < g.n; ++k, ++idx) {
                double x = g.coord(i), y = g.coord(j), z = g.coord(k);
                double r = std::sqrt(x * x + y * y + z * z);
                if (r < r_lo || r > r_hi) continue;
                dq = std::max(dq, gs.q.values[idx] * std::pow(1.0 + r, 4));
                // Newton constant read off the outer quarter of the window
                if (r >= 0.8 * r_hi) dphi = std::max(dphi, phi.values[idx] * (1.0 + r));
            }
    return {dq, dphi};
}

std::string ground_state_cache_name(const Grid3& grid) {
    std::ostringstream name;
    name << "gs_n" << grid.n << "_L" << io::format_double(grid.box_length) << ".hgs";
    return name.str();
}

void write_ground_state(const GroundState& gs, const std::string& path) {
    io::Container c;
    c.header = "HARTREE-GS-1";
    c.meta = {{"n", static_cast<double>(gs.q.grid.n)},
              {"box_length", gs.q.grid.box_length},
              {"a_star", gs.a_star},
              {"weinstein_min", gs.weinstein_min},
              {"pohozaev_residual", gs.pohozaev_residual},
              {"el_residual", gs.el_residual},
              {"decay_constant", gs.decay_constant},
              {"coulomb_decay_constant", gs.coulomb_decay_constant},
              {"converged", gs.converged ? 1.0 : 0.0},
              {"iterations", static_cast<double>(gs.iterations)}};
    c.fields = {gs.q};
    io::write_container(path, c);
}

GroundState read_ground_state(const std::string& path) {
    io::Container c = io::read_container(path, "HARTREE-GS-1");
    if (c.fields.size() != 1) throw std::runtime_error("ground state cache: expected one field");
    GroundState gs;
    gs.q = std::move(c.fields[0]);
    if (static_cast<int>(c.meta.at("n")) != gs.q.grid.n ||
        c.meta.at("box_length") != gs.q.grid.box_length)
        throw std::runtime_error("ground state cache: metadata does not match stored grid");
    gs.a_star = c.meta.at("a_star");
    gs.weinstein_min = c.meta.at("weinstein_min");
    gs.pohozaev_residual = c.meta.at("pohozaev_residual");
    gs.el_residual = c.meta.at("el_residual");
    gs.decay_constant = c.meta.at("decay_constant");
    gs.coulomb_decay_constant = c.meta.at("coulomb_decay_constant");
    gs.converged = c.meta.at("converged") != 0.0;
    gs.iterations = static_cast<int>(c.meta.at("iterations"));
    return gs;
}

}  // namespace hartree
