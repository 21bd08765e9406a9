#include "hartree/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hartree::spectral {

namespace {

// Plans are created once per size with FFTW_ESTIMATE (deterministic) and
// executed through the new-array interface; FFTW_UNALIGNED keeps that valid
// for arbitrary std::vector storage.
struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

std::mutex plan_mutex;

PlanPair& plans3d(int n) {
    static std::map<int, PlanPair> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::size_t total = static_cast<std::size_t>(n) * n * n;
    fftw_complex* buf = fftw_alloc_complex(total);
    PlanPair p;
    p.fwd = fftw_plan_dft_3d(n, n, n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.bwd = fftw_plan_dft_3d(n, n, n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buf);
    return cache.emplace(n, p).first->second;
}

fftw_plan plan1d(int n, bool inverse) {
    static std::map<std::pair<int, bool>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_pair(n, inverse);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    fftw_complex* buf = fftw_alloc_complex(n);
    fftw_plan p = fftw_plan_dft_1d(n, buf, buf, inverse ? FFTW_BACKWARD : FFTW_FORWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buf);
    return cache.emplace(key, p).first->second;
}

}  // namespace

cvector forward(const Field& u) {
    cvector out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u.values[i];
    fftw_execute_dft(plans3d(u.grid.n).fwd, reinterpret_cast<fftw_complex*>(out.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

Field inverse_real(const Grid3& grid, const cvector& spec, double tol) {
    if (spec.size() != grid.size()) throw std::invalid_argument("inverse_real: size mismatch");
    cvector work = spec;
    fftw_execute_dft(plans3d(grid.n).bwd, reinterpret_cast<fftw_complex*>(work.data()),
                     reinterpret_cast<fftw_complex*>(work.data()));
    Field out(grid);
    double scale = 1.0 / static_cast<double>(grid.size());
    double re2 = 0.0, im2 = 0.0;
    for (std::size_t i = 0; i < work.size(); ++i) {
        double re = work[i].real() * scale;
        double im = work[i].imag() * scale;
        out.values[i] = re;
        re2 += re * re;
        im2 += im * im;
    }
    if (im2 > tol * tol * re2 && im2 > 1e-300)
        throw std::runtime_error("inverse_real: imaginary residue exceeds tolerance");
    return out;
}

void fft_pow2(cvector& data, bool inverse) {
    fftw_execute_dft(plan1d(static_cast<int>(data.size()), inverse),
                     reinterpret_cast<fftw_complex*>(data.data()),
                     reinterpret_cast<fftw_complex*>(data.data()));
}

}  // namespace hartree::spectral
