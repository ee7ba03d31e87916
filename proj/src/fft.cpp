#include "snls/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace snls {
namespace detail {

namespace {

// Plans are cached per (dimension, points, direction). FFTW plan creation is
// not thread safe; execution via fftw_execute_dft on private buffers is.
// FFTW_ESTIMATE keeps planning deterministic, FFTW_UNALIGNED lets the plan
// run on arbitrary std::vector storage.
class PlanRegistry {
public:
    static PlanRegistry& instance() {
        static PlanRegistry reg;
        return reg;
    }

    fftw_plan get(const GridSpec& grid, Transform dir) {
        std::scoped_lock lock(mu_);
        Key key{grid.dim(), grid.n(), dir == Transform::forward};
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;

        std::vector<cplx> in(grid.size()), out(grid.size());
        int n[3] = {grid.n(), grid.n(), grid.n()};
        fftw_plan p = fftw_plan_dft(
            grid.dim(), n, reinterpret_cast<fftw_complex*>(in.data()),
            reinterpret_cast<fftw_complex*>(out.data()),
            dir == Transform::forward ? FFTW_FORWARD : FFTW_BACKWARD,
            FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw std::runtime_error("fft: plan creation failed");
        plans_.emplace(key, p);
        return p;
    }

private:
    using Key = std::tuple<int, int, bool>;
    PlanRegistry() = default;
    ~PlanRegistry() {
        for (auto& [k, p] : plans_) fftw_destroy_plan(p);
    }
    std::mutex mu_;
    std::map<Key, fftw_plan> plans_;
};

}  // namespace

void fft_raw(const GridSpec& grid, const cplx* in, cplx* out, Transform direction) {
    fftw_plan p = PlanRegistry::instance().get(grid, direction);
    // Out-of-place c2c plans preserve their input; the cast is safe.
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

}  // namespace detail

Field transform(const Field& f, Transform direction) {
    if (!f.all_finite()) throw std::domain_error("transform: non-finite input");
    const GridSpec& g = f.grid;
    Field out(g);

    if (direction == Transform::forward) {
        detail::fft_raw(g, f.a.data(), out.a.data(), Transform::forward);
        const double vol = g.cell_volume();
        // exp(-i k_m x_0) = (-1)^m per axis since x_0 = -L.
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] *= vol * g.mode_sign_at(i);
    } else {
        Field tmp(g);
        for (std::size_t i = 0; i < f.size(); ++i)
            tmp[i] = f[i] * g.mode_sign_at(i);
        detail::fft_raw(g, tmp.a.data(), out.a.data(), Transform::backward);
        const double w = g.spectral_weight();
        for (std::size_t i = 0; i < out.size(); ++i) out[i] *= w;
    }
    return out;
}

}  // namespace snls
