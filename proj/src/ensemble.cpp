#include "snls/ensemble.hpp"

#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "snls/util.hpp"

namespace snls {

std::vector<double> McEnsemble::column(std::size_t c) const {
    std::vector<double> out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) out[i] = rows[i].at(c);
    return out;
}

McEnsemble run_ensemble(const EnsembleConfig& cfg, const PathEvaluator& evaluator,
                        std::vector<std::string> columns) {
    if (cfg.n_paths == 0) throw std::invalid_argument("ensemble: n_paths must be positive");

    McEnsemble out;
    out.n = cfg.n_paths;
    out.master_seed = cfg.master_seed;
    out.columns = std::move(columns);
    out.rows.resize(cfg.n_paths);

    unsigned workers = cfg.workers > 0 ? static_cast<unsigned>(cfg.workers)
                                       : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(cfg.n_paths));

    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::size_t err_index = std::numeric_limits<std::size_t>::max();
    std::string err_what;

    auto work = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= cfg.n_paths) break;
            try {
                BrownianPath path = sample_brownian(cfg.master_seed, i, cfg.dt, cfg.steps);
                out.rows[i] = evaluator(i, path);
            } catch (const std::exception& e) {
                std::scoped_lock lock(err_mu);
                if (i < err_index) {
                    err_index = i;
                    err_what = e.what();
                }
            }
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    if (err_index != std::numeric_limits<std::size_t>::max())
        throw EnsembleError(err_index, err_what);
    return out;
}

double ensemble_mean(const std::vector<double>& samples) {
    if (samples.empty()) throw std::invalid_argument("ensemble_mean: empty sample");
    return pairwise_sum(samples) / static_cast<double>(samples.size());
}

}  // namespace snls
