#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "snls/brownian.hpp"

namespace snls {

struct EnsembleConfig {
    std::size_t n_paths = 1;
    std::uint64_t master_seed = 0;
    int workers = 0;  // 0 -> hardware concurrency
    double dt = 1e-2;
    std::size_t steps = 1;
};

/// Per-path outputs of a Monte Carlo run, gathered in path-index order.
/// Aggregates computed from `rows` are independent of the execution
/// schedule because reduction happens after all results arrive.
struct McEnsemble {
    std::size_t n = 0;
    std::uint64_t master_seed = 0;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::vector<double> column(std::size_t c) const;
};

struct EnsembleError : std::runtime_error {
    std::size_t path_index;
    EnsembleError(std::size_t idx, const std::string& what)
        : std::runtime_error("ensemble: evaluator failed on path " +
                             std::to_string(idx) + ": " + what),
          path_index(idx) {}
};

using PathEvaluator =
    std::function<std::vector<double>(std::size_t path_index, const BrownianPath& path)>;

/// Run the evaluator over n_paths independent Brownian paths. Paths are
/// independent work units executed on `workers` threads in arbitrary order;
/// results land in a preallocated slot per index, so the ensemble is
/// bit-identical for any worker count.
McEnsemble run_ensemble(const EnsembleConfig& cfg, const PathEvaluator& evaluator,
                        std::vector<std::string> columns = {});

/// Deterministic mean over path index order (pairwise reduction).
double ensemble_mean(const std::vector<double>& samples);

}  // namespace snls
