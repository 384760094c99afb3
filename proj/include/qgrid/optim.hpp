#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgrid {

struct TracePoint {
    int iteration;
    double loss;
};

struct OptResult {
    std::vector<double> best_params;
    double best_loss = 0.0;
    std::vector<TracePoint> trace;
};

using LossFn = std::function<double(const std::vector<double>&)>;

/// Thrown when an optimizer evaluates a non-finite loss.
struct DivergedError : std::runtime_error {
    DivergedError(int iter, const std::string& what)
        : std::runtime_error(what), iteration(iter) {}
    int iteration;
};

/// Gain schedules a_k = a / (A + k + 1)^alpha and c_k = c / (k + 1)^gamma,
/// with A the stability offset. Requires 0 < gamma < alpha < 1.
struct SpsaConfig {
    int max_iter = 200;
    double a = 0.1;
    double c = 0.1;
    double stability_offset = 20.0;  // A
    double alpha = 0.602;
    double gamma = 0.101;
    std::uint64_t seed = 0;
};

/// Standard schedule constants with A = max_iter / 10.
SpsaConfig spsa_defaults(int max_iter, std::uint64_t seed);

/// Simultaneous perturbation: one Rademacher draw serves both loss probes,
/// so every gradient component comes from two evaluations per step. The
/// trace records the loss at the nominal iterate (a third evaluation per
/// step), not at the probes, and the best nominal iterate is returned.
OptResult spsa_minimize(const LossFn& loss_fn, std::vector<double> theta0,
                        const SpsaConfig& config);

/// Nelder-Mead simplex; the seed only jitters the initial simplex edge
/// lengths, the loop itself is deterministic. max_iter counts
/// reflect/expand/contract/shrink cycles; max_iter = 0 returns theta0.
OptResult simplex_minimize(const LossFn& loss_fn, std::vector<double> theta0,
                           int max_iter, std::uint64_t seed);

}  // namespace qgrid
