#pragma once

#include "qgrid/encoding.hpp"
#include "qgrid/optim.hpp"
#include "qgrid/statevector.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace qgrid {

/// Trainable rotation angles for the layered ansatz. theta is laid out
/// row-major: layer l (0-based) holds theta[3l .. 3l+2].
struct AnsatzParams {
    int depth = 1;
    std::vector<double> theta;
};

/// Trained classifier: ansatz angles plus the frozen normalizer, readout
/// observable (default Z on qubit 0) and decision threshold.
struct VqcModel {
    AnsatzParams params;
    NormalizationStats stats;
    ZString observable{3, 0b001};
    double threshold = 0.0;
};

/// One layer = Ry(theta_{l,i}) on each qubit i, then CNOT(0->1), CNOT(1->2).
/// Layers apply in order l = 0..depth-1.
Statevector& apply_ansatz(Statevector& state, const AnsatzParams& params);

/// Continuous decision score in [-1, 1]: the observable expectation after
/// encoding the sample and applying the ansatz.
double score(const VqcModel& model, const RawSample& sample);

/// 1 when score >= threshold, else 0. An exact tie classifies as attack.
int predict(const VqcModel& model, const RawSample& sample);

/// Mean squared error between labels in {0, 1} and the continuous score.
double mse_loss(const AnsatzParams& params, std::span<const RawSample> data,
                const NormalizationStats& stats);

enum class OptimizerChoice { Spsa, Simplex };

struct VqcTrainConfig {
    OptimizerChoice optimizer = OptimizerChoice::Spsa;
    SpsaConfig spsa{};           // seed field is overridden by the run seed
    int simplex_max_iter = 80;
};

struct VqcTrainResult {
    VqcModel model;
    double best_loss = 0.0;
    std::vector<TracePoint> trace;
};

/// Gradient-free training of the depth-L ansatz (L in {1,2,3}) on the MSE
/// objective. Initial angles are uniform in [-pi/2, pi/2] drawn from `seed`;
/// the optimizer's stochastic stream derives from the same seed, so equal
/// (data, config, seed) gives identical traces.
VqcTrainResult train_vqc(std::span<const RawSample> data, const NormalizationStats& stats,
                         int depth, const VqcTrainConfig& config, std::uint64_t seed);

}  // namespace qgrid
