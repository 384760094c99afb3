#pragma once

#include "qgrid/statevector.hpp"

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgrid {

/// One DG1 measurement row: reactive power (p.u.), frequency deviation from
/// nominal (Hz), terminal voltage magnitude (p.u.), and a binary label
/// (0 = normal, 1 = attack).
struct RawSample {
    double q_dg1 = 0.0;
    double f_dev = 0.0;
    double v1 = 0.0;
    int label = 0;
};

inline constexpr int kNumFeatures = 3;
inline constexpr std::array<const char*, kNumFeatures> kFeatureNames{"q_dg1", "f_dev", "v1"};

std::array<double, kNumFeatures> features_of(const RawSample& s);

/// Measured frequency minus nominal frequency.
double compute_f_dev(double f_meas, double f0);

/// output[k] = series[k+1] - series[k]; requires at least two points.
/// Exploratory only: these differences feed the analysis CLI, never the
/// classifiers.
std::vector<double> first_diff(std::span<const double> series);

struct DegenerateFeatureError : std::invalid_argument {
    explicit DegenerateFeatureError(const std::string& what) : std::invalid_argument(what) {}
};

/// Two-stage normalization parameters: per-feature z-score (population
/// standard deviation), then the min/max of the z-scored training features.
/// Fitted from training rows only and frozen afterwards.
struct NormalizationStats {
    std::array<double, kNumFeatures> mean{};
    std::array<double, kNumFeatures> stddev{};
    std::array<double, kNumFeatures> z_min{};
    std::array<double, kNumFeatures> z_max{};
    bool fitted = false;
};

/// Throws DegenerateFeatureError when a feature has zero variance.
NormalizationStats fit_normalizer(std::span<const RawSample> train_rows);

using AngleVector = std::array<double, 3>;

/// z-score the sample, clamp each z to the training range, then map the
/// training range linearly onto [-pi/2, pi/2]. Clamping keeps test samples
/// outside the training range at valid rotation angles.
AngleVector to_angles(const RawSample& sample, const NormalizationStats& stats);

/// Ry(angle_i) on qubit i, then the entangling ladder CNOT(0->1), CNOT(1->2).
Statevector encode_state(const AngleVector& angles);

Statevector encode_sample(const RawSample& sample, const NormalizationStats& stats);

}  // namespace qgrid
