#include "qgrid/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qgrid {

std::array<double, kNumFeatures> features_of(const RawSample& s) {
    return {s.q_dg1, s.f_dev, s.v1};
}

double compute_f_dev(double f_meas, double f0) {
    if (!std::isfinite(f_meas) || !std::isfinite(f0))
        throw std::invalid_argument("compute_f_dev: inputs must be finite");
    if (f0 <= 0.0) throw std::invalid_argument("compute_f_dev: f0 must be positive");
    return f_meas - f0;
}

std::vector<double> first_diff(std::span<const double> series) {
    if (series.size() < 2)
        throw std::invalid_argument("first_diff: need at least two points, got " +
                                    std::to_string(series.size()));
    std::vector<double> out(series.size() - 1);
    for (std::size_t k = 0; k + 1 < series.size(); ++k) out[k] = series[k + 1] - series[k];
    return out;
}

NormalizationStats fit_normalizer(std::span<const RawSample> train_rows) {
    const std::size_t n = train_rows.size();
    if (n < 2) throw std::invalid_argument("fit_normalizer: need at least two training rows");

    NormalizationStats stats;
    for (int i = 0; i < kNumFeatures; ++i) {
        double sum = 0.0;
        for (const auto& row : train_rows) sum += features_of(row)[i];
        const double mu = sum / static_cast<double>(n);

        double sq = 0.0;
        for (const auto& row : train_rows) {
            const double d = features_of(row)[i] - mu;
            sq += d * d;
        }
        // population convention (divide by N)
        const double sigma = std::sqrt(sq / static_cast<double>(n));
        if (sigma <= 1e-12 * std::max(1.0, std::abs(mu)))
            throw DegenerateFeatureError(std::string("fit_normalizer: feature ") +
                                         kFeatureNames[i] + " has zero variance");

        double zmin = std::numeric_limits<double>::infinity();
        double zmax = -std::numeric_limits<double>::infinity();
        for (const auto& row : train_rows) {
            const double z = (features_of(row)[i] - mu) / sigma;
            zmin = std::min(zmin, z);
            zmax = std::max(zmax, z);
        }

        stats.mean[i] = mu;
        stats.stddev[i] = sigma;
        stats.z_min[i] = zmin;
        stats.z_max[i] = zmax;
    }
    stats.fitted = true;
    return stats;
}

AngleVector to_angles(const RawSample& sample, const NormalizationStats& stats) {
    if (!stats.fitted) throw std::logic_error("to_angles: normalizer has not been fitted");

    const auto x = features_of(sample);
    AngleVector angles;
    for (int i = 0; i < kNumFeatures; ++i) {
        const double z = (x[i] - stats.mean[i]) / stats.stddev[i];
        const double zc = std::clamp(z, stats.z_min[i], stats.z_max[i]);
        angles[i] = (zc - stats.z_min[i]) / (stats.z_max[i] - stats.z_min[i]) * std::numbers::pi -
                    std::numbers::pi / 2.0;
    }
    return angles;
}

Statevector encode_state(const AngleVector& angles) {
    Statevector state(3);
    for (int i = 0; i < 3; ++i) state.apply_ry(i, angles[i]);
    state.apply_cnot(0, 1);
    state.apply_cnot(1, 2);
    return state;
}

Statevector encode_sample(const RawSample& sample, const NormalizationStats& stats) {
    return encode_state(to_angles(sample, stats));
}

}  // namespace qgrid
