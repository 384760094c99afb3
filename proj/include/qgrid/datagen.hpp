#pragma once

#include "qgrid/encoding.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgrid {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StealthViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parametric surrogate for the DG1 measurement process: reactive power
/// follows a bounded random walk on [q_min, q_max], frequency deviation sits
/// on the cubic droop manifold -(k1*Q + k3*Q^3) and voltage on v0 - kv*Q,
/// each with additive Gaussian noise truncated at 3 sigma. Attacks add a
/// coordinated offset that preserves the droop manifold shape.
struct GeneratorConfig {
    double f0 = 50.0;             // Hz, nominal frequency
    double v0 = 1.0;              // p.u., nominal voltage
    double sample_period = 1e-3;  // s
    double k1 = 0.05;             // Hz per p.u., linear droop gain
    double k3 = 0.10;             // Hz per p.u.^3, cubic droop coefficient
    double kv = 0.05;             // p.u. per p.u., voltage sensitivity
    double sigma_q = 0.01;        // p.u.
    double sigma_f = 0.015;       // Hz
    double sigma_v = 0.004;       // p.u.
    double delta_q = 0.025;       // p.u., attack offset on Q
    double delta_f = 0.025;       // Hz, attack offset on f_dev
    double delta_v = 0.005;       // p.u., attack offset on V
    double bound_q = 0.05;        // p.u., stealth bound on |a_Q|
    double bound_f = 0.05;        // Hz, stealth bound on |a_f|
    double bound_v = 0.01;        // p.u., stealth bound on |a_V|
    double q_init = 0.0;          // p.u., walk start
    double q_min = -0.8;          // p.u., walk lower bound
    double q_max = 0.8;           // p.u., walk upper bound
    double walk_step = 0.02;      // p.u., std dev of walk increments
    int series_length = 10000;    // raw series points per class
    int n_samples = 600;
    double attack_fraction = 0.5;
    std::uint64_t seed = 42;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const GeneratorConfig& config);

/// Plain-text key=value file, one field per line, '#' comments allowed.
/// Unknown keys raise ConfigError naming the key.
GeneratorConfig load_config(const std::string& path);
void save_config(const GeneratorConfig& config, const std::string& path);

/// Value of the droop manifold at reactive power q: -(k1*q + k3*q^3).
double droop_f_dev(const GeneratorConfig& config, double q);

/// n normal rows (label 0), subsampled uniformly from a series_length-long
/// walk when the series is longer than n. Deterministic from config.seed.
std::vector<RawSample> generate_normal(const GeneratorConfig& config, int n);

/// Coordinated stealth perturbation of one normal row: a_Q = delta_q,
/// a_V = delta_v, and a_f shifts along the droop manifold by delta_q plus
/// delta_f, so the corrupted point stays on the same nonlinear pattern.
/// Throws StealthViolationError naming the component if a perturbation
/// exceeds its configured bound.
RawSample inject_stealth(const GeneratorConfig& config, const RawSample& normal_row);

struct LabeledDataset {
    std::vector<RawSample> rows;
    GeneratorConfig provenance;
};

/// n_samples rows with round(n * attack_fraction) attacks; attack rows are
/// injected into an independently generated normal stream.
LabeledDataset build_dataset(const GeneratorConfig& config);

struct TimeSeries {
    std::vector<double> t;
    std::vector<RawSample> rows;
};

/// Full-resolution export: series_length normal points followed by
/// series_length attack points on a continuous time axis.
TimeSeries generate_series(const GeneratorConfig& config);

enum class Split : std::uint8_t { Train, Test };

/// Per-class seeded shuffle; per-class train counts use largest-remainder
/// rounding so the totals match floor(train_fraction * n). Throws
/// std::invalid_argument when a class would end up without train or test
/// rows.
std::vector<Split> stratified_split(const LabeledDataset& dataset, double train_fraction,
                                    std::uint64_t seed);

// CSV formats. Doubles are written in shortest round-trip form, so repeated
// runs with one seed are byte-identical.
void write_dataset_csv(const LabeledDataset& dataset, const std::string& path);
LabeledDataset read_dataset_csv(const std::string& path);
void write_series_csv(const TimeSeries& series, const std::string& path);
TimeSeries read_series_csv(const std::string& path);

}  // namespace qgrid
