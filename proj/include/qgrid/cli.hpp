#pragma once

#include "qgrid/qfeatures.hpp"
#include "qgrid/vqc.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgrid {

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitDiverged = 3;

/// Protocol constants: one stratified 70/30 split under seed 42 is shared by
/// every model in a run.
inline constexpr double kTrainFraction = 0.7;
inline constexpr std::uint64_t kSplitSeed = 42;

/// Known model names: logreg, svm, vqc-shallow, vqc-medium, vqc-deep,
/// hybrid-logreg, hybrid-svm, plus bare "vqc" which takes its depth from
/// `depth`.
struct RunAllOptions {
    std::string dataset_path;
    std::string out_dir;
    std::vector<std::string> models;  // must be nonempty
    FeatureMode feature_mode = FeatureMode::CorrelationForm;
    std::optional<OptimizerChoice> optimizer;  // empty: simplex at depth 1, SPSA deeper
    int depth = 2;
    std::uint64_t seed = 42;
};

std::vector<std::string> default_model_plan();

/// Each command returns a process exit code and reports failures on stderr.
int cmd_gen_data(const std::string& config_path, const std::string& out_dir);
int cmd_run_all(const RunAllOptions& options);
int cmd_window_analysis(const std::string& series_path, int win, int step,
                        const std::string& out_path);

/// Parse argv and dispatch to a subcommand.
int run_cli(int argc, const char* const* argv);

}  // namespace qgrid
