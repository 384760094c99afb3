#pragma once

#include <optional>
#include <span>
#include <vector>

namespace qgrid {

/// Row-major sample matrix; every row is one feature vector.
using Matrix = std::vector<std::vector<double>>;

struct LogRegModel {
    std::vector<double> weights;
    double bias = 0.0;
    double learning_rate = 0.1;
    int iterations = 1000;
    double l2 = 0.0;
};

/// Full-batch gradient descent on the mean cross-entropy with optional L2 on
/// the weights (never the bias), from zero-initialized parameters.
LogRegModel train_logreg(const Matrix& x, const std::vector<int>& y, double learning_rate = 0.1,
                         int iterations = 1000, double l2 = 0.0);

std::vector<int> predict_logreg(const LogRegModel& model, const Matrix& x);

double logreg_probability(const LogRegModel& model, const std::vector<double>& x);

/// Mean cross-entropy plus (l2/2)*|w|^2; exposed so the gradient can be
/// checked against finite differences.
double logreg_loss(const std::vector<double>& weights, double bias, const Matrix& x,
                   const std::vector<int>& y, double l2);

void logreg_gradient(const std::vector<double>& weights, double bias, const Matrix& x,
                     const std::vector<int>& y, double l2, std::vector<double>& grad_w,
                     double& grad_b);

/// Raw SMO output over the full training set: one alpha per row (zeros
/// included) and the bias, with labels in {-1, +1}.
struct SmoSolution {
    std::vector<double> alphas;
    double bias = 0.0;
    int passes_used = 0;
};

double rbf_kernel(std::span<const double> a, std::span<const double> b, double gamma);

/// Sequential minimal optimization for the RBF-kernel soft-margin dual.
/// Sweeps all rows each pass; a pass that changes nothing certifies the KKT
/// conditions within tol (every violator is retried against all partners
/// before giving up). Deterministic: the partner heuristic uses a fixed
/// internal seed.
SmoSolution smo_solve(const Matrix& x, const std::vector<int>& y_pm, double c, double gamma,
                      double tol, int max_passes);

struct SvmModel {
    Matrix support_vectors;
    std::vector<double> dual_coef;  // alpha_i * y_i per support vector
    double bias = 0.0;
    double gamma = 1.0;
    double c = 1.0;
};

/// Labels in {0, 1}; gamma defaults to the "scale" convention
/// 1 / (n_features * Var(all entries of x)).
SvmModel train_svm_smo(const Matrix& x, const std::vector<int>& y, double c = 1.0,
                       std::optional<double> gamma = std::nullopt, double tol = 1e-3,
                       int max_passes = 100);

double svm_decision(const SvmModel& model, const std::vector<double>& x);

/// Sign of the decision value mapped {-1 -> 0, +1 -> 1}; an exact 0 maps to 1.
std::vector<int> predict_svm(const SvmModel& model, const Matrix& x);

/// Symmetric eigendecomposition via cyclic Jacobi rotations, eigenpairs
/// sorted by descending eigenvalue. vectors[i] is the eigenvector of
/// values[i].
struct EigenSym {
    std::vector<double> values;
    Matrix vectors;
};

EigenSym jacobi_eigen_symmetric(Matrix a);

struct PcaModel {
    std::vector<double> mean;
    Matrix components;  // orthonormal rows
    std::vector<double> explained_variance;
};

/// Mean-center, take the top-k eigenvectors of the population covariance.
/// Each component's sign is fixed so its largest-magnitude entry is positive.
PcaModel pca_fit(const Matrix& x, int k);

Matrix pca_transform(const PcaModel& model, const Matrix& x);

/// Confusion counts with attack (label 1) as the positive class.
struct MetricsReport {
    long tn = 0, fp = 0, fn = 0, tp = 0;
    double accuracy = 0.0;
    double f1 = 0.0;
};

MetricsReport compute_metrics(const std::vector<int>& y_true, const std::vector<int>& y_pred);

/// Mean absolute value over windows starting at 0, step, 2*step, ... while a
/// full window fits.
std::vector<double> windowed_mean_abs(std::span<const double> series, int win, int step);

}  // namespace qgrid
