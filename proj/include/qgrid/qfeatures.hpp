#pragma once

#include "qgrid/encoding.hpp"
#include "qgrid/statevector.hpp"

#include <array>

namespace qgrid {

/// ProductForm multiplies the three single-qubit Z expectations to build the
/// interaction terms; CorrelationForm measures true multi-qubit Z-string
/// expectations on the same state. The two coincide on product states and
/// differ on entangled ones.
enum class FeatureMode { ProductForm, CorrelationForm };

struct HybridFeatureVector {
    double z1, z2, z3;     // single-qubit Z expectations
    double w12, w13, w23;  // pairwise terms
    double w123;           // three-way term

    std::array<double, 7> to_array() const { return {z1, z2, z3, w12, w13, w23, w123}; }
};

/// Single-qubit Z expectations (z1, z2, z3) of a 3-qubit state.
std::array<double, 3> base_expectations(const Statevector& state);

std::array<double, 3> extract_base(const RawSample& sample, const NormalizationStats& stats);

HybridFeatureVector hybrid_from_state(const Statevector& state, FeatureMode mode);

/// Seven-dimensional hybrid feature vector of the encoded sample.
HybridFeatureVector extract_hybrid(const RawSample& sample, const NormalizationStats& stats,
                                   FeatureMode mode);

}  // namespace qgrid
