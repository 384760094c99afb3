#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qgrid {

inline constexpr int kMaxQubits = 12;

/// Dense statevector for a small qubit register.
///
/// Amplitude index bit i holds the state of qubit i, so qubit 0 toggles
/// between adjacent indices. Only Ry and CNOT are supported; with a real
/// initial state every amplitude stays real, but amplitudes are stored as
/// complex numbers so the register behaves like a general statevector.
class Statevector {
  public:
    /// Computational ground state |0...0>.
    explicit Statevector(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<std::complex<double>>& amplitudes() const { return amps_; }

    /// Rotation about Y: [[cos(a/2), -sin(a/2)], [sin(a/2), cos(a/2)]]
    /// applied to the (bit=0, bit=1) amplitude pairs of `qubit`.
    Statevector& apply_ry(int qubit, double angle);

    /// Flips the target bit of every basis state whose control bit is set.
    Statevector& apply_cnot(int control, int target);

    double norm_sq() const;

  private:
    int num_qubits_;
    std::vector<std::complex<double>> amps_;
};

/// Tensor product of I and Z factors: bit i of z_mask set means Z acts on
/// qubit i. The empty mask is the identity observable.
struct ZString {
    ZString(int num_qubits, std::uint32_t z_mask);

    int num_qubits;
    std::uint32_t z_mask;
};

ZString single_z(int num_qubits, int qubit);

/// <state|O|state> for a Z-string observable. Diagonal, so this is a signed
/// probability sum: sum_k |amp_k|^2 * (-1)^popcount(k & z_mask).
double expectation_zstring(const Statevector& state, const ZString& obs);

}  // namespace qgrid
