#include "qgrid/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qgrid {

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw std::invalid_argument("Statevector: num_qubits must be in [1, " +
                                    std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(num_qubits));
    amps_.assign(std::size_t{1} << num_qubits, {0.0, 0.0});
    amps_[0] = {1.0, 0.0};
}

Statevector& Statevector::apply_ry(int qubit, double angle) {
    if (qubit < 0 || qubit >= num_qubits_)
        throw std::invalid_argument("apply_ry: qubit " + std::to_string(qubit) +
                                    " out of range for a " + std::to_string(num_qubits_) +
                                    "-qubit register");
    if (!std::isfinite(angle)) throw std::invalid_argument("apply_ry: angle must be finite");

    const double c = std::cos(angle * 0.5);
    const double s = std::sin(angle * 0.5);
    const std::size_t bit = std::size_t{1} << qubit;
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        if (k & bit) continue;
        const std::complex<double> a0 = amps_[k];
        const std::complex<double> a1 = amps_[k | bit];
        amps_[k] = c * a0 - s * a1;
        amps_[k | bit] = s * a0 + c * a1;
    }
    return *this;
}

Statevector& Statevector::apply_cnot(int control, int target) {
    if (control < 0 || control >= num_qubits_ || target < 0 || target >= num_qubits_)
        throw std::invalid_argument("apply_cnot: qubit index out of range");
    if (control == target)
        throw std::invalid_argument("apply_cnot: control and target must differ");

    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        if ((k & cbit) && !(k & tbit)) std::swap(amps_[k], amps_[k | tbit]);
    }
    return *this;
}

double Statevector::norm_sq() const {
    double n = 0.0;
    for (const auto& a : amps_) n += std::norm(a);
    return n;
}

ZString::ZString(int nq, std::uint32_t mask) : num_qubits(nq), z_mask(mask) {
    if (nq < 1 || nq > kMaxQubits) throw std::invalid_argument("ZString: num_qubits out of range");
    if (mask >> nq) throw std::invalid_argument("ZString: z_mask has bits above the register");
}

ZString single_z(int num_qubits, int qubit) {
    if (qubit < 0 || qubit >= num_qubits)
        throw std::invalid_argument("single_z: qubit out of range");
    return ZString(num_qubits, std::uint32_t{1} << qubit);
}

double expectation_zstring(const Statevector& state, const ZString& obs) {
    if (obs.num_qubits != state.num_qubits())
        throw std::invalid_argument("expectation_zstring: qubit count mismatch");

    const auto& amps = state.amplitudes();
    double value = 0.0;
    for (std::size_t k = 0; k < amps.size(); ++k) {
        const double p = std::norm(amps[k]);
        value += (std::popcount(k & std::size_t{obs.z_mask}) & 1) ? -p : p;
    }
    return value;
}

}  // namespace qgrid
