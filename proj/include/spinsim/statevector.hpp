#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spinsim/pauli.hpp"

namespace spinsim {

/// Dense amplitude vector over 2^n computational basis states.
class Statevector {
public:
    explicit Statevector(int n_qubits, uint64_t basis_state = 0);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amp_.size(); }
    complex* data() { return amp_.data(); }
    const complex* data() const { return amp_.data(); }
    complex& operator[](std::size_t j) { return amp_[j]; }
    const complex& operator[](std::size_t j) const { return amp_[j]; }

    double norm() const;
    void normalize();

    /// In-place |v> -> P|v>.
    void apply_pauli(const PauliString& p);
    /// In-place |v> -> e^{-i theta P}|v> = cos(theta)|v> - i sin(theta) P|v>.
    void apply_rotation(const PauliString& generator, double theta);
    /// out += scale * P|v>; out must share the register size.
    void accumulate_pauli(const PauliString& p, complex scale, Statevector& out) const;
    /// out = Op|v>.
    void apply_operator_into(const PauliOperatorSum& op, Statevector& out) const;

    /// <v|Op|v> for Hermitian Op (validated); returns the real part.
    double expectation(const PauliOperatorSum& op) const;
    /// <v|Op^2|v> - <v|Op|v>^2 for Hermitian Op.
    double variance(const PauliOperatorSum& op) const;

private:
    int n_qubits_;
    std::vector<complex> amp_;
};

complex inner(const Statevector& a, const Statevector& b);
/// |<a|b>|^2.
double fidelity(const Statevector& a, const Statevector& b);
/// <bra|Op|ket>, no Hermiticity requirement.
complex matrix_element(const PauliOperatorSum& op, const Statevector& bra, const Statevector& ket);

/// Pseudo-Trotter variational state: ordered Pauli rotations applied to a
/// reference bitstring, unitary 0 first.
class AnsatzState {
public:
    AnsatzState(int n_qubits, uint64_t reference = 0);

    int n_qubits() const { return n_qubits_; }
    uint64_t reference() const { return reference_; }
    std::size_t n_parameters() const { return generators_.size(); }
    const std::vector<PauliString>& generators() const { return generators_; }
    const std::vector<double>& angles() const { return angles_; }
    void set_angles(std::span<const double> angles);
    void append(const PauliString& generator, double angle = 0.0);
    long cnot_count() const;

    Statevector prepare() const;
    Statevector prepare_with(std::span<const double> angles) const;

    /// d|Psi>/d theta_mu; finite-difference checked in tests.
    Statevector tangent_vector(std::size_t mu) const;

private:
    int n_qubits_;
    uint64_t reference_;
    std::vector<PauliString> generators_;
    std::vector<double> angles_;
};

/// Prepared state plus all parameter derivatives, built in one sweep.
struct TangentFrame {
    Statevector psi;
    std::vector<Statevector> tangents;
    /// d_mu = <d_mu Psi | Psi> (purely imaginary for a unitary ansatz).
    std::vector<complex> overlaps;
};

TangentFrame tangent_frame(const AnsatzState& ansatz, std::span<const double> angles);

/// One first-order Trotter step |v> -> prod_mu e^{-i dt c_mu P_mu}|v> in
/// canonical term order; returns the CNOT increment sum_mu 2(p_mu - 1).
long trotter_step(Statevector& state, const PauliOperatorSum& h, double dt);

/// Fixed-structure first-order Trotter circuit for H(t) = H0 - B(t) Hz: the
/// string list is the canonical union of H0 and Hz strings and every string
/// contributes one rotation (and its CNOTs) per step, even at B = 0.
class TrotterSchedule {
public:
    TrotterSchedule(const PauliOperatorSum& h0, const PauliOperatorSum& hz);

    std::size_t n_strings() const { return entries_.size(); }
    long cnots_per_step() const { return cnots_per_step_; }

    /// Applies one step with field value b and returns cnots_per_step().
    long step(Statevector& state, double b, double dt) const;

private:
    struct Entry {
        PauliString string;
        double c0;
        double cz;
    };
    std::vector<Entry> entries_;
    long cnots_per_step_ = 0;
};

}  // namespace spinsim
