#pragma once

#include <utility>
#include <vector>

#include "spinsim/pauli.hpp"
#include "spinsim/spin_encoding.hpp"

namespace spinsim {

/// Open chain of N spin-s sites, energies in units of J (hbar = 1).
struct ModelSpec {
    int n_sites = 2;
    double s = 1.0;
    double j_exchange = 1.0;
    double dm = 0.0;    // Dzyaloshinskii-Moriya magnitude, D vector along y
    double k_a = 0.0;   // single-ion anisotropy along x (a-axis)
    double k_c = 0.0;   // single-ion anisotropy along z (c-axis)
    Encoding encoding = Encoding::GrayCode;

    int levels() const;
    int qubits_per_site() const;
    int n_qubits() const { return qubits_per_site() * n_sites; }
    void validate() const;
};

/// Static part H0 and Zeeman operator Hz = sum_i S^z_i; the driven
/// Hamiltonian is H(t) = H0 - B(t) Hz.
struct Hamiltonians {
    PauliOperatorSum h0;
    PauliOperatorSum hz;
};

Hamiltonians build_hamiltonian(const ModelSpec& spec);

/// Encoded total spin component over all sites.
PauliOperatorSum total_spin(const ModelSpec& spec, char axis);

/// B(t) = B0 sin(w0 (t - t0)) exp(-(t - t0)^2 / dt^2), polarized along z.
struct PulseSpec {
    double b0 = 0.5;
    double omega0 = 1.0;
    double t0 = 5.0;
    double duration = 2.0;  // the gaussian width parameter Delta t
};

double pulse_field(const PulseSpec& pulse, double t);

/// Pulses with additive delays on their centers; empty list = free evolution.
struct DriveProtocol {
    std::vector<std::pair<PulseSpec, double>> pulses;

    static DriveProtocol single(const PulseSpec& p);
    static DriveProtocol pair(const PulseSpec& p, double tau);
};

double field_at(const DriveProtocol& protocol, double t);

}  // namespace spinsim
