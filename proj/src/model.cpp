#include "spinsim/model.hpp"

#include <cmath>
#include <stdexcept>

namespace spinsim {

int ModelSpec::levels() const {
    const double two_s = 2.0 * s;
    const double rounded = std::round(two_s);
    if (std::abs(two_s - rounded) > 1e-12 || rounded < 1.0) {
        throw std::invalid_argument("spin magnitude must be a positive half-integer");
    }
    return static_cast<int>(rounded) + 1;
}

int ModelSpec::qubits_per_site() const { return spinsim::qubits_per_site(levels()); }

void ModelSpec::validate() const {
    if (n_sites < 2) throw std::invalid_argument("model needs at least 2 sites");
    levels();
    if (n_qubits() > 30) throw std::invalid_argument("register too large");
}

Hamiltonians build_hamiltonian(const ModelSpec& spec) {
    spec.validate();
    const int n = spec.n_sites;
    const int nq = spec.n_qubits();
    PauliOperatorSum h0(nq);
    PauliOperatorSum hz(nq);

    std::vector<PauliOperatorSum> sx, sy, sz;
    sx.reserve(n);
    sy.reserve(n);
    sz.reserve(n);
    for (int i = 0; i < n; ++i) {
        sx.push_back(encoded_spin(spec.s, 'x', spec.encoding, i, n));
        sy.push_back(encoded_spin(spec.s, 'y', spec.encoding, i, n));
        sz.push_back(encoded_spin(spec.s, 'z', spec.encoding, i, n));
    }

    for (int i = 0; i + 1 < n; ++i) {
        if (spec.j_exchange != 0.0) {
            h0 += spec.j_exchange * (sx[i] * sx[i + 1] + sy[i] * sy[i + 1] + sz[i] * sz[i + 1]);
        }
        if (spec.dm != 0.0) {
            h0 -= spec.dm * (sx[i] * sz[i + 1] - sz[i] * sx[i + 1]);
        }
    }
    for (int i = 0; i < n; ++i) {
        if (spec.k_a != 0.0) h0 -= spec.k_a * (sx[i] * sx[i]);
        if (spec.k_c != 0.0) h0 -= spec.k_c * (sz[i] * sz[i]);
        hz += sz[i];
    }
    return {std::move(h0), std::move(hz)};
}

PauliOperatorSum total_spin(const ModelSpec& spec, char axis) {
    spec.validate();
    PauliOperatorSum total(spec.n_qubits());
    for (int i = 0; i < spec.n_sites; ++i) {
        total += encoded_spin(spec.s, axis, spec.encoding, i, spec.n_sites);
    }
    return total;
}

double pulse_field(const PulseSpec& pulse, double t) {
    if (pulse.duration <= 0.0) throw std::invalid_argument("pulse duration must be positive");
    const double u = t - pulse.t0;
    return pulse.b0 * std::sin(pulse.omega0 * u) * std::exp(-u * u / (pulse.duration * pulse.duration));
}

DriveProtocol DriveProtocol::single(const PulseSpec& p) { return DriveProtocol{{{p, 0.0}}}; }

DriveProtocol DriveProtocol::pair(const PulseSpec& p, double tau) {
    return DriveProtocol{{{p, 0.0}, {p, tau}}};
}

double field_at(const DriveProtocol& protocol, double t) {
    double b = 0.0;
    for (const auto& [pulse, delay] : protocol.pulses) {
        if (!std::isfinite(delay)) throw std::invalid_argument("pulse delay must be finite");
        PulseSpec shifted = pulse;
        shifted.t0 += delay;
        b += pulse_field(shifted, t);
    }
    return b;
}

}  // namespace spinsim
