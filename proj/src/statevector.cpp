#include "spinsim/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace spinsim {

namespace {

complex i_power(int t) {
    switch (t & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

}  // namespace

Statevector::Statevector(int n_qubits, uint64_t basis_state) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 30) throw std::invalid_argument("unsupported qubit count");
    amp_.assign(std::size_t{1} << n_qubits, complex{0.0, 0.0});
    if (basis_state >= amp_.size()) throw std::invalid_argument("reference bitstring outside register");
    amp_[basis_state] = 1.0;
}

double Statevector::norm() const {
    double s = 0.0;
    for (const auto& a : amp_) s += std::norm(a);
    return std::sqrt(s);
}

void Statevector::normalize() {
    const double n = norm();
    if (n == 0.0) throw std::runtime_error("cannot normalize the zero vector");
    for (auto& a : amp_) a /= n;
}

void Statevector::apply_pauli(const PauliString& p) {
    if (p.n_qubits() != n_qubits_) throw std::invalid_argument("register size mismatch");
    const uint64_t xm = p.x_mask();
    const uint64_t zm = p.z_mask();
    const complex yp = i_power(std::popcount(xm & zm));
    const std::size_t dim = amp_.size();
    if (xm == 0) {
        for (std::size_t j = 0; j < dim; ++j) {
            amp_[j] *= (std::popcount(j & zm) & 1) ? -yp : yp;
        }
        return;
    }
    for (std::size_t j = 0; j < dim; ++j) {
        const std::size_t k = j ^ xm;
        if (k < j) continue;
        const complex fj = (std::popcount(j & zm) & 1) ? -yp : yp;
        const complex fk = (std::popcount(k & zm) & 1) ? -yp : yp;
        const complex aj = amp_[j];
        amp_[j] = fk * amp_[k];
        amp_[k] = fj * aj;
    }
}

void Statevector::apply_rotation(const PauliString& generator, double theta) {
    if (generator.n_qubits() != n_qubits_) throw std::invalid_argument("register size mismatch");
    if (theta == 0.0) return;
    const double c = std::cos(theta);
    const complex mis{0.0, -std::sin(theta)};
    const uint64_t xm = generator.x_mask();
    const uint64_t zm = generator.z_mask();
    const complex yp = i_power(std::popcount(xm & zm));
    const std::size_t dim = amp_.size();
    if (xm == 0) {
        if (zm == 0) {  // identity generator: global phase only
            const complex ph = c + mis;
            for (auto& a : amp_) a *= ph;
            return;
        }
        const complex even = c + mis * yp;
        const complex odd = c - mis * yp;
        for (std::size_t j = 0; j < dim; ++j) {
            amp_[j] *= (std::popcount(j & zm) & 1) ? odd : even;
        }
        return;
    }
    for (std::size_t j = 0; j < dim; ++j) {
        const std::size_t k = j ^ xm;
        if (k < j) continue;
        const complex fj = (std::popcount(j & zm) & 1) ? -yp : yp;
        const complex fk = (std::popcount(k & zm) & 1) ? -yp : yp;
        const complex aj = amp_[j];
        const complex ak = amp_[k];
        amp_[j] = c * aj + mis * fk * ak;
        amp_[k] = c * ak + mis * fj * aj;
    }
}

void Statevector::accumulate_pauli(const PauliString& p, complex scale, Statevector& out) const {
    if (p.n_qubits() != n_qubits_ || out.n_qubits_ != n_qubits_) {
        throw std::invalid_argument("register size mismatch");
    }
    const uint64_t xm = p.x_mask();
    const uint64_t zm = p.z_mask();
    const complex base = scale * i_power(std::popcount(xm & zm));
    const std::size_t dim = amp_.size();
    for (std::size_t j = 0; j < dim; ++j) {
        const complex f = (std::popcount(j & zm) & 1) ? -base : base;
        out.amp_[j ^ xm] += f * amp_[j];
    }
}

void Statevector::apply_operator_into(const PauliOperatorSum& op, Statevector& out) const {
    if (op.n_qubits() != n_qubits_) throw std::invalid_argument("register size mismatch");
    std::fill(out.amp_.begin(), out.amp_.end(), complex{0.0, 0.0});
    for (const auto& t : op.terms()) accumulate_pauli(t.string, t.coefficient, out);
}

double Statevector::expectation(const PauliOperatorSum& op) const {
    if (op.n_qubits() != n_qubits_) throw std::invalid_argument("register size mismatch");
    if (!op.is_hermitian()) throw std::invalid_argument("expectation requires a Hermitian operator");
    const std::size_t dim = amp_.size();
    complex acc{0.0, 0.0};
    for (const auto& t : op.terms()) {
        const uint64_t xm = t.string.x_mask();
        const uint64_t zm = t.string.z_mask();
        const complex base = t.coefficient * i_power(std::popcount(xm & zm));
        complex term{0.0, 0.0};
        for (std::size_t j = 0; j < dim; ++j) {
            const complex f = (std::popcount(j & zm) & 1) ? -base : base;
            term += std::conj(amp_[j ^ xm]) * f * amp_[j];
        }
        acc += term;
    }
    return acc.real();
}

double Statevector::variance(const PauliOperatorSum& op) const {
    Statevector w(n_qubits_);
    apply_operator_into(op, w);
    const double e = inner(*this, w).real();
    const double e2 = inner(w, w).real();
    return e2 - e * e;
}

complex inner(const Statevector& a, const Statevector& b) {
    if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("register size mismatch");
    complex s{0.0, 0.0};
    const std::size_t dim = a.dim();
    for (std::size_t j = 0; j < dim; ++j) s += std::conj(a[j]) * b[j];
    return s;
}

double fidelity(const Statevector& a, const Statevector& b) { return std::norm(inner(a, b)); }

complex matrix_element(const PauliOperatorSum& op, const Statevector& bra, const Statevector& ket) {
    Statevector w(ket.n_qubits());
    ket.apply_operator_into(op, w);
    return inner(bra, w);
}

AnsatzState::AnsatzState(int n_qubits, uint64_t reference) : n_qubits_(n_qubits), reference_(reference) {
    if (n_qubits < 1 || n_qubits > 30) throw std::invalid_argument("unsupported qubit count");
    if (reference >> n_qubits) throw std::invalid_argument("reference bitstring outside register");
}

void AnsatzState::set_angles(std::span<const double> angles) {
    if (angles.size() != angles_.size()) throw std::invalid_argument("angle count mismatch");
    angles_.assign(angles.begin(), angles.end());
}

void AnsatzState::append(const PauliString& generator, double angle) {
    if (generator.n_qubits() != n_qubits_) throw std::invalid_argument("register size mismatch");
    generators_.push_back(generator);
    angles_.push_back(angle);
}

long AnsatzState::cnot_count() const {
    long total = 0;
    for (const auto& g : generators_) total += cnot_cost(g);
    return total;
}

Statevector AnsatzState::prepare() const { return prepare_with(angles_); }

Statevector AnsatzState::prepare_with(std::span<const double> angles) const {
    if (angles.size() != generators_.size()) throw std::invalid_argument("angle count mismatch");
    Statevector psi(n_qubits_, reference_);
    for (std::size_t mu = 0; mu < generators_.size(); ++mu) {
        psi.apply_rotation(generators_[mu], angles[mu]);
    }
    return psi;
}

Statevector AnsatzState::tangent_vector(std::size_t mu) const {
    if (mu >= generators_.size()) throw std::invalid_argument("parameter index out of range");
    Statevector t(n_qubits_, reference_);
    for (std::size_t k = 0; k <= mu; ++k) t.apply_rotation(generators_[k], angles_[k]);
    t.apply_pauli(generators_[mu]);
    for (std::size_t j = 0; j < t.dim(); ++j) t[j] *= complex{0.0, -1.0};
    for (std::size_t k = mu + 1; k < generators_.size(); ++k) t.apply_rotation(generators_[k], angles_[k]);
    return t;
}

TangentFrame tangent_frame(const AnsatzState& ansatz, std::span<const double> angles) {
    const std::size_t n = ansatz.n_parameters();
    if (angles.size() != n) throw std::invalid_argument("angle count mismatch");
    TangentFrame frame{Statevector(ansatz.n_qubits(), ansatz.reference()), {}, {}};
    frame.tangents.reserve(n);
    for (std::size_t mu = 0; mu < n; ++mu) {
        const auto& g = ansatz.generators()[mu];
        frame.psi.apply_rotation(g, angles[mu]);
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(mu); ++k) {
            frame.tangents[static_cast<std::size_t>(k)].apply_rotation(g, angles[mu]);
        }
        Statevector t = frame.psi;
        t.apply_pauli(g);
        for (std::size_t j = 0; j < t.dim(); ++j) t[j] *= complex{0.0, -1.0};
        frame.tangents.push_back(std::move(t));
    }
    frame.overlaps.resize(n);
    for (std::size_t mu = 0; mu < n; ++mu) frame.overlaps[mu] = inner(frame.tangents[mu], frame.psi);
    return frame;
}

TrotterSchedule::TrotterSchedule(const PauliOperatorSum& h0, const PauliOperatorSum& hz) {
    if (h0.n_qubits() != hz.n_qubits()) throw std::invalid_argument("register size mismatch");
    if (!h0.is_hermitian() || !hz.is_hermitian()) {
        throw std::invalid_argument("Trotter schedule requires Hermitian operators");
    }
    // union of strings in canonical order; the sum with unit weights cannot cancel
    PauliOperatorSum unity(h0.n_qubits());
    std::vector<PauliTerm> marks;
    for (const auto& t : h0.terms()) marks.push_back({1.0, t.string});
    for (const auto& t : hz.terms()) marks.push_back({1.0, t.string});
    unity = PauliOperatorSum(h0.n_qubits(), std::move(marks));
    for (const auto& m : unity.terms()) {
        Entry e{m.string, 0.0, 0.0};
        for (const auto& t : h0.terms()) {
            if (t.string == m.string) e.c0 = t.coefficient.real();
        }
        for (const auto& t : hz.terms()) {
            if (t.string == m.string) e.cz = t.coefficient.real();
        }
        cnots_per_step_ += cnot_cost(e.string);
        entries_.push_back(std::move(e));
    }
}

long TrotterSchedule::step(Statevector& state, double b, double dt) const {
    for (const auto& e : entries_) {
        state.apply_rotation(e.string, dt * (e.c0 - b * e.cz));
    }
    return cnots_per_step_;
}

long trotter_step(Statevector& state, const PauliOperatorSum& h, double dt) {
    long cnots = 0;
    for (const auto& t : h.terms()) {
        if (std::abs(t.coefficient.imag()) > 1e-12 * std::max(1.0, std::abs(t.coefficient))) {
            throw std::invalid_argument("Trotter step requires a Hermitian Hamiltonian");
        }
        state.apply_rotation(t.string, dt * t.coefficient.real());
        cnots += cnot_cost(t.string);
    }
    return cnots;
}

}  // namespace spinsim
