#include "spinsim/exact.hpp"

#include <cmath>
#include <stdexcept>

#include <lapacke.h>

namespace spinsim {

int EigenDecomposition::n_physical() const {
    int n = 0;
    for (const bool f : physical) n += f ? 1 : 0;
    return n;
}

std::vector<double> EigenDecomposition::physical_energies() const {
    std::vector<double> out;
    for (Eigen::Index i = 0; i < energies.size(); ++i) {
        if (physical.empty() || physical[static_cast<std::size_t>(i)]) out.push_back(energies[i]);
    }
    return out;
}

Statevector EigenDecomposition::state(int n) const {
    const auto dim = static_cast<std::size_t>(vectors.rows());
    int nq = 0;
    while ((std::size_t{1} << nq) < dim) ++nq;
    Statevector psi(nq);
    for (std::size_t j = 0; j < dim; ++j) psi[j] = vectors(static_cast<Eigen::Index>(j), n);
    return psi;
}

EigenDecomposition eigendecompose(const PauliOperatorSum& h, const ModelSpec* model, int dense_limit) {
    if (!h.is_hermitian()) throw std::invalid_argument("eigendecompose requires a Hermitian operator");
    Eigen::MatrixXcd m = to_dense(h, dense_limit);
    const auto n = static_cast<lapack_int>(m.rows());
    Eigen::VectorXd energies(n);
    const lapack_int info =
        LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n, reinterpret_cast<lapack_complex_double*>(m.data()),
                       n, energies.data());
    if (info != 0) throw std::runtime_error("zheevd failed with info " + std::to_string(info));

    EigenDecomposition eig{std::move(energies), std::move(m), {}};
    if (model != nullptr) {
        const auto mask = physical_basis_mask(model->s, model->encoding, model->n_sites);
        if (mask.size() != static_cast<std::size_t>(eig.vectors.rows())) {
            throw std::invalid_argument("model register does not match operator register");
        }
        eig.physical.resize(static_cast<std::size_t>(eig.vectors.cols()));
        for (Eigen::Index c = 0; c < eig.vectors.cols(); ++c) {
            double w = 0.0;
            for (Eigen::Index r = 0; r < eig.vectors.rows(); ++r) {
                if (mask[static_cast<std::size_t>(r)]) w += std::norm(eig.vectors(r, c));
            }
            eig.physical[static_cast<std::size_t>(c)] = w > 0.5;
        }
    }
    return eig;
}

void propagate_exact(Statevector& state, const PauliOperatorSum& h, double dt) {
    if (dt < 0.0) throw std::invalid_argument("time step must be non-negative");
    if (dt == 0.0 || h.empty()) return;
    if (h.n_qubits() != state.n_qubits()) throw std::invalid_argument("register size mismatch");
    // split so that |H| dt stays small enough for a short Taylor sum
    const double scale = h.one_norm() * dt;
    const int n_sub = std::max(1, static_cast<int>(std::ceil(scale / 0.5)));
    const double sub = dt / n_sub;
    Statevector term = state;
    Statevector scratch(state.n_qubits());
    for (int step = 0; step < n_sub; ++step) {
        term = state;
        double term_scale = 1.0;
        for (int k = 1; k <= 80; ++k) {
            term.apply_operator_into(h, scratch);
            const complex factor = complex{0.0, -sub} / static_cast<double>(k);
            for (std::size_t j = 0; j < term.dim(); ++j) term[j] = factor * scratch[j];
            for (std::size_t j = 0; j < term.dim(); ++j) state[j] += term[j];
            term_scale *= sub * h.one_norm() / k;
            if (term_scale < 1e-17) break;
            if (k == 80) throw std::runtime_error("Taylor propagation failed to converge");
        }
    }
}

ExactEvolver::ExactEvolver(const Hamiltonians& h, const DriveProtocol& protocol, Statevector initial,
                           double dt)
    : h_(h), protocol_(protocol), psi_(std::move(initial)), dt_(dt) {
    if (dt <= 0.0) throw std::invalid_argument("time step must be positive");
}

void ExactEvolver::step() {
    const double b = field_at(protocol_, t_ + 0.5 * dt_);
    PauliOperatorSum ht = h_.h0;
    if (b != 0.0) ht -= b * h_.hz;
    propagate_exact(psi_, ht, dt_);
    t_ += dt_;
}

void ExactEvolver::advance_to(double t) {
    while (t - t_ > 1e-12) {
        const double step_dt = std::min(dt_, t - t_);
        const double b = field_at(protocol_, t_ + 0.5 * step_dt);
        PauliOperatorSum ht = h_.h0;
        if (b != 0.0) ht -= b * h_.hz;
        propagate_exact(psi_, ht, step_dt);
        t_ += step_dt;
    }
    t_ = std::max(t_, t);
}

}  // namespace spinsim
