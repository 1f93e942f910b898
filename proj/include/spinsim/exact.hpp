#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "spinsim/model.hpp"
#include "spinsim/statevector.hpp"

namespace spinsim {

struct EigenDecomposition {
    Eigen::VectorXd energies;    // ascending
    Eigen::MatrixXcd vectors;    // orthonormal columns
    std::vector<bool> physical;  // per eigenvector: support on physical codewords

    int n_physical() const;
    /// Energies of the physical eigenstates only, ascending.
    std::vector<double> physical_energies() const;
    Statevector state(int n) const;
};

/// Dense Hermitian eigensolve; classification flags are filled when the model
/// is given (support weight > 1/2 on codeword basis states).
EigenDecomposition eigendecompose(const PauliOperatorSum& h, const ModelSpec* model = nullptr,
                                  int dense_limit = 14);

/// |psi> -> e^{-i dt H}|psi> via a scaled Taylor expansion of the exponential,
/// converged to machine precision. dt >= 0.
void propagate_exact(Statevector& state, const PauliOperatorSum& h, double dt);

/// Exact propagation of a driven model on a uniform mesh, freezing H within
/// each step at the midpoint field value B(t + dt/2).
class ExactEvolver {
public:
    ExactEvolver(const Hamiltonians& h, const DriveProtocol& protocol, Statevector initial,
                 double dt = 0.005);

    double time() const { return t_; }
    const Statevector& state() const { return psi_; }

    void step();
    /// Advances to the requested time with steps of at most the mesh dt.
    void advance_to(double t);

private:
    Hamiltonians h_;
    DriveProtocol protocol_;
    Statevector psi_;
    double dt_;
    double t_ = 0.0;
};

}  // namespace spinsim
