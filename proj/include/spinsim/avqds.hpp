#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spinsim/exact.hpp"
#include "spinsim/model.hpp"
#include "spinsim/statevector.hpp"

namespace spinsim {

enum class Integrator { RK4, Euler };
enum class PoolKind { AllOneTwoQubit, HamiltonianTerms, YZChain };

Integrator integrator_from_name(const std::string& name);
PoolKind pool_from_name(const std::string& name);

/// Operator pools. AllOneTwoQubit is ordered single-qubit X,Y,Z by qubit then
/// pairs lexicographically (deterministic tie-breaking for the adaptive step).
std::vector<PauliString> build_pool(PoolKind kind, int n_qubits, const Hamiltonians* h = nullptr);

struct EvolutionConfig {
    double l2_cut = 1e-5;
    double dtheta_max = 5e-3;  // 2.5e-4 is the Euler working point
    double tikhonov = 1e-6;
    Integrator integrator = Integrator::RK4;
    PoolKind pool = PoolKind::AllOneTwoQubit;
    double dt_min = 1e-6;
    double dt_max = 0.1;
    double t_final = 50.0;
    double stall_rel_tol = 1e-3;
    bool record_infidelity = false;
    double exact_substep = 0.005;  // mesh of the exact reference propagation
};

struct EvolutionStep {
    double t = 0.0;
    double dt = 0.0;  // step taken from t (0 on the final row)
    int n_theta = 0;
    long cnots = 0;
    double l2 = 0.0;  // McLachlan distance after adaptation at time t
    double mz = 0.0;
    double infidelity = -1.0;  // negative when not recorded
};

struct EvolutionRecord {
    std::vector<EvolutionStep> steps;
    long stall_warnings = 0;

    std::size_t n_steps() const { return steps.empty() ? 0 : steps.size() - 1; }
    long final_cnots() const { return steps.empty() ? 0 : steps.back().cnots; }
    double max_infidelity() const;
    double max_l2() const;
};

/// Prepared state, tangents (columns), and the McLachlan system of
/// the pseudo-Trotter ansatz for a frozen Hamiltonian.
struct McLachlanSystem {
    Statevector psi;
    Eigen::MatrixXcd tangents;  // dim x N_theta
    Eigen::VectorXcd overlaps;  // d_mu = <d_mu Psi|Psi>
    Eigen::MatrixXd m;          // Eq. metric, 2 Re[<d_mu|d_nu> + d_mu d_nu]
    Eigen::VectorXd v;          // 2 Im[<d_mu|H|Psi> + <Psi|d_mu Psi><H>]
    double energy = 0.0;
    double var_h = 0.0;
};

McLachlanSystem assemble_mv(const AnsatzState& ansatz, std::span<const double> angles,
                            const PauliOperatorSum& h_t);

/// L^2 = 2 var_H - V^T (M + delta I)^{-1} V, clipped at zero.
double mclachlan_distance(const Eigen::MatrixXd& m, const Eigen::VectorXd& v, double var_h,
                          double tikhonov);

/// theta_dot from (M + delta I) theta_dot = V.
Eigen::VectorXd solve_theta_dot(const Eigen::MatrixXd& m, const Eigen::VectorXd& v, double tikhonov);

/// Adaptive variational quantum dynamics over a drive protocol.
class AvqdsEngine {
public:
    AvqdsEngine(Hamiltonians h, DriveProtocol protocol, AnsatzState initial, EvolutionConfig config);

    /// Exact reference for per-step infidelity recording.
    void set_reference_state(Statevector reference);

    EvolutionRecord run();

    const AnsatzState& ansatz() const { return ansatz_; }
    const EvolutionConfig& config() const { return config_; }

private:
    PauliOperatorSum hamiltonian_at(double t) const;
    /// Appends pool generators until L^2 < l2_cut or no candidate helps;
    /// extends the assembly in place and returns the final L^2.
    double adapt(McLachlanSystem& sys, const PauliOperatorSum& h_t);
    Eigen::VectorXd rhs(std::span<const double> angles, double t) const;

    Hamiltonians h_;
    DriveProtocol protocol_;
    AnsatzState ansatz_;
    EvolutionConfig config_;
    std::vector<PauliString> pool_;
    PauliOperatorSum mz_observable_;
    std::optional<Statevector> reference_;
    long stall_warnings_ = 0;
};

}  // namespace spinsim
