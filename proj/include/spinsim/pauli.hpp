#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace spinsim {

using complex = std::complex<double>;

enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

/// An N_q-qubit Pauli string, phase-free. Qubit 0 is the least significant
/// position; x_mask marks qubits carrying X or Y, z_mask those carrying Z or Y.
class PauliString {
public:
    explicit PauliString(int n_qubits = 1);
    PauliString(int n_qubits, uint64_t x_mask, uint64_t z_mask);

    static PauliString single(int n_qubits, int qubit, Pauli p);
    /// Parses the textual form "X1 Z0" (identity qubits omitted, "I" allowed).
    static PauliString from_label(const std::string& label, int n_qubits);

    int n_qubits() const { return n_qubits_; }
    uint64_t x_mask() const { return x_mask_; }
    uint64_t z_mask() const { return z_mask_; }

    Pauli at(int qubit) const;
    void set(int qubit, Pauli p);

    int weight() const;
    bool is_identity() const { return (x_mask_ | z_mask_) == 0; }
    bool commutes_with(const PauliString& other) const;

    std::string label() const;

    /// Canonical order: base-4 integer with qubit 0 as the least significant
    /// digit and I < X < Y < Z.
    bool operator<(const PauliString& other) const;
    bool operator==(const PauliString& other) const;

    Eigen::MatrixXcd to_dense() const;

private:
    int n_qubits_;
    uint64_t x_mask_;
    uint64_t z_mask_;
};

struct PauliProduct {
    complex phase;  // one of {1, i, -1, -i}
    PauliString string;
};

/// matrix(product) * phase == matrix(a) * matrix(b). Throws on size mismatch.
PauliProduct multiply(const PauliString& a, const PauliString& b);

struct PauliTerm {
    complex coefficient;
    PauliString string;
};

/// CNOT count 2(p-1) for exponentiating a weight-p string; 0 for p <= 1.
long cnot_cost(const PauliString& p);

/// Weighted sum of Pauli strings kept in canonical form: strings unique and
/// sorted, coefficients below the relative prune tolerance dropped.
class PauliOperatorSum {
public:
    static constexpr double prune_tolerance = 1e-12;

    explicit PauliOperatorSum(int n_qubits = 1);
    PauliOperatorSum(int n_qubits, std::vector<PauliTerm> terms);

    static PauliOperatorSum identity(int n_qubits, complex scale = 1.0);

    int n_qubits() const { return n_qubits_; }
    const std::vector<PauliTerm>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    bool is_hermitian(double tol = 1e-12) const;
    /// Sum of |coefficient| (a cheap upper bound on the spectral norm).
    double one_norm() const;

    PauliOperatorSum& operator+=(const PauliOperatorSum& other);
    PauliOperatorSum& operator-=(const PauliOperatorSum& other);
    PauliOperatorSum& operator*=(complex scale);
    friend PauliOperatorSum operator+(PauliOperatorSum a, const PauliOperatorSum& b) { return a += b; }
    friend PauliOperatorSum operator-(PauliOperatorSum a, const PauliOperatorSum& b) { return a -= b; }
    friend PauliOperatorSum operator*(complex scale, PauliOperatorSum a) { return a *= scale; }
    friend PauliOperatorSum operator*(PauliOperatorSum a, complex scale) { return a *= scale; }
    friend PauliOperatorSum operator*(const PauliOperatorSum& a, const PauliOperatorSum& b);

    std::string to_text() const;
    static PauliOperatorSum from_text(const std::string& text, int n_qubits);

private:
    void canonicalize();

    int n_qubits_;
    std::vector<PauliTerm> terms_;
};

PauliOperatorSum commutator(const PauliOperatorSum& a, const PauliOperatorSum& b);

/// Dense 2^n x 2^n matrix. Throws past the dense limit (default 14 qubits).
Eigen::MatrixXcd to_dense(const PauliOperatorSum& op, int dense_limit = 14);

std::string format_term(const PauliTerm& term);

/// Histogram of string weights: index p -> number of terms of weight p.
std::vector<long> weight_histogram(const PauliOperatorSum& op);

}  // namespace spinsim
