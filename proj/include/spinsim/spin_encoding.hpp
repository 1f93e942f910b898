#pragma once

#include <vector>

#include <Eigen/Dense>

#include "spinsim/pauli.hpp"

namespace spinsim {

/// Spin component matrices in the level basis |l>, l = 0..d-1, with
/// S^z diagonal entries s - l (l = 0 is the highest weight level).
struct SpinLevelOperators {
    double s;
    int dim;
    Eigen::MatrixXcd sx, sy, sz;
};

/// Throws unless 2s is a positive integer.
SpinLevelOperators spin_matrices(double s);

enum class Encoding { StandardBinary, GrayCode };

Encoding encoding_from_name(const std::string& name);
std::string encoding_name(Encoding e);

/// Qubits per site: ceil(log2 d), at least 1.
int qubits_per_site(int d);

/// level -> codeword for l = 0..d-1. Gray code is the reflected code l ^ (l>>1).
std::vector<uint64_t> code_map(Encoding scheme, int d);

/// Maps a d x d level-basis operator on one site into a Pauli sum over the
/// full register; site i occupies qubits [i*nq_site, (i+1)*nq_site).
PauliOperatorSum encode_operator(const Eigen::MatrixXcd& op, Encoding scheme, int site, int total_sites);

/// Encoded spin component for the given axis ('x', 'y' or 'z').
PauliOperatorSum encoded_spin(double s, char axis, Encoding scheme, int site, int total_sites);

/// Encoded (S^x)^2 + (S^y)^2 + (S^z)^2 on one site.
PauliOperatorSum encoded_spin_squared(double s, Encoding scheme, int site, int total_sites);

/// Projector onto the encoded physical codewords of one site.
PauliOperatorSum physical_projector(double s, Encoding scheme, int site, int total_sites);

/// Mask over all 2^(N_q) basis states of an N-site register: true where every
/// site's bit pattern is a valid codeword.
std::vector<bool> physical_basis_mask(double s, Encoding scheme, int n_sites);

}  // namespace spinsim
