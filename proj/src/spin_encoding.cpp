#include "spinsim/spin_encoding.hpp"

#include <cmath>
#include <stdexcept>

namespace spinsim {

namespace {

int level_count(double s) {
    const double two_s = 2.0 * s;
    const double rounded = std::round(two_s);
    if (std::abs(two_s - rounded) > 1e-12 || rounded < 1.0) {
        throw std::invalid_argument("spin magnitude must be a positive half-integer");
    }
    return static_cast<int>(rounded) + 1;
}

}  // namespace

SpinLevelOperators spin_matrices(double s) {
    const int d = level_count(s);
    SpinLevelOperators ops{s, d, Eigen::MatrixXcd::Zero(d, d), Eigen::MatrixXcd::Zero(d, d),
                           Eigen::MatrixXcd::Zero(d, d)};
    for (int l = 0; l < d; ++l) {
        ops.sz(l, l) = s - l;
        for (int lp = 0; lp < d; ++lp) {
            if (l != lp + 1 && l + 1 != lp) continue;
            const double f = std::sqrt((s + 1.0) * (l + lp + 1) - (l + 1.0) * (lp + 1.0));
            ops.sx(l, lp) = 0.5 * f;
            ops.sy(l, lp) = complex{0.0, 0.5} * static_cast<double>((l == lp + 1) - (l + 1 == lp)) * f;
        }
    }
    return ops;
}

Encoding encoding_from_name(const std::string& name) {
    if (name == "std" || name == "standard" || name == "binary") return Encoding::StandardBinary;
    if (name == "gray") return Encoding::GrayCode;
    throw std::invalid_argument("unknown encoding '" + name + "' (expected 'std' or 'gray')");
}

std::string encoding_name(Encoding e) { return e == Encoding::GrayCode ? "gray" : "std"; }

int qubits_per_site(int d) {
    if (d < 2) throw std::invalid_argument("level count must be at least 2");
    int nq = 0;
    while ((1 << nq) < d) ++nq;
    return std::max(nq, 1);
}

std::vector<uint64_t> code_map(Encoding scheme, int d) {
    std::vector<uint64_t> map(static_cast<std::size_t>(d));
    for (int l = 0; l < d; ++l) {
        const auto u = static_cast<uint64_t>(l);
        map[static_cast<std::size_t>(l)] = scheme == Encoding::GrayCode ? (u ^ (u >> 1)) : u;
    }
    return map;
}

PauliOperatorSum encode_operator(const Eigen::MatrixXcd& op, Encoding scheme, int site, int total_sites) {
    const int d = static_cast<int>(op.rows());
    if (op.rows() != op.cols() || d < 2) throw std::invalid_argument("level operator must be square, d >= 2");
    if (site < 0 || site >= total_sites) throw std::invalid_argument("site index out of range");
    const int nq_site = qubits_per_site(d);
    const int n_qubits = nq_site * total_sites;
    const int shift = nq_site * site;
    const auto codes = code_map(scheme, d);

    std::vector<PauliTerm> terms;
    for (int l = 0; l < d; ++l) {
        for (int lp = 0; lp < d; ++lp) {
            const complex a = op(l, lp);
            if (std::abs(a) == 0.0) continue;
            const uint64_t x = codes[static_cast<std::size_t>(l)];
            const uint64_t xp = codes[static_cast<std::size_t>(lp)];
            // expand prod_q |x_q><x'_q| over the 2^nq Pauli choices
            const int n_choices = 1 << nq_site;
            for (int pick = 0; pick < n_choices; ++pick) {
                complex coeff = a;
                PauliString str(n_qubits);
                for (int q = 0; q < nq_site; ++q) {
                    const int bx = static_cast<int>((x >> q) & 1);
                    const int bxp = static_cast<int>((xp >> q) & 1);
                    const bool second = (pick >> q) & 1;
                    if (bx == bxp) {
                        // |0><0| = (I+Z)/2, |1><1| = (I-Z)/2
                        coeff *= 0.5;
                        if (second) {
                            if (bx == 1) coeff = -coeff;
                            str.set(shift + q, Pauli::Z);
                        }
                    } else {
                        // |0><1| = (X+iY)/2, |1><0| = (X-iY)/2
                        coeff *= 0.5;
                        if (second) {
                            coeff *= complex{0.0, bx == 0 ? 1.0 : -1.0};
                            str.set(shift + q, Pauli::Y);
                        } else {
                            str.set(shift + q, Pauli::X);
                        }
                    }
                }
                terms.push_back({coeff, str});
            }
        }
    }
    return PauliOperatorSum(n_qubits, std::move(terms));
}

PauliOperatorSum encoded_spin(double s, char axis, Encoding scheme, int site, int total_sites) {
    const auto ops = spin_matrices(s);
    switch (axis) {
        case 'x': return encode_operator(ops.sx, scheme, site, total_sites);
        case 'y': return encode_operator(ops.sy, scheme, site, total_sites);
        case 'z': return encode_operator(ops.sz, scheme, site, total_sites);
        default: throw std::invalid_argument("axis must be one of 'x', 'y', 'z'");
    }
}

PauliOperatorSum encoded_spin_squared(double s, Encoding scheme, int site, int total_sites) {
    const auto sx = encoded_spin(s, 'x', scheme, site, total_sites);
    const auto sy = encoded_spin(s, 'y', scheme, site, total_sites);
    const auto sz = encoded_spin(s, 'z', scheme, site, total_sites);
    return sx * sx + sy * sy + sz * sz;
}

PauliOperatorSum physical_projector(double s, Encoding scheme, int site, int total_sites) {
    const int d = level_count(s);
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    return encode_operator(id, scheme, site, total_sites);
}

std::vector<bool> physical_basis_mask(double s, Encoding scheme, int n_sites) {
    const int d = level_count(s);
    const int nq_site = qubits_per_site(d);
    const auto codes = code_map(scheme, d);
    std::vector<bool> site_ok(std::size_t{1} << nq_site, false);
    for (const auto c : codes) site_ok[c] = true;
    const std::size_t dim = std::size_t{1} << (nq_site * n_sites);
    const uint64_t site_mask = (uint64_t{1} << nq_site) - 1;
    std::vector<bool> mask(dim, true);
    for (std::size_t j = 0; j < dim; ++j) {
        for (int i = 0; i < n_sites; ++i) {
            if (!site_ok[(j >> (i * nq_site)) & site_mask]) {
                mask[j] = false;
                break;
            }
        }
    }
    return mask;
}

}  // namespace spinsim
