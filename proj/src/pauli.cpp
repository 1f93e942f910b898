#include "spinsim/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace spinsim {

namespace {

void check_qubit_count(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 64) {
        throw std::invalid_argument("qubit count must be in [1, 64], got " + std::to_string(n_qubits));
    }
}

// i-exponent of the product of two single-qubit Paulis encoded as (x, z) bits:
// sigma_a sigma_b = i^t sigma_{a xor b}. Indexed by [a][b] with a = 2x + z.
constexpr int phase_table[4][4] = {
    // I   Z   X   Y   (column b)
    {0, 0, 0, 0},  // I
    {0, 0, 1, 3},  // Z
    {0, 3, 0, 1},  // X
    {0, 1, 3, 0},  // Y
};

complex i_power(int t) {
    switch (t & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

}  // namespace

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        default: return 'Z';
    }
}

PauliString::PauliString(int n_qubits) : n_qubits_(n_qubits), x_mask_(0), z_mask_(0) {
    check_qubit_count(n_qubits);
}

PauliString::PauliString(int n_qubits, uint64_t x_mask, uint64_t z_mask)
    : n_qubits_(n_qubits), x_mask_(x_mask), z_mask_(z_mask) {
    check_qubit_count(n_qubits);
    const uint64_t valid = (n_qubits == 64) ? ~uint64_t{0} : ((uint64_t{1} << n_qubits) - 1);
    if ((x_mask | z_mask) & ~valid) {
        throw std::invalid_argument("Pauli mask addresses qubits outside the register");
    }
}

PauliString PauliString::single(int n_qubits, int qubit, Pauli p) {
    PauliString s(n_qubits);
    s.set(qubit, p);
    return s;
}

PauliString PauliString::from_label(const std::string& label, int n_qubits) {
    PauliString s(n_qubits);
    std::istringstream in(label);
    std::string tok;
    while (in >> tok) {
        if (tok == "I") continue;
        if (tok.size() < 2) throw std::invalid_argument("bad Pauli token '" + tok + "'");
        Pauli p;
        switch (tok[0]) {
            case 'X': p = Pauli::X; break;
            case 'Y': p = Pauli::Y; break;
            case 'Z': p = Pauli::Z; break;
            default: throw std::invalid_argument("bad Pauli token '" + tok + "'");
        }
        const int q = std::stoi(tok.substr(1));
        if (q < 0 || q >= n_qubits) throw std::invalid_argument("qubit index out of range in '" + tok + "'");
        if (s.at(q) != Pauli::I) throw std::invalid_argument("duplicate qubit in label '" + label + "'");
        s.set(q, p);
    }
    return s;
}

Pauli PauliString::at(int qubit) const {
    const int x = static_cast<int>((x_mask_ >> qubit) & 1);
    const int z = static_cast<int>((z_mask_ >> qubit) & 1);
    if (x && z) return Pauli::Y;
    if (x) return Pauli::X;
    if (z) return Pauli::Z;
    return Pauli::I;
}

void PauliString::set(int qubit, Pauli p) {
    if (qubit < 0 || qubit >= n_qubits_) {
        throw std::invalid_argument("qubit index out of range");
    }
    const uint64_t bit = uint64_t{1} << qubit;
    x_mask_ &= ~bit;
    z_mask_ &= ~bit;
    if (p == Pauli::X || p == Pauli::Y) x_mask_ |= bit;
    if (p == Pauli::Z || p == Pauli::Y) z_mask_ |= bit;
}

int PauliString::weight() const { return std::popcount(x_mask_ | z_mask_); }

bool PauliString::commutes_with(const PauliString& other) const {
    if (n_qubits_ != other.n_qubits_) throw std::invalid_argument("Pauli strings act on different registers");
    const int anti = std::popcount((x_mask_ & other.z_mask_) ^ (z_mask_ & other.x_mask_));
    return (anti & 1) == 0;
}

std::string PauliString::label() const {
    if (is_identity()) return "I";
    std::string out;
    for (int q = n_qubits_ - 1; q >= 0; --q) {
        const Pauli p = at(q);
        if (p == Pauli::I) continue;
        if (!out.empty()) out += ' ';
        out += pauli_char(p);
        out += std::to_string(q);
    }
    return out;
}

bool PauliString::operator<(const PauliString& other) const {
    for (int q = n_qubits_ - 1; q >= 0; --q) {
        const auto a = static_cast<uint8_t>(at(q));
        const auto b = static_cast<uint8_t>(other.at(q));
        if (a != b) return a < b;
    }
    return false;
}

bool PauliString::operator==(const PauliString& other) const {
    return n_qubits_ == other.n_qubits_ && x_mask_ == other.x_mask_ && z_mask_ == other.z_mask_;
}

Eigen::MatrixXcd PauliString::to_dense() const {
    if (n_qubits_ > 14) throw std::runtime_error("dense limit exceeded");
    const auto dim = std::size_t{1} << n_qubits_;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    const int n_y = std::popcount(x_mask_ & z_mask_);
    const complex y_phase = i_power(n_y);
    for (std::size_t j = 0; j < dim; ++j) {
        const double sign = (std::popcount(j & z_mask_) & 1) ? -1.0 : 1.0;
        m(static_cast<Eigen::Index>(j ^ x_mask_), static_cast<Eigen::Index>(j)) = y_phase * sign;
    }
    return m;
}

PauliProduct multiply(const PauliString& a, const PauliString& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("Pauli strings act on different registers");
    }
    int t = 0;
    uint64_t support = (a.x_mask() | a.z_mask()) & (b.x_mask() | b.z_mask());
    while (support) {
        const int q = std::countr_zero(support);
        support &= support - 1;
        const int ca = static_cast<int>(((a.x_mask() >> q) & 1) << 1 | ((a.z_mask() >> q) & 1));
        const int cb = static_cast<int>(((b.x_mask() >> q) & 1) << 1 | ((b.z_mask() >> q) & 1));
        t += phase_table[ca][cb];
    }
    return {i_power(t), PauliString(a.n_qubits(), a.x_mask() ^ b.x_mask(), a.z_mask() ^ b.z_mask())};
}

long cnot_cost(const PauliString& p) {
    const int w = p.weight();
    return w <= 1 ? 0 : 2L * (w - 1);
}

PauliOperatorSum::PauliOperatorSum(int n_qubits) : n_qubits_(n_qubits) { check_qubit_count(n_qubits); }

PauliOperatorSum::PauliOperatorSum(int n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
    check_qubit_count(n_qubits);
    for (const auto& t : terms_) {
        if (t.string.n_qubits() != n_qubits_) {
            throw std::invalid_argument("term register size differs from operator register size");
        }
        if (!std::isfinite(t.coefficient.real()) || !std::isfinite(t.coefficient.imag())) {
            throw std::invalid_argument("non-finite coefficient");
        }
    }
    canonicalize();
}

PauliOperatorSum PauliOperatorSum::identity(int n_qubits, complex scale) {
    return PauliOperatorSum(n_qubits, {{scale, PauliString(n_qubits)}});
}

void PauliOperatorSum::canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const PauliTerm& a, const PauliTerm& b) { return a.string < b.string; });
    std::vector<PauliTerm> merged;
    merged.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (!merged.empty() && merged.back().string == t.string) {
            merged.back().coefficient += t.coefficient;
        } else {
            merged.push_back(t);
        }
    }
    double max_abs = 0.0;
    for (const auto& t : merged) max_abs = std::max(max_abs, std::abs(t.coefficient));
    const double cut = prune_tolerance * max_abs;
    terms_.clear();
    for (const auto& t : merged) {
        if (std::abs(t.coefficient) > cut) terms_.push_back(t);
    }
}

bool PauliOperatorSum::is_hermitian(double tol) const {
    const double scale = std::max(1.0, one_norm());
    for (const auto& t : terms_) {
        if (std::abs(t.coefficient.imag()) > tol * scale) return false;
    }
    return true;
}

double PauliOperatorSum::one_norm() const {
    double s = 0.0;
    for (const auto& t : terms_) s += std::abs(t.coefficient);
    return s;
}

PauliOperatorSum& PauliOperatorSum::operator+=(const PauliOperatorSum& other) {
    if (n_qubits_ != other.n_qubits_) throw std::invalid_argument("operator register sizes differ");
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    canonicalize();
    return *this;
}

PauliOperatorSum& PauliOperatorSum::operator-=(const PauliOperatorSum& other) {
    if (n_qubits_ != other.n_qubits_) throw std::invalid_argument("operator register sizes differ");
    terms_.reserve(terms_.size() + other.terms_.size());
    for (const auto& t : other.terms_) terms_.push_back({-t.coefficient, t.string});
    canonicalize();
    return *this;
}

PauliOperatorSum& PauliOperatorSum::operator*=(complex scale) {
    for (auto& t : terms_) t.coefficient *= scale;
    canonicalize();
    return *this;
}

PauliOperatorSum operator*(const PauliOperatorSum& a, const PauliOperatorSum& b) {
    if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("operator register sizes differ");
    std::vector<PauliTerm> terms;
    terms.reserve(a.size() * b.size());
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            auto prod = multiply(ta.string, tb.string);
            terms.push_back({ta.coefficient * tb.coefficient * prod.phase, prod.string});
        }
    }
    return PauliOperatorSum(a.n_qubits(), std::move(terms));
}

PauliOperatorSum commutator(const PauliOperatorSum& a, const PauliOperatorSum& b) {
    if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("operator register sizes differ");
    std::vector<PauliTerm> terms;
    terms.reserve(2 * a.size() * b.size());
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            if (ta.string.commutes_with(tb.string)) continue;
            // ab - ba = 2ab for anticommuting strings
            auto prod = multiply(ta.string, tb.string);
            terms.push_back({2.0 * ta.coefficient * tb.coefficient * prod.phase, prod.string});
        }
    }
    return PauliOperatorSum(a.n_qubits(), std::move(terms));
}

Eigen::MatrixXcd to_dense(const PauliOperatorSum& op, int dense_limit) {
    if (op.n_qubits() > dense_limit) {
        throw std::runtime_error("operator on " + std::to_string(op.n_qubits()) +
                                 " qubits exceeds the dense limit of " + std::to_string(dense_limit));
    }
    const auto dim = std::size_t{1} << op.n_qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto& t : op.terms()) {
        const uint64_t xm = t.string.x_mask();
        const uint64_t zm = t.string.z_mask();
        const complex base = t.coefficient * i_power(std::popcount(xm & zm));
        for (std::size_t j = 0; j < dim; ++j) {
            const double sign = (std::popcount(j & zm) & 1) ? -1.0 : 1.0;
            m(static_cast<Eigen::Index>(j ^ xm), static_cast<Eigen::Index>(j)) += base * sign;
        }
    }
    return m;
}

std::string format_term(const PauliTerm& term) {
    std::ostringstream out;
    out.precision(15);
    const complex c = term.coefficient;
    if (std::abs(c.imag()) <= 1e-15 * std::max(1.0, std::abs(c.real()))) {
        out << c.real();
    } else {
        out << '(' << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    }
    out << " * " << term.string.label();
    return out.str();
}

std::string PauliOperatorSum::to_text() const {
    std::string out;
    for (const auto& t : terms_) {
        out += format_term(t);
        out += '\n';
    }
    return out;
}

PauliOperatorSum PauliOperatorSum::from_text(const std::string& text, int n_qubits) {
    std::vector<PauliTerm> terms;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto star = line.find('*');
        if (star == std::string::npos) throw std::invalid_argument("bad term line '" + line + "'");
        std::string cs = line.substr(0, star);
        complex coeff;
        // coefficient is either a bare real or "(re+imi)"
        const auto open = cs.find('(');
        if (open != std::string::npos) {
            const auto close = cs.find(')');
            std::string body = cs.substr(open + 1, close - open - 1);
            if (body.empty() || body.back() != 'i') throw std::invalid_argument("bad coefficient '" + cs + "'");
            body.pop_back();
            std::size_t split = body.find_last_of("+-");
            if (split == std::string::npos || split == 0) throw std::invalid_argument("bad coefficient '" + cs + "'");
            // guard exponent signs like 1e-12
            while (split > 0 && (body[split - 1] == 'e' || body[split - 1] == 'E')) {
                split = body.find_last_of("+-", split - 2);
            }
            coeff = {std::stod(body.substr(0, split)), std::stod(body.substr(split))};
        } else {
            coeff = std::stod(cs);
        }
        terms.push_back({coeff, PauliString::from_label(line.substr(star + 1), n_qubits)});
    }
    return PauliOperatorSum(n_qubits, std::move(terms));
}

std::vector<long> weight_histogram(const PauliOperatorSum& op) {
    std::vector<long> hist(static_cast<std::size_t>(op.n_qubits()) + 1, 0);
    for (const auto& t : op.terms()) hist[static_cast<std::size_t>(t.string.weight())]++;
    return hist;
}

}  // namespace spinsim
