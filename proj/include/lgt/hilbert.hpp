#pragma once

// Dense state vectors on chains of L qudits and matrix-free application of
// local operator terms.
//
// Basis layout (shared by every module): basis index i encodes the site
// configuration in base d with site 0 as the LEAST significant digit,
//   i = Σ_j m_j d^j,  m_j = digit of site j.
// For d = 6 the digits follow the D3 element order (e, r, r^2, s, sr, sr^2).

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lgt {

using cplx = std::complex<double>;

// ── state vectors ───────────────────────────────────────────────────────────

inline std::int64_t pow_ll(int base, int exp) {
    std::int64_t out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

/// Normalized amplitude vector of dimension d^L.
struct StateVector {
    int d = 2;
    int L = 1;
    Eigen::VectorXcd amp;

    StateVector() = default;
    StateVector(int d_, int L_) : d(d_), L(L_), amp(Eigen::VectorXcd::Zero(pow_ll(d_, L_))) {}

    std::int64_t dim() const { return amp.size(); }
    double norm() const { return amp.norm(); }
    void normalize() { amp /= amp.norm(); }

    /// Digit of site j in basis index i.
    int digit(std::int64_t i, int j) const {
        std::int64_t q = i;
        for (int l = 0; l < j; ++l) q /= d;
        return static_cast<int>(q % d);
    }
};

/// Basis product state |m_{L-1} ... m_1 m_0⟩ from per-site digits.
inline StateVector basis_state(int d, int L, const std::vector<int>& digits) {
    if (static_cast<int>(digits.size()) != L) throw std::invalid_argument("basis_state: digit count != L");
    std::int64_t idx = 0;
    for (int j = L - 1; j >= 0; --j) {
        if (digits[static_cast<std::size_t>(j)] < 0 || digits[static_cast<std::size_t>(j)] >= d)
            throw std::invalid_argument("basis_state: digit out of range");
        idx = idx * d + digits[static_cast<std::size_t>(j)];
    }
    StateVector psi(d, L);
    psi.amp(idx) = 1.0;
    return psi;
}

// ── operators ───────────────────────────────────────────────────────────────

/// A single-site d x d operator.
struct SiteOperator {
    std::string label;
    Eigen::MatrixXcd m;
};

/// coefficient · ⊗ (site, operator) factors, identity on unlisted sites.
/// Factor sites are strictly increasing; a term may be empty (a scalar).
struct OperatorTerm {
    cplx coeff = 1.0;
    std::vector<std::pair<int, SiteOperator>> factors;
};

enum class Boundary { open, periodic };

inline std::string to_string(Boundary b) { return b == Boundary::open ? "open" : "periodic"; }

/// A Hamiltonian as a plain sum of weighted local terms.
struct HamiltonianSpec {
    int d = 2;
    int L = 1;
    Boundary boundary = Boundary::periodic;
    std::vector<OperatorTerm> terms;

    std::int64_t dim() const { return pow_ll(d, L); }
};

inline OperatorTerm make_term(cplx coeff, std::vector<std::pair<int, SiteOperator>> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < factors.size(); ++i)
        if (factors[i].first == factors[i - 1].first)
            throw std::invalid_argument("make_term: repeated site in one term");
    return OperatorTerm{coeff, std::move(factors)};
}

/// Clock pair for a d = N site: Z = diag(ω^m) and the cyclic shift
/// X|m⟩ = |m+1 mod N⟩, with ω = exp(2πi/N). They obey Z X = ω X Z and
/// Z^N = X^N = 1. (The commutation phase of general powers is checked by
/// direct multiplication in the tests.)
inline std::pair<SiteOperator, SiteOperator> clock_operators(int N) {
    if (N < 2) throw std::invalid_argument("clock_operators: dimension must be at least 2");
    const cplx omega = std::exp(cplx(0.0, 2.0 * std::numbers::pi / N));
    SiteOperator Z{"Z", Eigen::MatrixXcd::Zero(N, N)};
    SiteOperator X{"X", Eigen::MatrixXcd::Zero(N, N)};
    for (int m = 0; m < N; ++m) {
        Z.m(m, m) = std::pow(omega, m);
        X.m((m + 1) % N, m) = 1.0;
    }
    return {Z, X};
}

/// Generalized Pauli (Weyl-Heisenberg) operator P_v = X^{v1} Z^{v2}.
/// The d^2 of them are Hilbert-Schmidt orthogonal: Tr[P_u† P_v] = d δ_{uv}.
inline SiteOperator pauli_qudit(int d, int v1, int v2) {
    if (v1 < 0 || v1 >= d || v2 < 0 || v2 >= d) throw std::out_of_range("pauli_qudit: exponent out of range");
    const auto [Z, X] = clock_operators(d);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d);
    for (int i = 0; i < v2; ++i) m = Z.m * m;
    for (int i = 0; i < v1; ++i) m = X.m * m;
    return SiteOperator{"X^" + std::to_string(v1) + "Z^" + std::to_string(v2), std::move(m)};
}

// ── matrix-free application ─────────────────────────────────────────────────

namespace detail {

/// out = (1 ⊗ .. ⊗ M_j ⊗ .. ⊗ 1) in, with M acting on site j.
/// Strided gather over the base-d digit of site j.
inline void apply_single_site(const Eigen::MatrixXcd& M, int j, int d, Eigen::VectorXcd& vec) {
    const std::int64_t dim = vec.size();
    const std::int64_t stride = [&] {
        std::int64_t s = 1;
        for (int l = 0; l < j; ++l) s *= d;
        return s;
    }();
    const std::int64_t block = stride * d;
    std::vector<cplx> scratch(static_cast<std::size_t>(d));
    for (std::int64_t base = 0; base < dim; base += block) {
        for (std::int64_t low = 0; low < stride; ++low) {
            for (int m = 0; m < d; ++m) scratch[static_cast<std::size_t>(m)] = vec(base + low + stride * m);
            for (int m = 0; m < d; ++m) {
                cplx acc = 0.0;
                for (int n = 0; n < d; ++n) acc += M(m, n) * scratch[static_cast<std::size_t>(n)];
                vec(base + low + stride * m) = acc;
            }
        }
    }
}

}  // namespace detail

/// coefficient · (⊗ factors)|ψ⟩ without materializing any d^L x d^L matrix.
/// Factors act on distinct sites, so they are applied sequentially.
inline StateVector apply_term(const OperatorTerm& term, const StateVector& state) {
    StateVector out = state;
    for (const auto& [site, op] : term.factors) {
        if (site < 0 || site >= state.L) throw std::out_of_range("apply_term: site index out of range");
        if (op.m.rows() != state.d || op.m.cols() != state.d)
            throw std::invalid_argument("apply_term: operator dimension does not match chain d");
        detail::apply_single_site(op.m, site, state.d, out.amp);
    }
    out.amp *= term.coeff;
    return out;
}

/// H|ψ⟩ = Σ_terms apply_term.
inline StateVector apply_hamiltonian(const HamiltonianSpec& spec, const StateVector& state) {
    if (spec.d != state.d || spec.L != state.L)
        throw std::invalid_argument("apply_hamiltonian: spec and state dimensions differ");
    StateVector out(state.d, state.L);
    for (const OperatorTerm& term : spec.terms) out.amp += apply_term(term, state).amp;
    return out;
}

/// ⟨ψ|T|ψ⟩.
inline cplx expectation(const StateVector& state, const OperatorTerm& term) {
    return state.amp.dot(apply_term(term, state).amp);
}

/// Σ_terms Re⟨ψ|T|ψ⟩ for a Hermitian sum of terms.
inline double expectation_real(const StateVector& state, const std::vector<OperatorTerm>& terms) {
    cplx acc = 0.0;
    for (const OperatorTerm& term : terms) acc += expectation(state, term);
    return acc.real();
}

/// Default threshold below which dense matrices are built (and the dense
/// eigensolver is used).
inline constexpr std::int64_t kDenseThreshold = 4096;

/// Dense d^L x d^L matrix of the operator sum. Guarded by `threshold`.
inline Eigen::MatrixXcd dense_matrix(const HamiltonianSpec& spec, std::int64_t threshold = kDenseThreshold) {
    const std::int64_t dim = spec.dim();
    if (dim > threshold) throw std::length_error("dense_matrix: dimension exceeds dense threshold");
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim, dim);
    StateVector col(spec.d, spec.L);
    for (std::int64_t j = 0; j < dim; ++j) {
        col.amp.setZero();
        col.amp(j) = 1.0;
        H.col(j) = apply_hamiltonian(spec, col).amp;
    }
    return H;
}

// ── binary state dump ───────────────────────────────────────────────────────
//
// Header: magic "LGTS", version u32, d u32, L u32, then d^L little-endian
// (re, im) double pairs. Written raw; the format targets little-endian hosts.

inline void dump_state(const StateVector& state, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("dump_state: cannot open " + path);
    const char magic[4] = {'L', 'G', 'T', 'S'};
    const std::uint32_t version = 1, d = static_cast<std::uint32_t>(state.d),
                        L = static_cast<std::uint32_t>(state.L);
    out.write(magic, 4);
    out.write(reinterpret_cast<const char*>(&version), 4);
    out.write(reinterpret_cast<const char*>(&d), 4);
    out.write(reinterpret_cast<const char*>(&L), 4);
    for (std::int64_t i = 0; i < state.dim(); ++i) {
        const double re = state.amp(i).real(), im = state.amp(i).imag();
        out.write(reinterpret_cast<const char*>(&re), 8);
        out.write(reinterpret_cast<const char*>(&im), 8);
    }
    if (!out) throw std::runtime_error("dump_state: write failed for " + path);
}

inline StateVector load_state(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_state: cannot open " + path);
    char magic[4];
    std::uint32_t version = 0, d = 0, L = 0;
    in.read(magic, 4);
    in.read(reinterpret_cast<char*>(&version), 4);
    in.read(reinterpret_cast<char*>(&d), 4);
    in.read(reinterpret_cast<char*>(&L), 4);
    if (!in || std::memcmp(magic, "LGTS", 4) != 0) throw std::runtime_error("load_state: bad magic in " + path);
    if (version != 1) throw std::runtime_error("load_state: unsupported version");
    StateVector state(static_cast<int>(d), static_cast<int>(L));
    for (std::int64_t i = 0; i < state.dim(); ++i) {
        double re = 0, im = 0;
        in.read(reinterpret_cast<char*>(&re), 8);
        in.read(reinterpret_cast<char*>(&im), 8);
        state.amp(i) = {re, im};
    }
    if (!in) throw std::runtime_error("load_state: truncated file " + path);
    return state;
}

}  // namespace lgt
