#pragma once

// Quantum-resource measures evaluated on exact state vectors:
//   ggm   geometric measure of multipartite entanglement G2 over all
//         bipartitions,
//   sre2  stabilizer 2-Renyi entropy M2 over the generalized Pauli group,
//   faf2  fermionic antiflatness F2 from the Majorana covariance matrix.
// Parallel evaluation partitions work into fixed blocks whose partial results
// are reduced in block order, so any thread count reproduces the serial
// result bit for bit.

#include "hilbert.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace lgt {

inline constexpr double kPurityTol = 1e-8;
inline constexpr double kSreBudget = 4294967296.0;  // d^(2L) pauli strings, 2^32 cap

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct purity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

/// Run body(0..n_blocks-1) across a thread pool. Each block writes only its
/// own slot, so scheduling order cannot change any result.
template <typename Fn>
inline void run_blocks(int n_blocks, int threads, Fn&& body) {
    threads = std::max(1, threads);
    if (threads == 1 || n_blocks <= 1) {
        for (int b = 0; b < n_blocks; ++b) body(b);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    const int workers = std::min(threads, n_blocks);
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (int b = next.fetch_add(1); b < n_blocks; b = next.fetch_add(1)) body(b);
        });
    for (auto& th : pool) th.join();
}

}  // namespace detail

// ── geometric measure of entanglement ───────────────────────────────────────

/// G2 = 1 - max over bipartitions of the largest squared Schmidt coefficient.
/// Bipartitions are enumerated as site subsets containing site 0, which
/// visits each of the 2^(L-1) - 1 distinct cuts exactly once.
inline double ggm(const StateVector& state, int threads = 1) {
    if (state.L < 2) throw std::invalid_argument("ggm: need at least two sites");
    const std::int64_t dim = state.dim();
    const std::uint64_t full = (1ULL << state.L) - 1;

    std::vector<std::uint64_t> masks;
    for (std::uint64_t m = 1; m < full; ++m)
        if (m & 1ULL) masks.push_back(m);

    std::vector<double> slot(masks.size(), 0.0);
    detail::run_blocks(static_cast<int>(masks.size()), threads, [&](int b) {
        const std::uint64_t mask = masks[static_cast<std::size_t>(b)];
        std::int64_t dA = 1, dB = 1;
        for (int j = 0; j < state.L; ++j)
            ((mask >> j) & 1ULL ? dA : dB) *= state.d;
        Eigen::MatrixXcd psi(dA, dB);
        for (std::int64_t i = 0; i < dim; ++i) {
            std::int64_t row = 0, col = 0, pa = 1, pb = 1, q = i;
            for (int j = 0; j < state.L; ++j) {
                const std::int64_t digit = q % state.d;
                q /= state.d;
                if ((mask >> j) & 1ULL) {
                    row += pa * digit;
                    pa *= state.d;
                } else {
                    col += pb * digit;
                    pb *= state.d;
                }
            }
            psi(row, col) = state.amp(i);
        }
        // top squared Schmidt coefficient = largest eigenvalue of the smaller Gram
        Eigen::MatrixXcd gram = dA <= dB ? Eigen::MatrixXcd(psi * psi.adjoint())
                                         : Eigen::MatrixXcd(psi.adjoint() * psi);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
        slot[static_cast<std::size_t>(b)] = es.eigenvalues()(gram.rows() - 1);
    });

    double max_overlap = 0.0;
    for (double v : slot) max_overlap = std::max(max_overlap, v);
    return 1.0 - max_overlap;
}

// ── stabilizer Renyi entropy ────────────────────────────────────────────────

namespace detail {

inline std::int64_t shift_index(std::int64_t m, std::int64_t r, int d, int L) {
    std::int64_t out = 0, place = 1;
    for (int j = 0; j < L; ++j) {
        out += place * ((m % d + r % d) % d);
        m /= d;
        r /= d;
        place *= d;
    }
    return out;
}

}  // namespace detail

/// M2 = -ln[ sum_P |<P>|^4 / d^L ] over all d^(2L) strings P = X^r Z^s.
///
/// For each shift string r the Z-string sum is a length-L discrete Fourier
/// transform of phi_m = conj(psi_{m+r}) psi_m, done axis by axis. The same
/// pass accumulates sum_P |<P>|^2, which must equal d^L for a normalized pure
/// state; a violation beyond kPurityTol throws purity_error.
inline double sre2(const StateVector& state, int threads = 1) {
    const int d = state.d, L = state.L;
    const std::int64_t dim = state.dim();
    if (std::pow(static_cast<double>(d), 2.0 * L) > kSreBudget)
        throw budget_error("sre2: d^(2L) exceeds the 2^32 string budget");

    std::vector<cplx> omega_pow(static_cast<std::size_t>(d) * d);
    for (int s = 0; s < d; ++s)
        for (int m = 0; m < d; ++m)
            omega_pow[static_cast<std::size_t>(s) * d + m] =
                std::polar(1.0, 2.0 * std::numbers::pi * s * m / d);

    const int n_blocks = static_cast<int>(std::min<std::int64_t>(64, dim));
    std::vector<double> slot4(static_cast<std::size_t>(n_blocks), 0.0);
    std::vector<double> slot2(static_cast<std::size_t>(n_blocks), 0.0);

    detail::run_blocks(n_blocks, threads, [&](int b) {
        const std::int64_t r_begin = dim * b / n_blocks;
        const std::int64_t r_end = dim * (b + 1) / n_blocks;
        std::vector<cplx> phi(static_cast<std::size_t>(dim));
        std::vector<cplx> tmp(static_cast<std::size_t>(d));
        double acc4 = 0.0, acc2 = 0.0;
        for (std::int64_t r = r_begin; r < r_end; ++r) {
            for (std::int64_t m = 0; m < dim; ++m)
                phi[static_cast<std::size_t>(m)] =
                    std::conj(state.amp(detail::shift_index(m, r, d, L))) * state.amp(m);
            // in-place DFT along each site axis
            std::int64_t stride = 1;
            for (int j = 0; j < L; ++j) {
                for (std::int64_t base = 0; base < dim; ++base) {
                    if ((base / stride) % d != 0) continue;
                    for (int s = 0; s < d; ++s) {
                        cplx acc = 0.0;
                        for (int t = 0; t < d; ++t)
                            acc += omega_pow[static_cast<std::size_t>(s) * d + t] *
                                   phi[static_cast<std::size_t>(base + t * stride)];
                        tmp[static_cast<std::size_t>(s)] = acc;
                    }
                    for (int s = 0; s < d; ++s)
                        phi[static_cast<std::size_t>(base + s * stride)] = tmp[static_cast<std::size_t>(s)];
                }
                stride *= d;
            }
            for (std::int64_t s = 0; s < dim; ++s) {
                const double p2 = std::norm(phi[static_cast<std::size_t>(s)]);
                acc2 += p2;
                acc4 += p2 * p2;
            }
        }
        slot4[static_cast<std::size_t>(b)] = acc4;
        slot2[static_cast<std::size_t>(b)] = acc2;
    });

    double sum4 = 0.0, sum2 = 0.0;
    for (int b = 0; b < n_blocks; ++b) {
        sum4 += slot4[static_cast<std::size_t>(b)];
        sum2 += slot2[static_cast<std::size_t>(b)];
    }
    const double purity = sum2 / static_cast<double>(dim);
    if (std::abs(purity - 1.0) > kPurityTol)
        throw purity_error("sre2: purity check failed, sum_P |<P>|^2 / d^L = " + std::to_string(purity));
    return -std::log(sum4 / static_cast<double>(dim));
}

/// Reference implementation that evaluates every string expectation value
/// directly. Exponentially slower than sre2; used as an arbiter in tests.
inline double sre2_naive(const StateVector& state) {
    const int d = state.d, L = state.L;
    const std::int64_t dim = state.dim();
    double sum4 = 0.0;
    for (std::int64_t r = 0; r < dim; ++r) {
        for (std::int64_t s = 0; s < dim; ++s) {
            cplx exp_val = 0.0;
            for (std::int64_t m = 0; m < dim; ++m) {
                std::int64_t phase_num = 0, mm = m, ss = s;
                for (int j = 0; j < L; ++j) {
                    phase_num += (mm % d) * (ss % d);
                    mm /= d;
                    ss /= d;
                }
                exp_val += std::conj(state.amp(detail::shift_index(m, r, d, L))) *
                           std::polar(1.0, 2.0 * std::numbers::pi * (phase_num % d) / d) * state.amp(m);
            }
            const double p2 = std::norm(exp_val);
            sum4 += p2 * p2;
        }
    }
    return -std::log(sum4 / static_cast<double>(dim));
}

// ── fermionic antiflatness ──────────────────────────────────────────────────

/// Jordan-Wigner dressing convention for the Majorana operators on a qubit
/// chain. xstring dresses Z_j and Y_j with X strings, zstring dresses X_j and
/// Y_j with Z strings.
enum class JwConvention { xstring, zstring };

inline std::string to_string(JwConvention c) {
    return c == JwConvention::xstring ? "xstring" : "zstring";
}

namespace detail {

/// gamma_m |psi> for qubit chains, site 0 carrying the least significant bit.
inline Eigen::VectorXcd apply_majorana(const StateVector& state, int m, JwConvention conv) {
    const int j = m / 2;
    const bool odd = m % 2 != 0;
    const std::int64_t dim = state.dim();
    const std::uint64_t below = (1ULL << j) - 1;
    Eigen::VectorXcd out(dim);
    if (conv == JwConvention::xstring) {
        // gamma_{2j} = (prod_{l<j} X_l) Z_j,  gamma_{2j+1} = (prod_{l<j} X_l) Y_j
        const std::uint64_t flip = odd ? (below | (1ULL << j)) : below;
        for (std::int64_t i = 0; i < dim; ++i) {
            const bool bj = (static_cast<std::uint64_t>(i) >> j) & 1ULL;
            const cplx phase = odd ? (bj ? cplx(0, 1) : cplx(0, -1)) : cplx(bj ? -1.0 : 1.0);
            out(i) = phase * state.amp(static_cast<std::int64_t>(static_cast<std::uint64_t>(i) ^ flip));
        }
    } else {
        // gamma_{2j} = (prod_{l<j} Z_l) X_j,  gamma_{2j+1} = (prod_{l<j} Z_l) Y_j
        for (std::int64_t i = 0; i < dim; ++i) {
            const bool bj = (static_cast<std::uint64_t>(i) >> j) & 1ULL;
            const int parity = std::popcount(static_cast<std::uint64_t>(i) & below) & 1;
            cplx phase = odd ? (bj ? cplx(0, 1) : cplx(0, -1)) : cplx(1.0);
            if (parity) phase = -phase;
            out(i) = phase * state.amp(static_cast<std::int64_t>(static_cast<std::uint64_t>(i) ^ (1ULL << j)));
        }
    }
    return out;
}

}  // namespace detail

/// Majorana covariance matrix M_{mn} = Im <gamma_m psi, gamma_n psi>, a real
/// antisymmetric 2L x 2L matrix. Qubit chains only.
inline Eigen::MatrixXd majorana_covariance(const StateVector& state,
                                           JwConvention conv = JwConvention::xstring) {
    if (state.d != 2) throw std::invalid_argument("majorana_covariance: defined for d = 2 only");
    const int n = 2 * state.L;
    std::vector<Eigen::VectorXcd> gamma_psi;
    gamma_psi.reserve(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) gamma_psi.push_back(detail::apply_majorana(state, m, conv));
    Eigen::MatrixXd cov(n, n);
    for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k)
            cov(m, k) = gamma_psi[static_cast<std::size_t>(m)].dot(gamma_psi[static_cast<std::size_t>(k)]).imag();
    return cov;
}

/// F2 = L - (1/2) tr[(M^T M)^2]. Vanishes exactly on fermionic Gaussian
/// states, where M^T M = 1.
inline double faf2(const StateVector& state, JwConvention conv = JwConvention::xstring) {
    if (state.d != 2) throw std::invalid_argument("faf2: defined for d = 2 only");
    const Eigen::MatrixXd cov = majorana_covariance(state, conv);
    const Eigen::MatrixXd mtm = cov.transpose() * cov;
    return static_cast<double>(state.L) - 0.5 * (mtm * mtm).trace();
}

// ── random states ───────────────────────────────────────────────────────────

/// Haar-random pure state (normalized complex Gaussian vector), deterministic
/// in the seed across platforms.
inline StateVector haar_state(int d, int L, std::uint64_t seed) {
    StateVector state(d, L);
    std::mt19937_64 rng(seed);
    auto unit = [&rng] { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };
    for (std::int64_t i = 0; i < state.dim(); ++i) {
        const double u1 = unit(), u2 = unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        state.amp(i) = cplx(r * std::cos(2.0 * std::numbers::pi * u2),
                            r * std::sin(2.0 * std::numbers::pi * u2));
    }
    state.normalize();
    return state;
}

}  // namespace lgt
