#pragma once

// Closed-form results for the Z_N chain in the electric (strong-coupling)
// limit: the single-site longitudinal energies E_a, their degeneracy classes
// across (N, k), the GHZ-like two-component ground states those degeneracies
// produce, and the analytic stabilizer entropy of such pair states.

#include "hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgt {

/// Electric-limit single-site energy of the clock value a for shift k:
///   E_a = -4 cos(pi k / N) cos((2 pi / N)(k/2 + a)).
inline double longitudinal_energy(int N, int k, int a) {
    if (N < 2) throw std::invalid_argument("longitudinal_energy: N must be at least 2");
    if (k < 0 || k >= N) throw std::invalid_argument("longitudinal_energy: need 0 <= k < N");
    return -4.0 * std::cos(std::numbers::pi * k / N) *
           std::cos(2.0 * std::numbers::pi / N * (k / 2.0 + a));
}

/// Degeneracy structure of {E_a}. Sets are listed in order of their smallest
/// member; ground_set is the degenerate set containing the global minimum and
/// stays empty when the minimum is unique.
struct DegeneracyReport {
    int N = 0;
    int k = 0;
    std::vector<double> energies;
    std::vector<std::vector<int>> degenerate_sets;
    std::vector<int> ground_set;
};

inline constexpr double kEnergyClassTol = 1e-12;  // absolute, energies are O(1)

inline DegeneracyReport degenerate_pairs(int N, int k) {
    DegeneracyReport report;
    report.N = N;
    report.k = k;
    for (int a = 0; a < N; ++a) report.energies.push_back(longitudinal_energy(N, k, a));

    std::vector<bool> used(static_cast<std::size_t>(N), false);
    double ground = report.energies[0];
    for (double e : report.energies) ground = std::min(ground, e);
    for (int a = 0; a < N; ++a) {
        if (used[static_cast<std::size_t>(a)]) continue;
        std::vector<int> cls;
        for (int b = 0; b < N; ++b)
            if (std::abs(report.energies[static_cast<std::size_t>(b)] -
                         report.energies[static_cast<std::size_t>(a)]) < kEnergyClassTol) {
                cls.push_back(b);
                used[static_cast<std::size_t>(b)] = true;
            }
        if (cls.size() < 2) continue;
        report.degenerate_sets.push_back(cls);
        if (std::abs(report.energies[static_cast<std::size_t>(cls[0])] - ground) < kEnergyClassTol)
            report.ground_set = report.degenerate_sets.back();
    }
    return report;
}

/// Normalized (|a...a> + |b...b>) / sqrt(2) on L sites of dimension N.
inline StateVector pair_state(int N, int L, int a, int b) {
    if (N < 2 || L < 1) throw std::invalid_argument("pair_state: need N >= 2 and L >= 1");
    if (a < 0 || a >= N || b < 0 || b >= N)
        throw std::invalid_argument("pair_state: labels must lie in [0, N)");
    if (a == b) throw std::invalid_argument("pair_state: labels must differ");
    StateVector state(N, L);
    std::int64_t repunit = 0, place = 1;
    for (int j = 0; j < L; ++j) {
        repunit += place;
        place *= N;
    }
    state.amp(repunit * a) = 1.0 / std::numbers::sqrt2;
    state.amp(repunit * b) = 1.0 / std::numbers::sqrt2;
    return state;
}

namespace detail {

/// Exact binomial coefficient, small arguments only.
inline std::int64_t binomial(std::int64_t n, std::int64_t r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    __int128 acc = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        acc *= n - r + i;
        acc /= i;
    }
    return static_cast<std::int64_t>(acc);
}

}  // namespace detail

/// Number of L-digit base-N strings whose digits sum to x:
///   c_x = sum_m (-1)^m C(L, m) C(x - mN + L - 1, L - 1),  exact integer.
inline std::int64_t multiplicity_cx(int L, int N, int x) {
    if (L < 1 || N < 2) throw std::invalid_argument("multiplicity_cx: need L >= 1 and N >= 2");
    if (x < 0 || x > L * (N - 1)) return 0;
    std::int64_t total = 0;
    for (int m = 0; m * N <= x; ++m) {
        const std::int64_t term =
            detail::binomial(L, m) * detail::binomial(x - static_cast<std::int64_t>(m) * N + L - 1, L - 1);
        total += (m % 2 == 0) ? term : -term;
    }
    return total;
}

/// Closed-form stabilizer 2-Renyi entropy of pair_state(N, L, a, b):
///
///   M2 = -ln[ ( sum_x c_x cos^4(pi D x / N) + N^L / 8 ) / N^L ],  D = b - a.
///
/// The N^L/8 term collects the two off-diagonal X-shift families, each
/// contributing |<P>|^4 = 1/16 on N^L strings. Pairs with 2D = 0 (mod N) gain
/// extra surviving families and are outside this formula's domain.
inline double analytic_sre_pair(int N, int L, int a, int b) {
    pair_state(N, 1, a, b);  // reuse the argument validation
    const int D = b - a;
    if (((2 * D) % N + N) % N == 0)
        throw std::invalid_argument("analytic_sre_pair: pair with 2(b-a) = 0 mod N is excluded");
    const double nl = std::pow(static_cast<double>(N), L);
    double s4 = 0.0;
    for (int x = 0; x <= L * (N - 1); ++x) {
        const double c = std::cos(std::numbers::pi * D * x / N);
        s4 += static_cast<double>(multiplicity_cx(L, N, x)) * c * c * c * c;
    }
    s4 += nl / 8.0;
    return -std::log(s4 / nl);
}

}  // namespace lgt
