#pragma once

// Ground states, low-lying spectra, energy gaps, and symmetry-sector-resolved
// gaps. Dense diagonalization below kDenseThreshold, otherwise Lanczos with
// full reorthogonalization on the matrix-free apply. All randomness is seeded,
// so repeated runs are bit-identical.

#include "group_algebra.hpp"
#include "hilbert.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lgt {

inline constexpr double kDegeneracyTol = 1e-8;  // relative, |λi - λj| < tol·max(1,|λ|)
inline constexpr double kResidualTol = 1e-8;    // ‖Hv - λv‖ < tol·max(1,|λ|)
inline constexpr int kMaxLanczosIter = 2000;
inline constexpr std::uint64_t kDefaultSeed = 12345;

struct convergence_error : std::runtime_error {
    double best_residual;
    explicit convergence_error(double r)
        : std::runtime_error("solver: Lanczos did not converge, best residual " + std::to_string(r)),
          best_residual(r) {}
};

struct symmetry_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ascending low-lying eigenpairs with degeneracy annotation.
struct SpectrumResult {
    std::vector<double> eigenvalues;
    std::vector<StateVector> eigenvectors;
    std::vector<double> residuals;
    std::vector<std::pair<int, int>> clusters;  // [begin, end) runs of degenerate levels
    std::vector<double> ritz_history;           // lowest Ritz value per Lanczos step (dense: empty)
    int iterations = 0;                         // Lanczos steps (dense: 0)
};

namespace detail {

/// Deterministic complex Gaussian vector (mt19937_64 + Box-Muller, so the
/// stream is identical on every platform).
inline Eigen::VectorXcd seeded_gaussian_vector(std::int64_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto unit = [&rng] { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };
    Eigen::VectorXcd v(dim);
    for (std::int64_t i = 0; i < dim; ++i) {
        const double u1 = unit(), u2 = unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        v(i) = cplx(r * std::cos(2.0 * std::numbers::pi * u2), r * std::sin(2.0 * std::numbers::pi * u2));
    }
    return v;
}

inline std::vector<std::pair<int, int>> degeneracy_clusters(const std::vector<double>& vals, double tol) {
    std::vector<std::pair<int, int>> clusters;
    int begin = 0;
    for (int i = 1; i <= static_cast<int>(vals.size()); ++i) {
        const bool split =
            i == static_cast<int>(vals.size()) ||
            vals[static_cast<std::size_t>(i)] - vals[static_cast<std::size_t>(i - 1)] >
                tol * std::max(1.0, std::abs(vals[static_cast<std::size_t>(i - 1)]));
        if (split) {
            clusters.emplace_back(begin, i);
            begin = i;
        }
    }
    return clusters;
}

/// One deflated Lanczos stage: the lowest eigenpair of H restricted to the
/// orthogonal complement of `locked`. Full reorthogonalization against both
/// the locked vectors and the whole Krylov basis.
inline std::pair<double, Eigen::VectorXcd> lanczos_lowest(const HamiltonianSpec& spec,
                                                          const std::vector<Eigen::VectorXcd>& locked,
                                                          std::uint64_t seed, int max_iter,
                                                          int& iterations_used,
                                                          std::vector<double>* ritz_history) {
    const std::int64_t dim = spec.dim();
    auto project_out = [&](Eigen::VectorXcd& w) {
        for (const auto& u : locked) w -= u.dot(w) * u;
    };

    Eigen::VectorXcd v = seeded_gaussian_vector(dim, seed);
    project_out(v);
    if (v.norm() < 1e-12) throw convergence_error(1.0);  // complement exhausted
    v.normalize();

    std::vector<Eigen::VectorXcd> basis{v};
    std::vector<double> alpha, beta;
    StateVector work(spec.d, spec.L);
    double best_residual = std::numeric_limits<double>::infinity();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    for (int k = 0; k < max_iter && k < dim; ++k) {
        work.amp = basis.back();
        Eigen::VectorXcd w = apply_hamiltonian(spec, work).amp;
        const double a = basis.back().dot(w).real();
        alpha.push_back(a);
        w -= a * basis.back();
        if (k > 0) w -= beta.back() * basis[basis.size() - 2];
        project_out(w);
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& u : basis) w -= u.dot(w) * u;
        const double b = w.norm();
        ++iterations_used;

        // Ritz data of the current tridiagonal T_k
        const int n = static_cast<int>(alpha.size());
        Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i) {
            T(i, i) = alpha[static_cast<std::size_t>(i)];
            if (i > 0) T(i, i - 1) = T(i - 1, i) = beta[static_cast<std::size_t>(i - 1)];
        }
        tri.compute(T);
        const double theta = tri.eigenvalues()(0);
        if (ritz_history) ritz_history->push_back(theta);
        const double resid_est = b * std::abs(tri.eigenvectors()(n - 1, 0));
        best_residual = std::min(best_residual, resid_est);
        if (resid_est <= 0.1 * kResidualTol * std::max(1.0, std::abs(theta)) || b < 1e-13 || k + 1 == dim) {
            Eigen::VectorXcd ritz = Eigen::VectorXcd::Zero(dim);
            for (int i = 0; i < n; ++i) ritz += tri.eigenvectors()(i, 0) * basis[static_cast<std::size_t>(i)];
            project_out(ritz);
            ritz.normalize();
            work.amp = ritz;
            const Eigen::VectorXcd hr = apply_hamiltonian(spec, work).amp;
            const double lambda = ritz.dot(hr).real();
            const double resid = (hr - lambda * ritz).norm();
            if (resid <= kResidualTol * std::max(1.0, std::abs(lambda))) return {lambda, ritz};
            if (b < 1e-13) {
                // Krylov space exhausted without convergence: restart with a
                // fresh direction orthogonal to everything seen so far.
                Eigen::VectorXcd fresh = seeded_gaussian_vector(dim, seed + 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(k));
                project_out(fresh);
                for (const auto& u : basis) fresh -= u.dot(fresh) * u;
                if (fresh.norm() < 1e-12) return {lambda, ritz};  // space truly exhausted
                fresh.normalize();
                basis.push_back(fresh);
                beta.push_back(0.0);
                continue;
            }
            if (k + 1 == dim || k + 1 == max_iter) {
                best_residual = std::min(best_residual, resid);
                break;
            }
        }
        basis.push_back(w / b);
        beta.push_back(b);
    }
    throw convergence_error(best_residual);
}

}  // namespace detail

/// m lowest eigenpairs via sequentially deflated Lanczos, one stage per
/// eigenpair so exact degeneracies are recovered. Exposed separately so the
/// iterative path can be checked against the dense one on overlapping sizes.
inline SpectrumResult low_spectrum_lanczos(const HamiltonianSpec& spec, int m,
                                           double degeneracy_tol = kDegeneracyTol,
                                           std::uint64_t seed = kDefaultSeed,
                                           int max_iter = kMaxLanczosIter) {
    const std::int64_t dim = spec.dim();
    if (m < 1) throw std::invalid_argument("low_spectrum_lanczos: m must be at least 1");
    m = static_cast<int>(std::min<std::int64_t>(m, dim));
    SpectrumResult result;
    std::vector<Eigen::VectorXcd> locked;
    for (int i = 0; i < m; ++i) {
        auto [lambda, vec] = detail::lanczos_lowest(spec, locked, seed + static_cast<std::uint64_t>(i),
                                                    max_iter, result.iterations,
                                                    i == 0 ? &result.ritz_history : nullptr);
        StateVector v(spec.d, spec.L);
        v.amp = vec;
        StateVector hv = apply_hamiltonian(spec, v);
        result.residuals.push_back((hv.amp - lambda * v.amp).norm());
        result.eigenvalues.push_back(lambda);
        result.eigenvectors.push_back(std::move(v));
        locked.push_back(std::move(vec));
    }
    // deflation returns pairs lowest-first by construction; enforce order
    for (std::size_t i = 1; i < result.eigenvalues.size(); ++i)
        if (result.eigenvalues[i] < result.eigenvalues[i - 1] - 1e-9)
            throw convergence_error(result.residuals[i]);
    result.clusters = detail::degeneracy_clusters(result.eigenvalues, degeneracy_tol);
    return result;
}

/// m lowest eigenpairs, ascending, with degeneracy clusters annotated.
/// Dense below kDenseThreshold, Lanczos above.
inline SpectrumResult low_spectrum(const HamiltonianSpec& spec, int m,
                                   double degeneracy_tol = kDegeneracyTol,
                                   std::uint64_t seed = kDefaultSeed, int max_iter = kMaxLanczosIter) {
    const std::int64_t dim = spec.dim();
    if (m < 1) throw std::invalid_argument("low_spectrum: m must be at least 1");
    m = static_cast<int>(std::min<std::int64_t>(m, dim));
    if (dim > kDenseThreshold) return low_spectrum_lanczos(spec, m, degeneracy_tol, seed, max_iter);

    SpectrumResult result;
    const Eigen::MatrixXcd H = dense_matrix(spec);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    for (int i = 0; i < m; ++i) {
        result.eigenvalues.push_back(es.eigenvalues()(i));
        StateVector v(spec.d, spec.L);
        v.amp = es.eigenvectors().col(i);
        result.residuals.push_back((H * v.amp - es.eigenvalues()(i) * v.amp).norm());
        result.eigenvectors.push_back(std::move(v));
    }
    result.clusters = detail::degeneracy_clusters(result.eigenvalues, degeneracy_tol);
    return result;
}

/// Lowest eigenpair.
inline std::pair<double, StateVector> ground_state(const HamiltonianSpec& spec,
                                                   std::uint64_t seed = kDefaultSeed) {
    SpectrumResult r = low_spectrum(spec, 1, kDegeneracyTol, seed);
    return {r.eigenvalues[0], std::move(r.eigenvectors[0])};
}

/// E1 - E0.
inline double energy_gap(const HamiltonianSpec& spec, std::uint64_t seed = kDefaultSeed) {
    SpectrumResult r = low_spectrum(spec, 2, kDegeneracyTol, seed);
    return r.eigenvalues[1] - r.eigenvalues[0];
}

// ── global symmetry action ──────────────────────────────────────────────────

/// Apply the same single-site digit permutation m ↦ perm[m] on every site.
inline StateVector apply_site_permutation(const StateVector& state, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != state.d)
        throw std::invalid_argument("apply_site_permutation: permutation size != d");
    StateVector out(state.d, state.L);
    for (std::int64_t i = 0; i < state.dim(); ++i) {
        std::int64_t target = 0, q = i;
        std::int64_t place = 1;
        for (int j = 0; j < state.L; ++j) {
            target += place * perm[static_cast<std::size_t>(q % state.d)];
            q /= state.d;
            place *= state.d;
        }
        out.amp(target) = state.amp(i);
    }
    return out;
}

/// Global group action Θ(f) = Π_i θ_i(f) with θ(f)|g⟩ = |fg⟩ (requires d = |G|).
inline StateVector apply_global_group_action(const StateVector& state, const FiniteGroup& group, int f) {
    if (group.order != state.d)
        throw std::invalid_argument("apply_global_group_action: group order != site dimension");
    std::vector<int> perm(static_cast<std::size_t>(group.order));
    for (int g = 0; g < group.order; ++g)
        perm[static_cast<std::size_t>(g)] = group.mult[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)];
    return apply_site_permutation(state, perm);
}

namespace detail {

/// Count of trivial-sector states inside one degenerate cluster, via the
/// eigenvalues of the cluster Gram matrix A_{ij} = ⟨v_i| P_triv |v_j⟩ with
/// P_triv = (1/|G|) Σ_f Θ(f). A is a projector compressed to the cluster, so
/// its eigenvalues sit near 0 or 1.
inline int trivial_multiplicity(const std::vector<StateVector>& vecs, int begin, int end,
                                const FiniteGroup& group) {
    const int p = end - begin;
    Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(p, p);
    for (int j = 0; j < p; ++j) {
        Eigen::VectorXcd proj = Eigen::VectorXcd::Zero(vecs[static_cast<std::size_t>(begin + j)].dim());
        for (int f = 0; f < group.order; ++f)
            proj += apply_global_group_action(vecs[static_cast<std::size_t>(begin + j)], group, f).amp;
        proj /= static_cast<double>(group.order);
        for (int i = 0; i < p; ++i)
            gram(i, j) = vecs[static_cast<std::size_t>(begin + i)].amp.dot(proj);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((gram + gram.adjoint()) / 2.0);
    int mult = 0;
    for (int i = 0; i < p; ++i)
        if (es.eigenvalues()(i) > 0.5) ++mult;
    return mult;
}

}  // namespace detail

/// (gap within the trivial symmetry sector, unrestricted gap).
///
/// Θ(f) must commute with H; this is probed on random vectors and a
/// violation throws symmetry_error. The trivial-sector gap is the distance
/// between the two lowest levels that carry a trivial-sector state.
inline std::pair<double, double> symmetry_resolved_gap(const HamiltonianSpec& spec, const FiniteGroup& group,
                                                       std::uint64_t seed = kDefaultSeed) {
    if (group.order != spec.d)
        throw std::invalid_argument("symmetry_resolved_gap: group order must equal the site dimension");

    // probe [H, Θ(f)] = 0 on seeded random vectors
    for (int probe = 0; probe < 2; ++probe) {
        StateVector v(spec.d, spec.L);
        v.amp = detail::seeded_gaussian_vector(spec.dim(), seed + 77 + static_cast<std::uint64_t>(probe));
        v.normalize();
        for (int f = 0; f < group.order; ++f) {
            const StateVector htv = apply_hamiltonian(spec, apply_global_group_action(v, group, f));
            const StateVector thv = apply_global_group_action(apply_hamiltonian(spec, v), group, f);
            if ((htv.amp - thv.amp).norm() > 1e-8)
                throw symmetry_error("symmetry_resolved_gap: Hamiltonian does not commute with the group action");
        }
    }

    // dense sizes get the full spectrum (the walk below is then guaranteed to
    // terminate); the iterative path grows its window instead
    int m = spec.dim() <= kDenseThreshold ? static_cast<int>(spec.dim())
                                          : std::max<int>(4, 2 * group.order);
    while (true) {
        m = static_cast<int>(std::min<std::int64_t>(m, spec.dim()));
        SpectrumResult spectrum = low_spectrum(spec, m, kDegeneracyTol, seed);
        std::vector<double> trivial_energies;
        for (const auto& [begin, end] : spectrum.clusters) {
            const int mult = detail::trivial_multiplicity(spectrum.eigenvectors, begin, end, group);
            for (int i = 0; i < mult; ++i)
                trivial_energies.push_back(spectrum.eigenvalues[static_cast<std::size_t>(begin)]);
            if (trivial_energies.size() >= 2) break;
        }
        if (trivial_energies.size() >= 2)
            return {trivial_energies[1] - trivial_energies[0],
                    spectrum.eigenvalues[1] - spectrum.eigenvalues[0]};
        if (m >= spec.dim() || m >= 64)
            throw std::runtime_error(
                "symmetry_resolved_gap: fewer than two trivial-sector levels among the lowest " +
                std::to_string(m));
        m *= 2;
    }
}

// ── degenerate-cluster resolution ───────────────────────────────────────────

/// Symmetric combination of a degenerate ground cluster.
///
/// At strong coupling the physical splittings underflow double precision and
/// the raw eigenvectors are an arbitrary rotation of the cluster. The
/// perturbative ground state is the symmetry-symmetric combination, recovered
/// as the top eigenvector of the cluster-averaged symmetry Gram matrix
///   A = (1/n) Σ_ops V† (op V).
/// The op set comes from models::resolution_site_perms and is closed under
/// inverses, so A is Hermitian up to rounding.
inline StateVector resolve_ground_cluster(const SpectrumResult& spectrum,
                                          const std::vector<std::vector<int>>& site_perms) {
    if (spectrum.eigenvectors.empty()) throw std::invalid_argument("resolve_ground_cluster: empty spectrum");
    const auto [begin, end] = spectrum.clusters.at(0);
    const int p = end - begin;
    if (p == 1 || site_perms.size() <= 1) {
        StateVector out = spectrum.eigenvectors[static_cast<std::size_t>(begin)];
        out.normalize();
        return out;
    }
    Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(p, p);
    for (int j = 0; j < p; ++j) {
        Eigen::VectorXcd avg = Eigen::VectorXcd::Zero(spectrum.eigenvectors[0].dim());
        for (const auto& perm : site_perms)
            avg += apply_site_permutation(spectrum.eigenvectors[static_cast<std::size_t>(begin + j)], perm).amp;
        avg /= static_cast<double>(site_perms.size());
        for (int i = 0; i < p; ++i)
            gram(i, j) = spectrum.eigenvectors[static_cast<std::size_t>(begin + i)].amp.dot(avg);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((gram + gram.adjoint()) / 2.0);
    StateVector out(spectrum.eigenvectors[0].d, spectrum.eigenvectors[0].L);
    out.amp = Eigen::VectorXcd::Zero(out.dim());
    for (int i = 0; i < p; ++i)
        out.amp += es.eigenvectors()(i, p - 1) * spectrum.eigenvectors[static_cast<std::size_t>(begin + i)].amp;
    out.normalize();
    return out;
}

}  // namespace lgt
