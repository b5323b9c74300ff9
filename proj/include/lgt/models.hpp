#pragma once

// The three mapped chain Hamiltonians and the per-model plaquette observable.
//
//   SU(2):  H = g² Σ_i [ -(3/2) Z_i Z_{i+1} + 3 Z_i ]
//               - (1/g²) Σ_i (1 - 3Z_{i-1}) X_i (1 - 3Z_{i+1})            (d = 2)
//
//   Z_N:    H = -(g²/2) Σ_i [ Z†_{i-1} Z_i + (1+ω^k) Z_i + H.c. ]
//               - (1/2g²) Σ_i (X_i + X†_i)                                 (d = N)
//
//   D3:     H = -g² Σ_i Σ_J α_J [ P^J_i + 2 Π_{i'<i} P^J_{i'} ]
//               - (1/2g²) Σ_i ( Tr[U†_i U_{i+1}] + H.c. ),  α_J = (dim J/6) ε^J
//                                                                          (d = 6)
//
// Defaults: periodic boundary for SU(2) and Z_N, open for D3 (the D3 string
// term orders the chain, so a wrap-around is not defined). The magnetic terms
// carry the sign that polarizes the small-g² ground state along +X, i.e.
// ⟨B_p⟩ → +1 in the magnetic limit.

#include "group_algebra.hpp"
#include "hilbert.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgt {

enum class Model { su2, zn, d3 };

inline std::string to_string(Model m) {
    switch (m) {
        case Model::su2: return "su2";
        case Model::zn: return "zn";
        case Model::d3: return "d3";
    }
    return "?";
}

inline Boundary default_boundary(Model m) { return m == Model::d3 ? Boundary::open : Boundary::periodic; }

/// One grid point of a model family.
struct ModelConfig {
    Model model = Model::zn;
    double g2 = 1.0;
    int L = 4;
    int N = 2;                             // Z_N only
    int k = 0;                             // Z_N superselection sector, 0 ≤ k < N
    std::array<double, 3> epsilon{1, 0, 0};  // D3 only, order (trivial, parity, fundamental)
    Boundary boundary = Boundary::periodic;

    static ModelConfig make(Model m) {
        ModelConfig c;
        c.model = m;
        c.boundary = default_boundary(m);
        return c;
    }
};

/// Local dimension d of the chain for a config.
inline int site_dimension(const ModelConfig& c) {
    switch (c.model) {
        case Model::su2: return 2;
        case Model::zn: return c.N;
        case Model::d3: return 6;
    }
    return 0;
}

inline void validate(const ModelConfig& c) {
    if (!(c.g2 > 0.0)) throw std::invalid_argument("config: g2 must be positive");
    if (c.L < 1) throw std::invalid_argument("config: L must be positive");
    switch (c.model) {
        case Model::su2:
            if (c.boundary == Boundary::periodic && c.L < 3)
                throw std::invalid_argument("su2_chain: periodic chain needs L >= 3 (three-site plaquette term)");
            break;
        case Model::zn:
            if (c.N < 2) throw std::invalid_argument("zn_chain: N must be at least 2");
            if (c.k < 0 || c.k >= c.N) throw std::invalid_argument("zn_chain: sector k must satisfy 0 <= k < N");
            if (c.boundary == Boundary::periodic && c.L < 2)
                throw std::invalid_argument("zn_chain: periodic chain needs L >= 2");
            break;
        case Model::d3:
            if (c.boundary != Boundary::open)
                throw std::invalid_argument("d3_chain: only open boundary is defined (the string term orders the chain)");
            if (c.L < 2) throw std::invalid_argument("d3_chain: L must be at least 2");
            break;
    }
}

// ── SU(2) hardcore-gluon chain ──────────────────────────────────────────────

inline HamiltonianSpec su2_chain(const ModelConfig& c) {
    if (c.model != Model::su2) throw std::invalid_argument("su2_chain: config.model is not su2");
    validate(c);
    const auto [Z, X] = clock_operators(2);
    HamiltonianSpec spec{2, c.L, c.boundary, {}};
    const bool periodic = c.boundary == Boundary::periodic;
    const double g2 = c.g2;

    for (int i = 0; i < c.L; ++i) {
        // electric part: -(3/2) g² Z_i Z_{i+1} + 3 g² Z_i
        if (periodic || i + 1 < c.L)
            spec.terms.push_back(make_term(-1.5 * g2, {{i, Z}, {(i + 1) % c.L, Z}}));
        spec.terms.push_back(make_term(3.0 * g2, {{i, Z}}));

        // magnetic part: -(1/g²) (1 - 3Z_{i-1}) X_i (1 - 3Z_{i+1}), expanded.
        // At an open edge the absent neighbor factor is replaced by 1 (its
        // value on the strong-coupling vacuum).
        const bool has_left = periodic || i - 1 >= 0;
        const bool has_right = periodic || i + 1 < c.L;
        const int left = (i - 1 + c.L) % c.L;
        const int right = (i + 1) % c.L;
        spec.terms.push_back(make_term(-1.0 / g2, {{i, X}}));
        if (has_left) spec.terms.push_back(make_term(3.0 / g2, {{left, Z}, {i, X}}));
        if (has_right) spec.terms.push_back(make_term(3.0 / g2, {{i, X}, {right, Z}}));
        if (has_left && has_right)
            spec.terms.push_back(make_term(-9.0 / g2, {{left, Z}, {i, X}, {right, Z}}));
    }
    return spec;
}

// ── Z_N clock chain ─────────────────────────────────────────────────────────

inline HamiltonianSpec zn_chain(const ModelConfig& c) {
    if (c.model != Model::zn) throw std::invalid_argument("zn_chain: config.model is not zn");
    validate(c);
    const int N = c.N;
    const auto [Z, X] = clock_operators(N);
    SiteOperator Zdg{"Zdg", Z.m.adjoint()};
    SiteOperator Xdg{"Xdg", X.m.adjoint()};
    HamiltonianSpec spec{N, c.L, c.boundary, {}};
    const bool periodic = c.boundary == Boundary::periodic;
    const cplx omega = std::exp(cplx(0.0, 2.0 * std::numbers::pi / N));
    const cplx long_coeff = -(c.g2 / 2.0) * (1.0 + std::pow(omega, c.k));

    for (int i = 0; i < c.L; ++i) {
        if (periodic || i - 1 >= 0) {
            const int left = (i - 1 + c.L) % c.L;
            spec.terms.push_back(make_term(-c.g2 / 2.0, {{left, Zdg}, {i, Z}}));
            spec.terms.push_back(make_term(-c.g2 / 2.0, {{left, Z}, {i, Zdg}}));
        }
        spec.terms.push_back(make_term(long_coeff, {{i, Z}}));
        spec.terms.push_back(make_term(std::conj(long_coeff), {{i, Zdg}}));
        spec.terms.push_back(make_term(-1.0 / (2.0 * c.g2), {{i, X}}));
        spec.terms.push_back(make_term(-1.0 / (2.0 * c.g2), {{i, Xdg}}));
    }
    return spec;
}

// ── D3 gauge-fixed chain ────────────────────────────────────────────────────

namespace detail {

/// Diagonal single-site operator g ↦ τ(g)_{ab} for the fundamental irrep.
inline SiteOperator d3_tau_entry(const std::vector<Irrep>& irreps, int a, int b) {
    SiteOperator op{"tau_" + std::to_string(a) + std::to_string(b), Eigen::MatrixXcd::Zero(6, 6)};
    for (int g = 0; g < 6; ++g) op.m(g, g) = irreps[2].matrices[static_cast<std::size_t>(g)](a, b);
    return op;
}

}  // namespace detail

struct D3Parts {
    HamiltonianSpec electric;
    HamiltonianSpec magnetic;
};

/// Electric and magnetic parts separately (their sum is d3_chain).
///
/// The link operator U is diagonal in the group basis, (U)_{ab}|g⟩ = τ(g)_{ab}|g⟩,
/// so Tr[U†_i U_{i+1}] + H.c. = 2 χ_τ(g_i^{-1} g_{i+1}) = 2 Σ_{ab} τ(g_i)_{ab} τ(g_{i+1})_{ab}
/// (τ is real orthogonal). The i = 0 string Π_{i'<0} is the empty product,
/// i.e. the identity, so each J contributes a constant -2g²α_J there.
inline D3Parts d3_chain_parts(const ModelConfig& c) {
    if (c.model != Model::d3) throw std::invalid_argument("d3_chain: config.model is not d3");
    validate(c);
    const FiniteGroup group = d3_group();
    const std::vector<Irrep> irreps = d3_irreps();

    D3Parts parts{{6, c.L, c.boundary, {}}, {6, c.L, c.boundary, {}}};

    for (int j = 0; j < 3; ++j) {
        const double alpha = irreps[static_cast<std::size_t>(j)].dim / 6.0 * c.epsilon[static_cast<std::size_t>(j)];
        if (alpha == 0.0) continue;
        SiteOperator proj{"P_" + irreps[static_cast<std::size_t>(j)].label,
                          projector_matrix(group, irreps[static_cast<std::size_t>(j)])};
        for (int i = 0; i < c.L; ++i) {
            parts.electric.terms.push_back(make_term(-c.g2 * alpha, {{i, proj}}));
            std::vector<std::pair<int, SiteOperator>> string_factors;
            for (int ip = 0; ip < i; ++ip) string_factors.emplace_back(ip, proj);
            parts.electric.terms.push_back(make_term(-2.0 * c.g2 * alpha, std::move(string_factors)));
        }
    }

    for (int i = 0; i + 1 < c.L; ++i)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                SiteOperator tau = detail::d3_tau_entry(irreps, a, b);
                parts.magnetic.terms.push_back(make_term(-1.0 / c.g2, {{i, tau}, {i + 1, tau}}));
            }
    return parts;
}

inline HamiltonianSpec d3_chain(const ModelConfig& c) {
    D3Parts parts = d3_chain_parts(c);
    HamiltonianSpec spec = std::move(parts.electric);
    for (OperatorTerm& t : parts.magnetic.terms) spec.terms.push_back(std::move(t));
    return spec;
}

/// 36x36 bond matrix of (Tr[U†U'] + H.c.)/2 evaluated through the character,
/// diag over |g, g'⟩ of χ_τ(g^{-1} g'). The performance path used in d3_chain
/// is the 4-term product expansion; this is the direct reference.
inline Eigen::MatrixXcd d3_plaquette_bond_character() {
    const FiniteGroup group = d3_group();
    const std::vector<Irrep> irreps = d3_irreps();
    Eigen::MatrixXcd bond = Eigen::MatrixXcd::Zero(36, 36);
    for (int g = 0; g < 6; ++g)
        for (int gp = 0; gp < 6; ++gp) {
            const int rel = group.mult[static_cast<std::size_t>(group.inverse[static_cast<std::size_t>(g)])]
                                      [static_cast<std::size_t>(gp)];
            // basis layout: site i is the LESS significant digit of g + 6 g'
            bond(g + 6 * gp, g + 6 * gp) = character(irreps[2], rel);
        }
    return bond;
}

/// The same bond matrix built by explicit contraction of the U matrices,
/// Σ_{ab} (U†)_{ab} ⊗' (U)_{ba} symmetrized; equality with the character form
/// is a test.
inline Eigen::MatrixXcd d3_plaquette_bond_contraction() {
    const std::vector<Irrep> irreps = d3_irreps();
    Eigen::MatrixXcd bond = Eigen::MatrixXcd::Zero(36, 36);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            const Eigen::MatrixXcd tau = detail::d3_tau_entry(irreps, a, b).m;
            Eigen::MatrixXcd kron = Eigen::MatrixXcd::Zero(36, 36);
            for (int g = 0; g < 6; ++g)
                for (int gp = 0; gp < 6; ++gp)
                    kron(g + 6 * gp, g + 6 * gp) = std::conj(tau(g, g)) * tau(gp, gp);
            bond += (kron + kron.adjoint()) / 2.0;
        }
    return bond;
}

// ── plaquette observable ────────────────────────────────────────────────────

/// Site-averaged plaquette operator, normalized by its largest eigenvalue so
/// the reported expectation lies in [-1, 1]:
///   SU(2): (1-3Z_{i-1}) X_i (1-3Z_{i+1}),  eigenvalues ±16   → /16
///   Z_N:   (X_i + X†_i)/2,                 eigenvalues ≤ 1   → /1
///   D3:    (Tr[U†_i U_{i+1}] + H.c.)/2 = χ_τ(g_i^{-1}g_{i+1}) ≤ 2 → /2
struct PlaquetteObservable {
    std::vector<OperatorTerm> terms;
    double normalization = 1.0;
    int averaged_over = 1;
};

inline PlaquetteObservable plaquette_observable(const ModelConfig& c) {
    validate(c);
    PlaquetteObservable obs;
    const bool periodic = c.boundary == Boundary::periodic;
    switch (c.model) {
        case Model::su2: {
            const auto [Z, X] = clock_operators(2);
            for (int i = 0; i < c.L; ++i) {
                const bool has_left = periodic || i - 1 >= 0;
                const bool has_right = periodic || i + 1 < c.L;
                const int left = (i - 1 + c.L) % c.L;
                const int right = (i + 1) % c.L;
                obs.terms.push_back(make_term(1.0, {{i, X}}));
                if (has_left) obs.terms.push_back(make_term(-3.0, {{left, Z}, {i, X}}));
                if (has_right) obs.terms.push_back(make_term(-3.0, {{i, X}, {right, Z}}));
                if (has_left && has_right)
                    obs.terms.push_back(make_term(9.0, {{left, Z}, {i, X}, {right, Z}}));
            }
            obs.normalization = 16.0;
            obs.averaged_over = c.L;
            break;
        }
        case Model::zn: {
            const auto [Z, X] = clock_operators(c.N);
            SiteOperator Xdg{"Xdg", X.m.adjoint()};
            for (int i = 0; i < c.L; ++i) {
                obs.terms.push_back(make_term(0.5, {{i, X}}));
                obs.terms.push_back(make_term(0.5, {{i, Xdg}}));
            }
            obs.normalization = 1.0;
            obs.averaged_over = c.L;
            break;
        }
        case Model::d3: {
            const std::vector<Irrep> irreps = d3_irreps();
            for (int i = 0; i + 1 < c.L; ++i)
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b) {
                        SiteOperator tau = detail::d3_tau_entry(irreps, a, b);
                        obs.terms.push_back(make_term(1.0, {{i, tau}, {i + 1, tau}}));
                    }
            obs.normalization = 2.0;
            obs.averaged_over = c.L - 1;
            break;
        }
    }
    return obs;
}

/// ⟨B_p⟩ of a state: site-averaged, normalized to [-1, 1].
inline double plaquette_value(const PlaquetteObservable& obs, const StateVector& state) {
    return expectation_real(state, obs.terms) / (obs.normalization * obs.averaged_over);
}

// ── ground-cluster symmetry maps ────────────────────────────────────────────

/// Per-site digit permutations that commute with the chain Hamiltonian,
/// applied identically on every site. Used to resolve degenerate ground
/// clusters into the symmetric combination (see solver.hpp).
///
///   Z_N: charge conjugation m ↦ (N-k-m) mod N commutes for every (N, k);
///        at k = N/2 the longitudinal field vanishes and the global shift
///        m ↦ m+1 joins, closing a 2N-element dihedral set.
///   D3:  the six left-multiplication maps g ↦ f g.
///   SU(2): only the identity (the ground state is unique at these sizes).
inline std::vector<std::vector<int>> resolution_site_perms(const ModelConfig& c) {
    validate(c);
    const int d = site_dimension(c);
    std::vector<std::vector<int>> perms;
    std::vector<int> id(static_cast<std::size_t>(d));
    for (int m = 0; m < d; ++m) id[static_cast<std::size_t>(m)] = m;
    perms.push_back(id);

    switch (c.model) {
        case Model::su2: break;
        case Model::zn: {
            const int N = c.N;
            const bool shift_symmetric = (N % 2 == 0) && (c.k == N / 2);
            const int amax = shift_symmetric ? N - 1 : 0;
            for (int a = 0; a <= amax; ++a) {
                std::vector<int> shift(static_cast<std::size_t>(N)), conj(static_cast<std::size_t>(N));
                for (int m = 0; m < N; ++m) {
                    shift[static_cast<std::size_t>(m)] = (m + a) % N;
                    conj[static_cast<std::size_t>(m)] = ((N - c.k - (m + a)) % N + N) % N;
                }
                if (a > 0) perms.push_back(std::move(shift));
                perms.push_back(std::move(conj));
            }
            break;
        }
        case Model::d3: {
            const FiniteGroup group = d3_group();
            for (int f = 1; f < 6; ++f) {
                std::vector<int> perm(6);
                for (int g = 0; g < 6; ++g)
                    perm[static_cast<std::size_t>(g)] = group.mult[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)];
                perms.push_back(std::move(perm));
            }
            break;
        }
    }
    return perms;
}

/// Model builder dispatch.
inline HamiltonianSpec build_chain(const ModelConfig& c) {
    switch (c.model) {
        case Model::su2: return su2_chain(c);
        case Model::zn: return zn_chain(c);
        case Model::d3: return d3_chain(c);
    }
    throw std::invalid_argument("build_chain: unknown model");
}

}  // namespace lgt
