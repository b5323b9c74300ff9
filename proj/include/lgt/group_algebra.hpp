#pragma once

// Finite-group data for the gauge-group chains: element tables, irreps,
// characters, and irrep projectors. Only the two groups the models need are
// constructed here (cyclic Z_N and the dihedral group D3), but the checks and
// the projector machinery are written against the generic FiniteGroup type.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lgt {

using cplx = std::complex<double>;

// ── group tables ────────────────────────────────────────────────────────────

/// A finite group given by its multiplication table. Element 0 is always the
/// identity. `mult[a][b]` is the index of a·b, `inverse[a]` of a^{-1}.
struct FiniteGroup {
    std::string name;
    int order = 0;
    std::vector<std::vector<int>> mult;
    std::vector<int> inverse;
    int identity = 0;
    std::vector<std::vector<int>> conjugacy_classes;

    int multiply(int a, int b) const {
        if (a < 0 || a >= order || b < 0 || b >= order)
            throw std::out_of_range("FiniteGroup::multiply: element index out of range");
        return mult[a][b];
    }
};

/// A unitary irreducible representation: one dim x dim matrix per element,
/// indexed like the group's element list.
struct Irrep {
    std::string label;
    int dim = 0;
    std::vector<Eigen::MatrixXcd> matrices;
};

/// χ^J(g), the trace of the irrep matrix.
inline cplx character(const Irrep& irrep, int g) {
    return irrep.matrices.at(static_cast<std::size_t>(g)).trace();
}

/// Character table indexed [irrep][conjugacy class].
struct CharacterTable {
    std::vector<std::vector<cplx>> chi;
};

inline CharacterTable character_table(const FiniteGroup& group, const std::vector<Irrep>& irreps) {
    CharacterTable table;
    table.chi.reserve(irreps.size());
    for (const Irrep& irrep : irreps) {
        std::vector<cplx> row;
        row.reserve(group.conjugacy_classes.size());
        for (const auto& cls : group.conjugacy_classes) row.push_back(character(irrep, cls.front()));
        table.chi.push_back(std::move(row));
    }
    return table;
}

namespace detail {

inline std::vector<std::vector<int>> conjugacy_classes_from_table(const std::vector<std::vector<int>>& mult,
                                                                  const std::vector<int>& inverse) {
    const int n = static_cast<int>(mult.size());
    std::vector<std::vector<int>> classes;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int g = 0; g < n; ++g) {
        if (seen[static_cast<std::size_t>(g)]) continue;
        std::vector<int> cls;
        for (int h = 0; h < n; ++h) {
            const int conj = mult[mult[h][g]][inverse[h]];  // h g h^{-1}
            if (!seen[static_cast<std::size_t>(conj)]) {
                seen[static_cast<std::size_t>(conj)] = true;
                cls.push_back(conj);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

}  // namespace detail

// ── constructors ────────────────────────────────────────────────────────────

/// Cyclic group Z_N with mult(a,b) = (a+b) mod N. Abelian, so every element
/// is its own conjugacy class.
inline FiniteGroup zn_cyclic(int N) {
    if (N < 2) throw std::invalid_argument("zn_cyclic: group order must be at least 2");
    FiniteGroup group;
    group.name = "Z" + std::to_string(N);
    group.order = N;
    group.mult.assign(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(N), 0));
    group.inverse.assign(static_cast<std::size_t>(N), 0);
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) group.mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % N;
        group.inverse[static_cast<std::size_t>(a)] = (N - a) % N;
        group.conjugacy_classes.push_back({a});
    }
    return group;
}

namespace detail {

// D3 element encoding: index 3b + a stands for s^b r^a, so the element order
// is (e, r, r^2, s, sr, sr^2). All d = 6 qudit bases follow this order.
// From s r s = r^{-1}: (b1,a1)·(b2,a2) = (b1+b2 mod 2, a1·(-1)^{b2} + a2 mod 3).
inline std::pair<int, int> d3_split(int g) { return {g / 3, g % 3}; }
inline int d3_fuse(int b, int a) { return 3 * b + a; }

}  // namespace detail

/// Dihedral group D3 = {e, r, r^2, s, sr, sr^2} with r^3 = s^2 = e, s r s = r^{-1}.
/// Conjugacy classes: {e}, {r, r^2}, {s, sr, sr^2}.
inline FiniteGroup d3_group() {
    FiniteGroup group;
    group.name = "D3";
    group.order = 6;
    group.mult.assign(6, std::vector<int>(6, 0));
    group.inverse.assign(6, 0);
    for (int g1 = 0; g1 < 6; ++g1) {
        const auto [b1, a1] = detail::d3_split(g1);
        for (int g2 = 0; g2 < 6; ++g2) {
            const auto [b2, a2] = detail::d3_split(g2);
            const int b = (b1 + b2) % 2;
            const int a = ((b2 ? -a1 : a1) + a2 + 6) % 3;
            group.mult[static_cast<std::size_t>(g1)][static_cast<std::size_t>(g2)] = detail::d3_fuse(b, a);
        }
    }
    for (int g = 0; g < 6; ++g)
        for (int h = 0; h < 6; ++h)
            if (group.mult[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] == 0)
                group.inverse[static_cast<std::size_t>(g)] = h;
    group.conjugacy_classes = detail::conjugacy_classes_from_table(group.mult, group.inverse);
    return group;
}

/// The three irreps of D3, in the fixed order (trivial, parity, fundamental).
/// The fundamental τ is realized with real orthogonal matrices,
///   τ(r) = rotation by 2π/3,  τ(s) = diag(1, -1),
/// which keeps Tr[U†U'] + H.c. manifestly real in the models.
inline std::vector<Irrep> d3_irreps() {
    std::vector<Irrep> irreps(3);
    irreps[0].label = "trivial";
    irreps[0].dim = 1;
    irreps[1].label = "parity";
    irreps[1].dim = 1;
    irreps[2].label = "fundamental";
    irreps[2].dim = 2;

    const double c = std::cos(2.0 * std::numbers::pi / 3.0);
    const double s = std::sin(2.0 * std::numbers::pi / 3.0);
    Eigen::Matrix2d rot;
    rot << c, -s, s, c;
    Eigen::Matrix2d ref;
    ref << 1, 0, 0, -1;

    for (int g = 0; g < 6; ++g) {
        const auto [b, a] = detail::d3_split(g);
        irreps[0].matrices.push_back(Eigen::MatrixXcd::Ones(1, 1));
        irreps[1].matrices.push_back(Eigen::MatrixXcd::Constant(1, 1, b ? -1.0 : 1.0));
        Eigen::Matrix2d m = Eigen::Matrix2d::Identity();
        for (int i = 0; i < a; ++i) m = rot * m;
        if (b) m = ref * m;
        irreps[2].matrices.push_back(m.cast<cplx>());
    }
    return irreps;
}

// ── regular representation and projectors ───────────────────────────────────

/// Left-regular action θ(h)|g⟩ = |hg⟩ as a |G|x|G| permutation matrix.
/// Satisfies θ(h1)θ(h2) = θ(h1 h2).
inline Eigen::MatrixXcd left_regular(const FiniteGroup& group, int h) {
    if (h < 0 || h >= group.order) throw std::out_of_range("left_regular: element index out of range");
    Eigen::MatrixXcd theta = Eigen::MatrixXcd::Zero(group.order, group.order);
    for (int g = 0; g < group.order; ++g)
        theta(group.mult[static_cast<std::size_t>(h)][static_cast<std::size_t>(g)], g) = 1.0;
    return theta;
}

/// Irrep projector on the regular representation,
///   P^J = (dim J / |G|) Σ_h χ^J(h)* θ(h).
/// The conjugated character makes P^J Hermitian and idempotent with
/// rank (dim J)^2, and Σ_J P^J = 1.
inline Eigen::MatrixXcd projector_matrix(const FiniteGroup& group, const Irrep& irrep) {
    if (static_cast<int>(irrep.matrices.size()) != group.order)
        throw std::invalid_argument("projector_matrix: irrep does not match group order");
    Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(group.order, group.order);
    for (int h = 0; h < group.order; ++h) proj += std::conj(character(irrep, h)) * left_regular(group, h);
    proj *= static_cast<double>(irrep.dim) / static_cast<double>(group.order);
    return proj;
}

}  // namespace lgt
