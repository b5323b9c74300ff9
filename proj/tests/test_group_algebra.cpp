#include "catch_amalgamated.hpp"

#include "lgt/group_algebra.hpp"

#include <cmath>

using namespace lgt;

namespace {

void check_group_axioms(const FiniteGroup& g) {
    REQUIRE(g.order >= 1);
    REQUIRE(g.identity == 0);
    for (int a = 0; a < g.order; ++a) {
        REQUIRE(g.multiply(0, a) == a);
        REQUIRE(g.multiply(a, 0) == a);
        REQUIRE(g.multiply(a, g.inverse[static_cast<std::size_t>(a)]) == 0);
        REQUIRE(g.multiply(g.inverse[static_cast<std::size_t>(a)], a) == 0);
    }
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            for (int c = 0; c < g.order; ++c)
                REQUIRE(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
    int covered = 0;
    for (const auto& cls : g.conjugacy_classes) covered += static_cast<int>(cls.size());
    REQUIRE(covered == g.order);
}

}  // namespace

TEST_CASE("cyclic groups satisfy the group axioms", "[group_algebra]") {
    for (int N = 2; N <= 6; ++N) {
        const FiniteGroup g = zn_cyclic(N);
        REQUIRE(g.order == N);
        check_group_axioms(g);
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) REQUIRE(g.multiply(a, b) == (a + b) % N);
        // abelian: one singleton class per element
        REQUIRE(g.conjugacy_classes.size() == static_cast<std::size_t>(N));
    }
    REQUIRE_THROWS_AS(zn_cyclic(1), std::invalid_argument);
}

TEST_CASE("D3 table, classes, and non-commutativity", "[group_algebra]") {
    const FiniteGroup g = d3_group();
    REQUIRE(g.order == 6);
    check_group_axioms(g);

    bool noncommuting = false;
    for (int a = 0; a < 6 && !noncommuting; ++a)
        for (int b = 0; b < 6; ++b)
            if (g.multiply(a, b) != g.multiply(b, a)) {
                noncommuting = true;
                break;
            }
    REQUIRE(noncommuting);

    // classes {e}, {r, r^2}, {s, sr, sr^2} in element order (e,r,r^2,s,sr,sr^2)
    REQUIRE(g.conjugacy_classes.size() == 3);
    REQUIRE(g.conjugacy_classes[0] == std::vector<int>{0});
    REQUIRE(g.conjugacy_classes[1] == std::vector<int>{1, 2});
    REQUIRE(g.conjugacy_classes[2] == std::vector<int>{3, 4, 5});
}

TEST_CASE("D3 irreps are unitary homomorphisms with the right characters", "[group_algebra]") {
    const FiniteGroup g = d3_group();
    const auto irreps = d3_irreps();
    REQUIRE(irreps.size() == 3);
    REQUIRE(irreps[0].dim == 1);
    REQUIRE(irreps[1].dim == 1);
    REQUIRE(irreps[2].dim == 2);

    for (const auto& irrep : irreps) {
        for (int a = 0; a < 6; ++a) {
            const Eigen::MatrixXcd& U = irrep.matrices[static_cast<std::size_t>(a)];
            REQUIRE((U * U.adjoint() - Eigen::MatrixXcd::Identity(irrep.dim, irrep.dim)).norm() < 1e-12);
            for (int b = 0; b < 6; ++b) {
                const Eigen::MatrixXcd prod = U * irrep.matrices[static_cast<std::size_t>(b)];
                REQUIRE((prod - irrep.matrices[static_cast<std::size_t>(g.multiply(a, b))]).norm() < 1e-12);
            }
        }
    }

    // fundamental characters over (e, r, r^2, s, sr, sr^2)
    const double expected[6] = {2.0, -1.0, -1.0, 0.0, 0.0, 0.0};
    for (int a = 0; a < 6; ++a) {
        REQUIRE_THAT(character(irreps[2], a).real(), Catch::Matchers::WithinAbs(expected[a], 1e-12));
        REQUIRE_THAT(character(irreps[2], a).imag(), Catch::Matchers::WithinAbs(0.0, 1e-12));
    }

    // character orthogonality: (1/|G|) sum_g chi_J chi_J'* = delta_JJ'
    for (std::size_t i = 0; i < irreps.size(); ++i)
        for (std::size_t j = 0; j < irreps.size(); ++j) {
            cplx acc = 0.0;
            for (int a = 0; a < 6; ++a) acc += character(irreps[i], a) * std::conj(character(irreps[j], a));
            REQUIRE_THAT(acc.real() / 6.0, Catch::Matchers::WithinAbs(i == j ? 1.0 : 0.0, 1e-12));
        }

    const CharacterTable table = character_table(g, irreps);
    REQUIRE(table.chi.size() == 3);
    REQUIRE_THAT(table.chi[2][1].real(), Catch::Matchers::WithinAbs(-1.0, 1e-12));
}

TEST_CASE("left-regular action is a permutation homomorphism", "[group_algebra]") {
    for (const FiniteGroup& g : {zn_cyclic(4), d3_group()}) {
        for (int h = 0; h < g.order; ++h) {
            const Eigen::MatrixXcd theta = left_regular(g, h);
            REQUIRE((theta * theta.adjoint() - Eigen::MatrixXcd::Identity(g.order, g.order)).norm() < 1e-12);
            for (int h2 = 0; h2 < g.order; ++h2) {
                const Eigen::MatrixXcd lhs = theta * left_regular(g, h2);
                REQUIRE((lhs - left_regular(g, g.multiply(h, h2))).norm() < 1e-12);
            }
        }
        // theta(h)|e> = |h>
        const Eigen::MatrixXcd theta = left_regular(g, g.order - 1);
        REQUIRE_THAT(theta(g.order - 1, 0).real(), Catch::Matchers::WithinAbs(1.0, 1e-15));
    }
}

TEST_CASE("irrep projectors are complete orthogonal projectors", "[group_algebra]") {
    const FiniteGroup g = d3_group();
    const auto irreps = d3_irreps();
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(6, 6);
    for (std::size_t i = 0; i < irreps.size(); ++i) {
        const Eigen::MatrixXcd P = projector_matrix(g, irreps[i]);
        REQUIRE((P - P.adjoint()).norm() < 1e-12);
        REQUIRE((P * P - P).norm() < 1e-12);
        // rank = dim^2 in the regular representation
        REQUIRE_THAT(P.trace().real(),
                     Catch::Matchers::WithinAbs(static_cast<double>(irreps[i].dim * irreps[i].dim), 1e-12));
        for (std::size_t j = 0; j < i; ++j)
            REQUIRE((P * projector_matrix(g, irreps[j])).norm() < 1e-12);
        sum += P;
    }
    REQUIRE((sum - Eigen::MatrixXcd::Identity(6, 6)).norm() < 1e-12);
}
