#include "catch_amalgamated.hpp"

#include "lgt/models.hpp"
#include "lgt/resources.hpp"
#include "lgt/solver.hpp"

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

using namespace lgt;

namespace {

StateVector ghz(int d, int L) {
    StateVector psi(d, L);
    for (int m = 0; m < d; ++m) {
        std::int64_t idx = 0, place = 1;
        for (int j = 0; j < L; ++j) {
            idx += place * m;
            place *= d;
        }
        psi.amp(idx) = 1.0 / std::sqrt(static_cast<double>(d));
    }
    return psi;
}

StateVector plus_state(int L) {
    StateVector psi(2, L);
    psi.amp.setConstant(std::pow(2.0, -0.5 * L));
    return psi;
}

Eigen::MatrixXcd majorana_matrix(int L, int m, JwConvention conv) {
    const std::int64_t dim = pow_ll(2, L);
    Eigen::MatrixXcd g(dim, dim);
    StateVector col(2, L);
    for (std::int64_t j = 0; j < dim; ++j) {
        col.amp.setZero();
        col.amp(j) = 1.0;
        g.col(j) = detail::apply_majorana(col, m, conv);
    }
    return g;
}

}  // namespace

TEST_CASE("ggm on reference states", "[resources]") {
    REQUIRE_THROWS_AS(ggm(basis_state(2, 1, {0})), std::invalid_argument);

    // product states are unentangled
    REQUIRE_THAT(ggm(basis_state(2, 3, {0, 1, 0})), Catch::Matchers::WithinAbs(0.0, 1e-12));

    // W state: the best product overlap across any cut is 2/3
    StateVector w(2, 3);
    w.amp(1) = w.amp(2) = w.amp(4) = 1.0 / std::sqrt(3.0);
    REQUIRE_THAT(ggm(w), Catch::Matchers::WithinAbs(1.0 / 3.0, 1e-12));

    // GHZ: every cut has Schmidt weights (1/d, ..., 1/d)
    REQUIRE_THAT(ggm(ghz(2, 4)), Catch::Matchers::WithinAbs(0.5, 1e-12));
    REQUIRE_THAT(ggm(ghz(3, 3)), Catch::Matchers::WithinAbs(2.0 / 3.0, 1e-12));
}

TEST_CASE("ggm enumerates cuts that separate non-adjacent sites", "[resources]") {
    // Bell pair on sites 0 and 2 with site 1 in a product: the cut {0,2}|{1}
    // is the only one with unit Schmidt weight, so G2 must be exactly 0. An
    // enumeration that never isolates the last site misses it.
    StateVector psi(2, 3);
    psi.amp(0) = psi.amp(5) = 1.0 / std::sqrt(2.0);
    REQUIRE_THAT(ggm(psi), Catch::Matchers::WithinAbs(0.0, 1e-12));
}

TEST_CASE("ggm and sre2 are thread-count independent bit for bit", "[resources]") {
    const StateVector h = haar_state(2, 5, 42);
    REQUIRE(ggm(h, 1) == ggm(h, 3));
    REQUIRE(sre2(h, 1) == sre2(h, 3));
    const StateVector h3 = haar_state(3, 3, 43);
    REQUIRE(ggm(h3, 1) == ggm(h3, 4));
    REQUIRE(sre2(h3, 1) == sre2(h3, 4));
}

TEST_CASE("sre2 vanishes on stabilizer states", "[resources]") {
    REQUIRE_THAT(sre2(basis_state(2, 3, {1, 0, 1})), Catch::Matchers::WithinAbs(0.0, 1e-12));
    REQUIRE_THAT(sre2(ghz(2, 3)), Catch::Matchers::WithinAbs(0.0, 1e-12));
    REQUIRE_THAT(sre2(plus_state(4)), Catch::Matchers::WithinAbs(0.0, 1e-12));
    // qudit stabilizer states too
    REQUIRE_THAT(sre2(basis_state(3, 2, {2, 1})), Catch::Matchers::WithinAbs(0.0, 1e-12));
    REQUIRE_THAT(sre2(ghz(3, 2)), Catch::Matchers::WithinAbs(0.0, 1e-12));
}

TEST_CASE("sre2 is additive with the known single-qubit T value", "[resources]") {
    // |T> = (|0> + e^{i pi/4}|1>)/sqrt(2): <X> = <Y> = 1/sqrt(2), <Z> = 0,
    // so one site contributes -ln[(1 + 1/4 + 1/4)/2] = ln(4/3)
    for (int L : {1, 2, 3}) {
        StateVector t(2, L);
        for (std::int64_t i = 0; i < t.dim(); ++i)
            t.amp(i) = std::pow(2.0, -0.5 * L) *
                       std::polar(1.0, std::numbers::pi / 4.0 * std::popcount(static_cast<std::uint64_t>(i)));
        REQUIRE_THAT(sre2(t), Catch::Matchers::WithinAbs(L * std::log(4.0 / 3.0), 1e-12));
    }
}

TEST_CASE("the fast sre2 agrees with the brute-force sum", "[resources]") {
    const StateVector h2 = haar_state(2, 4, 7);
    REQUIRE_THAT(sre2(h2), Catch::Matchers::WithinAbs(sre2_naive(h2), 1e-10));
    const StateVector h3 = haar_state(3, 2, 8);
    REQUIRE_THAT(sre2(h3), Catch::Matchers::WithinAbs(sre2_naive(h3), 1e-10));

    ModelConfig c = ModelConfig::make(Model::zn);
    c.N = 2;
    c.k = 1;
    c.L = 3;
    c.g2 = 0.8;
    const auto [e0, psi] = ground_state(zn_chain(c));
    REQUIRE_THAT(sre2(psi), Catch::Matchers::WithinAbs(sre2_naive(psi), 1e-10));
}

TEST_CASE("sre2 guards its budget and its purity invariant", "[resources]") {
    REQUIRE_THROWS_AS(sre2(StateVector(2, 17)), budget_error);  // 2^34 strings
    StateVector h = haar_state(2, 3, 9);
    h.amp *= 1.1;
    REQUIRE_THROWS_AS(sre2(h), purity_error);
}

TEST_CASE("majorana operators satisfy the Clifford algebra", "[resources]") {
    const int L = 3;
    const std::int64_t dim = pow_ll(2, L);
    for (JwConvention conv : {JwConvention::xstring, JwConvention::zstring}) {
        std::vector<Eigen::MatrixXcd> gamma;
        for (int m = 0; m < 2 * L; ++m) gamma.push_back(majorana_matrix(L, m, conv));
        for (int m = 0; m < 2 * L; ++m) {
            REQUIRE((gamma[static_cast<std::size_t>(m)] -
                     gamma[static_cast<std::size_t>(m)].adjoint())
                        .norm() < 1e-12);
            for (int n = 0; n < 2 * L; ++n) {
                const Eigen::MatrixXcd anti = gamma[static_cast<std::size_t>(m)] * gamma[static_cast<std::size_t>(n)] +
                                              gamma[static_cast<std::size_t>(n)] * gamma[static_cast<std::size_t>(m)];
                const Eigen::MatrixXcd want =
                    (m == n ? 2.0 : 0.0) * Eigen::MatrixXcd::Identity(dim, dim);
                REQUIRE((anti - want).norm() < 1e-12);
            }
        }
    }
}

TEST_CASE("faf2 vanishes exactly on Gaussian reference states", "[resources]") {
    REQUIRE_THROWS_AS(faf2(basis_state(3, 2, {0, 0})), std::invalid_argument);

    // under the X-string convention the +X product state is the Gaussian vacuum
    const StateVector plus = plus_state(3);
    const Eigen::MatrixXd cov = majorana_covariance(plus, JwConvention::xstring);
    REQUIRE((cov + cov.transpose()).norm() < 1e-12);
    REQUIRE_THAT(cov(0, 1), Catch::Matchers::WithinAbs(-1.0, 1e-12));
    REQUIRE_THAT(cov(1, 0), Catch::Matchers::WithinAbs(1.0, 1e-12));
    REQUIRE_THAT(faf2(plus, JwConvention::xstring), Catch::Matchers::WithinAbs(0.0, 1e-12));

    // under the Z-string convention the computational vacuum is Gaussian
    REQUIRE_THAT(faf2(basis_state(2, 3, {0, 0, 0}), JwConvention::zstring),
                 Catch::Matchers::WithinAbs(0.0, 1e-12));
    // while the +X product sits one unit away from flatness
    REQUIRE_THAT(faf2(plus, JwConvention::zstring), Catch::Matchers::WithinAbs(1.0, 1e-12));
}

TEST_CASE("faf2 is invariant under quadratic evolution and not otherwise", "[resources]") {
    // X_j and Z_j Z_{j+1} are quadratic in the X-string Majoranas, so the
    // evolved state stays Gaussian; a longitudinal Z_j term breaks it
    const int L = 3;
    const auto [Z, X] = clock_operators(2);
    HamiltonianSpec quad{2, L, Boundary::open, {}};
    quad.terms.push_back(make_term(0.7, {{0, X}}));
    quad.terms.push_back(make_term(-1.1, {{1, X}}));
    quad.terms.push_back(make_term(0.4, {{2, X}}));
    quad.terms.push_back(make_term(0.9, {{0, Z}, {1, Z}}));
    quad.terms.push_back(make_term(-0.6, {{1, Z}, {2, Z}}));

    auto evolve = [&](const HamiltonianSpec& spec, const StateVector& psi, double t) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense_matrix(spec));
        Eigen::VectorXcd phases(es.eigenvalues().size());
        for (std::int64_t i = 0; i < phases.size(); ++i)
            phases(i) = std::polar(1.0, -es.eigenvalues()(i) * t);
        StateVector out(psi.d, psi.L);
        out.amp = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint() * psi.amp;
        return out;
    };

    const StateVector evolved = evolve(quad, plus_state(L), 1.3);
    REQUIRE_THAT(faf2(evolved, JwConvention::xstring), Catch::Matchers::WithinAbs(0.0, 1e-10));

    HamiltonianSpec broken = quad;
    broken.terms.push_back(make_term(0.8, {{1, Z}}));
    const StateVector nongaussian = evolve(broken, plus_state(L), 1.3);
    REQUIRE(faf2(nongaussian, JwConvention::xstring) > 1e-3);
}

TEST_CASE("the Ising ground state is Gaussian under the X-string convention", "[resources]") {
    ModelConfig c = ModelConfig::make(Model::zn);
    c.N = 2;
    c.k = 1;
    c.L = 4;
    c.g2 = 1.0;
    const auto [e0, psi] = ground_state(zn_chain(c));
    REQUIRE(faf2(psi, JwConvention::xstring) < 1e-10);
    // the opposite dressing does not see it as Gaussian
    REQUIRE(faf2(psi, JwConvention::zstring) > 1e-2);
}

TEST_CASE("haar_state is seed-deterministic and normalized", "[resources]") {
    const StateVector a = haar_state(3, 3, 1234);
    const StateVector b = haar_state(3, 3, 1234);
    const StateVector c = haar_state(3, 3, 1235);
    REQUIRE((a.amp - b.amp).norm() == 0.0);
    REQUIRE((a.amp - c.amp).norm() > 1e-3);
    REQUIRE_THAT(a.norm(), Catch::Matchers::WithinAbs(1.0, 1e-12));
}

TEST_CASE("ggm is invariant under local unitaries", "[resources]") {
    auto random_unitary = [](int d, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss;
        Eigen::MatrixXcd a(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) a(i, j) = cplx(gauss(rng), gauss(rng));
        const Eigen::MatrixXcd q = Eigen::HouseholderQR<Eigen::MatrixXcd>(a).householderQ() *
                                   Eigen::MatrixXcd::Identity(d, d);
        REQUIRE((q.adjoint() * q - Eigen::MatrixXcd::Identity(d, d)).norm() < 1e-12);
        return q;
    };
    for (const StateVector& psi : {haar_state(2, 4, 31), haar_state(3, 3, 32)}) {
        StateVector rotated = psi;
        for (int j = 0; j < psi.L; ++j) {
            const SiteOperator u{"U", random_unitary(psi.d, 100 + static_cast<std::uint64_t>(j))};
            rotated = apply_term(make_term(1.0, {{j, u}}), rotated);
        }
        REQUIRE_THAT(ggm(rotated), Catch::Matchers::WithinAbs(ggm(psi), 1e-10));
    }
}

TEST_CASE("sre2 is invariant under Clifford circuits and moved by a T gate", "[resources]") {
    // controlled phase w^{ab} between two sites, Clifford for every d
    auto controlled_phase = [](const StateVector& psi, int a, int b) {
        StateVector out = psi;
        const std::int64_t pa = pow_ll(psi.d, a), pb = pow_ll(psi.d, b);
        for (std::int64_t i = 0; i < psi.dim(); ++i) {
            const auto ia = static_cast<double>((i / pa) % psi.d);
            const auto ib = static_cast<double>((i / pb) % psi.d);
            out.amp(i) *= std::polar(1.0, 2.0 * std::numbers::pi / psi.d * ia * ib);
        }
        return out;
    };

    // qubit circuit: Hadamard, phase, and controlled-Z normalize the Pauli group
    Eigen::MatrixXcd h_m(2, 2), s_m(2, 2);
    h_m << 1, 1, 1, -1;
    h_m /= std::sqrt(2.0);
    s_m << 1, 0, 0, cplx(0, 1);
    const SiteOperator H{"H", h_m}, S{"S", s_m};
    const StateVector psi2 = haar_state(2, 3, 21);
    StateVector u = apply_term(make_term(1.0, {{0, H}}), psi2);
    u = apply_term(make_term(1.0, {{1, S}}), u);
    u = controlled_phase(u, 0, 1);
    u = apply_term(make_term(1.0, {{2, H}}), u);
    u = controlled_phase(u, 1, 2);
    REQUIRE_THAT(sre2(u), Catch::Matchers::WithinAbs(sre2(psi2), 1e-10));

    // the non-Clifford T gate moves a stabilizer state to the single-site T value
    Eigen::MatrixXcd t_m = Eigen::MatrixXcd::Zero(2, 2);
    t_m(0, 0) = 1.0;
    t_m(1, 1) = std::polar(1.0, std::numbers::pi / 4.0);
    const SiteOperator T{"T", t_m};
    REQUIRE_THAT(sre2(apply_term(make_term(1.0, {{1, T}}), plus_state(3))),
                 Catch::Matchers::WithinAbs(std::log(4.0 / 3.0), 1e-12));

    // qutrit circuit: Fourier, the phase gate diag(1, 1, w), and controlled-Z
    const cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    Eigen::MatrixXcd f_m(3, 3);
    Eigen::MatrixXcd p_m = Eigen::MatrixXcd::Zero(3, 3);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) f_m(j, k) = std::pow(w, j * k) / std::sqrt(3.0);
    p_m(0, 0) = p_m(1, 1) = 1.0;
    p_m(2, 2) = w;
    const SiteOperator F{"F", f_m}, P{"P", p_m};
    const StateVector psi3 = haar_state(3, 2, 22);
    StateVector v = apply_term(make_term(1.0, {{0, F}}), psi3);
    v = apply_term(make_term(1.0, {{1, P}}), v);
    v = controlled_phase(v, 0, 1);
    v = apply_term(make_term(1.0, {{1, F}}), v);
    REQUIRE_THAT(sre2(v), Catch::Matchers::WithinAbs(sre2(psi3), 1e-10));
}
