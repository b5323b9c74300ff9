#include "catch_amalgamated.hpp"

#include "lgt/hilbert.hpp"

#include <complex>
#include <cstdio>
#include <numbers>
#include <random>

using namespace lgt;

TEST_CASE("basis indexing puts site 0 in the least significant digit", "[hilbert]") {
    REQUIRE(pow_ll(3, 4) == 81);
    REQUIRE(pow_ll(6, 0) == 1);

    // |m_1 m_0> = |2 1> on d = 3: index = 1 + 2*3 = 7
    const StateVector psi = basis_state(3, 2, {1, 2});
    REQUIRE(psi.dim() == 9);
    REQUIRE(psi.amp(7) == cplx(1.0, 0.0));
    REQUIRE(psi.digit(7, 0) == 1);
    REQUIRE(psi.digit(7, 1) == 2);

    const StateVector phi = basis_state(2, 3, {1, 0, 1});
    REQUIRE(phi.amp(5) == cplx(1.0, 0.0));

    REQUIRE_THROWS_AS(basis_state(3, 2, {1}), std::invalid_argument);
    REQUIRE_THROWS_AS(basis_state(3, 2, {1, 3}), std::invalid_argument);

    // digit round trip at d = 6
    const StateVector chi(6, 3);
    for (std::int64_t i = 0; i < chi.dim(); ++i) {
        std::int64_t rebuilt = 0;
        for (int j = 2; j >= 0; --j) rebuilt = rebuilt * 6 + chi.digit(i, j);
        REQUIRE(rebuilt == i);
    }
}

TEST_CASE("clock operators satisfy the Weyl algebra", "[hilbert]") {
    for (int N = 2; N <= 6; ++N) {
        const auto [Z, X] = clock_operators(N);
        const cplx omega = std::exp(cplx(0.0, 2.0 * std::numbers::pi / N));
        const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(N, N);

        REQUIRE((Z.m * X.m - omega * X.m * Z.m).norm() < 1e-14);
        // the inverse-ordered product differs by one clock phase:
        // (XZ)(ZX)^{-1} = ω^{-1} 1
        REQUIRE(((X.m * Z.m) * (Z.m * X.m).inverse() - std::conj(omega) * I).norm() < 1e-13);

        Eigen::MatrixXcd Zp = I, Xp = I;
        for (int i = 0; i < N; ++i) {
            Zp = Z.m * Zp;
            Xp = X.m * Xp;
        }
        REQUIRE((Zp - I).norm() < 1e-12);
        REQUIRE((Xp - I).norm() < 1e-12);

        REQUIRE((Z.m * Z.m.adjoint() - I).norm() < 1e-13);
        REQUIRE((X.m * X.m.adjoint() - I).norm() < 1e-13);
    }
    REQUIRE_THROWS_AS(clock_operators(1), std::invalid_argument);
}

TEST_CASE("qudit Paulis are Hilbert-Schmidt orthogonal", "[hilbert]") {
    for (int d : {2, 3, 4}) {
        for (int u1 = 0; u1 < d; ++u1)
            for (int u2 = 0; u2 < d; ++u2)
                for (int v1 = 0; v1 < d; ++v1)
                    for (int v2 = 0; v2 < d; ++v2) {
                        const cplx tr =
                            (pauli_qudit(d, u1, u2).m.adjoint() * pauli_qudit(d, v1, v2).m).trace();
                        const double want = (u1 == v1 && u2 == v2) ? static_cast<double>(d) : 0.0;
                        REQUIRE_THAT(std::abs(tr), Catch::Matchers::WithinAbs(want, 1e-12));
                    }
    }
    REQUIRE_THROWS_AS(pauli_qudit(3, 3, 0), std::out_of_range);
    REQUIRE_THROWS_AS(pauli_qudit(3, 0, -1), std::out_of_range);
}

TEST_CASE("make_term sorts factors and rejects repeated sites", "[hilbert]") {
    const auto [Z, X] = clock_operators(2);
    const OperatorTerm term = make_term(2.5, {{3, X}, {1, Z}});
    REQUIRE(term.factors.size() == 2);
    REQUIRE(term.factors[0].first == 1);
    REQUIRE(term.factors[1].first == 3);
    REQUIRE(term.coeff == cplx(2.5, 0.0));
    REQUIRE_THROWS_AS(make_term(1.0, {{2, X}, {2, Z}}), std::invalid_argument);
}

TEST_CASE("matrix-free application matches the dense matrix", "[hilbert]") {
    // a deliberately messy non-Hermitian sum on a d = 3, L = 4 chain
    const int d = 3, L = 4;
    const auto [Z, X] = clock_operators(d);
    HamiltonianSpec spec{d, L, Boundary::open, {}};
    spec.terms.push_back(make_term(cplx(0.7, -0.2), {{0, X}, {2, Z}}));
    spec.terms.push_back(make_term(1.3, {{1, Z}, {2, X}, {3, Z}}));
    spec.terms.push_back(make_term(cplx(0.0, 0.4), {{3, X}}));
    spec.terms.push_back(make_term(-0.9, {}));  // scalar term

    const Eigen::MatrixXcd H = dense_matrix(spec);

    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss;
    StateVector psi(d, L);
    for (std::int64_t i = 0; i < psi.dim(); ++i) psi.amp(i) = {gauss(rng), gauss(rng)};
    psi.normalize();

    const StateVector out = apply_hamiltonian(spec, psi);
    REQUIRE((out.amp - H * psi.amp).norm() < 1e-12);

    const cplx e = expectation(psi, spec.terms[0]);
    const cplx ref = psi.amp.dot(H * psi.amp);
    StateVector rest(d, L);
    for (std::size_t t = 1; t < spec.terms.size(); ++t) rest.amp += apply_term(spec.terms[t], psi).amp;
    REQUIRE(std::abs(e + psi.amp.dot(rest.amp) - ref) < 1e-12);

    REQUIRE_THROWS_AS(apply_term(make_term(1.0, {{4, X}}), psi), std::out_of_range);
    const StateVector wrong(2, 3);
    REQUIRE_THROWS_AS(apply_hamiltonian(spec, wrong), std::invalid_argument);
}

TEST_CASE("dense_matrix refuses dimensions above the threshold", "[hilbert]") {
    HamiltonianSpec spec{2, 13, Boundary::open, {}};  // dim 8192 > 4096
    REQUIRE_THROWS_AS(dense_matrix(spec), std::length_error);
    REQUIRE_NOTHROW(dense_matrix(spec, 8192));
    HamiltonianSpec ok{2, 12, Boundary::open, {}};  // dim 4096 is allowed
    REQUIRE_NOTHROW(dense_matrix(ok));
}

TEST_CASE("state dump and load round trip", "[hilbert]") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> gauss;
    StateVector psi(3, 3);
    for (std::int64_t i = 0; i < psi.dim(); ++i) psi.amp(i) = {gauss(rng), gauss(rng)};
    psi.normalize();

    const std::string path = "roundtrip_state.bin";
    dump_state(psi, path);
    const StateVector back = load_state(path);
    REQUIRE(back.d == 3);
    REQUIRE(back.L == 3);
    REQUIRE((back.amp - psi.amp).norm() == 0.0);

    {
        std::ofstream bad("bad_magic.bin", std::ios::binary);
        bad.write("NOPE", 4);
        const std::uint32_t u = 1;
        for (int i = 0; i < 3; ++i) bad.write(reinterpret_cast<const char*>(&u), 4);
    }
    REQUIRE_THROWS_AS(load_state("bad_magic.bin"), std::runtime_error);

    {
        std::ofstream trunc("truncated.bin", std::ios::binary);
        trunc.write("LGTS", 4);
        const std::uint32_t version = 1, d = 2, L = 4;
        trunc.write(reinterpret_cast<const char*>(&version), 4);
        trunc.write(reinterpret_cast<const char*>(&d), 4);
        trunc.write(reinterpret_cast<const char*>(&L), 4);
        const double half = 0.5;
        trunc.write(reinterpret_cast<const char*>(&half), 8);
    }
    REQUIRE_THROWS_AS(load_state("truncated.bin"), std::runtime_error);
    REQUIRE_THROWS_AS(load_state("no_such_file.bin"), std::runtime_error);

    std::remove(path.c_str());
    std::remove("bad_magic.bin");
    std::remove("truncated.bin");
}
