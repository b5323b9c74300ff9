// Electric-limit pair states: classify the degenerate clock labels for a few
// background shifts, then compare the closed-form stabilizer entropy of the
// marked pair against direct enumeration and against the resources of the
// resolved strong-coupling ground state.

#include "lgt/sweep.hpp"

#include <cstdio>
#include <string>

int main() {
    std::printf("degenerate clock labels per (N, k)\n");
    for (const auto& [N, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {5, 1}, {6, 3}}) {
        const lgt::DegeneracyReport report = lgt::degenerate_pairs(N, k);
        std::string sets;
        for (const auto& set : report.degenerate_sets) {
            sets += sets.empty() ? "{" : ", {";
            for (std::size_t i = 0; i < set.size(); ++i)
                sets += (i ? "," : "") + std::to_string(set[i]);
            sets += "}";
        }
        std::string ground;
        for (std::size_t i = 0; i < report.ground_set.size(); ++i)
            ground += (i ? "," : "") + std::to_string(report.ground_set[i]);
        std::printf("  N=%d k=%d: %s  (ground %s)\n", N, k,
                    sets.empty() ? "none" : sets.c_str(),
                    ground.empty() ? "unique" : ("{" + ground + "}").c_str());
    }

    const int N = 3, k = 1, L = 4, a = 0, b = 2;
    std::printf("\npair state (|%d...%d> + |%d...%d>)/sqrt(2), N=%d, L=%d\n", a, a, b, b, N, L);
    const lgt::StateVector pair = lgt::pair_state(N, L, a, b);
    std::printf("  closed-form M2   %.12f\n", lgt::analytic_sre_pair(N, L, a, b));
    std::printf("  enumerated M2    %.12f\n", lgt::sre2(pair));
    std::printf("  G2               %.12f\n", lgt::ggm(pair));

    // deep in the electric phase the resolved ground state realizes the pair
    lgt::ModelConfig config = lgt::ModelConfig::make(lgt::Model::zn);
    config.N = N;
    config.k = k;
    config.L = L;
    config.g2 = 1e3;
    const lgt::SweepRow row = lgt::evaluate_point(config, lgt::kDefaultSeed, 1);
    if (!row.error.empty()) {
        std::printf("  ground-state evaluation failed: %s\n", row.error.c_str());
        return 1;
    }
    std::printf("\nresolved ground state of the N=%d chain at g2 = %g\n", N, config.g2);
    std::printf("  energy           %.6f\n", *row.energy);
    std::printf("  G2               %.12f\n", *row.ggm_value);
    std::printf("  M2               %.12f\n", *row.sre2_value);
    return 0;
}
