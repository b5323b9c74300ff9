// Command-line front end: coupling sweeps from config files, bundled figure
// presets, single-point resource evaluation with state dump/load, and the
// analytic pair-state stabilizer entropy.
//
// Exit codes: 0 success, 2 configuration or usage error, 3 numerical failure.

#include "lgt/sweep.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

lgt::JwConvention jw_from(const std::string& name) {
    if (name == "xstring") return lgt::JwConvention::xstring;
    if (name == "zstring") return lgt::JwConvention::zstring;
    throw lgt::config_error("jw must be xstring or zstring");
}

lgt::Boundary boundary_from(const std::string& name) {
    if (name == "open") return lgt::Boundary::open;
    if (name == "periodic") return lgt::Boundary::periodic;
    throw lgt::config_error("boundary must be open or periodic");
}

void write_sweep_outputs(const std::string& stem, const std::string& out_dir,
                         const std::vector<lgt::SweepRow>& rows, bool want_svg) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const std::string csv = (fs::path(out_dir) / (stem + ".csv")).string();
    lgt::write_csv(csv, rows);
    std::cout << "wrote " << csv << "\n";
    if (!want_svg) return;
    auto emit = [&](const std::string& suffix, const std::string& ylabel, auto getter, bool log_y) {
        lgt::PlotSeries series;
        series.label = lgt::row_label(rows.front());
        for (const auto& row : rows)
            if (const auto v = getter(row)) series.points.emplace_back(row.g2, *v);
        if (series.points.empty()) return;
        const std::string path = (fs::path(out_dir) / (stem + "_" + suffix + ".svg")).string();
        lgt::svg_line_plot(path, stem + " " + suffix, "g2", ylabel, {series}, true, log_y);
        std::cout << "wrote " << path << "\n";
    };
    emit("ggm", "G2", [](const lgt::SweepRow& r) { return r.ggm_value; }, false);
    emit("sre2", "M2", [](const lgt::SweepRow& r) { return r.sre2_value; }, false);
    emit("faf2", "F2", [](const lgt::SweepRow& r) { return r.faf2_value; }, false);
    emit("gap", "energy gap", [](const lgt::SweepRow& r) { return r.gap; }, true);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gauge chain sweeps and quantum-resource measures"};
    app.require_subcommand(1);
    app.fallthrough();  // let global options (--out-dir, --seed, ...) follow the subcommand

    int threads = 1;
    std::uint64_t seed = lgt::kDefaultSeed;
    std::string out_dir = ".";
    bool want_svg = true;
    app.add_option("--threads", threads, "worker threads (results are thread-count independent)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "solver random seed");
    app.add_option("--out-dir", out_dir, "output directory for CSV/SVG files");
    app.add_flag("--svg,!--no-svg", want_svg, "emit SVG plots next to the CSV (default on)");

    // sweep <config>
    auto* sweep_cmd = app.add_subcommand("sweep", "run the sweep described by a config file");
    std::string config_path, sweep_boundary;
    sweep_cmd->add_option("config", config_path, "config file (key = value lines)")->required();
    sweep_cmd->add_option("--boundary", sweep_boundary, "override the config's boundary")
        ->check(CLI::IsMember({"open", "periodic"}));
    sweep_cmd->callback([&] {
        lgt::SweepConfig sweep = lgt::parse_sweep_config_file(config_path);
        if (!sweep_boundary.empty()) {
            sweep.model.boundary = boundary_from(sweep_boundary);
            lgt::ModelConfig probe = sweep.model;
            probe.g2 = sweep.g2_grid.front();
            lgt::validate(probe);
        }
        const auto rows = lgt::run_grid(sweep, threads);
        write_sweep_outputs(std::filesystem::path(config_path).stem().string(), out_dir, rows, want_svg);
    });

    // figure <name> / table1
    auto* figure_cmd = app.add_subcommand("figure", "run a bundled figure preset");
    std::string figure_name, figure_jw = "xstring";
    figure_cmd->add_option("name", figure_name, "fig2, fig3, fig4, or table1")->required();
    figure_cmd->add_option("--jw", figure_jw, "Majorana convention for the faf2 column")
        ->check(CLI::IsMember({"xstring", "zstring"}));
    figure_cmd->callback([&] {
        const auto output = lgt::run_figure(figure_name, out_dir, threads, want_svg, seed, jw_from(figure_jw));
        std::cout << "wrote " << output.csv_path << "\n";
        for (const auto& path : output.svg_paths) std::cout << "wrote " << path << "\n";
    });

    auto* table_cmd = app.add_subcommand("table1", "write the electric-limit degeneracy table");
    table_cmd->callback([&] {
        const auto output = lgt::run_figure("table1", out_dir, threads, false, seed);
        std::cout << "wrote " << output.csv_path << "\n";
    });

    // resources: one point, printed as key=value lines
    auto* res_cmd = app.add_subcommand("resources", "evaluate measures at a single coupling");
    std::string model_name, res_boundary, res_jw = "xstring", dump_path, load_path;
    double g2 = 1.0;
    int L = 4, N = 2, k = 0;
    std::vector<double> epsilon{1.0, 0.0, 0.0};
    res_cmd->add_option("--model", model_name, "su2, zn, or d3")
        ->required()
        ->check(CLI::IsMember({"su2", "zn", "d3"}));
    res_cmd->add_option("--g2", g2, "coupling g^2");
    res_cmd->add_option("--L", L, "number of sites");
    res_cmd->add_option("--N", N, "clock dimension (zn)");
    res_cmd->add_option("--k", k, "background shift (zn)");
    res_cmd->add_option("--epsilon", epsilon, "electric weights e,p,tau (d3)")->expected(3);
    res_cmd->add_option("--boundary", res_boundary, "open or periodic")
        ->check(CLI::IsMember({"open", "periodic"}));
    res_cmd->add_option("--jw", res_jw, "Majorana convention for faf2")
        ->check(CLI::IsMember({"xstring", "zstring"}));
    res_cmd->add_option("--dump-state", dump_path, "write the resolved ground state to this file");
    res_cmd->add_option("--load-state", load_path, "evaluate a previously dumped state instead of solving");
    res_cmd->callback([&] {
        lgt::ModelConfig config =
            lgt::ModelConfig::make(model_name == "su2"   ? lgt::Model::su2
                                   : model_name == "zn"  ? lgt::Model::zn
                                                         : lgt::Model::d3);
        config.g2 = g2;
        config.L = L;
        config.N = N;
        config.k = k;
        for (int i = 0; i < 3; ++i) config.epsilon[static_cast<std::size_t>(i)] = epsilon[static_cast<std::size_t>(i)];
        if (!res_boundary.empty()) config.boundary = boundary_from(res_boundary);
        lgt::validate(config);
        const lgt::JwConvention jw = jw_from(res_jw);

        lgt::StateVector psi(lgt::site_dimension(config), config.L);
        if (!load_path.empty()) {
            psi = lgt::load_state(load_path);
            if (psi.d != lgt::site_dimension(config) || psi.L != config.L)
                throw lgt::config_error("loaded state has d=" + std::to_string(psi.d) + ", L=" +
                                        std::to_string(psi.L) + ", which does not match the model");
        } else {
            const lgt::HamiltonianSpec spec = lgt::build_chain(config);
            int m = static_cast<int>(std::min<std::int64_t>(
                spec.dim(), spec.dim() <= lgt::kDenseThreshold ? 64 : 8));
            lgt::SpectrumResult spectrum = lgt::low_spectrum(spec, m, lgt::kDegeneracyTol, seed);
            while (spectrum.clusters.size() == 1 && m < std::min<std::int64_t>(spec.dim(), 64)) {
                m = static_cast<int>(std::min<std::int64_t>(spec.dim(), 2L * m));
                spectrum = lgt::low_spectrum(spec, m, lgt::kDegeneracyTol, seed);
            }
            psi = lgt::resolve_ground_cluster(spectrum, lgt::resolution_site_perms(config));
            std::cout << "energy=" << num(spectrum.eigenvalues[0]) << "\n";
            if (spectrum.eigenvalues.size() > 1)
                std::cout << "gap=" << num(spectrum.eigenvalues[1] - spectrum.eigenvalues[0]) << "\n";
            if (const auto group = lgt::sector_group(config)) {
                const auto [same, any] = lgt::symmetry_resolved_gap(spec, *group, seed);
                std::cout << "gap_same_sector=" << num(same) << "\n";
                std::cout << "gap_any=" << num(any) << "\n";
            }
            std::cout << "solver_iterations=" << spectrum.iterations << "\n";
        }
        std::cout << "plaquette=" << num(lgt::plaquette_value(lgt::plaquette_observable(config), psi)) << "\n";
        if (config.L >= 2) std::cout << "ggm=" << num(lgt::ggm(psi, threads)) << "\n";
        std::cout << "sre2=" << num(lgt::sre2(psi, threads)) << "\n";
        if (psi.d == 2)
            std::cout << "faf2=" << num(lgt::faf2(psi, jw)) << " (" << lgt::to_string(jw) << ")\n";
        if (!dump_path.empty()) {
            lgt::dump_state(psi, dump_path);
            std::cout << "wrote " << dump_path << "\n";
        }
    });

    // analytic-sre
    auto* sre_cmd = app.add_subcommand("analytic-sre", "closed-form pair-state stabilizer entropy");
    int sre_N = 3, sre_L = 4, sre_a = 0, sre_b = 2;
    sre_cmd->add_option("--N", sre_N, "clock dimension")->required();
    sre_cmd->add_option("--L", sre_L, "number of sites")->required();
    sre_cmd->add_option("--a", sre_a, "first clock label")->required();
    sre_cmd->add_option("--b", sre_b, "second clock label")->required();
    sre_cmd->callback([&] {
        std::cout << "sre2=" << num(lgt::analytic_sre_pair(sre_N, sre_L, sre_a, sre_b)) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const lgt::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
