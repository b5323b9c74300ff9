#pragma once

// Coupling sweeps: config-file parsing, per-point evaluation (spectrum,
// plaquette, resource measures, sector-resolved gap where defined), CSV
// emission, a minimal dependency-free SVG line plotter, and the bundled
// figure presets.
//
// Determinism contract: for a fixed config and seed the emitted CSV is
// byte-identical across runs and thread counts, except for the wall_time_ms
// column. Per-point work is split into fixed blocks reduced in a fixed order
// (see resources.hpp), and rows land in preallocated slots.

#include "models.hpp"
#include "resources.hpp"
#include "solver.hpp"
#include "zn_analytics.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lgt {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ── coupling grids ──────────────────────────────────────────────────────────

/// count points log-spaced from lo to hi inclusive.
inline std::vector<double> log_grid(double lo, double hi, int count) {
    if (lo <= 0.0 || hi <= 0.0 || count < 2)
        throw config_error("log_grid: need positive endpoints and at least 2 points");
    const double l0 = std::log10(lo), l1 = std::log10(hi);
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        grid.push_back(std::pow(10.0, l0 + (l1 - l0) * i / (count - 1)));
    return grid;
}

/// The default sweep grid: 25 points, g2 from 10^-1.5 to 10^1.5.
inline std::vector<double> default_g2_grid() {
    return log_grid(std::pow(10.0, -1.5), std::pow(10.0, 1.5), 25);
}

// ── config files ────────────────────────────────────────────────────────────

/// One sweep = one model at a list of couplings.
struct SweepConfig {
    ModelConfig model;            // g2 field is overwritten per grid point
    std::vector<double> g2_grid;  // never empty after parsing
    std::uint64_t seed = kDefaultSeed;
    JwConvention jw = JwConvention::xstring;
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(trim(item));
    return out;
}

inline double parse_double(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw config_error("config: bad number for '" + key + "': " + value);
    }
    if (pos != value.size()) throw config_error("config: trailing junk for '" + key + "': " + value);
    return v;
}

inline long long parse_int(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(value, &pos);
    } catch (const std::exception&) {
        throw config_error("config: bad integer for '" + key + "': " + value);
    }
    if (pos != value.size()) throw config_error("config: trailing junk for '" + key + "': " + value);
    return v;
}

}  // namespace detail

/// Parse `key = value` lines ('#' starts a comment). Keys: model (required),
/// g2 | g2_grid (lo,hi,count), L, N, k, epsilon (e,p,tau), boundary, seed, jw.
inline SweepConfig parse_sweep_config(std::istream& in) {
    SweepConfig out;
    bool have_model = false, have_g2 = false, have_grid = false, have_boundary = false;
    std::string line;
    int lineno = 0;
    double g2_single = 1.0;
    std::array<std::string, 3> grid_spec;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (value.empty()) throw config_error("config: empty value for '" + key + "'");

        if (key == "model") {
            if (value == "su2") out.model = ModelConfig::make(Model::su2);
            else if (value == "zn") out.model = ModelConfig::make(Model::zn);
            else if (value == "d3") out.model = ModelConfig::make(Model::d3);
            else throw config_error("config: unknown model '" + value + "'");
            have_model = true;
        } else if (key == "g2") {
            g2_single = detail::parse_double(key, value);
            have_g2 = true;
        } else if (key == "g2_grid") {
            const auto parts = detail::split(value, ',');
            if (parts.size() != 3) throw config_error("config: g2_grid wants lo,hi,count");
            grid_spec = {parts[0], parts[1], parts[2]};
            have_grid = true;
        } else if (key == "L") {
            out.model.L = static_cast<int>(detail::parse_int(key, value));
        } else if (key == "N") {
            out.model.N = static_cast<int>(detail::parse_int(key, value));
        } else if (key == "k") {
            out.model.k = static_cast<int>(detail::parse_int(key, value));
        } else if (key == "epsilon") {
            const auto parts = detail::split(value, ',');
            if (parts.size() != 3) throw config_error("config: epsilon wants three numbers e,p,tau");
            for (int i = 0; i < 3; ++i)
                out.model.epsilon[static_cast<std::size_t>(i)] = detail::parse_double(key, parts[static_cast<std::size_t>(i)]);
        } else if (key == "boundary") {
            if (value == "open") out.model.boundary = Boundary::open;
            else if (value == "periodic") out.model.boundary = Boundary::periodic;
            else throw config_error("config: boundary must be open or periodic");
            have_boundary = true;
        } else if (key == "seed") {
            out.seed = static_cast<std::uint64_t>(detail::parse_int(key, value));
        } else if (key == "jw") {
            if (value == "xstring") out.jw = JwConvention::xstring;
            else if (value == "zstring") out.jw = JwConvention::zstring;
            else throw config_error("config: jw must be xstring or zstring");
        } else {
            throw config_error("config: unknown key '" + key + "'");
        }
    }
    if (!have_model) throw config_error("config: missing required key 'model'");
    if (have_g2 && have_grid) throw config_error("config: give g2 or g2_grid, not both");
    if (!have_boundary) out.model.boundary = default_boundary(out.model.model);
    if (have_g2) {
        out.g2_grid = {g2_single};
    } else if (have_grid) {
        out.g2_grid = log_grid(detail::parse_double("g2_grid", grid_spec[0]),
                               detail::parse_double("g2_grid", grid_spec[1]),
                               static_cast<int>(detail::parse_int("g2_grid", grid_spec[2])));
    } else {
        out.g2_grid = default_g2_grid();
    }
    for (double g2 : out.g2_grid)
        if (g2 <= 0.0) throw config_error("config: couplings must be positive");
    ModelConfig probe = out.model;
    probe.g2 = out.g2_grid.front();
    validate(probe);  // surfaces bad L/N/k/boundary combinations at parse time
    return out;
}

inline SweepConfig parse_sweep_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("config: cannot open " + path);
    return parse_sweep_config(in);
}

// ── per-point evaluation ────────────────────────────────────────────────────

/// One CSV row. Missing optionals print as empty cells.
struct SweepRow {
    std::string model;
    std::optional<int> N, k;
    int L = 0;
    double g2 = 0.0;
    std::string boundary;
    std::optional<double> energy, gap, gap_same_sector, plaquette;
    std::optional<double> ggm_value, sre2_value, faf2_value;
    int solver_iterations = 0;
    double wall_time_ms = 0.0;
    std::string error;
};

inline constexpr const char* kCsvHeader =
    "model,N,k,L,g2,boundary,energy,gap,gap_same_sector,plaquette,ggm,sre2,faf2,"
    "solver_iterations,wall_time_ms,error";

/// Symmetry group defining the sector-resolved gap, where one is defined:
/// the full gauge group for d3, the global shift for zn at the self-dual
/// shift k = N/2 (the only k where it commutes with the chain).
inline std::optional<FiniteGroup> sector_group(const ModelConfig& config) {
    if (config.model == Model::d3) return d3_group();
    if (config.model == Model::zn && config.N % 2 == 0 && config.k == config.N / 2)
        return zn_cyclic(config.N);
    return std::nullopt;
}

/// Evaluate every column of one sweep row. Throws nothing: failures land in
/// the error field and leave the remaining cells empty.
inline SweepRow evaluate_point(const ModelConfig& config, std::uint64_t seed, int threads,
                               JwConvention jw = JwConvention::xstring) {
    SweepRow row;
    row.model = to_string(config.model);
    if (config.model == Model::zn) {
        row.N = config.N;
        row.k = config.k;
    }
    row.L = config.L;
    row.g2 = config.g2;
    row.boundary = to_string(config.boundary);

    const auto t0 = std::chrono::steady_clock::now();
    try {
        validate(config);
        const HamiltonianSpec spec = build_chain(config);
        // grow m until the ground cluster is complete, so the resolved state
        // sees the whole degenerate multiplet; dense solves cost the same for
        // any m, so ask wide immediately there
        int m = static_cast<int>(std::min<std::int64_t>(
            spec.dim(), spec.dim() <= kDenseThreshold ? 64 : 8));
        SpectrumResult spectrum = low_spectrum(spec, m, kDegeneracyTol, seed);
        while (spectrum.clusters.size() == 1 && m < std::min<std::int64_t>(spec.dim(), 64)) {
            m = static_cast<int>(std::min<std::int64_t>(spec.dim(), 2L * m));
            spectrum = low_spectrum(spec, m, kDegeneracyTol, seed);
        }
        row.energy = spectrum.eigenvalues[0];
        if (spectrum.eigenvalues.size() > 1) row.gap = spectrum.eigenvalues[1] - spectrum.eigenvalues[0];
        row.solver_iterations = spectrum.iterations;

        const StateVector psi = resolve_ground_cluster(spectrum, resolution_site_perms(config));
        row.plaquette = plaquette_value(plaquette_observable(config), psi);
        if (config.L >= 2) row.ggm_value = ggm(psi, threads);
        row.sre2_value = sre2(psi, threads);
        if (site_dimension(config) == 2) row.faf2_value = faf2(psi, jw);
        if (const auto group = sector_group(config))
            row.gap_same_sector = symmetry_resolved_gap(spec, *group, seed).first;
    } catch (const std::exception& e) {
        std::string what = e.what();
        for (char& c : what)
            if (c == ',' || c == '\n') c = ';';
        row.error = what;
    }
    row.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

/// All rows of one sweep, in grid order. With threads > 1 the points are
/// evaluated concurrently (each point then runs its measures serially); the
/// rows are identical either way.
inline std::vector<SweepRow> run_grid(const SweepConfig& sweep, int threads = 1) {
    std::vector<SweepRow> rows(sweep.g2_grid.size());
    const int inner = threads > 1 ? 1 : std::max(1, threads);
    detail::run_blocks(static_cast<int>(sweep.g2_grid.size()), std::max(1, threads), [&](int i) {
        ModelConfig point = sweep.model;
        point.g2 = sweep.g2_grid[static_cast<std::size_t>(i)];
        rows[static_cast<std::size_t>(i)] = evaluate_point(point, sweep.seed, inner, sweep.jw);
    });
    return rows;
}

// ── CSV ─────────────────────────────────────────────────────────────────────

namespace detail {

inline std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string csv_cell(const std::optional<double>& v) { return v ? csv_num(*v) : ""; }

inline std::string csv_cell(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace detail

inline std::string csv_line(const SweepRow& row) {
    std::string out;
    out += row.model;
    out += ',' + detail::csv_cell(row.N);
    out += ',' + detail::csv_cell(row.k);
    out += ',' + std::to_string(row.L);
    out += ',' + detail::csv_num(row.g2);
    out += ',' + row.boundary;
    out += ',' + detail::csv_cell(row.energy);
    out += ',' + detail::csv_cell(row.gap);
    out += ',' + detail::csv_cell(row.gap_same_sector);
    out += ',' + detail::csv_cell(row.plaquette);
    out += ',' + detail::csv_cell(row.ggm_value);
    out += ',' + detail::csv_cell(row.sre2_value);
    out += ',' + detail::csv_cell(row.faf2_value);
    out += ',' + std::to_string(row.solver_iterations);
    out += ',' + detail::csv_num(row.wall_time_ms);
    out += ',' + row.error;
    return out;
}

inline void write_csv(const std::string& path, const std::vector<SweepRow>& rows) {
    std::ofstream out(path, std::ios::binary);  // binary: identical bytes on every platform
    if (!out) throw std::runtime_error("write_csv: cannot open " + path);
    out << kCsvHeader << '\n';
    for (const auto& row : rows) out << csv_line(row) << '\n';
}

// ── SVG line plots ──────────────────────────────────────────────────────────

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

namespace detail {

inline constexpr std::array<const char*, 8> kPalette = {
    "#4363d8", "#e6194b", "#3cb44b", "#f58231", "#911eb4", "#13b3a5", "#9a6324", "#555555"};

inline std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

}  // namespace detail

/// Minimal self-contained SVG line plot. Points with non-finite coordinates
/// (or non-positive ones on a log axis) are skipped.
inline void svg_line_plot(const std::string& path, const std::string& title,
                          const std::string& x_label, const std::string& y_label,
                          const std::vector<PlotSeries>& series, bool log_x = true,
                          bool log_y = false) {
    const double width = 880, height = 560;
    const double ml = 78, mr = 240, mt = 48, mb = 58;
    const double pw = width - ml - mr, ph = height - mt - mb;

    auto tx = [log_x](double x) { return log_x ? std::log10(x) : x; };
    auto ty = [log_y](double y) { return log_y ? std::log10(y) : y; };
    auto usable = [&](double x, double y) {
        return std::isfinite(x) && std::isfinite(y) && (!log_x || x > 0.0) && (!log_y || y > 0.0);
    };

    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    bool any = false;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) {
            if (!usable(x, y)) continue;
            if (!any) {
                x0 = x1 = tx(x);
                y0 = y1 = ty(y);
                any = true;
            } else {
                x0 = std::min(x0, tx(x));
                x1 = std::max(x1, tx(x));
                y0 = std::min(y0, ty(y));
                y1 = std::max(y1, ty(y));
            }
        }
    if (x1 - x0 < 1e-12) { x0 -= 0.5; x1 += 0.5; }
    if (y1 - y0 < 1e-12) { y0 -= 0.5; y1 += 0.5; }
    const double xpad = 0.04 * (x1 - x0), ypad = 0.04 * (y1 - y0);
    x0 -= xpad; x1 += xpad; y0 -= ypad; y1 += ypad;

    auto px = [&](double x) { return ml + (tx(x) - x0) / (x1 - x0) * pw; };
    auto py = [&](double y) { return mt + ph - (ty(y) - y0) / (y1 - y0) * ph; };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("svg_line_plot: cannot open " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << detail::svg_num(ml + pw / 2) << "\" y=\"26\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"17\">" << title << "</text>\n";

    // frame and ticks
    out << "<rect x=\"" << detail::svg_num(ml) << "\" y=\"" << detail::svg_num(mt) << "\" width=\""
        << detail::svg_num(pw) << "\" height=\"" << detail::svg_num(ph)
        << "\" fill=\"none\" stroke=\"#333\"/>\n";
    const int nticks = 5;
    for (int i = 0; i <= nticks; ++i) {
        const double fx = x0 + (x1 - x0) * i / nticks;
        const double fy = y0 + (y1 - y0) * i / nticks;
        const double sx = ml + pw * i / nticks;
        const double sy = mt + ph - ph * i / nticks;
        const double vx = log_x ? std::pow(10.0, fx) : fx;
        const double vy = log_y ? std::pow(10.0, fy) : fy;
        out << "<line x1=\"" << detail::svg_num(sx) << "\" y1=\"" << detail::svg_num(mt + ph)
            << "\" x2=\"" << detail::svg_num(sx) << "\" y2=\"" << detail::svg_num(mt + ph + 5)
            << "\" stroke=\"#333\"/>\n"
            << "<text x=\"" << detail::svg_num(sx) << "\" y=\"" << detail::svg_num(mt + ph + 20)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
            << detail::tick_label(vx) << "</text>\n"
            << "<line x1=\"" << detail::svg_num(ml - 5) << "\" y1=\"" << detail::svg_num(sy)
            << "\" x2=\"" << detail::svg_num(ml) << "\" y2=\"" << detail::svg_num(sy)
            << "\" stroke=\"#333\"/>\n"
            << "<text x=\"" << detail::svg_num(ml - 9) << "\" y=\"" << detail::svg_num(sy + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
            << detail::tick_label(vy) << "</text>\n";
    }
    out << "<text x=\"" << detail::svg_num(ml + pw / 2) << "\" y=\"" << detail::svg_num(height - 14)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << x_label
        << "</text>\n"
        << "<text x=\"20\" y=\"" << detail::svg_num(mt + ph / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" transform=\"rotate(-90 20 "
        << detail::svg_num(mt + ph / 2) << ")\">" << y_label << "</text>\n";

    // curves and legend
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = detail::kPalette[s % detail::kPalette.size()];
        std::string pts;
        for (const auto& [x, y] : series[s].points) {
            if (!usable(x, y)) continue;
            pts += detail::svg_num(px(x)) + "," + detail::svg_num(py(y)) + " ";
        }
        if (!pts.empty())
            out << "<polyline points=\"" << pts << "\" fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"1.8\"/>\n";
        const double ly = mt + 16 + 20.0 * static_cast<double>(s);
        out << "<line x1=\"" << detail::svg_num(ml + pw + 14) << "\" y1=\"" << detail::svg_num(ly)
            << "\" x2=\"" << detail::svg_num(ml + pw + 40) << "\" y2=\"" << detail::svg_num(ly)
            << "\" stroke=\"" << color << "\" stroke-width=\"2.5\"/>\n"
            << "<text x=\"" << detail::svg_num(ml + pw + 46) << "\" y=\"" << detail::svg_num(ly + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << series[s].label << "</text>\n";
    }
    out << "</svg>\n";
}

// ── figure presets ──────────────────────────────────────────────────────────

/// Sweeps making up one bundled figure.
inline std::vector<SweepConfig> figure_sweeps(const std::string& name, std::uint64_t seed,
                                              JwConvention jw = JwConvention::xstring) {
    std::vector<SweepConfig> sweeps;
    auto add = [&](ModelConfig model) {
        SweepConfig sweep;
        sweep.model = model;
        sweep.g2_grid = default_g2_grid();
        sweep.seed = seed;
        sweep.jw = jw;
        sweeps.push_back(std::move(sweep));
    };
    if (name == "fig2" || name == "fig4") {
        for (int L : {6, 8, 10}) {
            ModelConfig c = ModelConfig::make(Model::su2);
            c.L = L;
            add(c);
        }
        for (int L : {6, 8, 10}) {
            ModelConfig c = ModelConfig::make(Model::zn);
            c.N = 2;
            c.k = 0;
            c.L = L;
            add(c);
        }
        for (int L : (name == "fig2" ? std::vector<int>{2, 3} : std::vector<int>{3})) {
            ModelConfig c = ModelConfig::make(Model::d3);
            c.L = L;
            add(c);
        }
    } else if (name == "fig3") {
        for (int k : {0, 1, 2})
            for (int N : {2, 3, 4, 5, 6}) {
                if (k >= N) continue;
                ModelConfig c = ModelConfig::make(Model::zn);
                c.N = N;
                c.k = k;
                c.L = 4;
                add(c);
            }
    } else {
        throw config_error("figure: unknown name '" + name + "' (fig2, fig3, fig4, table1)");
    }
    return sweeps;
}

/// Curve label for legend/series grouping.
inline std::string row_label(const SweepRow& row) {
    std::string label = row.model;
    if (row.N) label += " N=" + std::to_string(*row.N) + " k=" + std::to_string(*row.k);
    label += " L=" + std::to_string(row.L);
    return label;
}

/// The electric-limit degeneracy table as CSV. Sets use ';' between members
/// and '|' between sets, so the cells stay comma-free.
inline void write_table1_csv(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_table1_csv: cannot open " + path);
    auto encode = [](const std::vector<int>& set) {
        std::string s;
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (i) s += ';';
            s += std::to_string(set[i]);
        }
        return s;
    };
    out << "N,k,degenerate_sets,ground_set\n";
    for (int k : {0, 1, 2})
        for (int N : {2, 3, 4, 5, 6}) {
            if (k >= N) continue;
            const DegeneracyReport report = degenerate_pairs(N, k);
            std::string sets;
            for (std::size_t i = 0; i < report.degenerate_sets.size(); ++i) {
                if (i) sets += '|';
                sets += encode(report.degenerate_sets[i]);
            }
            out << N << ',' << k << ',' << sets << ',' << encode(report.ground_set) << '\n';
        }
}

/// Files produced by run_figure.
struct FigureOutput {
    std::string csv_path;
    std::vector<std::string> svg_paths;
};

/// Run one bundled figure into out_dir: a CSV with every row plus one SVG per
/// plotted measure (unless want_svg is false). table1 is analytic and emits
/// only its CSV.
inline FigureOutput run_figure(const std::string& name, const std::string& out_dir, int threads,
                               bool want_svg, std::uint64_t seed,
                               JwConvention jw = JwConvention::xstring) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    FigureOutput output;
    if (name == "table1") {
        output.csv_path = (fs::path(out_dir) / "table1.csv").string();
        write_table1_csv(output.csv_path);
        return output;
    }

    std::vector<std::vector<SweepRow>> curves;
    for (const auto& sweep : figure_sweeps(name, seed, jw)) curves.push_back(run_grid(sweep, threads));

    std::vector<SweepRow> all_rows;
    for (const auto& rows : curves) all_rows.insert(all_rows.end(), rows.begin(), rows.end());
    output.csv_path = (fs::path(out_dir) / (name + ".csv")).string();
    write_csv(output.csv_path, all_rows);
    if (!want_svg) return output;

    auto series_for = [&](auto getter) {
        std::vector<PlotSeries> series;
        for (const auto& rows : curves) {
            PlotSeries s;
            s.label = row_label(rows.front());
            for (const auto& row : rows)
                if (const auto v = getter(row)) s.points.emplace_back(row.g2, *v);
            if (!s.points.empty()) series.push_back(std::move(s));
        }
        return series;
    };
    auto emit = [&](const std::string& stem, const std::string& ylabel,
                    const std::vector<PlotSeries>& series, bool log_y) {
        if (series.empty()) return;
        const std::string path = (fs::path(out_dir) / (stem + ".svg")).string();
        svg_line_plot(path, stem, "g2", ylabel, series, true, log_y);
        output.svg_paths.push_back(path);
    };

    if (name == "fig4") {
        auto series = series_for([](const SweepRow& r) { return r.gap; });
        for (const auto& rows : curves)
            if (rows.front().model == "d3") {
                PlotSeries s;
                s.label = row_label(rows.front()) + " same sector";
                for (const auto& row : rows)
                    if (row.gap_same_sector) s.points.emplace_back(row.g2, *row.gap_same_sector);
                if (!s.points.empty()) series.push_back(std::move(s));
            }
        emit("fig4_gap", "energy gap", series, true);
    } else {
        emit(name + "_ggm", "G2", series_for([](const SweepRow& r) { return r.ggm_value; }), false);
        emit(name + "_sre2", "M2", series_for([](const SweepRow& r) { return r.sre2_value; }), false);
        if (name == "fig2")
            emit(name + "_faf2", "F2", series_for([](const SweepRow& r) { return r.faf2_value; }), false);
    }
    return output;
}

}  // namespace lgt
