#include "giantspin/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "giantspin/analytics.hpp"
#include "giantspin/giant_spin.hpp"
#include "giantspin/sweep.hpp"

namespace giantspin {

namespace {

using nlohmann::json;

constexpr double pi = std::numbers::pi;

// Quantize through the 10-digit rendering so both output formats carry the
// same numeric values.
double quantize(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return std::strtod(buf, nullptr);
}

std::vector<std::pair<std::string, std::string>> base_meta(const RunConfig& c)
{
    const SpinParams& p = c.params;
    return {{"version", artifact_version},
            {"S", format_number(p.S)},
            {"D_K", format_number(p.D)},
            {"E_K", format_number(p.E)},
            {"g", format_number(p.g)},
            {"field_T", format_number(p.H_par)}};
}

Cell num(double v) { return Cell{v}; }
Cell txt(std::string s) { return Cell{std::move(s)}; }

std::string parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

std::string xparity_name(WellExchangeParity p)
{
    switch (p) {
    case WellExchangeParity::even: return "even";
    case WellExchangeParity::odd: return "odd";
    default: return "mixed";
    }
}

// Signed percent deviation of value against base.
double pct_dev(double value, double base) { return (value - base) / base * 100.0; }

Cell parse_cell(const std::string& s)
{
    if (!s.empty()) {
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (end == s.c_str() + s.size())
            return Cell{v};
    }
    return Cell{s};
}

std::vector<std::string> split_tabs(const std::string& line)
{
    std::vector<std::string> out;
    std::string::size_type pos = 0;
    while (true) {
        const auto tab = line.find('\t', pos);
        if (tab == std::string::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, tab - pos));
        pos = tab + 1;
    }
}

} // namespace

std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void write_table(const Table& table, OutputFormat format, std::ostream& os)
{
    if (format == OutputFormat::delimited) {
        os << "# giantspin " << table.title << "\n";
        for (const auto& [k, v] : table.meta)
            os << "# " << k << "=" << v << "\n";
        for (size_t i = 0; i < table.columns.size(); ++i)
            os << table.columns[i] << (i + 1 < table.columns.size() ? "\t" : "\n");
        for (const auto& row : table.rows) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (std::holds_alternative<double>(row[i]))
                    os << format_number(std::get<double>(row[i]));
                else
                    os << std::get<std::string>(row[i]);
                os << (i + 1 < row.size() ? "\t" : "\n");
            }
        }
        return;
    }

    json j;
    j["artifact"] = "giantspin";
    j["subcommand"] = table.title;
    json meta = json::object();
    for (const auto& [k, v] : table.meta)
        meta[k] = v;
    j["meta"] = meta;
    j["columns"] = table.columns;
    json rows = json::array();
    for (const auto& row : table.rows) {
        json r = json::array();
        for (const auto& cell : row) {
            if (std::holds_alternative<double>(cell))
                r.push_back(quantize(std::get<double>(cell)));
            else
                r.push_back(std::get<std::string>(cell));
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = rows;
    os << j.dump(2) << "\n";
}

Table read_table(std::istream& is, OutputFormat format)
{
    Table t;
    if (format == OutputFormat::structured) {
        json j = json::parse(is);
        t.title = j.at("subcommand").get<std::string>();
        for (const auto& [k, v] : j.at("meta").items())
            t.meta.emplace_back(k, v.get<std::string>());
        for (const auto& c : j.at("columns"))
            t.columns.push_back(c.get<std::string>());
        for (const auto& r : j.at("rows")) {
            std::vector<Cell> row;
            for (const auto& cell : r) {
                if (cell.is_number())
                    row.push_back(Cell{cell.get<double>()});
                else
                    row.push_back(Cell{cell.get<std::string>()});
            }
            t.rows.push_back(std::move(row));
        }
        return t;
    }

    std::string line;
    bool have_header = false;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        if (line.rfind("# ", 0) == 0) {
            const std::string body = line.substr(2);
            if (body.rfind("giantspin ", 0) == 0 && t.title.empty()) {
                t.title = body.substr(10);
            } else {
                const auto eq = body.find('=');
                if (eq != std::string::npos)
                    t.meta.emplace_back(body.substr(0, eq), body.substr(eq + 1));
            }
            continue;
        }
        if (!have_header) {
            t.columns = split_tabs(line);
            have_header = true;
            continue;
        }
        std::vector<Cell> row;
        for (const std::string& cell : split_tabs(line))
            row.push_back(parse_cell(cell));
        t.rows.push_back(std::move(row));
    }
    if (!have_header)
        throw validation_error("read_table: no header line found");
    return t;
}

Table make_spectrum_table(const RunConfig& c)
{
    Table t;
    t.title = "spectrum";
    t.meta = base_meta(c);

    const Spectrum exact = reference_spectrum(c.params, c.n_levels);
    double res_exact = 0.0;
    for (double r : exact.residuals)
        res_exact = std::max(res_exact, r);

    const bool angle_enabled = c.params.D > c.params.E;
    t.meta.emplace_back("kmax", format_number(c.kmax));
    t.meta.emplace_back("levels", format_number(c.n_levels));
    t.meta.emplace_back("residual_max_exact_K", format_number(res_exact));
    t.meta.emplace_back("angle_enabled", angle_enabled ? "true" : "false");

    if (!angle_enabled) {
        t.meta.emplace_back("note", "angle model disabled (requires D > E)");
        t.columns = {"k", "E_exact_K", "parity_exact"};
        for (int k = 0; k < c.n_levels; ++k)
            t.rows.push_back({num(k), num(exact.eigenvalues[k]),
                              txt(exact.labels[k].empty() ? "-" : exact.labels[k])});
        return t;
    }

    const auto levels = solve(c.params, c.kmax, c.n_levels, c.grid_points);
    double res_angle = 0.0;
    for (const auto& lv : levels)
        res_angle = std::max(res_angle, lv.residual);
    t.meta.emplace_back("residual_max_angle_K", format_number(res_angle));

    t.columns = {"k",            "E_exact_K",      "parity_exact", "E_angle_K",
                 "parity_angle", "xparity_angle",  "abs_dev_K",    "rel_dev_pct"};
    for (int k = 0; k < c.n_levels; ++k) {
        const double ee = exact.eigenvalues[k];
        const double ea = levels[k].energy;
        t.rows.push_back({num(k), num(ee),
                          txt(exact.labels[k].empty() ? "-" : exact.labels[k]),
                          num(ea), txt(parity_name(levels[k].psi.parity)),
                          txt(xparity_name(levels[k].psi.exchange_parity)),
                          num(std::abs(ea - ee)),
                          num(std::abs(ea - ee) / std::abs(ee) * 100.0)});
    }
    return t;
}

Table make_barrier_table(const RunConfig& c)
{
    Table t;
    t.title = "barrier";
    t.meta = base_meta(c);
    t.meta.emplace_back("kmax", format_number(c.kmax));
    t.meta.emplace_back("experimental_h_b_K", format_number(experimental_barrier_K));

    const double E_gs_exact = reference_spectrum(c.params, 1).eigenvalues[0];
    const double E_gs_angle = solve(c.params, c.kmax, 1).front().energy;
    const BarrierReport r = make_barrier_report(c.params, E_gs_angle);

    t.columns = {"quantity", "value_K", "compare_to", "deviation_pct"};
    const std::string ref = "exact_reference";
    const std::string exp = "experiment_22.2K";
    auto row = [&](const char* name, double v, const std::string& base, double dev) {
        t.rows.push_back({txt(name), num(v), txt(base), num(dev)});
    };
    auto plain = [&](const char* name, double v) {
        t.rows.push_back({txt(name), num(v), txt("-"), txt("-")});
    };

    plain("V_max", r.V_max);
    plain("E_min", r.E_min);
    plain("omega_harmonic", r.omega);
    plain("E_gs_exact_reference", E_gs_exact);
    row("E_gs_angle_numeric", r.E_gs_numeric, ref,
        pct_dev(std::abs(r.E_gs_numeric), std::abs(E_gs_exact)));
    row("h_b_numeric", r.h_b_numeric, exp, pct_dev(r.h_b_numeric, experimental_barrier_K));
    row("E_gs_harmonic", r.E_gs_harmonic, ref,
        pct_dev(std::abs(r.E_gs_harmonic), std::abs(E_gs_exact)));
    row("h_b_harmonic", r.h_b_harmonic, exp, pct_dev(r.h_b_harmonic, experimental_barrier_K));
    row("E_gs_crude", r.E_gs_crude, ref,
        pct_dev(std::abs(r.E_gs_crude), std::abs(E_gs_exact)));
    row("h_b_crude", r.h_b_crude, exp, pct_dev(r.h_b_crude, experimental_barrier_K));
    return t;
}

Table make_resonance_table(const RunConfig& c)
{
    Table t;
    t.title = "resonance";
    t.meta = base_meta(c);
    const double H_lim = field_cutoff(c.params);
    const double H0 = resonance_increment(c.params);
    t.meta.emplace_back("experimental_H0_T", format_number(experimental_H0_T));

    if (c.k_resonances <= 0) {
        t.columns = {"quantity", "value", "unit"};
        const double H0_algebraic =
            2.0 / (c.params.g * mu_B_over_k_B) *
            std::sqrt(2.0 * c.params.E * (c.params.D - c.params.E));
        t.rows.push_back({txt("H_parallel_lim"), num(H_lim), txt("T")});
        t.rows.push_back({txt("H_0"), num(H0), txt("T")});
        t.rows.push_back({txt("H_0_algebraic_form"), num(H0_algebraic), txt("T")});
        t.rows.push_back({txt("H_0_experimental"), num(experimental_H0_T), txt("T")});
        t.rows.push_back({txt("H_0_vs_experiment"), num(pct_dev(H0, experimental_H0_T)),
                          txt("percent")});
        return t;
    }

    t.meta.emplace_back("H_lim_T", format_number(H_lim));
    t.meta.emplace_back("H_0_T", format_number(H0));
    t.columns = {"k", "found", "H_seed_T", "H_min_gap_T", "gap_K", "offset_T", "pair_lower"};
    for (const ResonanceLocation& loc : locate_matchings(c.params, c.k_resonances)) {
        if (loc.found)
            t.rows.push_back({num(loc.k), num(1), num(loc.H_seed), num(loc.H_at_min_gap),
                              num(loc.gap), num(loc.offset_from_seed), num(loc.pair_lower)});
        else
            t.rows.push_back({num(loc.k), num(0), num(loc.H_seed), txt("-"), txt("-"),
                              txt("-"), txt("-")});
    }
    return t;
}

Table make_wavefunction_table(const RunConfig& c)
{
    Table t;
    t.title = "wavefunction";
    t.meta = base_meta(c);
    t.meta.emplace_back("kmax", format_number(c.kmax));
    t.meta.emplace_back("levels", format_number(c.n_levels));
    t.meta.emplace_back("grid_points", format_number(c.grid_points));
    t.meta.emplace_back("interval", c.shift_interval ? "(-pi/2, 3pi/2]" : "(-pi, pi]");

    const auto levels = solve(c.params, c.kmax, c.n_levels, c.grid_points);

    t.columns = {"phi_rad"};
    for (int k = 0; k < c.n_levels; ++k)
        t.columns.push_back("psi_" + std::to_string(k));
    t.columns.push_back("V_K");
    t.columns.push_back("M_per_K");

    const double start = c.shift_interval ? -pi / 2.0 : -pi;
    for (int j = 0; j < c.grid_points; ++j) {
        const double phi = start + (j + 1) * (2.0 * pi / c.grid_points);
        std::vector<Cell> row{num(phi)};
        for (const auto& lv : levels)
            row.push_back(num(evaluate(lv.psi, phi)));
        row.push_back(num(potential(phi, c.params)));
        row.push_back(num(1.0 / inverse_mass(phi, c.params)));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table make_sweep_table(const RunConfig& c)
{
    Table t;
    t.title = "sweep";
    t.meta = base_meta(c);

    const bool include_angle = !c.no_angle && c.params.D > c.params.E;
    const double matching_tol = 0.5;
    const auto grid = default_field_grid(c.params);
    const auto records =
        sweep_field(c.params, grid, include_angle, c.n_levels, matching_tol, c.kmax);

    t.meta.emplace_back("H_0_T", format_number(resonance_increment(c.params)));
    t.meta.emplace_back("H_lim_T", format_number(field_cutoff(c.params)));
    t.meta.emplace_back("matching_tol_K", format_number(matching_tol));
    t.meta.emplace_back("levels", format_number(c.n_levels));
    t.meta.emplace_back("angle_levels", include_angle ? "true" : "false");

    t.columns = {"H_T", "blocked"};
    for (int k = 0; k < c.n_levels; ++k)
        t.columns.push_back("E" + std::to_string(k) + "_K");
    if (include_angle)
        for (int k = 0; k < c.n_levels; ++k)
            t.columns.push_back("A" + std::to_string(k) + "_K");
    t.columns.push_back("matchings");

    for (const SweepRecord& rec : records) {
        std::vector<Cell> row{num(rec.H_par), num(rec.blocked ? 1 : 0)};
        for (double e : rec.levels_exact)
            row.push_back(num(e));
        if (include_angle)
            for (double e : *rec.levels_angle)
                row.push_back(num(e));
        if (rec.matchings.empty()) {
            row.push_back(txt("-"));
        } else {
            std::ostringstream ms;
            for (size_t i = 0; i < rec.matchings.size(); ++i) {
                if (i)
                    ms << ";";
                ms << rec.matchings[i].lower << ":" << rec.matchings[i].lower + 1 << ":"
                   << format_number(rec.matchings[i].gap);
            }
            row.push_back(txt(ms.str()));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

void run_command(const std::string& subcommand, const RunConfig& config,
                 std::ostream& os)
{
    Table t;
    if (subcommand == "spectrum")
        t = make_spectrum_table(config);
    else if (subcommand == "barrier")
        t = make_barrier_table(config);
    else if (subcommand == "resonance")
        t = make_resonance_table(config);
    else if (subcommand == "wavefunction")
        t = make_wavefunction_table(config);
    else if (subcommand == "sweep")
        t = make_sweep_table(config);
    else
        throw validation_error("unknown subcommand: " + subcommand);
    write_table(t, config.format, os);
}

int exit_code_for(const error& e)
{
    if (dynamic_cast<const numeric_error*>(&e))
        return 4;
    if (dynamic_cast<const model_domain_error*>(&e))
        return 3;
    return 2; // validation / usage
}

} // namespace giantspin
