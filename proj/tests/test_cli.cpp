#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "giantspin/analytics.hpp"
#include "giantspin/cli.hpp"

using namespace giantspin;

namespace {

constexpr double pi = std::numbers::pi;

double cell_num(const Cell& c) { return std::get<double>(c); }
std::string cell_str(const Cell& c) { return std::get<std::string>(c); }

const std::vector<Cell>& row_named(const Table& t, const std::string& name)
{
    for (const auto& row : t.rows)
        if (std::holds_alternative<std::string>(row[0]) && cell_str(row[0]) == name)
            return row;
    REQUIRE_MESSAGE(false, "row not found: " << name);
    static std::vector<Cell> dummy;
    return dummy;
}

std::string meta_value(const Table& t, const std::string& key)
{
    for (const auto& [k, v] : t.meta)
        if (k == key)
            return v;
    return {};
}

int column_index(const Table& t, const std::string& name)
{
    for (size_t i = 0; i < t.columns.size(); ++i)
        if (t.columns[i] == name)
            return static_cast<int>(i);
    REQUIRE_MESSAGE(false, "column not found: " << name);
    return -1;
}

std::string rendered(const Table& t, OutputFormat f)
{
    std::ostringstream os;
    write_table(t, f, os);
    return os.str();
}

} // namespace

TEST_CASE("fixed 10-significant-digit rendering")
{
    CHECK(format_number(22.584687916357) == "22.58468792");
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(-27.6446879164) == "-27.64468792");
    CHECK(format_number(6.834924e-10) == "6.834924e-10");
    CHECK(format_number(0.0) == "0");
}

TEST_CASE("barrier table reproduces the headline numbers")
{
    RunConfig cfg;
    const Table t = make_barrier_table(cfg);
    CHECK(meta_value(t, "experimental_h_b_K") == "22.2");

    CHECK(cell_num(row_named(t, "E_min")[1]) == doctest::Approx(-30.25).epsilon(1e-12));
    CHECK(cell_num(row_named(t, "V_max")[1]) == doctest::Approx(-5.06).epsilon(1e-12));
    CHECK(std::abs(cell_num(row_named(t, "h_b_numeric")[1]) - 22.58) < 0.01);
    CHECK(std::abs(cell_num(row_named(t, "h_b_harmonic")[1]) - 22.46) < 0.01);
    CHECK(std::abs(cell_num(row_named(t, "h_b_crude")[1]) - 22.90) < 0.005);
    CHECK(std::abs(cell_num(row_named(t, "E_gs_angle_numeric")[1]) - (-27.6447)) < 0.005);

    // deviation columns state their base explicitly
    CHECK(cell_str(row_named(t, "h_b_numeric")[2]) == "experiment_22.2K");
    CHECK(std::abs(cell_num(row_named(t, "h_b_numeric")[3]) - 1.7328) < 0.01);
    CHECK(cell_str(row_named(t, "E_gs_harmonic")[2]) == "exact_reference");
    CHECK(std::abs(std::abs(cell_num(row_named(t, "E_gs_harmonic")[3])) - 0.0809) < 0.005);
    CHECK(std::abs(cell_num(row_named(t, "h_b_harmonic")[3]) - 1.1649) < 0.01);

    // E=0 edge: crude barrier coincides with the well depth below a zero top
    RunConfig e0;
    e0.params.E = 0.0;
    const Table t0 = make_barrier_table(e0);
    CHECK(cell_num(row_named(t0, "V_max")[1]) == 0.0);
    CHECK(cell_num(row_named(t0, "E_gs_crude")[1]) ==
          doctest::Approx(-cell_num(row_named(t0, "h_b_crude")[1])).epsilon(1e-12));
}

TEST_CASE("spectrum table: Fe8 defaults")
{
    RunConfig cfg;
    cfg.n_levels = 4;
    const Table t = make_spectrum_table(cfg);
    CHECK(meta_value(t, "angle_enabled") == "true");
    REQUIRE(t.rows.size() == 4);
    const int e_angle = column_index(t, "E_angle_K");
    CHECK(std::abs(cell_num(t.rows[0][e_angle]) - (-27.6447)) < 0.005);
    const int parity = column_index(t, "parity_exact");
    CHECK(cell_str(t.rows[0][parity]) == "even");
    CHECK(cell_str(t.rows[1][parity]) == "odd");
    const int rel = column_index(t, "rel_dev_pct");
    CHECK(std::abs(cell_num(t.rows[0][rel]) - 0.3768) < 0.01);
}

TEST_CASE("spectrum table: E=0 exact pattern")
{
    RunConfig cfg;
    cfg.params.E = 0.0;
    cfg.n_levels = 21;
    const Table t = make_spectrum_table(cfg);
    const int e_exact = column_index(t, "E_exact_K");
    std::vector<double> expected;
    for (double m = -10; m <= 10; ++m)
        expected.push_back(-0.275 * m * m);
    std::sort(expected.begin(), expected.end());
    for (int k = 0; k < 21; ++k)
        CHECK(std::abs(cell_num(t.rows[k][e_exact]) - expected[k]) < 1e-9);
}

TEST_CASE("spectrum table: Lipkin limit is exact-only and sign-symmetric")
{
    RunConfig cfg;
    cfg.params.D = 0.0;
    cfg.n_levels = 21;
    const Table t = make_spectrum_table(cfg);
    CHECK(meta_value(t, "angle_enabled") == "false");
    CHECK(t.columns == std::vector<std::string>{"k", "E_exact_K", "parity_exact"});
    std::vector<double> vals, flipped;
    for (const auto& row : t.rows) {
        vals.push_back(cell_num(row[1]));
        flipped.push_back(-cell_num(row[1]));
    }
    std::sort(flipped.begin(), flipped.end());
    for (size_t k = 0; k < vals.size(); ++k)
        CHECK(std::abs(vals[k] - flipped[k]) <= 1e-10);
}

TEST_CASE("resonance table")
{
    RunConfig cfg;
    const Table t = make_resonance_table(cfg);
    CHECK(std::abs(cell_num(row_named(t, "H_parallel_lim")[1]) - 4.32) < 0.01);
    CHECK(std::abs(cell_num(row_named(t, "H_0")[1]) - 0.216) < 0.001);
    CHECK(cell_num(row_named(t, "H_0_experimental")[1]) == experimental_H0_T);
    CHECK(cell_num(row_named(t, "H_0")[1]) ==
          cell_num(row_named(t, "H_0_algebraic_form")[1]));
    CHECK(std::abs(cell_num(row_named(t, "H_0_vs_experiment")[1]) - (-1.777)) < 0.01);

    RunConfig g1 = cfg;
    g1.params.g = 1.0;
    const Table tg = make_resonance_table(g1);
    CHECK(cell_num(row_named(tg, "H_parallel_lim")[1]) ==
          doctest::Approx(2.0 * cell_num(row_named(t, "H_parallel_lim")[1])).epsilon(1e-12));
    CHECK(cell_num(row_named(tg, "H_0")[1]) ==
          doctest::Approx(2.0 * cell_num(row_named(t, "H_0")[1])).epsilon(1e-12));

    RunConfig locate = cfg;
    locate.k_resonances = 2;
    const Table tl = make_resonance_table(locate);
    REQUIRE(tl.rows.size() == 3); // k = 0, 1, 2
    const int found = column_index(tl, "found");
    const int hmin = column_index(tl, "H_min_gap_T");
    for (const auto& row : tl.rows)
        CHECK(cell_num(row[found]) == 1.0);
    CHECK(std::abs(cell_num(tl.rows[1][hmin]) - 0.2018) < 0.002);
    CHECK(std::abs(cell_num(tl.rows[2][hmin]) - 0.4036) < 0.002);
}

TEST_CASE("wavefunction table")
{
    RunConfig cfg;
    cfg.n_levels = 2;
    cfg.grid_points = 512;
    const Table t = make_wavefunction_table(cfg);
    REQUIRE(t.rows.size() == 512);
    const int cphi = column_index(t, "phi_rad");
    const int cpsi0 = column_index(t, "psi_0");
    const int cM = column_index(t, "M_per_K");

    // trapezoidal normalization of the sampled ground state
    double norm = 0.0;
    for (const auto& row : t.rows)
        norm += cell_num(row[cpsi0]) * cell_num(row[cpsi0]);
    norm *= 2.0 * pi / 512;
    CHECK(std::abs(norm - 1.0) < 1e-6);

    // psi0 maxima at the two minima of the potential
    double best = 0.0, best_phi = 0.0, mass_max = 0.0, mass_phi = 0.0;
    for (const auto& row : t.rows) {
        if (std::abs(cell_num(row[cpsi0])) > best) {
            best = std::abs(cell_num(row[cpsi0]));
            best_phi = cell_num(row[cphi]);
        }
        if (cell_num(row[cM]) > mass_max) {
            mass_max = cell_num(row[cM]);
            mass_phi = cell_num(row[cphi]);
        }
    }
    CHECK(std::min(std::abs(best_phi), std::abs(std::abs(best_phi) - pi)) < 0.05);
    // M(phi) peaks at 1/(4E) = 5.435 at the barrier positions +-pi/2
    CHECK(std::abs(mass_max - 5.434783) < 1e-4);
    CHECK(std::abs(std::abs(mass_phi) - pi / 2) < 0.05);

    RunConfig shifted = cfg;
    shifted.shift_interval = true;
    const Table ts = make_wavefunction_table(shifted);
    CHECK(cell_num(ts.rows.front()[cphi]) > -pi / 2);
    CHECK(std::abs(cell_num(ts.rows.back()[cphi]) - 1.5 * pi) < 1e-9);
}

TEST_CASE("sweep table")
{
    RunConfig cfg;
    cfg.n_levels = 4;
    const Table t = make_sweep_table(cfg);
    REQUIRE(t.rows.size() == 241);
    const int blocked = column_index(t, "blocked");
    const int matchings = column_index(t, "matchings");

    int flips = 0;
    for (size_t j = 1; j < t.rows.size(); ++j)
        if (cell_num(t.rows[j][blocked]) != cell_num(t.rows[j - 1][blocked]))
            ++flips;
    CHECK(flips == 1);
    CHECK(cell_num(t.rows[0][blocked]) == 0.0);
    CHECK(cell_num(t.rows[240][blocked]) == 1.0);

    // zero-field row shows the doublet matchings
    CHECK(cell_str(t.rows[0][matchings]) != "-");
    CHECK(cell_str(t.rows[0][matchings]).find("0:1:") == 0);
}

TEST_CASE("delimited round trip: re-parseable and byte-stable")
{
    RunConfig cfg;
    cfg.n_levels = 3;
    cfg.grid_points = 64;
    for (const Table& t : {make_barrier_table(cfg), make_spectrum_table(cfg),
                           make_resonance_table(cfg), make_wavefunction_table(cfg),
                           make_sweep_table(cfg)}) {
        const std::string once = rendered(t, OutputFormat::delimited);
        CHECK(once == rendered(t, OutputFormat::delimited)); // deterministic

        std::istringstream in(once);
        const Table back = read_table(in, OutputFormat::delimited);
        CHECK(back.title == t.title);
        CHECK(back.columns == t.columns);
        REQUIRE(back.rows.size() == t.rows.size());

        // a second render of the parsed table is byte-identical: the 10-digit
        // rendering is a fixed point of write/read
        CHECK(rendered(back, OutputFormat::delimited) == once);
    }
}

TEST_CASE("structured format carries the same values and provenance")
{
    RunConfig cfg;
    cfg.n_levels = 3;
    const Table t = make_spectrum_table(cfg);

    std::istringstream dj(rendered(t, OutputFormat::structured));
    const Table from_json = read_table(dj, OutputFormat::structured);
    std::istringstream dd(rendered(t, OutputFormat::delimited));
    const Table from_text = read_table(dd, OutputFormat::delimited);

    CHECK(from_json.title == from_text.title);
    CHECK(from_json.columns == from_text.columns);
    REQUIRE(from_json.rows.size() == from_text.rows.size());
    for (size_t r = 0; r < from_json.rows.size(); ++r)
        for (size_t c = 0; c < from_json.rows[r].size(); ++c) {
            if (std::holds_alternative<double>(from_json.rows[r][c]))
                CHECK(cell_num(from_json.rows[r][c]) == cell_num(from_text.rows[r][c]));
            else
                CHECK(cell_str(from_json.rows[r][c]) == cell_str(from_text.rows[r][c]));
        }

    // provenance present in the structured form
    CHECK(meta_value(from_json, "version") == std::string(artifact_version));
    CHECK(!meta_value(from_json, "residual_max_exact_K").empty());
    CHECK(!meta_value(from_json, "kmax").empty());
}

TEST_CASE("command dispatch and error mapping")
{
    RunConfig cfg;
    std::ostringstream sink;
    CHECK_THROWS_AS(run_command("unknown", cfg, sink), validation_error);

    RunConfig bad = cfg;
    bad.params.S = -2.0;
    CHECK_THROWS_AS(run_command("barrier", bad, sink), validation_error);

    RunConfig finite_field = cfg;
    finite_field.params.H_par = 1.0;
    CHECK_THROWS_AS(run_command("barrier", finite_field, sink), model_domain_error);

    CHECK(exit_code_for(validation_error("x")) == 2);
    CHECK(exit_code_for(model_domain_error("x")) == 3);
    CHECK(exit_code_for(numeric_error("x", 30)) == 4);
}
