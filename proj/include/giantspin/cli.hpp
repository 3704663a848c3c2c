#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "giantspin/angle_model.hpp"
#include "giantspin/core.hpp"

namespace giantspin {

// delimited: '#'-prefixed provenance lines, a tab-separated header, then
// tab-separated rows (plot-tool friendly; the default). structured: one JSON
// object carrying the same table plus full provenance.
enum class OutputFormat { delimited, structured };

// Everything a subcommand needs, resolvable from flags alone; a parameter
// file only supplies defaults that flags override.
struct RunConfig {
    SpinParams params = fe8_params();
    int kmax = default_kmax;
    int n_levels = 4;
    int grid_points = default_grid_points;
    int k_resonances = 0;
    bool shift_interval = false; // wavefunction tables over (-pi/2, 3pi/2]
    bool no_angle = false;       // sweep: exact levels only
    OutputFormat format = OutputFormat::delimited;
    std::string output_path;     // empty = stdout
};

using Cell = std::variant<double, std::string>;

struct Table {
    std::string title;
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// Fixed 10-significant-digit rendering used for every numeric cell in both
// output formats.
std::string format_number(double v);

void write_table(const Table& table, OutputFormat format, std::ostream& os);

// Reader for the artifact's own output; every emitted table round-trips.
Table read_table(std::istream& is, OutputFormat format = OutputFormat::delimited);

Table make_spectrum_table(const RunConfig& config);
Table make_barrier_table(const RunConfig& config);
Table make_resonance_table(const RunConfig& config);
Table make_wavefunction_table(const RunConfig& config);
Table make_sweep_table(const RunConfig& config);

// Dispatch by subcommand name; writes the rendered table to os. Throws the
// library's typed errors; exit_code_for maps them to the CLI contract
// (2 usage / 3 model domain / 4 numerical).
void run_command(const std::string& subcommand, const RunConfig& config,
                 std::ostream& os);
int exit_code_for(const error& e);

} // namespace giantspin
