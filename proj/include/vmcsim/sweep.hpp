#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "vmcsim/domain.hpp"
#include "vmcsim/metrics.hpp"

namespace vmcsim {

// One experiment grid: every (policy x t_low x size x repetition) cell runs
// once; repetition r uses seed base_seed + r so all policies see identical
// workloads per repetition.
struct SweepSpec {
  std::vector<std::string> policies = {"mbfd", "ecocloud", "granite",
                                       "load", "acs", "iqr"};
  std::vector<double> t_lows = {0.1, 0.2, 0.3, 0.4, 0.5};
  double threshold_gap = 0.4;  // t_high = t_low + gap
  struct Size {
    int hosts = 50;
    int vms = 50;
  };
  std::vector<Size> sizes = {{50, 50}};
  int repetitions = 10;
  std::uint64_t base_seed = 0;
  std::string workload = "synthetic";  // synthetic | planetlab
  std::filesystem::path trace_dir;     // planetlab only; empty = bundled preset
  double synth_lo = 0.0;
  double synth_hi = 1.0;
  int horizon = 288;
  double interval_s = 300;
  SlavDenominator slav_denominator = SlavDenominator::kActiveHostIntervals;
  bool load_underload = true;
  // Per-policy parameter overrides applied to every cell of that policy.
  std::map<std::string, std::map<std::string, double>> policy_params;
  // VM type mix weights over the four Table-3 VM types.
  std::array<double, 4> vm_type_weights = {1, 1, 1, 1};
};

struct RunRow {
  std::string policy;
  std::string workload;
  std::uint64_t seed = 0;
  double t_low = 0, t_high = 0;
  int hosts = 0, vms = 0;
  MetricsReport report;
  std::string status = "ok";  // "ok" or "failed: <reason>"
  std::uint64_t trace_checksum = 0;

  bool ok() const { return status == "ok"; }
};

struct ResultTable {
  std::vector<RunRow> rows;
};

// Named §VI scenarios; throws ConfigError for an unknown name.
SweepSpec preset(const std::string& name);
std::vector<std::string> preset_names();

// The Table-3 data center: hosts alternate the two host types; VM types are
// drawn from vm_type_weights on a substream of `seed`.
SimConfig build_scenario(const SweepSpec& spec, int hosts, int vms,
                         double t_low, const std::string& policy,
                         std::uint64_t seed);

// Executes every cell; failed runs are recorded, not fatal. Deterministic row
// order regardless of scheduling.
ResultTable run_sweep(const SweepSpec& spec);

// Per-run rows (stable schema: policy, workload, seed, t_low, t_high, hosts,
// vms, energy_kwh, energy_total_kwh, migrations, slav, avg_slv,
// mean_active_hosts, status, trace_checksum).
void write_runs_csv(const ResultTable& table, std::ostream& out,
                    bool timestamp_comment = true);
// Per-cell aggregate statistics across repetitions.
void write_aggregates_csv(const ResultTable& table, std::ostream& out);

// Whitespace-separated plot data for one of the paper-style figures:
// fig2|fig5: metric means vs t_low; fig3|fig6: box stats per policy at the
// highest t_low; fig4: means vs VM count; fig7: means vs host count. Four
// files (energy, migrations, active_hosts, slav) per figure. Throws
// ConfigError when the table is missing required cells.
std::vector<std::filesystem::path> emit_plot_data(
    const ResultTable& table, const std::string& figure,
    const std::filesystem::path& out_dir);

}  // namespace vmcsim
