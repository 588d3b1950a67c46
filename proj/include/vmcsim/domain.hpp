#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace vmcsim {

// Configuration or input-file problem attributable to the user.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Static description of a physical machine.
struct HostSpec {
  int id = 0;
  double mips_per_core = 0;  // MIPS
  int cores = 1;
  double ram_mb = 0;
  double bandwidth_mbps = 0;
  double storage_gb = 0;
  std::string power_model_id;

  double total_mips() const { return mips_per_core * cores; }
};

// Static description of a virtual machine (single core throughout).
struct VmSpec {
  int id = 0;
  double mips = 0;
  int cores = 1;
  double ram_mb = 0;
  double bandwidth_mbps = 0;
  double storage_gb = 0;
};

struct ThresholdConfig {
  double t_low = 0.3;
  double t_high = 0.7;
};

enum class SlavDenominator { kActiveHostIntervals, kWallIntervals };

struct SimConfig {
  std::vector<HostSpec> hosts;
  std::vector<VmSpec> vms;
  ThresholdConfig thresholds;
  std::string policy_id = "mbfd";
  std::map<std::string, double> policy_params;  // numeric knobs, keys as in the params structs
  bool load_underload = true;                   // --load-underload
  std::uint64_t seed = 0;
  double interval_s = 300;
  int horizon = 288;
  SlavDenominator slav_denominator = SlavDenominator::kActiveHostIntervals;
  // Custom power tables: id -> 11 watt values at 0%,10%,...,100%.
  std::map<std::string, std::vector<double>> power_models;
};

struct Violation {
  std::string path;     // e.g. "hosts[2].id"
  std::string message;  // human-readable
};

// Pure: returns every invariant violation; empty iff the config is runnable.
std::vector<Violation> validate(const SimConfig& config);

// Loads a SimConfig from a JSON document with snake_case keys matching the
// field names. Unknown keys are an error.
SimConfig config_from_json(const nlohmann::json& j);
SimConfig config_from_file(const std::string& path);

bool is_known_policy(const std::string& id);

}  // namespace vmcsim
