#include "vmcsim/domain.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "vmcsim/power.hpp"

namespace vmcsim {

namespace {

using nlohmann::json;

const std::set<std::string> kPolicies = {"mbfd", "ecocloud", "granite",
                                         "load", "acs", "iqr"};

void require_keys(const json& j, const std::set<std::string>& allowed,
                  const std::string& path) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw ConfigError(path + ": unknown key \"" + it.key() + "\"");
    }
  }
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  return it->get<T>();
}

HostSpec host_from_json(const json& j, const std::string& path) {
  require_keys(j,
               {"id", "mips_per_core", "cores", "ram", "bandwidth", "storage",
                "power_model_id"},
               path);
  HostSpec h;
  h.id = j.at("id").get<int>();
  h.mips_per_core = j.at("mips_per_core").get<double>();
  h.cores = get_or(j, "cores", 1);
  h.ram_mb = j.at("ram").get<double>();
  h.bandwidth_mbps = get_or(j, "bandwidth", 0.0);
  h.storage_gb = get_or(j, "storage", 0.0);
  h.power_model_id = get_or<std::string>(j, "power_model_id", "hp-g4");
  return h;
}

VmSpec vm_from_json(const json& j, const std::string& path) {
  require_keys(j, {"id", "mips", "cores", "ram", "bandwidth", "storage"},
               path);
  VmSpec v;
  v.id = j.at("id").get<int>();
  v.mips = j.at("mips").get<double>();
  v.cores = get_or(j, "cores", 1);
  v.ram_mb = j.at("ram").get<double>();
  v.bandwidth_mbps = get_or(j, "bandwidth", 0.0);
  v.storage_gb = get_or(j, "storage", 0.0);
  return v;
}

}  // namespace

bool is_known_policy(const std::string& id) { return kPolicies.count(id) > 0; }

std::vector<Violation> validate(const SimConfig& config) {
  std::vector<Violation> out;
  auto add = [&out](std::string path, std::string message) {
    out.push_back({std::move(path), std::move(message)});
  };

  if (config.hosts.empty()) add("hosts", "at least one host is required");
  if (config.vms.empty()) add("vms", "at least one VM is required");

  std::set<int> host_ids;
  for (size_t i = 0; i < config.hosts.size(); ++i) {
    const HostSpec& h = config.hosts[i];
    std::string p = "hosts[" + std::to_string(i) + "]";
    if (!(h.mips_per_core > 0)) add(p + ".mips_per_core", "must be > 0");
    if (h.cores < 1) add(p + ".cores", "must be >= 1");
    if (!(h.ram_mb > 0)) add(p + ".ram", "must be > 0");
    if (!host_ids.insert(h.id).second) {
      add(p + ".id", "duplicate host id " + std::to_string(h.id));
    }
    try {
      if (!config.power_models.count(h.power_model_id)) {
        power_model_by_id(h.power_model_id);
      }
    } catch (const std::invalid_argument& e) {
      add(p + ".power_model_id", e.what());
    }
  }

  std::set<int> vm_ids;
  for (size_t i = 0; i < config.vms.size(); ++i) {
    const VmSpec& v = config.vms[i];
    std::string p = "vms[" + std::to_string(i) + "]";
    if (!(v.mips > 0)) add(p + ".mips", "must be > 0");
    if (!(v.ram_mb > 0)) add(p + ".ram", "must be > 0");
    if (!vm_ids.insert(v.id).second) {
      add(p + ".id", "duplicate vm id " + std::to_string(v.id));
    }
  }

  const ThresholdConfig& th = config.thresholds;
  if (!(th.t_low > 0 && th.t_low < th.t_high && th.t_high <= 1.0)) {
    add("thresholds", "require 0 < t_low < t_high <= 1 (got t_low=" +
                          std::to_string(th.t_low) +
                          ", t_high=" + std::to_string(th.t_high) + ")");
  }

  if (!is_known_policy(config.policy_id)) {
    add("policy_id", "unknown policy \"" + config.policy_id + "\"");
  }
  if (config.horizon < 1) add("horizon", "must be >= 1");
  if (!(config.interval_s > 0)) add("interval", "must be > 0");

  for (const auto& [id, table] : config.power_models) {
    if (table.size() != 11) {
      add("power_models." + id, "custom table must have exactly 11 values");
      continue;
    }
    for (size_t i = 1; i < table.size(); ++i) {
      if (table[i] < table[i - 1]) {
        add("power_models." + id, "custom table must be non-decreasing");
        break;
      }
    }
  }
  return out;
}

SimConfig config_from_json(const json& j) {
  require_keys(j,
               {"hosts", "vms", "thresholds", "policy_id", "policy_params",
                "load_underload", "seed", "interval", "horizon",
                "slav_denominator", "power_models"},
               "config");
  SimConfig c;
  size_t i = 0;
  for (const auto& hj : j.at("hosts")) {
    c.hosts.push_back(host_from_json(hj, "hosts[" + std::to_string(i++) + "]"));
  }
  i = 0;
  for (const auto& vj : j.at("vms")) {
    c.vms.push_back(vm_from_json(vj, "vms[" + std::to_string(i++) + "]"));
  }
  const json& tj = j.at("thresholds");
  require_keys(tj, {"t_low", "t_high"}, "thresholds");
  c.thresholds.t_low = tj.at("t_low").get<double>();
  c.thresholds.t_high = tj.at("t_high").get<double>();
  c.policy_id = get_or<std::string>(j, "policy_id", "mbfd");
  if (j.contains("policy_params")) {
    for (auto it = j.at("policy_params").begin();
         it != j.at("policy_params").end(); ++it) {
      if (it.key() == "selection") {
        // Mapped to a number so the params block stays uniform.
        const std::string s = it->get<std::string>();
        if (s == "min-ram") {
          c.policy_params["selection"] = 0;
        } else if (s == "max-demand") {
          c.policy_params["selection"] = 1;
        } else {
          throw ConfigError("policy_params.selection: unknown value \"" + s +
                            "\"");
        }
      } else {
        c.policy_params[it.key()] = it->get<double>();
      }
    }
  }
  c.load_underload = get_or(j, "load_underload", true);
  c.seed = get_or<std::uint64_t>(j, "seed", 0);
  c.interval_s = get_or(j, "interval", 300.0);
  c.horizon = get_or(j, "horizon", 288);
  if (j.contains("slav_denominator")) {
    const std::string s = j.at("slav_denominator").get<std::string>();
    if (s == "active") {
      c.slav_denominator = SlavDenominator::kActiveHostIntervals;
    } else if (s == "wall") {
      c.slav_denominator = SlavDenominator::kWallIntervals;
    } else {
      throw ConfigError("slav_denominator: expected \"active\" or \"wall\"");
    }
  }
  if (j.contains("power_models")) {
    for (auto it = j.at("power_models").begin();
         it != j.at("power_models").end(); ++it) {
      c.power_models[it.key()] = it->get<std::vector<double>>();
    }
  }
  return c;
}

SimConfig config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return config_from_json(j);
}

}  // namespace vmcsim
