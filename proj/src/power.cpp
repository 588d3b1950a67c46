#include "vmcsim/power.hpp"

#include <cmath>
#include <stdexcept>

namespace vmcsim {

namespace {

// Table 2 curves, Watts at 0%,10%,...,100%.
constexpr std::array<double, 11> kHpG4 = {86,  89.4, 92.6, 96,  99.5, 102,
                                          106, 108,  112,  114, 117};
constexpr std::array<double, 11> kHpG5 = {93.7, 97,  101, 105, 110, 116,
                                          121,  125, 129, 133, 135};

}  // namespace

double PowerModel::watts(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw std::logic_error("power model utilization out of [0,1]: " +
                           std::to_string(u));
  }
  if (kind == Kind::kLinear) {
    return p_idle + (p_max - p_idle) * u;
  }
  double x = u * 10.0;
  double snapped = std::round(x);
  // Exact on the grid: 0.3*10 lands a few ulps off 3.0, so snap first.
  if (std::abs(x - snapped) < 1e-9) {
    return watts_at[static_cast<size_t>(snapped)];
  }
  auto i = static_cast<size_t>(x);
  double frac = x - static_cast<double>(i);
  return watts_at[i] + (watts_at[i + 1] - watts_at[i]) * frac;
}

PowerModel PowerModel::table(const std::array<double, 11>& watts_at) {
  for (size_t i = 1; i < watts_at.size(); ++i) {
    if (watts_at[i] < watts_at[i - 1]) {
      throw std::invalid_argument("power table must be non-decreasing");
    }
  }
  PowerModel m;
  m.kind = Kind::kTable;
  m.watts_at = watts_at;
  m.p_idle = watts_at.front();
  m.p_max = watts_at.back();
  return m;
}

PowerModel PowerModel::linear_peak_idle(double p_max, double p_idle) {
  if (!(p_max > 0) || p_idle < 0 || p_idle > p_max) {
    throw std::invalid_argument("linear power model requires 0 <= P_idle <= P_max, P_max > 0");
  }
  PowerModel m;
  m.kind = Kind::kLinear;
  m.p_max = p_max;
  m.p_idle = p_idle;
  return m;
}

PowerModel PowerModel::linear_idle_fraction(double p_max, double k) {
  if (k < 0 || k > 1) {
    throw std::invalid_argument("idle fraction k must lie in [0,1]");
  }
  return linear_peak_idle(p_max, k * p_max);
}

const PowerModel& power_model_hp_g4() {
  static const PowerModel m = PowerModel::table(kHpG4);
  return m;
}

const PowerModel& power_model_hp_g5() {
  static const PowerModel m = PowerModel::table(kHpG5);
  return m;
}

PowerModel power_model_by_id(const std::string& id) {
  if (id == "hp-g4") return power_model_hp_g4();
  if (id == "hp-g5") return power_model_hp_g5();
  if (id == "linear") return PowerModel::linear_idle_fraction(117.0, 0.7);
  throw std::invalid_argument("unknown power model id: " + id);
}

double energy_kwh(const std::vector<std::pair<double, double>>& power_samples) {
  double joules = 0;
  for (const auto& [watts, seconds] : power_samples) {
    if (!(seconds > 0)) {
      throw std::invalid_argument("sample duration must be positive");
    }
    joules += watts * seconds;
  }
  return joules / 3.6e6;
}

double cpu_temperature_c(const CoolingModel& cooling, double host_power_w) {
  return cooling.inlet_temp_c +
         cooling.thermal_resistance_c_per_w * host_power_w;
}

double total_energy_kwh(double computing_kwh, const CoolingModel& cooling) {
  return computing_kwh + computing_kwh / cooling.cop();
}

}  // namespace vmcsim
