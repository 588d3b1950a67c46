#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace vmcsim {

// Maps CPU utilization in [0,1] to Watts. Either an 11-point table
// (piecewise-linear between grid points, exact on the grid) or the linear
// idle/peak form P(u) = P_idle + (P_max - P_idle) * u.
struct PowerModel {
  enum class Kind { kTable, kLinear };

  Kind kind = Kind::kLinear;
  std::array<double, 11> watts_at{};  // table form, 0%..100% in 10% steps
  double p_max = 0;
  double p_idle = 0;

  // Caller must clamp; u outside [0,1] is a contract violation.
  double watts(double u) const;

  static PowerModel table(const std::array<double, 11>& watts_at);
  static PowerModel linear_peak_idle(double p_max, double p_idle);
  // Eq-1 style: idle power expressed as fraction k of peak.
  static PowerModel linear_idle_fraction(double p_max, double k);
};

// HP ProLiant ML110 G4 / G5 measured curves.
const PowerModel& power_model_hp_g4();
const PowerModel& power_model_hp_g5();

// Resolves "hp-g4" | "hp-g5" | "linear" (linear defaults: P_max 117, k 0.7).
PowerModel power_model_by_id(const std::string& id);

// CRAC cooling: CoP(T_supply) quadratic, plus a lumped steady-state CPU
// thermal model T_cpu = inlet + R * P.
struct CoolingModel {
  double supply_temp_c = 15.0;
  std::array<double, 3> cop_coeffs = {0.0068, 0.0008, 0.458};  // a*T^2 + b*T + c
  double inlet_temp_c = 25.0;
  double thermal_resistance_c_per_w = 0.34;
  double cpu_temp_threshold_c = 70.0;

  double cop() const {
    return cop_coeffs[0] * supply_temp_c * supply_temp_c +
           cop_coeffs[1] * supply_temp_c + cop_coeffs[2];
  }
};

// Piecewise-constant integration of (Watts, seconds) samples into kWh.
double energy_kwh(const std::vector<std::pair<double, double>>& power_samples);

double cpu_temperature_c(const CoolingModel& cooling, double host_power_w);

// computing + computing / CoP(supply_temp).
double total_energy_kwh(double computing_kwh, const CoolingModel& cooling);

}  // namespace vmcsim
