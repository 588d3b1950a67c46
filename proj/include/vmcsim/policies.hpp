#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "vmcsim/policy.hpp"

namespace vmcsim {

// Which resident leaves an overloaded host first.
enum class OverloadSelection { kMinRam, kMaxDemand };

struct MbfdParams {
  OverloadSelection selection = OverloadSelection::kMinRam;
};

struct EcoCloudParams {
  double p = 3;                 // assignment-function shape exponent
  double alpha = 0.25;          // underload migration scale
  double beta = 0.25;           // overload migration scale
  double invite_fraction = 1.0; // fraction of powered-on hosts invited
};

struct LoadParams {
  double a = 0.1;        // reward step
  double b = 0.1;        // penalty step
  double deadband = 0.05;
  double step = 0.1;     // predicted utilization delta
  bool underload = true; // handle under-utilized hosts via the MBFD pipeline
  OverloadSelection selection = OverloadSelection::kMinRam;
};

struct AcsParams {
  int ants = 0;        // 0 = number of selected VMs
  int iterations = 10;
  double q0 = 0.9;     // exploitation probability
  double rho = 0.1;    // evaporation
  double tau0 = 0;     // 0 = 1 / (underutilized hosts + 1)
  double beta_h = 2;   // heuristic exponent
  OverloadSelection selection = OverloadSelection::kMinRam;
};

struct IqrParams {
  double safety = 1.5;
  int window = 12;
  OverloadSelection selection = OverloadSelection::kMinRam;
};

struct GraniteParams {
  OverloadSelection selection = OverloadSelection::kMinRam;
};

// EcoCloud assignment probability f(u) = u^p (t_high - u) / Mp on [0, t_high],
// 0 elsewhere; Mp normalizes the maximum (at u = p*t_high/(p+1)) to 1.
double ecocloud_assign_probability(double u, const EcoCloudParams& params,
                                   double t_high);

// Learning-automaton actions, in the order the probability vector uses.
inline constexpr int kActionIncrease = 0;
inline constexpr int kActionDecrease = 1;
inline constexpr int kActionNoChange = 2;

// Linear reward-penalty update; `probs` must lie on the simplex.
std::array<double, 3> load_automaton_update(const std::array<double, 3>& probs,
                                            int chosen, bool correct,
                                            const LoadParams& params);

// Dynamic overload threshold T = clamp(1 - safety * IQR, 0.5, 1.0); quartiles
// by linear interpolation. Fewer than 4 samples falls back to t_high.
double iqr_threshold(std::span<const double> history, const IqrParams& params,
                     double fallback_t_high);

std::unique_ptr<ConsolidationPolicy> make_mbfd(const MbfdParams& params);
std::unique_ptr<ConsolidationPolicy> make_ecocloud(const EcoCloudParams& params,
                                                   std::uint64_t rng_seed);
std::unique_ptr<ConsolidationPolicy> make_granite(const GraniteParams& params);
std::unique_ptr<ConsolidationPolicy> make_load(const LoadParams& params);
std::unique_ptr<ConsolidationPolicy> make_acs(const AcsParams& params,
                                              std::uint64_t rng_seed);
std::unique_ptr<ConsolidationPolicy> make_iqr(const IqrParams& params);

}  // namespace vmcsim
