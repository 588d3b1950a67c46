#pragma once

#include <stdexcept>
#include <vector>

#include "vmcsim/domain.hpp"
#include "vmcsim/events.hpp"
#include "vmcsim/metrics.hpp"
#include "vmcsim/plan.hpp"
#include "vmcsim/policy.hpp"
#include "vmcsim/workload.hpp"

namespace vmcsim {

// A migration plan that violates its invariants against the current state.
class PlanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  bool collect_events = true;
  bool keep_per_interval = false;
};

struct RunResult {
  MetricsReport report;
  EventLog log;  // empty when collect_events is false
};

// Proportional fair clamp: demands are granted in full when they fit, else
// scaled by capacity / sum(demands). *violated reports the oversubscription.
std::vector<double> allocate_cpu(double capacity_mips,
                                 const std::vector<double>& demands,
                                 bool* violated = nullptr);

// Runs the full time-stepped simulation with the policy named in config.
// Bitwise-deterministic for fixed (config, traces). Throws ConfigError when
// validate(config) is non-empty or traces do not cover the horizon, and
// PlacementError when initial placement is infeasible.
RunResult run_simulation(const SimConfig& config, const TraceSet& traces,
                         const RunOptions& options = {});

// As above but with a caller-supplied policy (the policy's learning state is
// consumed by the run).
RunResult run_simulation(const SimConfig& config, const TraceSet& traces,
                         ConsolidationPolicy& policy,
                         const RunOptions& options = {});

}  // namespace vmcsim
