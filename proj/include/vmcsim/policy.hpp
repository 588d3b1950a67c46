#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "vmcsim/domain.hpp"
#include "vmcsim/history.hpp"
#include "vmcsim/plan.hpp"
#include "vmcsim/power.hpp"

namespace vmcsim {

// Raised when initial placement cannot fit a VM anywhere.
class PlacementError : public std::runtime_error {
 public:
  PlacementError(int vm_id, const std::string& what)
      : std::runtime_error(what), vm_id_(vm_id) {}
  int vm_id() const { return vm_id_; }

 private:
  int vm_id_;
};

struct PlannerHost {
  const HostSpec* spec = nullptr;
  const PowerModel* power = nullptr;
  const UtilizationHistory* history = nullptr;
  bool powered_on = false;
  double total_mips = 0;
  double demand_mips = 0;
  double ram_used_mb = 0;
  std::vector<int> residents;  // vm indices
};

struct PlannerVm {
  const VmSpec* spec = nullptr;
  int host = -1;  // host index; -1 before initial placement
  double demand_mips = 0;
};

struct PlannedMove {
  int vm = -1;   // vm index
  int from = -1; // host index
  int to = -1;   // host index
};

// Mutable working copy of the data center against which a policy builds one
// plan. Every assign/move updates occupancy so RAM and threshold feasibility
// stay consistent as the plan grows; mark/rollback supports all-or-nothing
// host evacuation.
class PlannerState {
 public:
  PlannerState(std::vector<PlannerHost> hosts, std::vector<PlannerVm> vms,
               ThresholdConfig thresholds, CoolingModel cooling, int t);

  int host_count() const { return static_cast<int>(hosts_.size()); }
  int vm_count() const { return static_cast<int>(vms_.size()); }
  const PlannerHost& host(int h) const { return hosts_[static_cast<size_t>(h)]; }
  const PlannerVm& vm(int v) const { return vms_[static_cast<size_t>(v)]; }
  const ThresholdConfig& thresholds() const { return thresholds_; }
  const CoolingModel& cooling() const { return cooling_; }
  // Interval index; -1 during initial placement.
  int time() const { return t_; }

  // Demanded (unclamped) utilization of the working state.
  double util(int h) const;
  // Utilization as of construction, before any planned move.
  double snapshot_util(int h) const;
  double ram_free_mb(int h) const;
  bool ram_fits(int h, int v) const;
  // Instantaneous Watts at clamped utilization; 0 when off.
  double power_w(int h) const;
  // Power increase from adding demand; includes idle power for an off host.
  double power_delta_w(int h, double add_mips) const;

  // Initial placement: vm must be unassigned.
  void assign(int v, int h);
  // Consolidation: relocate vm to h, recording a move. A VM may be moved at
  // most once per plan.
  void move_vm(int v, int h);

  std::size_t mark() const { return moves_.size(); }
  void rollback(std::size_t mark);

  const std::vector<PlannedMove>& planned_moves() const { return moves_; }
  MigrationPlan plan() const;  // in external ids

  // Hosts with at least one resident after the planned moves.
  int occupied_host_count() const;

 private:
  void detach(int v);
  void attach(int v, int h);

  std::vector<PlannerHost> hosts_;
  std::vector<PlannerVm> vms_;
  std::vector<double> snapshot_demand_;
  ThresholdConfig thresholds_;
  CoolingModel cooling_;
  int t_;
  std::vector<PlannedMove> moves_;
  std::vector<char> moved_;  // per vm index
};

// The pluggable decision contract: one instance owns all mutable learning
// state for a single run and is never shared between runs.
class ConsolidationPolicy {
 public:
  virtual ~ConsolidationPolicy() = default;
  virtual const std::string& id() const = 0;
  // Assign every VM via state.assign(); throws PlacementError when some VM
  // has no feasible host.
  virtual void initial_placement(PlannerState& state) = 0;
  // Build this interval's plan via state.move_vm().
  virtual void consolidate(PlannerState& state) = 0;
};

// Constructs the policy named by config.policy_id with config.policy_params
// applied and its RNG substream derived from config.seed. Unknown parameter
// keys raise ConfigError.
std::unique_ptr<ConsolidationPolicy> make_policy(const SimConfig& config);

}  // namespace vmcsim
