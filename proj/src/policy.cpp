#include "vmcsim/policy.hpp"

#include <algorithm>
#include <cmath>

#include "vmcsim/policies.hpp"
#include "vmcsim/rng.hpp"

namespace vmcsim {

PlannerState::PlannerState(std::vector<PlannerHost> hosts,
                           std::vector<PlannerVm> vms,
                           ThresholdConfig thresholds, CoolingModel cooling,
                           int t)
    : hosts_(std::move(hosts)),
      vms_(std::move(vms)),
      thresholds_(thresholds),
      cooling_(cooling),
      t_(t),
      moved_(vms_.size(), 0) {
  snapshot_demand_.reserve(hosts_.size());
  for (const auto& h : hosts_) snapshot_demand_.push_back(h.demand_mips);
}

double PlannerState::util(int h) const {
  const auto& host = hosts_[static_cast<size_t>(h)];
  return host.demand_mips / host.total_mips;
}

double PlannerState::snapshot_util(int h) const {
  return snapshot_demand_[static_cast<size_t>(h)] /
         hosts_[static_cast<size_t>(h)].total_mips;
}

double PlannerState::ram_free_mb(int h) const {
  const auto& host = hosts_[static_cast<size_t>(h)];
  return host.spec->ram_mb - host.ram_used_mb;
}

bool PlannerState::ram_fits(int h, int v) const {
  return vms_[static_cast<size_t>(v)].spec->ram_mb <= ram_free_mb(h) + 1e-9;
}

double PlannerState::power_w(int h) const {
  const auto& host = hosts_[static_cast<size_t>(h)];
  if (!host.powered_on && host.residents.empty()) return 0.0;
  return host.power->watts(std::min(util(h), 1.0));
}

double PlannerState::power_delta_w(int h, double add_mips) const {
  const auto& host = hosts_[static_cast<size_t>(h)];
  double u_new = std::min((host.demand_mips + add_mips) / host.total_mips, 1.0);
  double p_new = host.power->watts(u_new);
  if (!host.powered_on && host.residents.empty()) return p_new;
  return p_new - host.power->watts(std::min(util(h), 1.0));
}

void PlannerState::attach(int v, int h) {
  auto& host = hosts_[static_cast<size_t>(h)];
  auto& vm = vms_[static_cast<size_t>(v)];
  host.residents.push_back(v);
  host.demand_mips += vm.demand_mips;
  host.ram_used_mb += vm.spec->ram_mb;
  host.powered_on = true;
  vm.host = h;
}

void PlannerState::detach(int v) {
  auto& vm = vms_[static_cast<size_t>(v)];
  auto& host = hosts_[static_cast<size_t>(vm.host)];
  auto it = std::find(host.residents.begin(), host.residents.end(), v);
  host.residents.erase(it);
  host.demand_mips -= vm.demand_mips;
  host.ram_used_mb -= vm.spec->ram_mb;
  vm.host = -1;
}

void PlannerState::assign(int v, int h) {
  if (vms_[static_cast<size_t>(v)].host != -1) {
    throw std::logic_error("assign: vm already placed");
  }
  attach(v, h);
}

void PlannerState::move_vm(int v, int h) {
  auto& vm = vms_[static_cast<size_t>(v)];
  if (vm.host == -1) throw std::logic_error("move_vm: vm not placed");
  if (vm.host == h) throw std::logic_error("move_vm: destination == source");
  if (moved_[static_cast<size_t>(v)]) {
    throw std::logic_error("move_vm: vm already moved in this plan");
  }
  int from = vm.host;
  detach(v);
  attach(v, h);
  moved_[static_cast<size_t>(v)] = 1;
  moves_.push_back({v, from, h});
}

void PlannerState::rollback(std::size_t mark) {
  while (moves_.size() > mark) {
    PlannedMove m = moves_.back();
    moves_.pop_back();
    detach(m.vm);
    attach(m.vm, m.from);
    moved_[static_cast<size_t>(m.vm)] = 0;
    // attach() powers the source back on; restore the destination's flag from
    // occupancy (it may have been off before this move).
    auto& to = hosts_[static_cast<size_t>(m.to)];
    if (to.residents.empty()) to.powered_on = false;
  }
}

MigrationPlan PlannerState::plan() const {
  MigrationPlan p;
  p.moves.reserve(moves_.size());
  for (const PlannedMove& m : moves_) {
    p.moves.push_back({vms_[static_cast<size_t>(m.vm)].spec->id,
                       hosts_[static_cast<size_t>(m.from)].spec->id,
                       hosts_[static_cast<size_t>(m.to)].spec->id});
  }
  return p;
}

int PlannerState::occupied_host_count() const {
  int n = 0;
  for (const auto& h : hosts_) n += h.residents.empty() ? 0 : 1;
  return n;
}

namespace {

double get_param(const std::map<std::string, double>& params,
                 const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void check_keys(const std::map<std::string, double>& params,
                std::initializer_list<const char*> allowed,
                const std::string& policy) {
  for (const auto& [key, value] : params) {
    (void)value;
    if (std::find_if(allowed.begin(), allowed.end(), [&key](const char* a) {
          return key == a;
        }) == allowed.end()) {
      throw ConfigError("policy_params: unknown key \"" + key + "\" for " +
                        policy);
    }
  }
}

OverloadSelection selection_from(const std::map<std::string, double>& params) {
  return get_param(params, "selection", 0) == 0 ? OverloadSelection::kMinRam
                                                : OverloadSelection::kMaxDemand;
}

}  // namespace

std::unique_ptr<ConsolidationPolicy> make_policy(const SimConfig& config) {
  const auto& pp = config.policy_params;
  const std::uint64_t policy_seed =
      SplitMix64::combine(config.seed, stream_tag::kPolicy);
  if (config.policy_id == "mbfd") {
    check_keys(pp, {"selection"}, "mbfd");
    MbfdParams p;
    p.selection = selection_from(pp);
    return make_mbfd(p);
  }
  if (config.policy_id == "ecocloud") {
    check_keys(pp, {"p", "alpha", "beta", "invite_fraction"}, "ecocloud");
    EcoCloudParams p;
    p.p = get_param(pp, "p", p.p);
    p.alpha = get_param(pp, "alpha", p.alpha);
    p.beta = get_param(pp, "beta", p.beta);
    p.invite_fraction = get_param(pp, "invite_fraction", p.invite_fraction);
    if (!(p.p >= 1)) throw ConfigError("ecocloud: require p >= 1");
    if (!(p.alpha > 0 && p.alpha <= 1 && p.beta > 0 && p.beta <= 1)) {
      throw ConfigError("ecocloud: require alpha, beta in (0, 1]");
    }
    return make_ecocloud(p, policy_seed);
  }
  if (config.policy_id == "granite") {
    check_keys(pp, {"selection"}, "granite");
    GraniteParams p;
    p.selection = selection_from(pp);
    return make_granite(p);
  }
  if (config.policy_id == "load") {
    check_keys(pp, {"a", "b", "deadband", "step", "selection"}, "load");
    LoadParams p;
    p.a = get_param(pp, "a", p.a);
    p.b = get_param(pp, "b", p.b);
    p.deadband = get_param(pp, "deadband", p.deadband);
    p.step = get_param(pp, "step", p.step);
    p.underload = config.load_underload;
    p.selection = selection_from(pp);
    if (!(p.a > 0 && p.a < 1 && p.b > 0 && p.b < 1)) {
      throw ConfigError("load: require a, b in (0, 1)");
    }
    if (p.deadband < 0) throw ConfigError("load: require deadband >= 0");
    return make_load(p);
  }
  if (config.policy_id == "acs") {
    check_keys(pp, {"ants", "iterations", "q0", "rho", "tau0", "beta_h",
                    "selection"},
               "acs");
    AcsParams p;
    p.ants = static_cast<int>(get_param(pp, "ants", p.ants));
    p.iterations = static_cast<int>(get_param(pp, "iterations", p.iterations));
    p.q0 = get_param(pp, "q0", p.q0);
    p.rho = get_param(pp, "rho", p.rho);
    p.tau0 = get_param(pp, "tau0", p.tau0);
    p.beta_h = get_param(pp, "beta_h", p.beta_h);
    p.selection = selection_from(pp);
    if (!(p.q0 >= 0 && p.q0 <= 1)) throw ConfigError("acs: require q0 in [0,1]");
    if (!(p.rho > 0 && p.rho < 1)) throw ConfigError("acs: require rho in (0,1)");
    if (p.iterations < 1 || p.ants < 0) {
      throw ConfigError("acs: require iterations >= 1 and ants >= 0");
    }
    return make_acs(p, policy_seed);
  }
  if (config.policy_id == "iqr") {
    check_keys(pp, {"safety", "window", "selection"}, "iqr");
    IqrParams p;
    p.safety = get_param(pp, "safety", p.safety);
    p.window = static_cast<int>(get_param(pp, "window", p.window));
    p.selection = selection_from(pp);
    if (!(p.safety > 0)) throw ConfigError("iqr: require safety > 0");
    return make_iqr(p);
  }
  throw ConfigError("unknown policy: " + config.policy_id);
}

}  // namespace vmcsim
