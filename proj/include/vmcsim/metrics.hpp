#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace vmcsim {

struct IntervalSample {
  double power_w = 0;      // aggregate instantaneous power
  int active_hosts = 0;
  int violations = 0;      // host-interval violation events this interval
};

// The five per-run metrics plus the raw tallies they derive from.
struct MetricsReport {
  double energy_computing_kwh = 0;
  double energy_total_kwh = 0;  // computing + cooling
  long migrations = 0;
  double slav = 0;
  double avg_slv = 0;
  double mean_active_hosts = 0;

  long violation_events = 0;
  long active_host_intervals = 0;
  int intervals = 0;

  std::optional<std::vector<IntervalSample>> per_interval;
};

struct AggregateStats {
  double mean = 0, min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};

// Order statistics of each metric across repetitions.
struct AggregateReport {
  int runs = 0;
  AggregateStats energy_computing_kwh, energy_total_kwh, migrations, slav,
      avg_slv, mean_active_hosts;
};

// violation events / active host-intervals; 0 when the denominator is 0.
double slav_fraction(long violation_events, long active_host_intervals);

// Mean relative shortfall over (requested, allocated) violation events.
double avg_slv_fraction(
    const std::vector<std::pair<double, double>>& shortfalls);

double mean_active_hosts(const std::vector<int>& active_counts);

// Quantile by linear interpolation on the sorted sample (values need not be
// pre-sorted).
double quantile(std::vector<double> values, double q);

AggregateStats aggregate_stats(const std::vector<double>& values);

// Throws std::invalid_argument on an empty list.
AggregateReport aggregate(const std::vector<MetricsReport>& reports);

}  // namespace vmcsim
