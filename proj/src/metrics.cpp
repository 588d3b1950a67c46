#include "vmcsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace vmcsim {

double slav_fraction(long violation_events, long active_host_intervals) {
  if (active_host_intervals == 0) return 0.0;
  if (violation_events > active_host_intervals) {
    throw std::logic_error("violation events exceed active host-intervals");
  }
  return static_cast<double>(violation_events) /
         static_cast<double>(active_host_intervals);
}

double avg_slv_fraction(
    const std::vector<std::pair<double, double>>& shortfalls) {
  if (shortfalls.empty()) return 0.0;
  double sum = 0;
  for (const auto& [requested, allocated] : shortfalls) {
    if (!(requested > 0) || allocated > requested) {
      throw std::logic_error("shortfall requires 0 < allocated <= requested");
    }
    sum += (requested - allocated) / requested;
  }
  return sum / static_cast<double>(shortfalls.size());
}

double mean_active_hosts(const std::vector<int>& active_counts) {
  if (active_counts.empty()) return 0.0;
  double sum = std::accumulate(active_counts.begin(), active_counts.end(), 0.0);
  return sum / static_cast<double>(active_counts.size());
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile of empty sample");
  std::sort(values.begin(), values.end());
  double pos = q * static_cast<double>(values.size() - 1);
  auto lo = static_cast<size_t>(pos);
  double frac = pos - static_cast<double>(lo);
  if (lo + 1 >= values.size()) return values.back();
  return values[lo] + (values[lo + 1] - values[lo]) * frac;
}

AggregateStats aggregate_stats(const std::vector<double>& values) {
  AggregateStats s;
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
  s.min = quantile(values, 0.0);
  s.q1 = quantile(values, 0.25);
  s.median = quantile(values, 0.5);
  s.q3 = quantile(values, 0.75);
  s.max = quantile(values, 1.0);
  return s;
}

AggregateReport aggregate(const std::vector<MetricsReport>& reports) {
  if (reports.empty()) {
    throw std::invalid_argument("aggregate requires at least one report");
  }
  auto collect = [&reports](auto getter) {
    std::vector<double> v;
    v.reserve(reports.size());
    for (const auto& r : reports) v.push_back(getter(r));
    return aggregate_stats(v);
  };
  AggregateReport a;
  a.runs = static_cast<int>(reports.size());
  a.energy_computing_kwh =
      collect([](const MetricsReport& r) { return r.energy_computing_kwh; });
  a.energy_total_kwh =
      collect([](const MetricsReport& r) { return r.energy_total_kwh; });
  a.migrations = collect(
      [](const MetricsReport& r) { return static_cast<double>(r.migrations); });
  a.slav = collect([](const MetricsReport& r) { return r.slav; });
  a.avg_slv = collect([](const MetricsReport& r) { return r.avg_slv; });
  a.mean_active_hosts =
      collect([](const MetricsReport& r) { return r.mean_active_hosts; });
  return a;
}

}  // namespace vmcsim
